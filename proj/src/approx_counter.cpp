#include "tricount/approx_counter.hpp"

#include <chrono>
#include <cmath>
#include <limits>

#include "tricount/empty_triangles.hpp"

namespace tricount {

double log2_big(const BigInt& v) {
    if (sgn(v) <= 0) throw InvalidInput("log2_big: nonpositive value");
    long exp = 0;
    double d = mpz_get_d_2exp(&exp, v.get_mpz_t());
    return (double)exp + std::log2(d);
}

namespace {

bool all_collinear_pts(const std::vector<Point>& S) {
    for (size_t i = 2; i < S.size(); ++i)
        if (orient(S[0], S[1], S[i]) != 0) return false;
    return true;
}

struct DPEngine {
    const std::vector<Point>& S;
    const DPConfig& cfg;
    const DPPointSet& dps;
    const std::vector<Cell>& catalog; // empty for BinaryCut
    CountTable& table;
    RunStats& stats;

    const BigInt& get_tr(const Cell& Q) {
        auto it = table.entries.find(Q.key);
        if (it != table.entries.end()) return it->second.tr;
        if (table.entries.size() >= cfg.caps.max_cells)
            throw CapacityExceeded("DP cell cap exceeded");

        CountEntry entry;
        entry.point_count = Q.contained_points.size();
        entry.outer = Q.outer;
        if ((long)Q.contained_points.size() <= cfg.delta) {
            entry.base_case = true;
            entry.tr = count_maximal_in_cell(Q, S, cfg.caps.max_triangulations);
            ++stats.base_cells;
        } else {
            auto partitions = enumerate_partitions(Q, catalog, S, cfg.k, cfg.family, dps);
            entry.tr = 0;
            for (const Partition& p : partitions) {
                BigInt prod = 1;
                for (const Cell& part : p.parts) {
                    prod *= get_tr(part);
                    if (sgn(prod) == 0) break;
                }
                entry.tr += prod;
            }
            entry.partitions_used = partitions.size();
            stats.partitions += partitions.size();
            if (sgn(entry.tr) == 0)
                stats.warnings.push_back("cell with zero count: " + Q.key);
        }
        auto [pos, inserted] = table.entries.emplace(Q.key, std::move(entry));
        (void)inserted;
        return pos->second.tr;
    }
};

} // namespace

ApproxResult approx_count(const std::vector<Point>& S, const DPConfig& cfg) {
    if (S.size() < 3) throw InvalidInput("approx_count: need at least 3 points");
    if (all_collinear_pts(S)) throw InvalidInput("approx_count: all points collinear");
    if (cfg.k < 3 || cfg.delta < 3) throw InvalidInput("approx_count: k and delta must be >= 3");

    auto t0 = std::chrono::steady_clock::now();
    ApproxResult res;

    TriangleUniverse T = enumerate_empty(S);
    DPPointSet dps = build_dp_points(T, cfg.dp_mode, cfg.caps.max_dp_points);
    Cell box = make_cell(dps.box_ring(), {}, S);
    res.table.root_key = box.key;

    std::vector<Cell> catalog;
    // Catalog families enumerate cells up front; the box base case and the
    // binary-cut family never need that.
    bool box_is_base = (long)box.contained_points.size() <= cfg.delta;
    if (cfg.family != CellFamily::BinaryCut && !box_is_base) {
        std::size_t cap = cfg.caps.max_cells;
        if (cfg.family == CellFamily::Exhaustive) cap *= 4;
        catalog = build_cell_catalog(dps, S, cfg.k, cfg.family, cap);
    }

    DPEngine engine{S, cfg, dps, catalog, res.table, res.stats};
    if (cfg.family == CellFamily::BinaryCut || box_is_base) {
        res.count = engine.get_tr(box);
    } else {
        // Bottom-up in catalog order; cells holding at most delta points are
        // filled lazily on first use by a parent.
        for (const Cell& Q : catalog) {
            if ((long)Q.contained_points.size() > cfg.delta) engine.get_tr(Q);
        }
        res.count = engine.get_tr(box);
    }

    res.stats.cells = res.table.entries.size();
    auto t1 = std::chrono::steady_clock::now();
    res.stats.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return res;
}

RatioAudit ratio_audit(const std::vector<Point>& S, const DPConfig& cfg) {
    RatioAudit out;
    out.exact = count_triangulations(S, cfg.caps.max_triangulations);
    out.approx = approx_count(S, cfg).count;
    if (sgn(out.approx) == 0) {
        out.underflow = true;
        out.log2_ratio_per_point = -std::numeric_limits<double>::infinity();
    } else {
        out.log2_ratio_per_point =
            (log2_big(out.approx) - log2_big(out.exact)) / (double)S.size();
    }
    return out;
}

} // namespace tricount
