#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "tricount/dp_structure.hpp"
#include "tricount/exact_counter.hpp"

namespace tricount {

struct Caps {
    std::size_t max_triangulations = kDefaultTriangulationCap;
    std::size_t max_dp_points = 200000;
    std::size_t max_cells = 50000;
};

struct DPConfig {
    int k = 4;
    int delta = 6;
    CellFamily family = CellFamily::TriQuad;
    DPPointMode dp_mode = DPPointMode::BasicOnly;
    Caps caps;
};

struct CountEntry {
    BigInt tr;
    bool base_case = false;
    std::size_t partitions_used = 0; // recurrence entries only
    std::size_t point_count = 0;
    std::vector<RatPoint> outer; // for provenance dumps
};

struct CountTable {
    std::map<std::string, CountEntry> entries; // keyed by canonical cell key
    std::string root_key;
};

struct RunStats {
    std::size_t cells = 0;
    std::size_t base_cells = 0;
    std::size_t partitions = 0;
    double wall_ms = 0.0;
    std::vector<std::string> warnings;
};

struct ApproxResult {
    BigInt count;
    CountTable table;
    RunStats stats;
};

/// The approximate count tr(B) of the bounding box, via the bottom-up DP over
/// cells: exact maximal-triangulation counts for cells holding at most delta
/// input points, sums of products of child counts over balanced partitions
/// otherwise.
ApproxResult approx_count(const std::vector<Point>& S, const DPConfig& cfg);

struct RatioAudit {
    BigInt exact;
    BigInt approx;
    double log2_ratio_per_point = 0.0;
    bool underflow = false; // approx == 0
};

/// Runs both counters and reports log2(approx/exact)/n.
RatioAudit ratio_audit(const std::vector<Point>& S, const DPConfig& cfg);

/// log2 of a positive big integer, accurate to double precision.
double log2_big(const BigInt& v);

} // namespace tricount
