#include "tricount/io.hpp"

#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace tricount {

using ordered_json = nlohmann::ordered_json;

namespace {

void check_points(const std::vector<Point>& S) {
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& p : S)
        if (!seen.insert({p.x.get_str(), p.y.get_str()}).second)
            throw InvalidInput("point set contains duplicates");
}

BigInt bigint_from_json(const nlohmann::json& v) {
    if (v.is_number_integer()) return BigInt((long)v.get<long long>());
    if (v.is_string()) return BigInt(v.get<std::string>());
    throw InvalidInput("point coordinate must be an integer");
}

} // namespace

std::vector<Point> parse_points(const std::string& content) {
    std::vector<Point> out;
    size_t pos = content.find_first_not_of(" \t\r\n");
    if (pos != std::string::npos && (content[pos] == '[' || content[pos] == '{')) {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(content);
        } catch (const nlohmann::json::parse_error& e) {
            throw InvalidInput(std::string("bad JSON point file: ") + e.what());
        }
        const nlohmann::json* arr = &j;
        if (j.is_object()) {
            if (!j.contains("points")) throw InvalidInput("JSON object lacks \"points\"");
            arr = &j["points"];
        }
        if (!arr->is_array()) throw InvalidInput("JSON point file must be an array");
        for (const auto& rec : *arr) {
            if (!rec.is_array() || rec.size() != 2)
                throw InvalidInput("each JSON point must be an [x, y] pair");
            out.emplace_back(bigint_from_json(rec[0]), bigint_from_json(rec[1]));
        }
    } else {
        std::istringstream in(content);
        std::string line;
        while (std::getline(in, line)) {
            size_t hash = line.find('#');
            if (hash != std::string::npos) line.resize(hash);
            std::istringstream ls(line);
            std::string xs, ys;
            if (!(ls >> xs)) continue;
            if (!(ls >> ys)) throw InvalidInput("point line with a single coordinate");
            std::string extra;
            if (ls >> extra) throw InvalidInput("point line with extra tokens");
            try {
                out.emplace_back(BigInt(xs), BigInt(ys));
            } catch (const std::invalid_argument&) {
                throw InvalidInput("non-integer coordinate: " + xs + " " + ys);
            }
        }
    }
    check_points(out);
    return out;
}

std::vector<Point> load_points(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_points(buf.str());
}

std::string format_points(const std::vector<Point>& S) {
    std::string out;
    for (const auto& p : S) {
        out += p.x.get_str();
        out += " ";
        out += p.y.get_str();
        out += "\n";
    }
    return out;
}

GenKind parse_gen_kind(const std::string& s) {
    if (s == "convex") return GenKind::Convex;
    if (s == "grid") return GenKind::Grid;
    if (s == "random") return GenKind::Random;
    throw InvalidInput("unknown generator kind: " + s);
}

std::vector<Point> generate_points(GenKind kind, int n, unsigned long seed) {
    if (n < 3) throw InvalidInput("generate_points: n must be >= 3");
    std::vector<Point> out;
    switch (kind) {
        case GenKind::Convex: {
            // Points on a parabola are in strictly convex position with no
            // three collinear; the seed only shifts the window.
            long off = (long)(seed % 7);
            for (int i = 0; i < n; ++i) {
                long x = i - n / 2 + off;
                out.emplace_back(x, x * x);
            }
            break;
        }
        case GenKind::Grid: {
            int side = 1;
            while (side * side < n) ++side;
            for (int i = 0; i < n; ++i) out.emplace_back(i % side, i / side);
            break;
        }
        case GenKind::Random: {
            std::mt19937_64 rng(seed);
            long hi = 4L * n;
            std::uniform_int_distribution<long> dist(0, hi);
            std::set<std::pair<long, long>> used;
            while ((int)used.size() < n) used.insert({dist(rng), dist(rng)});
            for (const auto& [x, y] : used) out.emplace_back(x, y);
            bool collinear = true;
            for (size_t i = 2; i < out.size() && collinear; ++i)
                if (orient(out[0], out[1], out[i]) != 0) collinear = false;
            if (collinear) return generate_points(kind, n, seed + 0x9e3779b9UL);
            break;
        }
    }
    check_points(out);
    return out;
}

namespace {

ordered_json ring_to_json(const std::vector<RatPoint>& ring) {
    ordered_json arr = ordered_json::array();
    for (const auto& p : ring)
        arr.push_back({rat_to_string(p.x), rat_to_string(p.y)});
    return arr;
}

} // namespace

std::string catalog_to_json(const std::vector<Cell>& catalog) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : catalog) {
        ordered_json jc;
        jc["outer"] = ring_to_json(c.outer);
        ordered_json holes = ordered_json::array();
        for (const auto& h : c.holes) holes.push_back(ring_to_json(h));
        jc["holes"] = holes;
        jc["contained_points"] = c.contained_points;
        jc["area"] = rat_to_string(cell_area(c));
        arr.push_back(std::move(jc));
    }
    return arr.dump(2);
}

std::string count_table_to_json(const CountTable& table) {
    ordered_json arr = ordered_json::array();
    for (const auto& [key, e] : table.entries) {
        ordered_json jc;
        jc["key"] = key;
        jc["outer"] = ring_to_json(e.outer);
        jc["point_count"] = e.point_count;
        jc["tr"] = e.tr.get_str();
        jc["provenance"] = e.base_case ? "base_case" : "recurrence";
        if (!e.base_case) jc["partitions"] = e.partitions_used;
        jc["root"] = (key == table.root_key);
        arr.push_back(std::move(jc));
    }
    return arr.dump(2);
}

} // namespace tricount
