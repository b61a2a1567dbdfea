#pragma once

#include <string>
#include <vector>

#include "tricount/approx_counter.hpp"
#include "tricount/geom.hpp"

namespace tricount {

/// Parses a point set from either whitespace text ("x y" per line, '#'
/// comments) or a JSON array of [x, y] pairs; the format is sniffed from the
/// first non-space character. Rejects duplicates.
std::vector<Point> parse_points(const std::string& content);

std::vector<Point> load_points(const std::string& path);

/// Canonical text serialization, one "x y" line per point.
std::string format_points(const std::vector<Point>& S);

enum class GenKind { Convex, Grid, Random };

/// Deterministic generators: convex = integer points in strictly convex
/// position, grid = row-major prefix of the ceil(sqrt(n)) square grid,
/// random = distinct seeded uniform points in [0, 4n]^2 (full collinearity
/// rejected).
std::vector<Point> generate_points(GenKind kind, int n, unsigned long seed);

GenKind parse_gen_kind(const std::string& s);

/// JSON dump of a cell catalog (vertices as exact "p/q" strings).
std::string catalog_to_json(const std::vector<Cell>& catalog);

/// JSON dump of a count table: cell key, outer vertices, point count, tr as a
/// decimal string, provenance.
std::string count_table_to_json(const CountTable& table);

} // namespace tricount
