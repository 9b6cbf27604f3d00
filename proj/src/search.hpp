/*
 * search.hpp
 *
 * Seeded backtracking search for structure-preserving point maps between
 * geometries with three points per line. One engine serves two modes:
 *
 *   - bijective: full isomorphism (lines onto lines, distances preserved)
 *   - embedding: injective, isometric, lines onto full target lines
 *
 * Pruning: distance-profile consistency against every mapped point, degree
 * compatibility, and eager line completion (two mapped points of a line
 * force the third). Candidate order is ascending, variable order prefers
 * points with the most mapped neighbors, so searches are deterministic.
 */
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "geometry.hpp"

namespace suz {

enum class SearchOutcome { Found, None, BudgetExceeded };
const char* search_outcome_name(SearchOutcome o);

struct MappingOptions {
    bool bijective = false;
    uint64_t node_budget = 1000000000ULL;
    std::vector<std::pair<int, int>> seeds;  // forced src -> tgt assignments
};

struct MappingResult {
    SearchOutcome outcome = SearchOutcome::None;
    std::vector<int32_t> map;  // per source point, when Found
    uint64_t nodes_visited = 0;
};

MappingResult find_point_mapping(const Geometry& src, const Geometry& tgt,
                                 const MappingOptions& opts);

// Isomorphism wrapper: three-valued outcome per the bijective mode above.
MappingResult graph_isomorphic(const Geometry& a, const Geometry& b,
                               uint64_t budget);

}  // namespace suz
