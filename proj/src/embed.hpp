/*
 * embed.hpp
 *
 * Full isometric embeddings between geometries: verification, backtracking
 * search, and projection onto an embedded subgeometry.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "geometry.hpp"
#include "search.hpp"

namespace suz {

struct EmbeddingMap {
    GeometryPtr source;
    GeometryPtr target;
    std::vector<int32_t> point_map;  // injective, source point -> target point
};

struct EmbedVerdict {
    bool ok = false;
    std::string witness;
};
// Exhaustively checks injectivity, distance preservation for all pairs, and
// that every source line maps onto a complete target line.
EmbedVerdict verify_embedding(const EmbeddingMap& e);

struct EmbedSearchResult {
    SearchOutcome outcome = SearchOutcome::None;
    std::optional<EmbeddingMap> embedding;
    uint64_t nodes_visited = 0;
};
// Backtracking search for a full isometric embedding of small into big.
// "none" is reported only after exhausting the search space.
EmbedSearchResult find_embedding(GeometryPtr small, GeometryPtr big,
                                 uint64_t budget,
                                 const std::vector<std::pair<int, int>>& seeds = {});

// For a big point at distance 0 from the image returns the point itself; at
// distance 1 with a unique nearest image point returns that point; otherwise
// nullopt.
std::optional<int32_t> projection(const EmbeddingMap& e, int32_t big_point);

}  // namespace suz
