#include "embed.hpp"

#include <algorithm>

namespace suz {

EmbedVerdict verify_embedding(const EmbeddingMap& e) {
    EmbedVerdict res;
    const Geometry& s = *e.source;
    const Geometry& t = *e.target;
    if (static_cast<int>(e.point_map.size()) != s.num_points()) {
        res.witness = "point map has wrong length";
        return res;
    }
    std::vector<bool> used(t.num_points(), false);
    for (int x = 0; x < s.num_points(); ++x) {
        int32_t fx = e.point_map[x];
        if (fx < 0 || fx >= t.num_points()) {
            res.witness = "image of point " + std::to_string(x) + " out of range";
            return res;
        }
        if (used[fx]) {
            res.witness = "point map not injective at " + std::to_string(x);
            return res;
        }
        used[fx] = true;
    }
    const DistanceMatrix& ds = s.distances();
    const DistanceMatrix& dt = t.distances();
    for (int x = 0; x < s.num_points(); ++x)
        for (int y = x + 1; y < s.num_points(); ++y)
            if (ds.at(x, y) != dt.at(e.point_map[x], e.point_map[y])) {
                res.witness = "distance not preserved at pair (" + std::to_string(x) +
                              "," + std::to_string(y) + "): " +
                              std::to_string(ds.at(x, y)) + " vs " +
                              std::to_string(dt.at(e.point_map[x], e.point_map[y]));
                return res;
            }
    for (int l = 0; l < s.num_lines(); ++l) {
        std::vector<uint16_t> image;
        for (uint16_t p : s.line(l)) image.push_back(static_cast<uint16_t>(e.point_map[p]));
        std::sort(image.begin(), image.end());
        int32_t lt = t.line_between(image[0], image[1]);
        if (lt < 0 || t.line(lt) != image) {
            res.witness = "source line " + std::to_string(l) +
                          " does not map onto a full target line";
            return res;
        }
    }
    res.ok = true;
    return res;
}

EmbedSearchResult find_embedding(GeometryPtr small, GeometryPtr big,
                                 uint64_t budget,
                                 const std::vector<std::pair<int, int>>& seeds) {
    MappingOptions opts;
    opts.bijective = false;
    opts.node_budget = budget;
    opts.seeds = seeds;
    MappingResult r = find_point_mapping(*small, *big, opts);
    EmbedSearchResult res;
    res.outcome = r.outcome;
    res.nodes_visited = r.nodes_visited;
    if (r.outcome == SearchOutcome::Found) {
        EmbeddingMap emb{small, big, std::move(r.map)};
        // search correctness is re-certified, never trusted
        EmbedVerdict v = verify_embedding(emb);
        if (!v.ok) throw std::logic_error("search returned an invalid embedding: " + v.witness);
        res.embedding = std::move(emb);
    }
    return res;
}

std::optional<int32_t> projection(const EmbeddingMap& e, int32_t big_point) {
    const DistanceMatrix& dt = e.target->distances();
    const uint8_t* row = dt.row(big_point);
    uint8_t best = DistanceMatrix::kUnreachable;
    int32_t nearest = -1;
    int nearest_count = 0;
    for (int32_t img : e.point_map) {
        uint8_t d = row[img];
        if (d < best) {
            best = d;
            nearest = img;
            nearest_count = 1;
        } else if (d == best) {
            ++nearest_count;
        }
    }
    if (best == 0) return big_point;
    if (best == 1 && nearest_count == 1) return nearest;
    return std::nullopt;
}

}  // namespace suz
