#include "search.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <cstdio>
#include <stdexcept>

namespace suz {

const char* search_outcome_name(SearchOutcome o) {
    switch (o) {
        case SearchOutcome::Found: return "found";
        case SearchOutcome::None: return "none";
        case SearchOutcome::BudgetExceeded: return "budget exceeded";
    }
    return "?";
}

namespace {

// common-neighbor counts for all point pairs; automorphisms preserve them
// exactly, full isometric embeddings cannot decrease them
static std::vector<uint8_t> common_neighbor_matrix(const Geometry& g) {
    const size_t n = g.num_points();
    std::vector<uint8_t> mu(n * n, 0);
    for (int u = 0; u < g.num_points(); ++u) {
        const auto& nb = g.neighbors(u);
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j) {
                uint8_t& a = mu[static_cast<size_t>(nb[i]) * n + nb[j]];
                if (a < 255) ++a;
                uint8_t& b = mu[static_cast<size_t>(nb[j]) * n + nb[i]];
                if (b < 255) ++b;
            }
    }
    return mu;
}

// nu(x,y) = number of points at distance 1 from x and 2 from y; preserved by
// automorphisms, cannot decrease under full isometric embeddings
static std::vector<uint8_t> one_two_matrix(const Geometry& g) {
    const size_t n = g.num_points();
    const DistanceMatrix& dm = g.distances();
    std::vector<uint8_t> nu(n * n, 0);
    for (int x = 0; x < g.num_points(); ++x) {
        uint8_t* row = nu.data() + static_cast<size_t>(x) * n;
        for (uint16_t z : g.neighbors(x)) {
            const uint8_t* dz = dm.row(z);
            for (int y = 0; y < g.num_points(); ++y)
                if (dz[y] == 2 && row[y] < 255) ++row[y];
        }
    }
    return nu;
}

static inline uint32_t hash_mix(uint64_t h, uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return static_cast<uint32_t>(h ^ (h >> 32));
}

// Iterated path refinement of pair labels: start from (distance, common
// neighbors, one-two counts), then repeatedly fold in the sorted multiset of
// label pairs along the neighbors of the first coordinate. Isomorphisms
// preserve the exact labels, so equality is a sound and very sharp pruning
// signal for the bijective search. Hash collisions can only merge classes,
// never separate images of the same class.
static std::vector<uint32_t> refined_pair_labels(const Geometry& g, int rounds) {
    const size_t n = g.num_points();
    const DistanceMatrix& dm = g.distances();
    std::vector<uint8_t> mu = common_neighbor_matrix(g);
    std::vector<uint8_t> nu = one_two_matrix(g);
    std::vector<uint32_t> lab(n * n);
    for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y) {
            uint64_t h = 1469598103934665603ULL;
            h = hash_mix(h, dm.at(static_cast<int>(x), static_cast<int>(y)));
            h = hash_mix(h, mu[x * n + y]);
            h = hash_mix(h, nu[x * n + y]);
            h = hash_mix(h, nu[y * n + x]);
            lab[x * n + y] = static_cast<uint32_t>(h | 1);
        }
    std::vector<uint32_t> next(n * n);
    std::vector<uint64_t> around;
    for (int r = 0; r < rounds; ++r) {
        for (size_t x = 0; x < n; ++x) {
            const auto& nb = g.neighbors(static_cast<int>(x));
            for (size_t y = 0; y < n; ++y) {
                around.clear();
                for (uint16_t z : nb)
                    around.push_back(
                        (static_cast<uint64_t>(lab[x * n + z]) << 32) |
                        lab[static_cast<size_t>(z) * n + y]);
                std::sort(around.begin(), around.end());
                uint64_t h = lab[x * n + y];
                for (uint64_t v : around) h = hash_mix(h, v) * 1099511628211ULL;
                next[x * n + y] = static_cast<uint32_t>(h | 1);
            }
        }
        lab.swap(next);
    }
    return lab;
}

class MappingSearch {
public:
    MappingSearch(const Geometry& src, const Geometry& tgt,
                  const MappingOptions& opts)
        : src_(src), tgt_(tgt), opts_(opts),
          dsrc_(src.distances()), dtgt_(tgt.distances()) {
        if (opts_.bijective) {
            constexpr int kRounds = 2;
            lab_src_ = refined_pair_labels(src_, kRounds);
            if (&src_ == &tgt_) {
                lab_tgt_ = &lab_src_;
            } else {
                lab_tgt_storage_ = refined_pair_labels(tgt_, kRounds);
                lab_tgt_ = &lab_tgt_storage_;
            }
        } else {
            mu_src_ = common_neighbor_matrix(src_);
            mu_tgt_ = common_neighbor_matrix(tgt_);
            nu_src_ = one_two_matrix(src_);
            nu_tgt_ = one_two_matrix(tgt_);
        }
    }

    MappingResult run() {
        MappingResult res;
        if (!precheck()) {
            res.outcome = SearchOutcome::None;
            return res;
        }
        map_.assign(src_.num_points(), -1);
        rmap_.assign(tgt_.num_points(), -1);
        line_mapped_.assign(src_.num_lines(), 0);
        mapped_nbrs_.assign(src_.num_points(), 0);
        for (auto [s, t] : opts_.seeds) {
            size_t mark = trail_.size();
            if (!try_assign(s, t)) {
                undo_to(mark);
                res.outcome = SearchOutcome::None;
                res.nodes_visited = nodes_;
                return res;
            }
        }
        if (opts_.bijective) build_base_order();
        res.outcome = search();
        res.nodes_visited = nodes_;
        if (res.outcome == SearchOutcome::Found) res.map = map_;
        return res;
    }

private:
    const Geometry& src_;
    const Geometry& tgt_;
    const MappingOptions& opts_;
    const DistanceMatrix& dsrc_;
    const DistanceMatrix& dtgt_;
    std::vector<uint32_t> lab_src_, lab_tgt_storage_;  // bijective mode
    const std::vector<uint32_t>* lab_tgt_ = nullptr;
    std::vector<uint8_t> mu_src_, mu_tgt_;   // embedding mode
    std::vector<uint8_t> nu_src_, nu_tgt_;

    // pair-label compatibility of u -> v against the mapped points; limit < 0
    // checks all of them, otherwise only the most recent `limit` (used for
    // cheap candidate counting; assignments always check everything)
    bool compatible(int u, int v, int limit) const {
        const size_t ns = src_.num_points(), nt = tgt_.num_points();
        size_t start = 0;
        if (limit >= 0 && trail_.size() > static_cast<size_t>(limit))
            start = trail_.size() - static_cast<size_t>(limit);
        if (opts_.bijective) {
            const uint32_t* lu = lab_src_.data() + static_cast<size_t>(u) * ns;
            const uint32_t* lv = lab_tgt_->data() + static_cast<size_t>(v) * nt;
            for (size_t i = start; i < trail_.size(); ++i) {
                const int32_t m = trail_[i], fm = map_[m];
                if (lu[m] != lv[fm]) return false;
                if (lab_src_[static_cast<size_t>(m) * ns + u] !=
                    (*lab_tgt_)[static_cast<size_t>(fm) * nt + v])
                    return false;
            }
        } else {
            const uint8_t* ru = dsrc_.row(u);
            const uint8_t* rv = dtgt_.row(v);
            const uint8_t* mu = mu_src_.data() + static_cast<size_t>(u) * ns;
            const uint8_t* mv = mu_tgt_.data() + static_cast<size_t>(v) * nt;
            const uint8_t* nu = nu_src_.data() + static_cast<size_t>(u) * ns;
            const uint8_t* nv = nu_tgt_.data() + static_cast<size_t>(v) * nt;
            for (size_t i = start; i < trail_.size(); ++i) {
                const int32_t m = trail_[i], fm = map_[m];
                if (ru[m] != rv[fm] || mu[m] > mv[fm] || nu[m] > nv[fm])
                    return false;
                if (nu_src_[static_cast<size_t>(m) * ns + u] >
                    nu_tgt_[static_cast<size_t>(fm) * nt + v])
                    return false;
            }
        }
        return true;
    }

    std::vector<int32_t> map_, rmap_;
    std::vector<uint8_t> line_mapped_;
    std::vector<int32_t> mapped_nbrs_;
    std::vector<int32_t> trail_;  // src points in assignment order
    uint64_t nodes_ = 0;

    bool precheck() const {
        int sz;
        if (!src_.uniform_line_size(&sz) || sz != 3)
            throw std::invalid_argument("mapping search requires 3-point lines (source)");
        if (!tgt_.uniform_line_size(&sz) || sz != 3)
            throw std::invalid_argument("mapping search requires 3-point lines (target)");
        if (opts_.bijective) {
            if (src_.num_points() != tgt_.num_points() ||
                src_.num_lines() != tgt_.num_lines())
                return false;
            std::vector<int> da(src_.num_points()), db(tgt_.num_points());
            for (int i = 0; i < src_.num_points(); ++i) da[i] = src_.degree(i);
            for (int i = 0; i < tgt_.num_points(); ++i) db[i] = tgt_.degree(i);
            std::sort(da.begin(), da.end());
            std::sort(db.begin(), db.end());
            if (da != db) return false;
        } else {
            if (src_.num_points() > tgt_.num_points()) return false;
        }
        return true;
    }

    bool degree_ok(int s, int t) const {
        return opts_.bijective ? src_.degree(s) == tgt_.degree(t)
                               : src_.degree(s) <= tgt_.degree(t);
    }

    // Assign s -> t together with everything line completion forces.
    // On failure the caller must undo_to the mark taken before the call.
    bool try_assign(int s, int t) {
        std::vector<std::pair<int32_t, int32_t>> work{{s, t}};
        while (!work.empty()) {
            auto [u, v] = work.back();
            work.pop_back();
            if (map_[u] != -1) {
                if (map_[u] == v) continue;
                return false;
            }
            if (rmap_[v] != -1) return false;
            if (!degree_ok(u, v) || !compatible(u, v, -1)) return false;
            map_[u] = v;
            rmap_[v] = u;
            trail_.push_back(u);
            for (uint16_t nb : src_.neighbors(u)) ++mapped_nbrs_[nb];
            // counters move with the trail entry so undo stays exact even
            // when a later check in this loop fails
            for (int32_t l : src_.lines_through(u)) ++line_mapped_[l];
            for (int32_t l : src_.lines_through(u)) {
                if (line_mapped_[l] != 2) continue;
                const auto& ln = src_.line(l);
                int32_t a = -1, b = -1, z = -1;
                for (uint16_t p : ln) {
                    if (map_[p] >= 0) (a < 0 ? a : b) = p;
                    else z = p;
                }
                int32_t lt = tgt_.line_between(map_[a], map_[b]);
                if (lt < 0) return false;
                int32_t w = -1;
                for (uint16_t p : tgt_.line(lt))
                    if (p != map_[a] && p != map_[b]) w = p;
                work.emplace_back(z, w);
            }
        }
        return true;
    }

    void undo_to(size_t mark) {
        while (trail_.size() > mark) {
            int32_t u = trail_.back();
            trail_.pop_back();
            rmap_[map_[u]] = -1;
            map_[u] = -1;
            for (uint16_t nb : src_.neighbors(u)) --mapped_nbrs_[nb];
            for (int32_t l : src_.lines_through(u)) --line_mapped_[l];
        }
    }

    std::vector<int> base_order_;

    // A small set of points whose pair-label vectors separate all points.
    // Mapping it first keeps every branching decision shallow; afterwards
    // each point is pinned down by its labels to the base, so the remainder
    // of the search is essentially forced.
    void build_base_order() {
        const size_t n = src_.num_points();
        std::vector<uint64_t> cls(n, 0);  // running class hash per point
        auto distinct = [&](const std::vector<uint64_t>& c) {
            std::vector<uint64_t> s(c);
            std::sort(s.begin(), s.end());
            return std::unique(s.begin(), s.end()) - s.begin();
        };
        auto fold = [&](std::vector<uint64_t>& c, int b) {
            for (size_t x = 0; x < n; ++x)
                c[x] = (c[x] * 1099511628211ULL) ^ lab_src_[x * n + b];
        };
        for (auto [s, t] : opts_.seeds) {
            (void)t;
            fold(cls, s);
            base_order_.push_back(s);
        }
        // keep every base point adjacent to an earlier one, so its candidate
        // images always come from a single neighbor list
        std::vector<bool> frontier(n, false);
        std::vector<bool> chosen(n, false);
        auto grow = [&](int p) {
            chosen[p] = true;
            for (uint16_t q : src_.neighbors(p)) frontier[q] = true;
        };
        if (base_order_.empty() && n > 0) {
            base_order_.push_back(0);
            fold(cls, 0);
        }
        for (int b : base_order_) grow(b);
        long have = distinct(cls);
        while (have < static_cast<long>(n) && base_order_.size() < 40) {
            int best = -1;
            long best_classes = have;
            for (size_t cand = 0; cand < n; ++cand) {
                if (chosen[cand] || !frontier[cand]) continue;
                std::vector<uint64_t> trial(cls);
                fold(trial, static_cast<int>(cand));
                long k = distinct(trial);
                if (k > best_classes) {
                    best_classes = k;
                    best = static_cast<int>(cand);
                    if (k == static_cast<long>(n)) break;
                }
            }
            if (best < 0) break;
            fold(cls, best);
            base_order_.push_back(best);
            grow(best);
            have = best_classes;
        }
    }

    int pick_next() const {
        for (int b : base_order_)
            if (map_[b] == -1) return b;
        int best_score = -1;
        std::array<int, 16> ties{};
        size_t tie_count = 0;
        for (int s = 0; s < src_.num_points(); ++s) {
            if (map_[s] != -1) continue;
            if (mapped_nbrs_[s] > best_score) {
                best_score = mapped_nbrs_[s];
                ties[0] = s;
                tie_count = 1;
            } else if (mapped_nbrs_[s] == best_score && tie_count < ties.size()) {
                ties[tie_count++] = s;
            }
        }
        if (best_score <= 0 || tie_count == 1 || trail_.size() >= 64)
            return ties[0];
        // fail-first among the tied points: fewest remaining candidates wins;
        // counts use capped compatibility checks, assignments recheck fully
        int best = ties[0], best_count = INT_MAX;
        for (size_t i = 0; i < tie_count; ++i) {
            int s = ties[i];
            int m = -1;
            for (uint16_t nb : src_.neighbors(s))
                if (map_[nb] != -1) { m = nb; break; }
            int count = 0;
            for (uint16_t t : tgt_.neighbors(map_[m])) {
                if (rmap_[t] != -1 || !degree_ok(s, t)) continue;
                if (compatible(s, t, 24) && ++count >= best_count) break;
            }
            if (count < best_count) {
                best_count = count;
                best = s;
                if (best_count == 0) break;
            }
        }
        return best;
    }

    SearchOutcome search() {
        if (trail_.size() == static_cast<size_t>(src_.num_points()))
            return SearchOutcome::Found;
        int s = pick_next();
        if (mapped_nbrs_[s] > 0) {
            // candidates lie on lines through the image of a mapped neighbor
            int m = -1;
            for (uint16_t nb : src_.neighbors(s))
                if (map_[nb] != -1) { m = nb; break; }
            for (uint16_t t : tgt_.neighbors(map_[m])) {
                if (rmap_[t] != -1) continue;
                SearchOutcome r = descend(s, t);
                if (r != SearchOutcome::None) return r;
            }
        } else {
            for (int t = 0; t < tgt_.num_points(); ++t) {
                if (rmap_[t] != -1) continue;
                SearchOutcome r = descend(s, t);
                if (r != SearchOutcome::None) return r;
            }
        }
        return SearchOutcome::None;
    }

    SearchOutcome descend(int s, int t) {
        if (++nodes_ > opts_.node_budget) return SearchOutcome::BudgetExceeded;
#ifdef SUZ_SEARCH_DEBUG
        if (nodes_ % 5000000 == 0)
            std::fprintf(stderr, "  nodes %llu depth %zu highwater %zu\n",
                         (unsigned long long)nodes_, trail_.size(), highwater_);
#endif
        size_t mark = trail_.size();
        SearchOutcome r = SearchOutcome::None;
        if (try_assign(s, t)) {
#ifdef SUZ_SEARCH_DEBUG
            highwater_ = std::max(highwater_, trail_.size());
#endif
            r = search();
        }
        if (r != SearchOutcome::Found) undo_to(mark);
        return r;
    }
#ifdef SUZ_SEARCH_DEBUG
    size_t highwater_ = 0;
#endif
};

}  // namespace

MappingResult find_point_mapping(const Geometry& src, const Geometry& tgt,
                                 const MappingOptions& opts) {
    MappingSearch search(src, tgt, opts);
    return search.run();
}

MappingResult graph_isomorphic(const Geometry& a, const Geometry& b,
                               uint64_t budget) {
    MappingOptions opts;
    opts.bijective = true;
    opts.node_budget = budget;
    return find_point_mapping(a, b, opts);
}

}  // namespace suz
