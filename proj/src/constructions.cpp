#include "constructions.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

namespace suz {

NamedGeometry build_h21() {
    // Fano plane from the difference set {0,1,3} mod 7
    std::vector<std::vector<int>> fano_lines;
    for (int i = 0; i < 7; ++i)
        fano_lines.push_back({i, (i + 1) % 7, (i + 3) % 7});
    // flags (point, line) in lexicographic order
    std::map<std::pair<int, int>, uint16_t> flag_index;
    for (int p = 0; p < 7; ++p)
        for (int l = 0; l < 7; ++l)
            if (std::count(fano_lines[l].begin(), fano_lines[l].end(), p))
                flag_index[{p, l}] = static_cast<uint16_t>(flag_index.size());
    // one line per Fano point (its 3 flags) and per Fano line (its 3 flags)
    std::vector<std::vector<uint16_t>> lines(14);
    for (const auto& [pl, idx] : flag_index) {
        lines[pl.first].push_back(idx);
        lines[7 + pl.second].push_back(idx);
    }
    auto geom = std::make_shared<Geometry>(21, std::move(lines), "h21");
    return NamedGeometry{geom, "h21"};
}

Geometry make_three_point_line() {
    return Geometry(3, {{0, 1, 2}}, "L3");
}

Geometry make_grid3x3() {
    Geometry l3 = make_three_point_line();
    return direct_product(l3, l3, "grid3x3");
}

Geometry make_w2() {
    // points = 2-subsets of {0..5}, lines = partitions into three 2-subsets
    std::vector<std::pair<int, int>> duads;
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b) duads.emplace_back(a, b);
    auto duad_index = [&](int a, int b) {
        if (a > b) std::swap(a, b);
        for (size_t i = 0; i < duads.size(); ++i)
            if (duads[i] == std::make_pair(a, b)) return static_cast<uint16_t>(i);
        throw std::logic_error("duad not found");
    };
    std::set<std::vector<uint16_t>> lines;
    int perm[6] = {0, 1, 2, 3, 4, 5};
    std::sort(perm, perm + 6);
    do {
        if (perm[0] > perm[1] || perm[2] > perm[3] || perm[4] > perm[5]) continue;
        if (perm[0] > perm[2] || perm[2] > perm[4]) continue;
        std::vector<uint16_t> ln{duad_index(perm[0], perm[1]),
                                 duad_index(perm[2], perm[3]),
                                 duad_index(perm[4], perm[5])};
        std::sort(ln.begin(), ln.end());
        lines.insert(ln);
    } while (std::next_permutation(perm, perm + 6));
    return Geometry(15, {lines.begin(), lines.end()}, "w2");
}

NamedGeometry build_l3_cubed() {
    Geometry l3 = make_three_point_line();
    Geometry sq = direct_product(l3, l3, "L3xL3");
    auto geom = std::make_shared<Geometry>(direct_product(l3, sq, "l3cubed"));
    return NamedGeometry{geom, "l3cubed"};
}

HexagonPair build_hexagons_2_2(const GeneratorSet& u33_gens, uint64_t embed_budget) {
    if (u33_gens.degree != 63)
        throw std::invalid_argument("hexagon build expects a degree-63 action");
    auto orbitals = orbital_graphs(u33_gens);
    const OrbitalGraph* val6 = nullptr;
    for (const auto& og : orbitals)
        if (og.valency == 6) val6 = &og;
    if (!val6)
        throw std::runtime_error("no valency-6 orbital graph in the 63-point action");

    auto first = std::make_shared<Geometry>(
        triangles_as_lines(63, val6->edges, "hex22-triangles"));
    auto second = std::make_shared<Geometry>(dual(*first));

    for (const auto& g : {first, second}) {
        OrderResult ord = order_of(*g);
        if (!ord.has_order || ord.s != 2 || ord.t != 2)
            throw std::runtime_error("hexagon candidate does not have order (2,2)");
        NearPolygonVerdict np = is_near_polygon(*g);
        if (!np.ok || np.diameter != 3)
            throw std::runtime_error("hexagon candidate is not a near hexagon: " +
                                     np.witness);
        GeneralizedPolygonVerdict gp = is_generalized_polygon(*g);
        if (!gp.ok)
            throw std::runtime_error("hexagon candidate fails the generalized-polygon "
                                     "condition: " + gp.witness);
    }

    auto h21 = build_h21();
    EmbedSearchResult in_first = find_embedding(h21.geometry, first, embed_budget);
    EmbedSearchResult in_second = find_embedding(h21.geometry, second, embed_budget);
    if (in_first.outcome == SearchOutcome::BudgetExceeded ||
        in_second.outcome == SearchOutcome::BudgetExceeded)
        throw std::runtime_error("embedding budget exceeded while separating the "
                                 "order-(2,2) hexagons");
    bool f1 = in_first.outcome == SearchOutcome::Found;
    bool f2 = in_second.outcome == SearchOutcome::Found;
    if (f1 == f2)
        throw std::runtime_error(f1 ? "both order-(2,2) hexagons contain H(2,1)"
                                    : "neither order-(2,2) hexagon contains H(2,1)");

    HexagonPair pair;
    pair.triangles_geometry_is_h2d = f1;
    const auto& h2d_geom = f1 ? first : second;
    const auto& h2_geom = f1 ? second : first;
    pair.h2d = NamedGeometry{std::make_shared<Geometry>(h2d_geom->num_points(),
                                                        h2d_geom->lines(), "h2d"),
                             "h2d"};
    pair.h2 = NamedGeometry{std::make_shared<Geometry>(h2_geom->num_points(),
                                                       h2_geom->lines(), "h2"),
                            "h2"};
    const auto& found = f1 ? in_first : in_second;
    pair.h21_embedding = EmbeddingMap{h21.geometry, pair.h2d.geometry,
                                      found.embedding->point_map};
    return pair;
}

std::vector<Triple> commuting_class_triples(const InvolutionClass& cls,
                                            size_t* rejected_pairs, int threads) {
    const int32_t n = static_cast<int32_t>(cls.size());
    std::atomic<size_t> rejected{0};
    threads = std::max(1, threads);

    auto scan = [&](int32_t lo, int32_t hi, std::vector<Triple>& out) {
        size_t local_rejected = 0;
        for (int32_t i = lo; i < hi; ++i) {
            for (int32_t j = i + 1; j < n; ++j) {
                if (!commutes(cls.elements[i], cls.elements[j])) continue;
                Perm z = compose(cls.elements[i], cls.elements[j]);
                int32_t k = cls.find(z);
                if (k < 0) {
                    ++local_rejected;
                    continue;
                }
                Triple t{i, j, k};
                std::sort(t.begin(), t.end());
                out.push_back(t);
            }
        }
        rejected += local_rejected;
    };

    std::vector<Triple> triples;
    if (threads == 1) {
        scan(0, n, triples);
    } else {
        std::vector<std::vector<Triple>> buckets(threads);
        std::vector<std::thread> pool;
        std::atomic<int32_t> next{0};
        constexpr int32_t kChunk = 32;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                for (;;) {
                    int32_t lo = next.fetch_add(kChunk);
                    if (lo >= n) break;
                    scan(lo, std::min(n, lo + kChunk), buckets[t]);
                }
            });
        for (auto& th : pool) th.join();
        for (auto& b : buckets) triples.insert(triples.end(), b.begin(), b.end());
    }
    std::sort(triples.begin(), triples.end());
    triples.erase(std::unique(triples.begin(), triples.end()), triples.end());
    if (rejected_pairs) *rejected_pairs = rejected;
    return triples;
}

// every line triple must map to a line triple under each generator
static bool lines_closed_under_action(
    const std::vector<Triple>& lines,
    const std::vector<std::vector<int32_t>>& action) {
    std::set<Triple> line_set(lines.begin(), lines.end());
    for (const auto& act : action)
        for (const Triple& t : lines) {
            Triple img{act[t[0]], act[t[1]], act[t[2]]};
            std::sort(img.begin(), img.end());
            if (!line_set.count(img)) return false;
        }
    return true;
}

static GeometryPtr triples_to_geometry(int num_points,
                                       const std::vector<Triple>& triples,
                                       const std::string& label) {
    std::vector<std::vector<uint16_t>> lines;
    lines.reserve(triples.size());
    for (const Triple& t : triples)
        lines.push_back({static_cast<uint16_t>(t[0]), static_cast<uint16_t>(t[1]),
                         static_cast<uint16_t>(t[2])});
    return std::make_shared<Geometry>(num_points, std::move(lines), label);
}

HjBuild build_hj(const GeneratorSet& j2_gens, uint64_t seed, size_t budget) {
    auto rep = find_class_involution(j2_gens, 315, budget, seed);
    if (!rep)
        throw std::runtime_error(
            "no involution with class size 315 found within budget; wrong "
            "generators or wrong target size");
    HjBuild out;
    out.class_representative = *rep;
    out.cls = std::make_shared<InvolutionClass>(conjugation_class(j2_gens, *rep));
    if (out.cls->size() != 315)
        throw std::runtime_error("involution class has size " +
                                 std::to_string(out.cls->size()) + ", expected 315");
    auto triples = commuting_class_triples(*out.cls, &out.rejected_pairs);
    out.lines_conjugation_invariant =
        lines_closed_under_action(triples, class_generator_action(j2_gens, *out.cls));
    out.named = NamedGeometry{triples_to_geometry(315, triples, "hj"), "hj"};
    return out;
}

G24Build build_g24(const GeneratorSet& g24_gens, uint64_t seed, size_t budget) {
    auto rep = find_class_involution(g24_gens, 4095, budget, seed);
    if (!rep)
        throw std::runtime_error(
            "no involution with class size 4095 found within budget; wrong "
            "generators or wrong target size");
    G24Build out;
    out.class_representative = *rep;
    out.cls = std::make_shared<InvolutionClass>(conjugation_class(g24_gens, *rep));
    if (out.cls->size() != 4095)
        throw std::runtime_error("involution class has size " +
                                 std::to_string(out.cls->size()) +
                                 ", expected 4095");
    unsigned hw = std::thread::hardware_concurrency();
    auto triples = commuting_class_triples(*out.cls, &out.rejected_pairs,
                                           hw ? static_cast<int>(hw) : 1);
    TripleOrbits orbits = orbit_partition_of_triples(g24_gens, *out.cls, triples);
    out.all_orbit_sizes = orbits.orbit_sizes;
    std::sort(out.all_orbit_sizes.begin(), out.all_orbit_sizes.end());

    std::vector<Triple> kept;
    std::vector<bool> keep_orbit(orbits.orbit_sizes.size(), false);
    for (size_t o = 0; o < orbits.orbit_sizes.size(); ++o)
        if (orbits.orbit_sizes[o] == 1365 || orbits.orbit_sizes[o] == 13650) {
            keep_orbit[o] = true;
            out.kept_orbit_sizes.push_back(orbits.orbit_sizes[o]);
        }
    std::sort(out.kept_orbit_sizes.begin(), out.kept_orbit_sizes.end());
    if (out.kept_orbit_sizes != std::vector<size_t>{1365, 13650})
        throw std::runtime_error(
            "retained triple orbits do not have sizes {1365, 13650}");
    for (size_t i = 0; i < triples.size(); ++i)
        if (keep_orbit[orbits.orbit_id[i]]) kept.push_back(triples[i]);

    out.orbits_conjugation_closed = lines_closed_under_action(
        kept, class_generator_action(g24_gens, *out.cls));
    out.named = NamedGeometry{triples_to_geometry(4095, kept, "g24"), "g24"};
    return out;
}

}  // namespace suz
