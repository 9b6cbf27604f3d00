// Tests backed by the permutation representations under data/: orbital
// structure of the actions, the hexagon pair, and the Hall-Janko build.

#include <doctest.h>

#include "constructions.hpp"
#include "geometry.hpp"
#include "perm.hpp"
#include "valuations.hpp"

using namespace suz;

static std::string data_path(const char* file) {
    return std::string(SUZTOWER_SOURCE_DIR) + "/data/" + file;
}

TEST_SUITE("tower") {

TEST_CASE("63-point action has orbital valencies 6, 24, 32") {
    GeneratorSet u33 = load_generators(data_path("u33_63.txt"));
    CHECK(u33.degree == 63);
    auto orbs = orbital_graphs(u33);
    std::vector<int> valencies;
    for (const auto& og : orbs) valencies.push_back(og.valency);
    CHECK(valencies == std::vector<int>{6, 24, 32});
}

TEST_CASE("100-point action has orbital valencies 36, 63") {
    GeneratorSet j2 = load_generators(data_path("j2_100.txt"));
    CHECK(j2.degree == 100);
    auto orbs = orbital_graphs(j2);
    std::vector<int> valencies;
    for (const auto& og : orbs) valencies.push_back(og.valency);
    CHECK(valencies == std::vector<int>{36, 63});
}

TEST_CASE("the 416-point generator file parses and acts transitively") {
    GeneratorSet g24 = load_generators(data_path("g24_2_416.txt"));
    CHECK(g24.degree == 416);
    CHECK(g24.generators.size() >= 2);
    CHECK_NOTHROW(orbital_graphs(g24));
}

TEST_CASE("hexagon pair: 63/63 generalized hexagons, one contains H(2,1)") {
    GeneratorSet u33 = load_generators(data_path("u33_63.txt"));
    HexagonPair pair = build_hexagons_2_2(u33, 100000000ULL);
    for (const auto& named : {pair.h2, pair.h2d}) {
        CHECK(named.geometry->num_points() == 63);
        CHECK(named.geometry->num_lines() == 63);
        CHECK(is_generalized_polygon(*named.geometry).ok);
    }
    CHECK(verify_embedding(pair.h21_embedding).ok);
    // the two hexagons are not isomorphic
    MappingResult iso = graph_isomorphic(*pair.h2.geometry, *pair.h2d.geometry,
                                         100000000ULL);
    CHECK(iso.outcome == SearchOutcome::None);
}

TEST_CASE("hall-janko build from the involution class") {
    GeneratorSet j2 = load_generators(data_path("j2_100.txt"));
    HjBuild hj = build_hj(j2, 12345, 4000);
    CHECK(hj.cls->size() == 315);
    CHECK(hj.named.geometry->num_points() == 315);
    CHECK(hj.named.geometry->num_lines() == 525);
    CHECK(hj.rejected_pairs == 0);
    CHECK(hj.lines_conjugation_invariant);
    CHECK(intersection_array(*hj.named.geometry).to_string() ==
          "{10, 8, 8, 2; 1, 1, 4, 5}");

    // distance-2 pairs have a unique common neighbor, so there are no quads
    CHECK(find_quads(*hj.named.geometry).empty());

    // classical valuations of collinear points are neighboring and *-closed;
    // classical valuations of points at distance 4 are not neighboring
    const Geometry& g = *hj.named.geometry;
    const auto& ln = g.line(0);
    ValueVector f1 = classical_valuation(g, ln[0]);
    ValueVector f2 = classical_valuation(g, ln[1]);
    CHECK(are_neighboring(f1, f2).neighboring);
    CHECK(star(f1, f2) == classical_valuation(g, ln[2]));
    const DistanceMatrix& dm = g.distances();
    bool found_far = false;
    for (int y = 0; y < g.num_points() && !found_far; ++y)
        if (dm.at(0, y) == 4) {
            CHECK_FALSE(
                are_neighboring(classical_valuation(g, 0), classical_valuation(g, y))
                    .neighboring);
            found_far = true;
        }
    CHECK(found_far);

    // centers are recoverable: distinct centers give distinct vectors and
    // the maximum of a classical valuation is the center's eccentricity
    ValueVector f0 = classical_valuation(g, 0);
    uint8_t ecc = 0;
    for (int y = 0; y < g.num_points(); ++y) ecc = std::max(ecc, dm.at(0, y));
    CHECK(*std::max_element(f0.begin(), f0.end()) == ecc);
}

TEST_CASE("distance matrices satisfy the triangle inequality (sampled)") {
    GeneratorSet j2 = load_generators(data_path("j2_100.txt"));
    HjBuild hj = build_hj(j2, 12345, 4000);
    const DistanceMatrix& dm = hj.named.geometry->distances();
    Rng64 rng(99);
    for (int i = 0; i < 20000; ++i) {
        int a = static_cast<int>(rng.below(315));
        int b = static_cast<int>(rng.below(315));
        int c = static_cast<int>(rng.below(315));
        CHECK(dm.at(a, b) + dm.at(b, c) >= dm.at(a, c));
    }
}

}  // TEST_SUITE
