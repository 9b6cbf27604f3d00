#include <doctest.h>

#include "constructions.hpp"
#include "valuations.hpp"
#include "support/brute_oracle.hpp"

using namespace suz;

namespace {
GeometryPtr share(Geometry g) { return std::make_shared<Geometry>(std::move(g)); }
}

TEST_SUITE("valuations") {

TEST_CASE("is_valuation basics") {
    Geometry l3 = make_three_point_line();
    CHECK(is_valuation(l3, {0, 1, 1}).ok);
    CHECK(is_valuation(l3, {1, 0, 1}).ok);
    CHECK_FALSE(is_valuation(l3, {0, 0, 0}).ok);  // no unique minimum
    CHECK_FALSE(is_valuation(l3, {1, 2, 2}).ok);  // minimum not 0
    CHECK_FALSE(is_valuation(l3, {0, 1, 2}).ok);

    NamedGeometry h21 = build_h21();
    // classical valuations satisfy the line rule via NP2
    for (int x : {0, 5, 20})
        CHECK(is_valuation(*h21.geometry, classical_valuation(*h21.geometry, x)).ok);
}

TEST_CASE("classical valuation distribution equals the distance distribution") {
    Geometry l3 = make_three_point_line();
    ValueVector f = classical_valuation(l3, 0);
    ValuationSignature sig = signature_of(f, 1);
    CHECK(sig.distribution == std::vector<int32_t>{1, 2});
    CHECK(sig.max_value == 1);
    CHECK(sig.zero_count == 1);
}

TEST_CASE("hyperplane of a classical valuation on a line") {
    Geometry l3 = make_three_point_line();
    auto h = hyperplane_of(l3, classical_valuation(l3, 0));
    CHECK(h == std::vector<uint16_t>{0});
}

TEST_CASE("enumeration matches the brute-force oracle on the single line") {
    Geometry l3 = make_three_point_line();
    auto fast = enumerate_valuations(l3);
    auto brute = suz::testing::brute_force_valuations(l3);
    CHECK(fast.size() == 3);
    CHECK(fast == brute);
}

TEST_CASE("enumeration matches the brute-force oracle on the 3x3 grid") {
    Geometry grid = make_grid3x3();
    auto fast = enumerate_valuations(grid);
    auto brute = suz::testing::brute_force_valuations(grid);
    CHECK(fast == brute);
    for (const auto& v : fast) CHECK(is_valuation(grid, v).ok);
}

TEST_CASE("enumeration matches the brute-force oracle on W(2)") {
    Geometry w2 = make_w2();
    auto fast = enumerate_valuations(w2);
    auto brute = suz::testing::brute_force_valuations(w2);
    CHECK(fast.size() == 21);  // 15 classical + 6 ovoidal
    CHECK(fast == brute);
    int classical = 0, ovoidal = 0;
    for (const auto& v : fast) {
        ValuationSignature sig = signature_of(v, 2);
        if (sig.max_value == 2 && sig.zero_count == 1) ++classical;
        if (sig.max_value == 1 && sig.zero_count == 5) ++ovoidal;
    }
    CHECK(classical == 15);
    CHECK(ovoidal == 6);
}

TEST_CASE("enumeration matches the lazy oracle on H(2,1)") {
    NamedGeometry h21 = build_h21();
    auto fast = enumerate_valuations(*h21.geometry);
    auto brute = suz::testing::brute_force_valuations(*h21.geometry);
    CHECK(fast == brute);
    // the 21 classical valuations are among them
    for (int x = 0; x < 21; ++x) {
        ValueVector f = classical_valuation(*h21.geometry, x);
        CHECK(std::binary_search(fast.begin(), fast.end(), f));
    }
}

TEST_CASE("threaded enumeration is byte-identical to single-threaded") {
    Geometry w2 = make_w2();
    EnumerateOptions seq, par;
    par.threads = 4;
    CHECK(enumerate_valuations(w2, seq) == enumerate_valuations(w2, par));
}

TEST_CASE("checkpointed enumeration resumes to the same answer") {
    Geometry w2 = make_w2();
    std::string path = "w2_vals.checkpoint";
    std::remove(path.c_str());
    EnumerateOptions opts;
    opts.checkpoint_file = path;
    auto first = enumerate_valuations(w2, opts);
    // a second run reuses every completed root
    auto second = enumerate_valuations(w2, opts);
    CHECK(first == second);
    std::remove(path.c_str());
}

TEST_CASE("neighboring valuations and epsilon") {
    Geometry grid = make_grid3x3();
    // classical valuations of two collinear points are neighboring
    ValueVector f0 = classical_valuation(grid, 0);
    ValueVector f1 = classical_valuation(grid, 1);
    NeighborResult nb = are_neighboring(f0, f1);
    CHECK(nb.neighboring);
    // a valuation is neighboring to itself with epsilon 0 by convention
    NeighborResult self = are_neighboring(f0, f0);
    CHECK(self.neighboring);
    CHECK(self.eps == 0);
    // far-apart classical valuations of the cube are not neighboring
    NamedGeometry l3c = build_l3_cubed();
    ValueVector a = classical_valuation(*l3c.geometry, 0);
    ValueVector b = classical_valuation(*l3c.geometry, 26);
    CHECK_FALSE(are_neighboring(a, b).neighboring);
}

TEST_CASE("star product: identity, commutativity, closure properties") {
    Geometry w2 = make_w2();
    auto vals = enumerate_valuations(w2);
    for (const auto& f : vals) CHECK(star(f, f) == f);
    int checked = 0;
    for (size_t i = 0; i < vals.size(); ++i)
        for (size_t j = i + 1; j < vals.size(); ++j) {
            if (!are_neighboring(vals[i], vals[j]).neighboring) continue;
            ValueVector f3 = star(vals[i], vals[j]);
            CHECK(star(vals[j], vals[i]) == f3);
            CHECK(is_valuation(w2, f3).ok);
            if (f3 != vals[i] && f3 != vals[j]) {
                CHECK(are_neighboring(vals[i], f3).neighboring);
                CHECK(star(vals[i], f3) == vals[j]);
                CHECK(star(vals[j], f3) == vals[i]);
            }
            ++checked;
        }
    CHECK(checked > 0);
}

TEST_CASE("classical valuations on lines satisfy the star closure") {
    // {x1,x2,x3} a line: f_x1 * f_x2 = f_x3
    NamedGeometry h21 = build_h21();
    const Geometry& g = *h21.geometry;
    for (int l = 0; l < g.num_lines(); ++l) {
        const auto& ln = g.line(l);
        ValueVector f1 = classical_valuation(g, ln[0]);
        ValueVector f2 = classical_valuation(g, ln[1]);
        ValueVector f3 = classical_valuation(g, ln[2]);
        CHECK(star(f1, f2) == f3);
    }
}

TEST_CASE("induced valuations of an embedded line in the grid") {
    GeometryPtr l3 = share(make_three_point_line());
    GeometryPtr grid = share(make_grid3x3());
    EmbeddingMap e{l3, grid, {0, 1, 2}};
    InducedValuationsResult r = induced_valuations(e);
    REQUIRE(r.ok);
    // points of the image induce classical valuations
    CHECK(r.per_point[0] == classical_valuation(*l3, 0));
    CHECK(r.per_point[1] == classical_valuation(*l3, 1));
}

TEST_CASE("valuation set typing fails on a wrong table") {
    Geometry w2 = make_w2();
    auto vs = ValuationSet(share(std::move(w2)), enumerate_valuations(make_w2()));
    auto bad = vs.assign_types(h2d_expected_profile());
    CHECK_FALSE(bad.ok);
    CHECK_FALSE(bad.witness.empty());
}

}  // TEST_SUITE
