#include <doctest.h>

#include <set>

#include "constructions.hpp"
#include "geometry.hpp"

using namespace suz;

TEST_SUITE("geometry") {

TEST_CASE("partial linear space validation") {
    CHECK_THROWS(Geometry(3, {{0, 1, 2}, {0, 1}}, "bad"));        // two common points
    CHECK_THROWS(Geometry(3, {{0, 0, 1}}, "bad"));                // repeated point
    CHECK_THROWS(Geometry(2, {{0, 1, 2}}, "bad"));                // index out of range
    CHECK_THROWS(Geometry(3, {{0, 1, 2}, {0, 2, 1}}, "bad"));     // duplicate line
    CHECK_NOTHROW(Geometry(4, {{0, 1, 2}, {0, 3}}, "ok"));
}

TEST_CASE("distances, diameter and sentinel") {
    Geometry two_lines(6, {{0, 1, 2}, {3, 4, 5}}, "disjoint");
    const DistanceMatrix& dm = two_lines.distances();
    CHECK_FALSE(dm.connected());
    CHECK(dm.at(0, 3) == DistanceMatrix::kUnreachable);
    CHECK(dm.at(0, 1) == 1);

    Geometry grid = make_grid3x3();
    CHECK(grid.distances().diameter() == 2);
    // symmetry and zero diagonal
    for (int i = 0; i < 9; ++i) {
        CHECK(grid.distances().at(i, i) == 0);
        for (int j = 0; j < 9; ++j)
            CHECK(grid.distances().at(i, j) == grid.distances().at(j, i));
    }
}

TEST_CASE("order_of") {
    Geometry grid = make_grid3x3();
    OrderResult ord = order_of(grid);
    CHECK(ord.has_order);
    CHECK(ord.s == 2);
    CHECK(ord.t == 1);

    Geometry uneven(4, {{0, 1, 2}, {0, 3}}, "uneven");
    CHECK_FALSE(order_of(uneven).has_order);
}

TEST_CASE("h21 is the generalized hexagon of order (2,1)") {
    NamedGeometry h21 = build_h21();
    CHECK(h21.geometry->num_points() == 21);
    CHECK(h21.geometry->num_lines() == 14);
    OrderResult ord = order_of(*h21.geometry);
    CHECK(ord.s == 2);
    CHECK(ord.t == 1);
    NearPolygonVerdict np = is_near_polygon(*h21.geometry);
    CHECK(np.ok);
    CHECK(np.diameter == 3);
    CHECK(is_generalized_polygon(*h21.geometry).ok);
    // degree-4 collinearity graph
    for (int p = 0; p < 21; ++p)
        CHECK(h21.geometry->neighbors(p).size() == 4);
    CHECK(check_count_identity(*h21.geometry).ok);
    CHECK(intersection_array(*h21.geometry).to_string() == "{4, 2, 2; 1, 1, 2}");
}

TEST_CASE("l3cubed is a near hexagon but not a generalized one") {
    NamedGeometry l3 = build_l3_cubed();
    CHECK(l3.geometry->num_points() == 27);
    CHECK(l3.geometry->num_lines() == 27);
    OrderResult ord = order_of(*l3.geometry);
    CHECK(ord.s == 2);
    CHECK(ord.t == 2);
    NearPolygonVerdict np = is_near_polygon(*l3.geometry);
    CHECK(np.ok);
    CHECK(np.diameter == 3);
    CHECK_FALSE(is_generalized_polygon(*l3.geometry).ok);
    CHECK(check_count_identity(*l3.geometry).ok);
    // n2 = (v+9)/3 = 12; every distance-2 pair has exactly 2 common neighbors
    const DistanceMatrix& dm = l3.geometry->distances();
    for (int x = 0; x < 27; ++x) {
        int n2 = 0;
        for (int y = 0; y < 27; ++y) n2 += dm.at(x, y) == 2;
        CHECK(n2 == 12);
    }
    CHECK(intersection_array(*l3.geometry).to_string() == "{6, 4, 2; 1, 2, 3}");
}

TEST_CASE("near polygon fails with a witness after deleting a line") {
    NamedGeometry h21 = build_h21();
    auto lines = h21.geometry->lines();
    lines.pop_back();
    Geometry broken(21, std::move(lines), "broken");
    NearPolygonVerdict np = is_near_polygon(broken);
    // either NP2 breaks or it survives as a smaller structure; here it breaks
    CHECK_FALSE(np.ok);
    CHECK_FALSE(np.witness.empty());
}

TEST_CASE("single line geometry") {
    Geometry l3 = make_three_point_line();
    NearPolygonVerdict np = is_near_polygon(l3);
    CHECK(np.ok);
    CHECK(np.diameter == 1);
    CHECK(is_generalized_polygon(l3).ok);  // vacuous at diameter 1
    CHECK(intersection_array(l3).to_string() == "{2; 1}");
}

TEST_CASE("w2 is the generalized quadrangle of order (2,2)") {
    Geometry w2 = make_w2();
    CHECK(w2.num_points() == 15);
    CHECK(w2.num_lines() == 15);
    OrderResult ord = order_of(w2);
    CHECK(ord.s == 2);
    CHECK(ord.t == 2);
    CHECK(is_near_polygon(w2).ok);
    CHECK(w2.distances().diameter() == 2);
    CHECK(intersection_array(w2).to_string() == "{6, 4; 1, 3}");
}

TEST_CASE("convex closure") {
    Geometry grid = make_grid3x3();
    CHECK(convex_closure(grid, {4}) == std::vector<uint16_t>{4});
    // two collinear points close to their line
    auto ln = convex_closure(grid, {0, 1});
    CHECK(ln.size() == 3);
    // opposite corners at distance 2 with two common neighbors span the grid
    auto all = convex_closure(grid, {0, 8});
    CHECK(all.size() == 9);
}

TEST_CASE("find_quads classifies the grid quads of l3cubed") {
    NamedGeometry l3 = build_l3_cubed();
    auto quads = find_quads(*l3.geometry);
    CHECK(quads.size() == 9);
    for (const auto& q : quads) {
        CHECK(q.kind == QuadKind::Grid);
        CHECK(q.points.size() == 9);
    }
    // a generalized hexagon has no quads
    NamedGeometry h21 = build_h21();
    CHECK(find_quads(*h21.geometry).empty());
}

TEST_CASE("find_quads sees W(2) inside a product with a line") {
    Geometry w2 = make_w2();
    Geometry l3 = make_three_point_line();
    Geometry prod = direct_product(w2, l3, "w2xl3");
    auto quads = find_quads(prod);
    bool has_w2 = false, has_grid = false;
    for (const auto& q : quads) {
        if (q.kind == QuadKind::W2) has_w2 = true;
        if (q.kind == QuadKind::Grid) has_grid = true;
    }
    CHECK(has_w2);
    CHECK(has_grid);
}

TEST_CASE("dual is an involution up to relabeling") {
    NamedGeometry h21 = build_h21();
    const Geometry& g = *h21.geometry;
    Geometry d1 = dual(g);
    Geometry dd = dual(d1);
    CHECK(dd.num_points() == g.num_points());
    CHECK(dd.num_lines() == g.num_lines());
    // the relabeling sends point p to the sorted position of its line pencil
    std::vector<uint16_t> sigma(g.num_points());
    for (int p = 0; p < g.num_points(); ++p) {
        std::vector<uint16_t> pencil;
        for (int32_t l : g.lines_through(p)) pencil.push_back(static_cast<uint16_t>(l));
        std::sort(pencil.begin(), pencil.end());
        bool found = false;
        for (int q = 0; q < d1.num_lines() && !found; ++q)
            if (d1.line(q) == pencil) {
                sigma[p] = static_cast<uint16_t>(q);
                found = true;
            }
        REQUIRE(found);
    }
    std::set<std::vector<uint16_t>> expected;
    for (const auto& ln : g.lines()) {
        std::vector<uint16_t> img;
        for (uint16_t p : ln) img.push_back(sigma[p]);
        std::sort(img.begin(), img.end());
        expected.insert(img);
    }
    std::set<std::vector<uint16_t>> actual(dd.lines().begin(), dd.lines().end());
    CHECK(actual == expected);
}

TEST_CASE("direct product counts and diameters") {
    Geometry l3 = make_three_point_line();
    Geometry sq = direct_product(l3, l3, "sq");
    CHECK(sq.num_points() == 9);
    CHECK(sq.num_lines() == 6);
    Geometry cube = direct_product(l3, sq, "cube");
    CHECK(cube.num_points() == 27);
    CHECK(cube.num_lines() == 27);
    CHECK(cube.distances().diameter() ==
          l3.distances().diameter() + sq.distances().diameter());
}

TEST_CASE("triangles_as_lines demands exactly one triangle per edge") {
    // K4: every edge lies in two triangles
    std::vector<std::pair<uint16_t, uint16_t>> k4;
    for (uint16_t a = 0; a < 4; ++a)
        for (uint16_t b = a + 1; b < 4; ++b) k4.emplace_back(a, b);
    CHECK_THROWS_WITH_AS(triangles_as_lines(4, k4, "k4"),
                         doctest::Contains("2 triangles"), std::runtime_error);
    // a path has edges on no triangle
    CHECK_THROWS(triangles_as_lines(3, {{0, 1}, {1, 2}}, "path"));
    // one honest triangle
    Geometry tri = triangles_as_lines(3, {{0, 1}, {1, 2}, {0, 2}}, "tri");
    CHECK(tri.num_lines() == 1);
}

TEST_CASE("orbital graphs of a transitive action") {
    // S3 acting on 3 points: one orbital of valency 2
    GeneratorSet s3;
    s3.degree = 3;
    s3.generators = {Perm({1, 0, 2}), Perm({1, 2, 0})};
    auto orbs = orbital_graphs(s3);
    REQUIRE(orbs.size() == 1);
    CHECK(orbs[0].valency == 2);

    // C4 on 4 points: valencies 2 and 1, summing to n-1
    GeneratorSet c4;
    c4.degree = 4;
    c4.generators = {Perm({1, 2, 3, 0})};
    auto orbs4 = orbital_graphs(c4);
    int total = 0;
    for (const auto& og : orbs4) total += og.valency;
    CHECK(total == 3);

    GeneratorSet intrans;
    intrans.degree = 4;
    intrans.generators = {Perm({1, 0, 2, 3})};
    CHECK_THROWS(orbital_graphs(intrans));
}

}  // TEST_SUITE
