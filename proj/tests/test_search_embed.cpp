#include <doctest.h>

#include "constructions.hpp"
#include "embed.hpp"
#include "search.hpp"

using namespace suz;

namespace {

GeometryPtr share(Geometry g) { return std::make_shared<Geometry>(std::move(g)); }

Geometry relabel(const Geometry& g, const std::vector<uint16_t>& perm) {
    std::vector<std::vector<uint16_t>> lines;
    for (const auto& ln : g.lines()) {
        std::vector<uint16_t> img;
        for (uint16_t p : ln) img.push_back(perm[p]);
        lines.push_back(img);
    }
    return Geometry(g.num_points(), std::move(lines), g.label() + "-relabeled");
}

}  // namespace

TEST_SUITE("search and embeddings") {

TEST_CASE("isomorphism under a random relabeling") {
    NamedGeometry l3c = build_l3_cubed();
    std::vector<uint16_t> perm(27);
    Rng64 rng(5);
    for (int i = 0; i < 27; ++i) perm[i] = static_cast<uint16_t>(i);
    for (int i = 26; i > 0; --i)
        std::swap(perm[i], perm[rng.below(i + 1)]);
    Geometry shuffled = relabel(*l3c.geometry, perm);
    MappingResult r = graph_isomorphic(*l3c.geometry, shuffled, 1000000);
    REQUIRE(r.outcome == SearchOutcome::Found);
    // the mapping carries lines onto lines
    for (const auto& ln : l3c.geometry->lines()) {
        std::vector<uint16_t> img{static_cast<uint16_t>(r.map[ln[0]]),
                                  static_cast<uint16_t>(r.map[ln[1]]),
                                  static_cast<uint16_t>(r.map[ln[2]])};
        std::sort(img.begin(), img.end());
        CHECK(shuffled.line_between(img[0], img[1]) ==
              shuffled.line_between(img[0], img[2]));
        CHECK(shuffled.line_between(img[0], img[1]) >= 0);
    }
}

TEST_CASE("non-isomorphic geometries of equal size") {
    // l3cubed vs h21 have different sizes; compare grid against itself minus nothing
    NamedGeometry h21 = build_h21();
    NamedGeometry l3c = build_l3_cubed();
    MappingResult r = graph_isomorphic(*h21.geometry, *l3c.geometry, 1000000);
    CHECK(r.outcome == SearchOutcome::None);
}

TEST_CASE("budget exceeded is distinct from none") {
    NamedGeometry l3c = build_l3_cubed();
    MappingResult r = graph_isomorphic(*l3c.geometry, *l3c.geometry, 3);
    CHECK(r.outcome == SearchOutcome::BudgetExceeded);
}

TEST_CASE("identity embedding verifies") {
    NamedGeometry h21 = build_h21();
    std::vector<int32_t> id(21);
    for (int i = 0; i < 21; ++i) id[i] = i;
    EmbeddingMap e{h21.geometry, h21.geometry, id};
    CHECK(verify_embedding(e).ok);
}

TEST_CASE("collinearity-preserving but distance-contracting map fails") {
    // map the 3x3 grid onto a W(2) subquadrangle would contract nothing;
    // instead map two points of a product to the same distance-1 pair
    Geometry l3 = make_three_point_line();
    GeometryPtr grid = share(make_grid3x3());
    // send the grid line {0,1,2} to itself but swap two non-collinear points
    std::vector<int32_t> bad(9);
    for (int i = 0; i < 9; ++i) bad[i] = i;
    std::swap(bad[1], bad[3]);  // breaks line images
    EmbeddingMap e{grid, grid, bad};
    CHECK_FALSE(verify_embedding(e).ok);
}

TEST_CASE("line embeds fully in the grid") {
    GeometryPtr l3 = share(make_three_point_line());
    GeometryPtr grid = share(make_grid3x3());
    EmbedSearchResult r = find_embedding(l3, grid, 1000000);
    REQUIRE(r.outcome == SearchOutcome::Found);
    CHECK(verify_embedding(*r.embedding).ok);
}

TEST_CASE("grid embeds isometrically in W(2)") {
    GeometryPtr grid = share(make_grid3x3());
    GeometryPtr w2 = share(make_w2());
    EmbedSearchResult r = find_embedding(grid, w2, 10000000);
    REQUIRE(r.outcome == SearchOutcome::Found);
    CHECK(verify_embedding(*r.embedding).ok);
}

TEST_CASE("W(2) does not embed in the grid") {
    GeometryPtr grid = share(make_grid3x3());
    GeometryPtr w2 = share(make_w2());
    EmbedSearchResult r = find_embedding(w2, grid, 10000000);
    CHECK(r.outcome == SearchOutcome::None);
}

TEST_CASE("every geometry embeds in itself") {
    for (GeometryPtr g : {share(make_w2()), build_h21().geometry,
                          build_l3_cubed().geometry}) {
        EmbedSearchResult r = find_embedding(g, g, 100000000);
        REQUIRE(r.outcome == SearchOutcome::Found);
        CHECK(verify_embedding(*r.embedding).ok);
    }
}

TEST_CASE("projection onto an embedded line of the grid") {
    GeometryPtr l3 = share(make_three_point_line());
    GeometryPtr grid = share(make_grid3x3());
    // the first row of the grid is points 0,1,2
    EmbeddingMap e{l3, grid, {0, 1, 2}};
    REQUIRE(verify_embedding(e).ok);
    // a point in the image projects to itself
    CHECK(projection(e, 1) == 1);
    // point 3 is collinear with 0 only (rows 0..2, cols step 3): neighbors of 3
    auto p = projection(e, 3);
    REQUIRE(p.has_value());
    CHECK(grid->distances().at(*p, 3) == 1);
}

TEST_CASE("seeded automorphism search") {
    GeometryPtr w2 = share(make_w2());
    MappingOptions opts;
    opts.bijective = true;
    opts.node_budget = 10000000;
    opts.seeds = {{0, 7}};
    MappingResult r = find_point_mapping(*w2, *w2, opts);
    REQUIRE(r.outcome == SearchOutcome::Found);
    CHECK(r.map[0] == 7);
}

}  // TEST_SUITE
