#include <doctest.h>

#include "cache.hpp"
#include "constructions.hpp"
#include "report.hpp"

using namespace suz;

TEST_SUITE("formats") {

TEST_CASE("geometry text round trip preserves lines and label") {
    NamedGeometry h21 = build_h21();
    std::string text = geometry_to_text(*h21.geometry);
    Geometry back = geometry_from_text(text);
    CHECK(back.num_points() == 21);
    CHECK(back.lines() == h21.geometry->lines());
    CHECK(back.label() == "h21");
    CHECK(geometry_to_text(back) == text);
    CHECK(geometry_digest(back) == geometry_digest(*h21.geometry));
}

TEST_CASE("geometry text rejects corrupted headers") {
    CHECK_THROWS_AS(geometry_from_text("GEOM v2 3 1 x\n0 1 2\n"), CacheError);
    CHECK_THROWS_AS(geometry_from_text("NOPE v1 3 1 x\n0 1 2\n"), CacheError);
    CHECK_THROWS_AS(geometry_from_text("GEOM v1 3 2 x\n0 1 2\n"), CacheError);
}

TEST_CASE("valuation cache round trip and digest mismatch") {
    Geometry w2 = make_w2();
    auto vals = enumerate_valuations(w2);
    std::string digest = geometry_digest(w2);
    std::string text = valuations_to_text(vals, digest);
    CHECK(valuations_from_text(text, digest) == vals);
    CHECK_THROWS_AS(valuations_from_text(text, "0000000000000000"), CacheError);
}

TEST_CASE("embedding cache round trip") {
    std::string text = embedding_to_text({2, 0, 1}, "aaaa", "bbbb");
    CHECK(embedding_from_text(text, "aaaa", "bbbb") == std::vector<int32_t>{2, 0, 1});
    CHECK_THROWS_AS(embedding_from_text(text, "aaaa", "cccc"), CacheError);
}

TEST_CASE("reports render deterministically") {
    VerificationReport rep;
    rep.add_eq("a.points", "point count", "21", "21");
    rep.add("b.lines", "line count", "14", "15", false);
    CHECK_FALSE(rep.all_pass());
    std::string tsv = rep.to_tsv();
    CHECK(tsv.find("a.points\tpoint count\t21\t21\tPASS") != std::string::npos);
    CHECK(tsv.find("FAIL") != std::string::npos);
    CHECK(rep.to_tsv() == tsv);
    std::string json = rep.to_json();
    CHECK(json.find("\"status\": \"FAIL\"") != std::string::npos);
    // timings are excluded unless requested
    CHECK(tsv.find("runtime") == std::string::npos);
    CHECK(rep.to_tsv(true).find("runtime_ms") != std::string::npos);
}

}  // TEST_SUITE
