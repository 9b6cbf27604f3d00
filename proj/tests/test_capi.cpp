#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include "suztower.h"

TEST_SUITE("capi") {

TEST_CASE("context options validate") {
    suz_ctx* ctx = suz_ctx_new();
    CHECK(suz_ctx_set_option(ctx, "format", "json") == SUZ_OK);
    CHECK(suz_ctx_set_option(ctx, "format", "xml") == SUZ_ERR_INVALID_ARGUMENT);
    CHECK(suz_ctx_set_option(ctx, "threads", "2") == SUZ_OK);
    CHECK(suz_ctx_set_option(ctx, "seed", "not-a-number") ==
          SUZ_ERR_INVALID_ARGUMENT);
    CHECK(suz_ctx_set_option(ctx, "no_such_option", "1") ==
          SUZ_ERR_INVALID_ARGUMENT);
    std::string err = suz_last_error(ctx);
    CHECK(err.find("unknown option") != std::string::npos);
    suz_ctx_free(ctx);
}

TEST_CASE("build, inspect, save and load a geometry") {
    suz_ctx* ctx = suz_ctx_new();
    suz_ctx_set_option(ctx, "cache_dir", "capi_test_cache");
    suz_geometry* g = nullptr;
    REQUIRE(suz_geometry_build(ctx, "h21", &g) == SUZ_OK);
    CHECK(suz_geometry_num_points(g) == 21);
    CHECK(suz_geometry_num_lines(g) == 14);
    int32_t s = 0, t = 0;
    CHECK(suz_geometry_order(g, &s, &t) == SUZ_OK);
    CHECK(s == 2);
    CHECK(t == 1);
    CHECK(suz_geometry_diameter(g) == 3);

    CHECK(suz_geometry_save(ctx, g, "capi_test_h21.geom") == SUZ_OK);
    suz_geometry* h = nullptr;
    REQUIRE(suz_geometry_load(ctx, "capi_test_h21.geom", &h) == SUZ_OK);
    CHECK(suz_geometry_num_points(h) == 21);
    suz_geometry_free(h);
    suz_geometry_free(g);

    suz_geometry* bad = nullptr;
    CHECK(suz_geometry_build(ctx, "nonsense", &bad) == SUZ_ERR_INVALID_ARGUMENT);

    suz_ctx_free(ctx);
    std::remove("capi_test_h21.geom");
    std::filesystem::remove_all("capi_test_cache");
}

TEST_CASE("reports render and carry the overall status") {
    suz_ctx* ctx = suz_ctx_new();
    suz_ctx_set_option(ctx, "cache_dir", "capi_test_cache");
    char* rep = nullptr;
    int pass = 0;
    REQUIRE(suz_report_build(ctx, "h21", &rep, &pass) == SUZ_OK);
    CHECK(pass == 1);
    CHECK(std::string(rep).find("PASS") != std::string::npos);
    suz_string_free(rep);

    suz_ctx_set_option(ctx, "format", "json");
    REQUIRE(suz_report_verify(ctx, "h21", &rep, &pass) == SUZ_OK);
    CHECK(pass == 1);
    CHECK(std::string(rep).find("\"overall\": \"PASS\"") != std::string::npos);
    suz_string_free(rep);

    suz_ctx_free(ctx);
    std::filesystem::remove_all("capi_test_cache");
}

TEST_CASE("missing inputs are distinct errors with messages") {
    suz_ctx* ctx = suz_ctx_new();
    suz_ctx_set_option(ctx, "cache_dir", "capi_test_cache");
    suz_ctx_set_option(ctx, "gens_j2", "no_such_file.txt");
    char* rep = nullptr;
    CHECK(suz_report_build(ctx, "hj", &rep, nullptr) == SUZ_ERR_MISSING_INPUT);
    std::string err = suz_last_error(ctx);
    CHECK(err.find("no_such_file.txt") != std::string::npos);
    suz_ctx_free(ctx);
    std::filesystem::remove_all("capi_test_cache");
}

}  // TEST_SUITE
