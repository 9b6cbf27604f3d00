/*
 * suztower_cli.cpp
 *
 * Command-line driver over the C API (include/suztower.h).
 *
 * Subcommands:
 *   build <h21|hex22|l3cubed|hj|g24>   build a geometry, cache it, report stats
 *   verify [--all | --geom NAME]       re-verify cached geometries
 *   valuations --geom <h2d|hj>         enumerate valuations, report profiles
 *   vgeom --geom <h2d|hj>              build the valuation geometry
 *   tables --geom <h2d|hj>             profile + line-incidence tables
 *   lemmas [--id ID]                   connectivity/bijection lemma checks
 *   embed --small NAME --big NAME      full isometric embedding search
 *   pipeline                           the whole verification run
 *
 * Exit codes: 0 all checks pass, 1 internal error, 2 usage, 3 missing input,
 * 4 parse error, 5 cache digest mismatch, 6 verification failure, 7 budget.
 */
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "suztower.h"

namespace {

int exit_code_for(suz_status s) {
    switch (s) {
        case SUZ_OK: return 0;
        case SUZ_ERR_INVALID_ARGUMENT: return 2;
        case SUZ_ERR_MISSING_INPUT: return 3;
        case SUZ_ERR_PARSE: return 4;
        case SUZ_ERR_DIGEST_MISMATCH: return 5;
        case SUZ_ERR_VERIFY: return 6;
        case SUZ_ERR_BUDGET: return 7;
        case SUZ_ERR_INTERNAL: return 1;
    }
    return 1;
}

int finish(suz_ctx* ctx, suz_status s, char* report, int all_pass) {
    if (report) {
        std::fputs(report, stdout);
        suz_string_free(report);
    }
    if (s != SUZ_OK) {
        std::fprintf(stderr, "error: %s\n", suz_last_error(ctx));
        return exit_code_for(s);
    }
    return all_pass ? 0 : 6;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"suztower: Suzuki-tower near polygons and their valuation geometries"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string cache = "cache";
    std::string gens_u33 = "data/u33_63.txt";
    std::string gens_j2 = "data/j2_100.txt";
    std::string gens_g24 = "data/g24_2_416.txt";
    std::string format = "tsv";
    uint64_t seed = 20240901;
    int threads = 1;
    uint64_t budget = 1000000000ULL;
    bool timings = false;

    app.add_option("--cache", cache, "cache directory")->envname("SUZTOWER_CACHE");
    app.add_option("--gens-u33", gens_u33, "generator file for the 63-point group")
        ->envname("SUZTOWER_GENS_U33");
    app.add_option("--gens-j2", gens_j2, "generator file for the 100-point group")
        ->envname("SUZTOWER_GENS_J2");
    app.add_option("--gens-g24", gens_g24, "generator file for the 416-point group")
        ->envname("SUZTOWER_GENS_G24");
    app.add_option("--seed", seed, "pseudorandom seed")->envname("SUZTOWER_SEED");
    app.add_option("--threads", threads, "worker threads (default 1)")
        ->envname("SUZTOWER_THREADS");
    app.add_option("--budget", budget, "search node budget")
        ->envname("SUZTOWER_BUDGET");
    app.add_option("--format", format, "report format: tsv or json")
        ->check(CLI::IsMember({"tsv", "json"}))
        ->envname("SUZTOWER_FORMAT");
    app.add_flag("--timings", timings, "include runtimes in reports")
        ->envname("SUZTOWER_TIMINGS");

    std::string build_name, geom_name = "all", lemma_id, small_name, big_name;
    bool verify_all = false;

    CLI::App* cmd_build = app.add_subcommand("build", "build and cache a geometry");
    cmd_build->add_option("name", build_name, "h21|hex22|l3cubed|hj|g24")->required();

    CLI::App* cmd_verify = app.add_subcommand("verify", "re-verify cached geometries");
    cmd_verify->add_flag("--all", verify_all, "verify every named geometry");
    cmd_verify->add_option("--geom", geom_name, "one geometry name");

    CLI::App* cmd_vals = app.add_subcommand("valuations", "enumerate valuations");
    cmd_vals->add_option("--geom", geom_name, "h2d|hj")->required();

    CLI::App* cmd_vgeom = app.add_subcommand("vgeom", "build the valuation geometry");
    cmd_vgeom->add_option("--geom", geom_name, "h2d|hj")->required();

    CLI::App* cmd_tables = app.add_subcommand("tables", "reproduce the expected tables");
    cmd_tables->add_option("--geom", geom_name, "h2d|hj")->required();

    CLI::App* cmd_lemmas = app.add_subcommand("lemmas", "run the lemma checks");
    cmd_lemmas->add_option("--id", lemma_id,
                           "b-graph-connected|valbc|valb-bijection|valc-special|"
                           "c-graph-connected");

    CLI::App* cmd_embed = app.add_subcommand("embed", "search for an embedding");
    cmd_embed->add_option("--small", small_name, "source geometry")->required();
    cmd_embed->add_option("--big", big_name, "target geometry")->required();

    CLI::App* cmd_pipeline =
        app.add_subcommand("pipeline", "run the full verification pipeline");

    for (CLI::App* sub : app.get_subcommands({}))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    suz_ctx* ctx = suz_ctx_new();
    suz_ctx_set_option(ctx, "cache_dir", cache.c_str());
    suz_ctx_set_option(ctx, "gens_u33", gens_u33.c_str());
    suz_ctx_set_option(ctx, "gens_j2", gens_j2.c_str());
    suz_ctx_set_option(ctx, "gens_g24", gens_g24.c_str());
    suz_ctx_set_option(ctx, "seed", std::to_string(seed).c_str());
    suz_ctx_set_option(ctx, "threads", std::to_string(threads).c_str());
    suz_ctx_set_option(ctx, "budget", std::to_string(budget).c_str());
    suz_ctx_set_option(ctx, "format", format.c_str());
    suz_ctx_set_option(ctx, "timings", timings ? "1" : "0");

    char* report = nullptr;
    int all_pass = 0;
    suz_status s = SUZ_ERR_INVALID_ARGUMENT;

    if (cmd_build->parsed()) {
        s = suz_report_build(ctx, build_name.c_str(), &report, &all_pass);
    } else if (cmd_verify->parsed()) {
        s = suz_report_verify(ctx, verify_all ? "all" : geom_name.c_str(), &report,
                              &all_pass);
    } else if (cmd_vals->parsed()) {
        s = suz_report_valuations(ctx, geom_name.c_str(), &report, &all_pass);
    } else if (cmd_vgeom->parsed()) {
        s = suz_report_vgeom(ctx, geom_name.c_str(), &report, &all_pass);
    } else if (cmd_tables->parsed()) {
        s = suz_report_tables(ctx, geom_name.c_str(), &report, &all_pass);
    } else if (cmd_lemmas->parsed()) {
        s = suz_report_lemmas(ctx, lemma_id.c_str(), &report, &all_pass);
    } else if (cmd_embed->parsed()) {
        s = suz_report_embed(ctx, small_name.c_str(), big_name.c_str(), &report,
                             &all_pass);
    } else if (cmd_pipeline->parsed()) {
        s = suz_report_pipeline(ctx, &report, &all_pass);
    }

    int rc = finish(ctx, s, report, all_pass);
    suz_ctx_free(ctx);
    return rc;
}
