/*
 * acceptance.cpp
 *
 * End-to-end acceptance run. Each criterion prints one PASS/FAIL line; the
 * process exits 0 iff every gating criterion passes. The final criterion
 * (budgeted isomorphism searches) never fails on budget exhaustion; it
 * reports EXTENDED-PASS or BUDGET-EXCEEDED.
 *
 * Inputs: the generator files under data/ (override with SUZTOWER_GENS_*).
 * The run computes into a fresh cache directory unless SUZTOWER_ACCEPT_CACHE
 * is set, so by default nothing is taken on faith from previous runs.
 */
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <thread>
#include <vector>

#include "constructions.hpp"
#include "pipeline.hpp"
#include "search.hpp"
#include "support/brute_oracle.hpp"

using namespace suz;
namespace fs = std::filesystem;

namespace {

struct Criterion {
    std::string id;
    std::string title;
    bool pass = true;
    bool gating = true;
    std::string note;
    double seconds = 0;
};

std::vector<Criterion> results;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

void record(Criterion c) {
    std::printf("[%s] %s: %s (%.1fs)%s%s\n",
                c.pass ? (c.gating ? "PASS" : "EXTENDED-PASS")
                       : (c.gating ? "FAIL" : "BUDGET-EXCEEDED"),
                c.id.c_str(), c.title.c_str(), c.seconds,
                c.note.empty() ? "" : " -- ", c.note.c_str());
    std::fflush(stdout);
    results.push_back(std::move(c));
}

// fold a report into a criterion; collects the first failing entries
void absorb(Criterion& c, const VerificationReport& rep) {
    for (const auto& e : rep.entries) {
        if (!e.pass) {
            c.pass = false;
            if (c.note.size() < 400)
                c.note += "[" + e.id + " expected " + e.expected + " observed " +
                          e.observed + "] ";
        }
    }
}

void check_time(Criterion& c, double limit_seconds) {
    if (c.seconds >= limit_seconds) {
        c.pass = false;
        c.note += "[time budget " + std::to_string(limit_seconds) + "s exceeded] ";
    }
}

std::string env_or(const char* name, const std::string& fallback) {
    const char* v = std::getenv(name);
    return v ? v : fallback;
}

}  // namespace

int main() {
    std::string source_dir = env_or("SUZTOWER_SOURCE_DIR", SUZTOWER_SOURCE_DIR);
    PipelineConfig cfg;
    cfg.gens_u33 = env_or("SUZTOWER_GENS_U33", source_dir + "/data/u33_63.txt");
    cfg.gens_j2 = env_or("SUZTOWER_GENS_J2", source_dir + "/data/j2_100.txt");
    cfg.gens_g24 = env_or("SUZTOWER_GENS_G24", source_dir + "/data/g24_2_416.txt");
    cfg.cache_dir = env_or("SUZTOWER_ACCEPT_CACHE", "");
    if (cfg.cache_dir.empty()) {
        cfg.cache_dir = "acceptance_cache_fresh";
        std::error_code ec;
        fs::remove_all(cfg.cache_dir, ec);
    }
    unsigned hw = std::thread::hardware_concurrency();
    cfg.threads = std::atoi(env_or("SUZTOWER_ACCEPT_THREADS",
                                   std::to_string(hw ? hw : 1)).c_str());
    Pipeline pipe(cfg);

    // C1: the generalized hexagon of order (2,1)
    {
        Criterion c{"C1", "H(2,1): 21 points, 14 lines, generalized hexagon of "
                          "order (2,1), diameter 3"};
        Timer t;
        try {
            absorb(c, pipe.geometry_stats_report("h21"));
        } catch (const std::exception& e) {
            c.pass = false;
            c.note = e.what();
        }
        c.seconds = t.seconds();
        check_time(c, 1.0);
        record(std::move(c));
    }

    // C2: the order-(2,2) trio and the H(2,1) separation
    {
        Criterion c{"C2", "order-(2,2) trio: both hexagons 63/63 with GP, "
                          "l3cubed near hexagon without GP, exactly one hexagon "
                          "contains H(2,1), count identity and n2 = (v+9)/3"};
        Timer t;
        try {
            absorb(c, pipe.geometry_stats_report("h2"));
            absorb(c, pipe.geometry_stats_report("h2d"));
            absorb(c, pipe.geometry_stats_report("l3cubed"));
            absorb(c, pipe.embed_report("h21", "h2d"));
            absorb(c, pipe.embed_report("h21", "h2"));
            absorb(c, pipe.embed_report("h21", "l3cubed"));
        } catch (const std::exception& e) {
            c.pass = false;
            c.note = e.what();
        }
        c.seconds = t.seconds();
        check_time(c, 60.0);
        record(std::move(c));
    }

    // C3: the Hall-Janko near octagon from the 100-point involution class
    {
        Criterion c{"C3", "HJ: class size 315, 525 lines, near octagon of order "
                          "(2,4), intersection array {10,8,8,2;1,1,4,5}"};
        Timer t;
        try {
            absorb(c, pipe.build_report("hj"));
        } catch (const std::exception& e) {
            c.pass = false;
            c.note = e.what();
        }
        c.seconds = t.seconds();
        check_time(c, 60.0);
        record(std::move(c));
    }

    // C4: the G2(4) near octagon from the 416-point involution class
    {
        Criterion c{"C4", "G24: class size 4095, retained orbits {1365,13650}, "
                          "15015 lines, near octagon of order (2,10)"};
        Timer t;
        try {
            absorb(c, pipe.build_report("g24"));
        } catch (const std::exception& e) {
            c.pass = false;
            c.note = e.what();
        }
        c.seconds = t.seconds();
        check_time(c, 1800.0);
        record(std::move(c));
    }

    // C5: valuation profile table of H(2)^D
    {
        Criterion c{"C5", "H(2)^D valuation profiles: 63/252/252/1008 with M_f, "
                          "|O_f|, |H_f| 31/47/23/31 and all value distributions"};
        Timer t;
        try {
            absorb(c, pipe.valuations_report("h2d"));
        } catch (const std::exception& e) {
            c.pass = false;
            c.note = e.what();
        }
        c.seconds = t.seconds();
        check_time(c, 300.0);
        record(std::move(c));
    }

    // C6: line-incidence table of the H(2)^D valuation geometry
    {
        Criterion c{"C6", "H(2)^D valuation-geometry line incidences, all 11 "
                          "line types x 4 point types, dashes as zeros"};
        Timer t;
        try {
            absorb(c, pipe.vgeom_report("h2d"));
        } catch (const std::exception& e) {
            c.pass = false;
            c.note = e.what();
        }
        c.seconds = t.seconds();
        record(std::move(c));
    }

    // C7: valuation profile table of HJ
    {
        Criterion c{"C7", "HJ valuation profiles: 315/630/3150/1008/2016 with "
                          "all signatures"};
        Timer t;
        try {
            absorb(c, pipe.valuations_report("hj"));
        } catch (const std::exception& e) {
            c.pass = false;
            c.note = e.what();
        }
        c.seconds = t.seconds();
        check_time(c, 3600.0);
        record(std::move(c));
    }

    // C8: line-incidence table of the HJ valuation geometry
    {
        Criterion c{"C8", "HJ valuation-geometry line incidences, all 10 line "
                          "types x 5 point types"};
        Timer t;
        try {
            absorb(c, pipe.vgeom_report("hj"));
        } catch (const std::exception& e) {
            c.pass = false;
            c.note = e.what();
        }
        c.seconds = t.seconds();
        check_time(c, 1800.0);
        record(std::move(c));
    }

    // C9: the five computer-checked lemmas
    {
        Criterion c{"C9", "lemma checks: B-graph connected (252), valbc with the "
                          "alternative reading reported, the five-BBB-lines "
                          "bijection (630), special/ordinary CCC lines, C-graph "
                          "connected (3150)"};
        Timer t;
        try {
            absorb(c, pipe.lemmas_report());
        } catch (const std::exception& e) {
            c.pass = false;
            c.note = e.what();
        }
        c.seconds = t.seconds();
        record(std::move(c));
    }

    // C10: the 315-point model on type-A/B valuations
    {
        Criterion c{"C10", "vab model: 315 points, 525 lines (63+126+336), near "
                           "octagon (2,4), verified type-A copy of H(2)^D, "
                           "intersection array equals HJ's"};
        Timer t;
        try {
            absorb(c, pipe.model_report("vab"));
        } catch (const std::exception& e) {
            c.pass = false;
            c.note = e.what();
        }
        c.seconds = t.seconds();
        record(std::move(c));
    }

    // C11: the 4095-point model on type-A/B/C valuations
    {
        Criterion c{"C11", "g24model: 4095 points, 15015 lines "
                           "(525+315+1575+3150+9450), near octagon (2,10), "
                           "verified type-A copy of HJ"};
        Timer t;
        try {
            absorb(c, pipe.model_report("g24model"));
        } catch (const std::exception& e) {
            c.pass = false;
            c.note = e.what();
        }
        c.seconds = t.seconds();
        record(std::move(c));
    }

    // C12: oracle equivalence of the valuation enumerator
    {
        Criterion c{"C12", "enumerate_valuations matches the brute-force oracle "
                           "on the 3x3 grid, W(2) (21 valuations), and H(2,1)"};
        Timer t;
        try {
            Geometry grid = make_grid3x3();
            bool ok = enumerate_valuations(grid) ==
                      suz::testing::brute_force_valuations(grid);
            if (!ok) { c.pass = false; c.note += "[grid mismatch] "; }
            Geometry w2 = make_w2();
            auto w2fast = enumerate_valuations(w2);
            if (w2fast.size() != 21) { c.pass = false; c.note += "[W(2) count != 21] "; }
            if (w2fast != suz::testing::brute_force_valuations(w2)) {
                c.pass = false;
                c.note += "[W(2) mismatch] ";
            }
            GeometryPtr h21 = pipe.geometry("h21");
            if (enumerate_valuations(*h21) !=
                suz::testing::brute_force_valuations(*h21)) {
                c.pass = false;
                c.note += "[H(2,1) mismatch] ";
            }
        } catch (const std::exception& e) {
            c.pass = false;
            c.note = e.what();
        }
        c.seconds = t.seconds();
        record(std::move(c));
    }

    // C13: sampled *-product properties
    {
        Criterion c{"C13", "*-product properties on 10^4 sampled neighboring "
                           "pairs per valuation set, star(f,f)=f on 10^3 samples"};
        Timer t;
        try {
            absorb(c, pipe.star_property_report("h2d"));
            absorb(c, pipe.star_property_report("hj"));
        } catch (const std::exception& e) {
            c.pass = false;
            c.note = e.what();
        }
        c.seconds = t.seconds();
        record(std::move(c));
    }

    // tower embeddings (part of the constructions invariants)
    {
        Criterion c{"C2b", "tower embeddings: H(2)^D embeds isometrically in HJ "
                           "with clean induced valuations"};
        Timer t;
        try {
            absorb(c, pipe.embed_report("h2d", "hj"));
        } catch (const std::exception& e) {
            c.pass = false;
            c.note = e.what();
        }
        c.seconds = t.seconds();
        record(std::move(c));
    }

    // C14: extended, not gating
    {
        Criterion c{"C14", "extended: involution-built HJ vs vab model and "
                           "involution-built G24 vs valuation model"};
        c.gating = false;
        Timer t;
        try {
            VerificationReport rep = pipe.extended_isomorphism_report();
            rep.extend(pipe.embed_report("hj", "g24"));
            for (const auto& e : rep.entries) {
                if (!e.pass) {
                    c.pass = false;
                    c.note += "[" + e.id + ": " + e.observed + "] ";
                } else if (e.observed.find("budget") != std::string::npos) {
                    c.note += "[" + e.id + ": " + e.observed + "] ";
                }
            }
        } catch (const std::exception& e) {
            c.pass = false;
            c.note = e.what();
        }
        c.seconds = t.seconds();
        record(std::move(c));
    }

    int gating_failures = 0;
    for (const auto& c : results)
        if (c.gating && !c.pass) ++gating_failures;
    std::printf("SUMMARY: %zu criteria, %d gating failure(s)\n", results.size(),
                gating_failures);
    return gating_failures == 0 ? 0 : 1;
}
