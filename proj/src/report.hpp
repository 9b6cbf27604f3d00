/*
 * report.hpp
 *
 * Verification reports: an ordered list of named checks, each carrying the
 * expected and observed value. Rendered as TSV or JSON. Reports are
 * byte-identical across runs with identical inputs; per-check runtimes are
 * emitted only when explicitly requested.
 */
#pragma once

#include <string>
#include <vector>

namespace suz {

struct CheckEntry {
    std::string id;
    std::string description;
    std::string expected;
    std::string observed;
    bool pass = false;
    double ms = 0.0;
};

struct VerificationReport {
    std::vector<CheckEntry> entries;

    void add(std::string id, std::string description, std::string expected,
             std::string observed, bool pass, double ms = 0.0);
    // convenience: pass iff expected == observed
    void add_eq(std::string id, std::string description, std::string expected,
                std::string observed, double ms = 0.0);
    void extend(const VerificationReport& other);

    bool all_pass() const;
    std::string to_tsv(bool timings = false) const;
    std::string to_json(bool timings = false) const;
    std::string render(const std::string& format, bool timings = false) const;
};

}  // namespace suz
