#include "report.hpp"

#include <sstream>

#include <json.hpp>

namespace suz {

void VerificationReport::add(std::string id, std::string description,
                             std::string expected, std::string observed,
                             bool pass, double ms) {
    entries.push_back(CheckEntry{std::move(id), std::move(description),
                                 std::move(expected), std::move(observed), pass, ms});
}

void VerificationReport::add_eq(std::string id, std::string description,
                                std::string expected, std::string observed,
                                double ms) {
    bool pass = expected == observed;
    add(std::move(id), std::move(description), std::move(expected),
        std::move(observed), pass, ms);
}

void VerificationReport::extend(const VerificationReport& other) {
    entries.insert(entries.end(), other.entries.begin(), other.entries.end());
}

bool VerificationReport::all_pass() const {
    for (const auto& e : entries)
        if (!e.pass) return false;
    return true;
}

std::string VerificationReport::to_tsv(bool timings) const {
    std::ostringstream out;
    out << "id\tdescription\texpected\tobserved\tstatus";
    if (timings) out << "\truntime_ms";
    out << '\n';
    for (const auto& e : entries) {
        out << e.id << '\t' << e.description << '\t' << e.expected << '\t'
            << e.observed << '\t' << (e.pass ? "PASS" : "FAIL");
        if (timings) out << '\t' << static_cast<long long>(e.ms);
        out << '\n';
    }
    out << "overall\t" << entries.size() << " checks\t\t\t"
        << (all_pass() ? "PASS" : "FAIL") << '\n';
    return out.str();
}

std::string VerificationReport::to_json(bool timings) const {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& e : entries) {
        nlohmann::ordered_json obj;
        obj["id"] = e.id;
        obj["description"] = e.description;
        obj["expected"] = e.expected;
        obj["observed"] = e.observed;
        obj["status"] = e.pass ? "PASS" : "FAIL";
        if (timings) obj["runtime_ms"] = static_cast<long long>(e.ms);
        arr.push_back(std::move(obj));
    }
    nlohmann::ordered_json root;
    root["checks"] = std::move(arr);
    root["overall"] = all_pass() ? "PASS" : "FAIL";
    return root.dump(2) + "\n";
}

std::string VerificationReport::render(const std::string& format, bool timings) const {
    return format == "json" ? to_json(timings) : to_tsv(timings);
}

}  // namespace suz
