#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace yoneda {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaTag = "yoneda-lab/1";

enum class Verdict { Pass, Fail, Skip };

std::string verdict_name(Verdict v);

// One verified property. `anchor` is a stable id of the property being checked
// (e.g. "counit-epi-iff-invariants-generate"), so reports stay greppable across runs.
struct CheckResult {
    std::string name;
    std::string anchor;
    Verdict verdict = Verdict::Pass;
    Json witness;             // concrete counterexample data on failure
    Json data;                // optional extra measurements

    Json to_json() const;
};

struct AuditReport {
    std::string instance;     // instance label ("corpus:..." or file path)
    std::string subject;      // operation or command that produced the report
    Json facts = Json::object();
    std::vector<CheckResult> checks;

    void pass(const std::string& name, const std::string& anchor, Json data = Json());
    void fail(const std::string& name, const std::string& anchor, Json witness, Json data = Json());
    void skip(const std::string& name, const std::string& anchor, const std::string& reason);
    void require(bool ok, const std::string& name, const std::string& anchor,
                 Json witness_on_fail = Json(), Json data = Json());
    void fact(const std::string& key, Json value);
    void merge(const AuditReport& other, const std::string& prefix = "");

    bool all_passed() const;
    int failed() const;
    int passed() const;
    int skipped() const;
    Json to_json() const;
};

} // namespace yoneda
