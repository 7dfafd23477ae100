#include "yoneda/report.hpp"

namespace yoneda {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Skip: return "skip";
    }
    return "unknown";
}

Json CheckResult::to_json() const {
    Json j;
    j["name"] = name;
    j["anchor"] = anchor;
    j["verdict"] = verdict_name(verdict);
    if (!witness.is_null()) j["witness"] = witness;
    if (!data.is_null()) j["data"] = data;
    return j;
}

void AuditReport::pass(const std::string& name, const std::string& anchor, Json data) {
    checks.push_back(CheckResult{name, anchor, Verdict::Pass, Json(), std::move(data)});
}

void AuditReport::fail(const std::string& name, const std::string& anchor, Json witness, Json data) {
    checks.push_back(CheckResult{name, anchor, Verdict::Fail, std::move(witness), std::move(data)});
}

void AuditReport::skip(const std::string& name, const std::string& anchor, const std::string& reason) {
    Json data;
    data["reason"] = reason;
    checks.push_back(CheckResult{name, anchor, Verdict::Skip, Json(), std::move(data)});
}

void AuditReport::require(bool ok, const std::string& name, const std::string& anchor,
                          Json witness_on_fail, Json data) {
    if (ok)
        pass(name, anchor, std::move(data));
    else
        fail(name, anchor, std::move(witness_on_fail), std::move(data));
}

void AuditReport::fact(const std::string& key, Json value) { facts[key] = std::move(value); }

void AuditReport::merge(const AuditReport& other, const std::string& prefix) {
    for (const auto& c : other.checks) {
        CheckResult cc = c;
        if (!prefix.empty()) cc.name = prefix + c.name;
        checks.push_back(std::move(cc));
    }
    for (auto it = other.facts.begin(); it != other.facts.end(); ++it)
        facts[prefix.empty() ? it.key() : prefix + it.key()] = it.value();
}

bool AuditReport::all_passed() const { return failed() == 0; }

int AuditReport::failed() const {
    int n = 0;
    for (const auto& c : checks) n += c.verdict == Verdict::Fail;
    return n;
}

int AuditReport::passed() const {
    int n = 0;
    for (const auto& c : checks) n += c.verdict == Verdict::Pass;
    return n;
}

int AuditReport::skipped() const {
    int n = 0;
    for (const auto& c : checks) n += c.verdict == Verdict::Skip;
    return n;
}

Json AuditReport::to_json() const {
    Json j;
    j["schema"] = kSchemaTag;
    j["instance"] = instance;
    j["subject"] = subject;
    if (!facts.empty()) j["facts"] = facts;
    Json arr = Json::array();
    for (const auto& c : checks) arr.push_back(c.to_json());
    j["checks"] = std::move(arr);
    j["summary"] = Json{{"passed", passed()}, {"failed", failed()}, {"skipped", skipped()}};
    return j;
}

} // namespace yoneda
