#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace halg {

// Raised when inputs violate a precondition (as opposed to a law check
// failing, which is reported through CheckResult).
struct ValidationError : std::runtime_error {
    std::string check;
    std::string witness;

    ValidationError(std::string check_id, std::string witness_text, const std::string& msg)
        : std::runtime_error(msg), check(std::move(check_id)), witness(std::move(witness_text)) {}
};

// Outcome of one verified law. Every failing instance is recorded; checks
// never stop at the first counterexample.
struct CheckResult {
    std::string id;
    std::string law;
    bool pass = true;
    std::vector<std::string> witnesses;

    CheckResult() = default;
    CheckResult(std::string id_, std::string law_) : id(std::move(id_)), law(std::move(law_)) {}

    void fail(std::string witness) {
        pass = false;
        witnesses.push_back(std::move(witness));
    }
};

struct CheckReport {
    std::vector<CheckResult> checks;

    void add(CheckResult r) { checks.push_back(std::move(r)); }
    void merge(const CheckReport& o) {
        checks.insert(checks.end(), o.checks.begin(), o.checks.end());
    }
    void merge_prefixed(const CheckReport& o, const std::string& prefix) {
        for (CheckResult c : o.checks) {
            c.id = prefix + c.id;
            checks.push_back(std::move(c));
        }
    }
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    const CheckResult* find(const std::string& id) const {
        for (const auto& c : checks)
            if (c.id == id) return &c;
        return nullptr;
    }
    std::size_t fail_count() const {
        std::size_t n = 0;
        for (const auto& c : checks)
            if (!c.pass) ++n;
        return n;
    }
};

}  // namespace halg
