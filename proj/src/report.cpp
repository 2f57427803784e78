#include "frobstab/report.hpp"

namespace frobstab {

std::string to_string(ClauseStatus s) {
    switch (s) {
        case ClauseStatus::pass: return "pass";
        case ClauseStatus::fail: return "fail";
        case ClauseStatus::not_applicable: return "not_applicable";
    }
    return "unknown";
}

void VerificationReport::add(const std::string& label, const std::string& statement,
                             bool ok, const std::string& witness_on_fail) {
    Clause c;
    c.label = label;
    c.statement = statement;
    c.status = ok ? ClauseStatus::pass : ClauseStatus::fail;
    if (!ok) c.witness = witness_on_fail;
    clauses.push_back(std::move(c));
}

void VerificationReport::add_na(const std::string& label, const std::string& statement,
                                const std::string& reason) {
    Clause c;
    c.label = label;
    c.statement = statement;
    c.status = ClauseStatus::not_applicable;
    c.witness = reason;
    clauses.push_back(std::move(c));
}

bool VerificationReport::all_passed() const {
    for (const auto& c : clauses)
        if (c.status == ClauseStatus::fail) return false;
    return true;
}

} // namespace frobstab
