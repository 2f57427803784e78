#pragma once

#include <string>
#include <vector>

namespace frobstab {

enum class ClauseStatus { pass, fail, not_applicable };

std::string to_string(ClauseStatus s);

// One checked statement. `statement` is the mathematical content being
// verified; `witness` is populated on failure with concrete data.
struct Clause {
    std::string label;
    std::string statement;
    ClauseStatus status = ClauseStatus::not_applicable;
    std::string witness;
};

// A bundle of clauses about one subject (one parameter choice). A report
// passes iff no clause failed; not_applicable clauses are recorded
// explicitly rather than silently dropped.
struct VerificationReport {
    std::string subject;
    std::vector<Clause> clauses;

    void add(const std::string& label, const std::string& statement, bool ok,
             const std::string& witness_on_fail = "");
    void add_na(const std::string& label, const std::string& statement,
                const std::string& reason);
    bool all_passed() const;
};

} // namespace frobstab
