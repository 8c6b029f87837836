#pragma once

#include "ellop/elliptic.hpp"
#include "ellop/problem.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ellop {

// One verified assertion in an audit. `counted` entries drive the exit code;
// informational entries record results that are not pass/fail claims.
struct CheckEntry {
    std::string check;   // stable machine name
    std::string claim;   // human sentence stating what is asserted
    std::string status;  // "pass" | "fail" | "info"
    std::vector<std::pair<std::string, std::string>> data;  // ordered witness fields
    bool counted = true;
};

struct PointReport {
    std::vector<Rational> point;
    std::string symbol;          // rendered form at the lifted point
    bool order_holds = false;    // nonzero symbol form
    EllipticityVerdict verdict;
    std::string pullback;        // "pass" | "fail" | "skipped"
    std::string pullback_note;
    bool omega_surjective = false;
    bool transfer_applies = false;  // invariance certified and elliptic upstairs
};

// The end-to-end variety audit: operator construction or intake, order
// verification, generator annihilation, the exact full-ideal invariance
// decision, induction onto the quotient, and per-point symbol, ellipticity
// and pullback checks where the certificate permits. Failures are report
// entries, never exceptions.
struct AuditReport {
    std::vector<std::string> variables;
    std::vector<std::string> ideal;
    std::string order_name;
    std::uint64_t seed = 0;
    std::string input_digest;
    std::string operator_text;
    std::string operator_source;  // "supplied" | "constructed:<mode>"
    unsigned operator_order = 0;
    std::vector<CheckEntry> checks;
    std::vector<PointReport> points;
    std::vector<std::string> discrepancies;  // names of flagged claim conflicts

    bool all_counted_pass() const;
    int exit_code() const { return all_counted_pass() ? 0 : 3; }
    std::string to_text() const;
    std::string to_json_text() const;  // deterministic, insertion-ordered
};

AuditReport audit_variety(const Problem& problem);

}  // namespace ellop
