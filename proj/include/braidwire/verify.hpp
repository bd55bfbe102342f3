#pragma once

#include <string>
#include <vector>

namespace braidwire {

// One line of the identity suite. Hard checks gate the exit code;
// informational lines report on the experimental 8-strand relations and
// on known discrepancies without failing the run.
struct IdentityCheck {
    std::string name;
    bool informational = false;
    bool passed = false;
    std::string detail;
};

// Evaluates the representation tables, braid relations and the named
// word/gate identities. corruptTables flips one entry of a generator
// first (test hook for the failure path).
std::vector<IdentityCheck> run_identity_checks(bool corruptTables = false);

// True when every non-informational check passed.
bool all_hard_passed(const std::vector<IdentityCheck>& checks);

// "PASS name" / "FAIL name (detail)" / "INFO name: detail" lines.
std::string format_checks(const std::vector<IdentityCheck>& checks);

}  // namespace braidwire
