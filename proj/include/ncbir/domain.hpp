#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncbir/birational.hpp"

namespace ncbir {

struct ChecklistEntry {
    std::string label;
    bool invertible;
};

// Outcome of a membership test. Failure is data, not an error: member is
// true iff every tested element is invertible, and failing_element names
// the first failure in checklist order.
struct DomainReport {
    bool member = false;
    std::optional<std::string> failing_element;
    std::vector<ChecklistEntry> checklist;
};

// Membership of the hatted matrix (a,b,c,d) in S-hat, decided by the
// 15-element invertibility checklist, evaluated in print order:
//   a, b, c, d, a-1, b-1, c-1, d-1, d-c, d-b, c-a, b-a,
//   d b^-1 - c a^-1,
//   (d-c)^-1 (c-1) - (b-a)^-1 (a-1),
//   (c-1) (d-c)^-1 d - (a-1) (b-a)^-1 b.
// An element whose construction needs the inverse of an earlier, failed
// element is skipped; the failure stays attributed to that prerequisite.
DomainReport in_S_hat(const HatParams& p);

// Membership of a 3 x 3 matrix in S: every square submatrix invertible and
// J2(M) invertible. Entrywise-invertible 2 x 2 submatrices are decided by
// the closed Hadamard criterion, everything else by elimination.
DomainReport in_S(const Matrix& m);

struct ConfinementReport {
    int depth = 0;
    int forward_verified = 0;
    int backward_verified = 0;
};

// Iterates J forward and J^-1 backward `depth` times from a member of S,
// checking that every iterate stays in S and that the opposite map undoes
// each step exactly. Escaping the domain raises VerificationFailed; a
// non-member input is rejected with PreconditionViolated.
ConfinementReport check_confinement(const Matrix& m, int depth);

}  // namespace ncbir
