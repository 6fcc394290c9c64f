#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ncbir/matrix.hpp"

namespace ncbir {

// Parameters (a,b,c,d) of the hatted 3 x 3 matrix
//   [ 1 1 1 ]
//   [ 1 a b ]
//   [ 1 c d ]
// which carries one representative of each orbit under the two-sided
// diagonal action.
struct HatParams {
    RingElem a, b, c, d;

    HatParams(RingElem a_, RingElem b_, RingElem c_, RingElem d_);

    const RingDescriptor& ring() const { return a.ring(); }
    Matrix to_matrix() const;
    // Requires first row and first column exactly one.
    static HatParams from_matrix(const Matrix& m);

    friend bool operator==(const HatParams& x, const HatParams& y);
    friend bool operator!=(const HatParams& x, const HatParams& y) { return !(x == y); }
};

// The Klein four-group acting on parameters; each map below sends the
// a-slot formula of any of the four-parameter maps to another slot.
HatParams klein_b(const HatParams& p);  // (a,b,c,d) -> (b,a,d,c)
HatParams klein_c(const HatParams& p);  // (a,b,c,d) -> (c,d,a,b)
HatParams klein_d(const HatParams& p);  // (a,b,c,d) -> (d,c,b,a)

// J2 restricted to hatted matrices: (a,b,c,d) -> (a^-1, c^-1, b^-1, d^-1).
HatParams hat_j2(const HatParams& p);

// Pair of invertible diagonal matrices acting by M -> D1^-1 M D2.
struct DiagPair {
    std::vector<RingElem> d1, d2;

    static DiagPair identity(const RingDescriptor& ring, int n);
    Matrix apply(const Matrix& m) const;
};

// Proof that two matrices lie in one orbit. For hatted pairs the action
// degenerates to conjugation by a single unit x (entrywise x^-1 a x).
struct EquivWitness {
    enum class Kind { DiagPairKind, CentralConjugation };

    Kind kind;
    DiagPair pair;                 // DiagPairKind
    std::optional<RingElem> x;     // CentralConjugation

    Matrix apply(const Matrix& m) const;
};

// J1: the usual matrix inverse. Involution on its domain.
Matrix j1(const Matrix& m);

// J2: transpose of the Hadamard inverse, (J2 M)_jk = (M_kj)^-1.
Matrix j2(const Matrix& m);

// J = J2 o J1 and its inverse J1 o J2; NotInvertible from a stage is
// rethrown with that stage named.
Matrix j(const Matrix& m);
Matrix j_inverse(const Matrix& m);

// Row/column normalizations onto the hatted set, defined for any n:
//   Lambda^L(A)_jk = a_11 a_j1^-1 a_jk a_1k^-1
//   Lambda^R(A)_jk = a_j1^-1 a_jk a_1k^-1 a_11
Matrix lambda_left(const Matrix& m);
Matrix lambda_right(const Matrix& m);

// Lambda^L together with the unique diagonal pair realizing it with the
// first entry of D1 equal to 1; the witness equation is re-verified.
std::pair<Matrix, DiagPair> normalize_with_witness(const Matrix& m);

// The 4-parameter map Phi = J2 o Lambda^L o J1 and friends. The
// definitional versions compose the matrix maps; the closed versions
// evaluate the published formulas left-to-right with no rearrangement.
// Each pair is cross-checked against the other in the test harness.
HatParams phi(const HatParams& p);
HatParams phi_closed(const HatParams& p);
HatParams phi_inv(const HatParams& p);
HatParams phi_inv_closed(const HatParams& p);
HatParams psi(const HatParams& p);  // J2 o Phi o J2
HatParams psi_closed(const HatParams& p);
HatParams phi2_closed(const HatParams& p);  // zeta^-1 * Psi entries * zeta

// zeta = (d-c)^-1 (c-1) - (b-a)^-1 (a-1); conjugates Phi^2 to Psi.
RingElem zeta(const HatParams& p);
// Equal alternate form (d-c)^-1 (d-1) - (b-a)^-1 (b-1).
RingElem zeta_alt(const HatParams& p);

// nu = [d(d-b)^-1 - c(c-a)^-1]^-1 [d(d-b)^-1(b-1) - c(c-a)^-1(a-1)];
// conjugates Psi to Phi^-1. omega = nu * zeta conjugates Phi^2 to Phi^-1.
RingElem nu(const HatParams& p);
RingElem omega(const HatParams& p);

// The unit x = omega(Phi(p)) with Phi^3(p) = x^-1 p x entrywise; the
// conjugation is re-verified before returning and a mismatch (which would
// indicate a bug here, not in the theory) raises VerificationFailed.
RingElem phi3_witness(const HatParams& p);

// Searches for a diagonal pair carrying a to b. Requires every entry of
// both matrices invertible. Sound: a returned witness has been verified
// entry by entry. Returns nullopt when no witness is found.
std::optional<EquivWitness> equiv_witness(const Matrix& a, const Matrix& b);

}  // namespace ncbir
