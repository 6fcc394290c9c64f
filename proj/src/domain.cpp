#include "ncbir/domain.hpp"

#include <string>
#include <utility>

namespace ncbir {

DomainReport in_S_hat(const HatParams& p) {
    const RingElem one = RingElem::one(p.ring());
    DomainReport rep;
    auto test = [&rep](const std::string& label, const RingElem& value) {
        std::optional<RingElem> inv = try_inverse(value);
        rep.checklist.push_back({label, inv.has_value()});
        if (!inv && !rep.failing_element) rep.failing_element = label;
        return inv;
    };

    auto ia = test("a", p.a);
    auto ib = test("b", p.b);
    test("c", p.c);
    test("d", p.d);
    test("a-1", p.a - one);
    test("b-1", p.b - one);
    test("c-1", p.c - one);
    test("d-1", p.d - one);
    auto idc = test("d-c", p.d - p.c);
    test("d-b", p.d - p.b);
    test("c-a", p.c - p.a);
    auto iba = test("b-a", p.b - p.a);
    // The last three elements need inverses of earlier ones. When a
    // prerequisite already failed they are skipped; the report blames the
    // prerequisite.
    if (ia && ib) test("d*b^-1 - c*a^-1", p.d * *ib - p.c * *ia);
    if (idc && iba) {
        test("(d-c)^-1*(c-1) - (b-a)^-1*(a-1)", *idc * (p.c - one) - *iba * (p.a - one));
        test("(c-1)*(d-c)^-1*d - (a-1)*(b-a)^-1*b", (p.c - one) * *idc * p.d - (p.a - one) * *iba * p.b);
    }
    rep.member = !rep.failing_element.has_value();
    return rep;
}

namespace {

std::string submatrix_label(const SubmatrixRef& ref) {
    std::string label = "M[";
    for (int r : ref.rows) label += std::to_string(r + 1);
    label += "|";
    for (int c : ref.cols) label += std::to_string(c + 1);
    label += "]";
    return label;
}

bool submatrix_invertible(const Matrix& sub, bool* entry_failure) {
    if (sub.n() == 1) {
        const bool ok = try_inverse(sub.at(0, 0)).has_value();
        if (!ok && entry_failure) *entry_failure = true;
        return ok;
    }
    if (sub.n() == 2) {
        // For entrywise-invertible 2 x 2 matrices invertibility is
        // equivalent to d b^-1 - c a^-1 being a unit.
        auto ia = try_inverse(sub.at(0, 0));
        auto ib = try_inverse(sub.at(0, 1));
        const bool star = ia && ib && try_inverse(sub.at(1, 0)) && try_inverse(sub.at(1, 1));
        if (star) return try_inverse(sub.at(1, 1) * *ib - sub.at(1, 0) * *ia).has_value();
    }
    return try_mat_inverse(sub).has_value();
}

}  // namespace

DomainReport in_S(const Matrix& m) {
    if (m.n() != 3) throw DimensionMismatch("in_S is defined for 3 x 3 matrices");
    DomainReport rep;
    auto record = [&rep](std::string label, bool ok) {
        rep.checklist.push_back({label, ok});
        if (!ok && !rep.failing_element) rep.failing_element = std::move(label);
    };

    bool entries_invertible = true;
    for (const SubmatrixRef& ref : enumerate_square_submatrices(m)) {
        bool entry_failure = false;
        const bool ok = submatrix_invertible(ref.value, &entry_failure);
        if (entry_failure) entries_invertible = false;
        record(submatrix_label(ref), ok);
    }
    // J2(M) only exists when every entry is invertible; otherwise a 1 x 1
    // submatrix already failed above.
    if (entries_invertible) record("J2(M)", try_mat_inverse(j2(m)).has_value());

    rep.member = !rep.failing_element.has_value();
    return rep;
}

ConfinementReport check_confinement(const Matrix& m, int depth) {
    if (depth < 1) throw Error("check_confinement: depth must be >= 1");
    {
        DomainReport rep = in_S(m);
        if (!rep.member)
            throw PreconditionViolated("check_confinement: input not in S (failing " +
                                       *rep.failing_element + ")");
    }
    ConfinementReport out;
    out.depth = depth;
    Matrix forward = m;
    for (int k = 1; k <= depth; ++k) {
        Matrix next = j(forward);
        DomainReport rep = in_S(next);
        if (!rep.member)
            throw VerificationFailed("confinement: J^" + std::to_string(k) +
                                     "(M) escaped S (failing " + *rep.failing_element + ")");
        if (j_inverse(next) != forward)
            throw VerificationFailed("confinement: J^-1(J(M)) != M at forward step " +
                                     std::to_string(k));
        forward = std::move(next);
        ++out.forward_verified;
    }
    Matrix backward = m;
    for (int k = 1; k <= depth; ++k) {
        Matrix prev = j_inverse(backward);
        DomainReport rep = in_S(prev);
        if (!rep.member)
            throw VerificationFailed("confinement: J^-" + std::to_string(k) +
                                     "(M) escaped S (failing " + *rep.failing_element + ")");
        if (j(prev) != backward)
            throw VerificationFailed("confinement: J(J^-1(M)) != M at backward step " +
                                     std::to_string(k));
        backward = std::move(prev);
        ++out.backward_verified;
    }
    return out;
}

}  // namespace ncbir
