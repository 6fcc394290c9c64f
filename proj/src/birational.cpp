#include "ncbir/birational.hpp"

#include <string>
#include <utility>

#include "ncbir/domain.hpp"
#include "ncbir/rng.hpp"

namespace ncbir {

namespace {

RingElem inv_named(const RingElem& x, const char* what) {
    std::optional<RingElem> r = try_inverse(x);
    if (!r) throw NotInvertible(std::string(what) + " is not invertible (value " + x.to_string() + ")");
    return *std::move(r);
}

std::string entry_name(int row, int col) {
    return "entry (" + std::to_string(row + 1) + "," + std::to_string(col + 1) + ")";
}

void require_in_S_hat(const HatParams& p, const char* map_name) {
    DomainReport rep = in_S_hat(p);
    if (!rep.member)
        throw DomainViolation(std::string(map_name) + ": input outside S-hat, failing element " +
                              *rep.failing_element);
}

std::string quad_string(const HatParams& p) {
    return "(" + p.a.to_string() + ", " + p.b.to_string() + ", " + p.c.to_string() + ", " +
           p.d.to_string() + ")";
}

}  // namespace

// ---------------------------------------------------------------------------
// HatParams

HatParams::HatParams(RingElem a_, RingElem b_, RingElem c_, RingElem d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
    if (b.ring() != a.ring() || c.ring() != a.ring() || d.ring() != a.ring())
        throw DescriptorMismatch("hat parameters must share one ring");
}

Matrix HatParams::to_matrix() const {
    Matrix m = Matrix::all_ones(ring(), 3);
    m.set(1, 1, a);
    m.set(1, 2, b);
    m.set(2, 1, c);
    m.set(2, 2, d);
    return m;
}

HatParams HatParams::from_matrix(const Matrix& m) {
    if (m.n() != 3) throw DimensionMismatch("hatted matrices are 3 x 3");
    const RingElem one = RingElem::one(m.ring());
    for (int i = 0; i < 3; ++i)
        if (m.at(0, i) != one || m.at(i, 0) != one)
            throw PreconditionViolated("matrix is not hatted: " +
                                       entry_name(i == 0 ? 0 : i, i == 0 ? i : 0) + " differs from 1");
    return HatParams(m.at(1, 1), m.at(1, 2), m.at(2, 1), m.at(2, 2));
}

bool operator==(const HatParams& x, const HatParams& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
}

HatParams klein_b(const HatParams& p) { return HatParams(p.b, p.a, p.d, p.c); }
HatParams klein_c(const HatParams& p) { return HatParams(p.c, p.d, p.a, p.b); }
HatParams klein_d(const HatParams& p) { return HatParams(p.d, p.c, p.b, p.a); }

HatParams hat_j2(const HatParams& p) {
    return HatParams(inv_named(p.a, "a"), inv_named(p.c, "c"), inv_named(p.b, "b"),
                     inv_named(p.d, "d"));
}

// ---------------------------------------------------------------------------
// DiagPair / EquivWitness

DiagPair DiagPair::identity(const RingDescriptor& ring, int n) {
    DiagPair dp;
    dp.d1.assign(n, RingElem::one(ring));
    dp.d2.assign(n, RingElem::one(ring));
    return dp;
}

Matrix DiagPair::apply(const Matrix& m) const {
    if (static_cast<int>(d1.size()) != m.n() || static_cast<int>(d2.size()) != m.n())
        throw DimensionMismatch("diagonal pair size does not match the matrix");
    Matrix out(m.ring(), m.n());
    for (int j = 0; j < m.n(); ++j) {
        const RingElem lj = inverse(d1[j]);
        for (int k = 0; k < m.n(); ++k) out.set(j, k, lj * m.at(j, k) * d2[k]);
    }
    return out;
}

Matrix EquivWitness::apply(const Matrix& m) const {
    if (kind == Kind::CentralConjugation) {
        const RingElem xi = inverse(*x);
        Matrix out(m.ring(), m.n());
        for (int j = 0; j < m.n(); ++j)
            for (int k = 0; k < m.n(); ++k) out.set(j, k, xi * m.at(j, k) * *x);
        return out;
    }
    return pair.apply(m);
}

// ---------------------------------------------------------------------------
// J1, J2 and compositions

Matrix j1(const Matrix& m) { return mat_inverse(m); }

Matrix j2(const Matrix& m) {
    const int n = m.n();
    Matrix out(m.ring(), n);
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
            std::optional<RingElem> inv = try_inverse(m.at(j, k));
            if (!inv) throw NotInvertible("j2: " + entry_name(j, k) + " is not invertible");
            out.set(k, j, *std::move(inv));
        }
    }
    return out;
}

Matrix j(const Matrix& m) {
    Matrix inv = [&] {
        try {
            return j1(m);
        } catch (const NotInvertible& e) {
            throw NotInvertible(std::string("J1-stage: ") + e.what());
        }
    }();
    try {
        return j2(inv);
    } catch (const NotInvertible& e) {
        throw NotInvertible(std::string("J2-stage: ") + e.what());
    }
}

Matrix j_inverse(const Matrix& m) {
    Matrix had = [&] {
        try {
            return j2(m);
        } catch (const NotInvertible& e) {
            throw NotInvertible(std::string("J2-stage: ") + e.what());
        }
    }();
    try {
        return j1(had);
    } catch (const NotInvertible& e) {
        throw NotInvertible(std::string("J1-stage: ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// Normalization onto the hatted set

namespace {

// Inverses of the first row and first column, with named errors; the
// remaining entries are checked for invertibility because the maps are
// defined on entrywise-invertible matrices only.
struct BorderInverses {
    std::vector<RingElem> row;  // a_1k^-1
    std::vector<RingElem> col;  // a_j1^-1
};

BorderInverses border_inverses(const Matrix& m) {
    const int n = m.n();
    BorderInverses out;
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            if (!try_inverse(m.at(j, k)))
                throw NotInvertible("normalization: " + entry_name(j, k) + " is not invertible");
    for (int k = 0; k < n; ++k) out.row.push_back(inverse(m.at(0, k)));
    for (int j = 0; j < n; ++j) out.col.push_back(inverse(m.at(j, 0)));
    return out;
}

}  // namespace

Matrix lambda_left(const Matrix& m) {
    const BorderInverses inv = border_inverses(m);
    const int n = m.n();
    Matrix out(m.ring(), n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            out.set(j, k, m.at(0, 0) * inv.col[j] * m.at(j, k) * inv.row[k]);
    return out;
}

Matrix lambda_right(const Matrix& m) {
    const BorderInverses inv = border_inverses(m);
    const int n = m.n();
    Matrix out(m.ring(), n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            out.set(j, k, inv.col[j] * m.at(j, k) * inv.row[k] * m.at(0, 0));
    return out;
}

std::pair<Matrix, DiagPair> normalize_with_witness(const Matrix& m) {
    const int n = m.n();
    Matrix hat = lambda_left(m);
    DiagPair dp;
    dp.d1.push_back(RingElem::one(m.ring()));
    for (int j = 1; j < n; ++j) dp.d1.push_back(m.at(j, 0) * inverse(m.at(0, 0)));
    for (int k = 0; k < n; ++k) dp.d2.push_back(inverse(m.at(0, k)));
    if (dp.apply(m) != hat)
        throw VerificationFailed("normalization witness failed to reproduce Lambda^L");
    return {std::move(hat), std::move(dp)};
}

// ---------------------------------------------------------------------------
// Phi and friends, definitional versions

HatParams phi(const HatParams& p) {
    require_in_S_hat(p, "phi");
    Matrix inv = j1(p.to_matrix());
    return HatParams::from_matrix(j2(lambda_left(inv)));
}

HatParams phi_inv(const HatParams& p) {
    require_in_S_hat(p, "phi_inv");
    Matrix had = j2(p.to_matrix());
    return HatParams::from_matrix(lambda_right(j1(had)));
}

HatParams psi(const HatParams& p) {
    require_in_S_hat(p, "psi");
    return hat_j2(phi(hat_j2(p)));
}

// ---------------------------------------------------------------------------
// Closed formulas, evaluated strictly left-to-right as published

HatParams phi_closed(const HatParams& p) {
    const RingElem one = RingElem::one(p.ring());
    const RingElem ai = inv_named(p.a, "a");
    const RingElem bi = inv_named(p.b, "b");
    const RingElem ei = inv_named(p.d * bi - p.c * ai, "d*b^-1 - c*a^-1");
    const RingElem dbi1 = p.d * bi - one;
    const RingElem cai1 = p.c * ai - one;
    // a' = (d-1)^-1 (d-c) a^-1 (d b^-1 - c a^-1)^-1 (d b^-1 - 1)
    // b' = (c-1)^-1 (d-c) b^-1 (d b^-1 - c a^-1)^-1 (c a^-1 - 1)
    // c' = (b-1)^-1 (b-a) a^-1 (d b^-1 - c a^-1)^-1 (d b^-1 - 1)
    // d' = (a-1)^-1 (b-a) b^-1 (d b^-1 - c a^-1)^-1 (c a^-1 - 1)
    return HatParams(inv_named(p.d - one, "d-1") * (p.d - p.c) * ai * ei * dbi1,
                     inv_named(p.c - one, "c-1") * (p.d - p.c) * bi * ei * cai1,
                     inv_named(p.b - one, "b-1") * (p.b - p.a) * ai * ei * dbi1,
                     inv_named(p.a - one, "a-1") * (p.b - p.a) * bi * ei * cai1);
}

namespace {

// a-slot of Phi^-1: (d-1) (d-c)^-1 (d b^-1 - c a^-1) (d b^-1 - 1)^-1.
// The other slots come from the same formula through the Klein action.
RingElem phi_inv_slot(const RingElem& a, const RingElem& b, const RingElem& c, const RingElem& d) {
    const RingElem one = RingElem::one(a.ring());
    const RingElem ai = inv_named(a, "a");
    const RingElem bi = inv_named(b, "b");
    return (d - one) * inv_named(d - c, "d-c") * (d * bi - c * ai) *
           inv_named(d * bi - one, "d*b^-1 - 1");
}

// a-slot of Psi: (d-c)^-1 (d b^-1 - c a^-1) (d b^-1 - 1)^-1 (d-1).
RingElem psi_slot(const RingElem& a, const RingElem& b, const RingElem& c, const RingElem& d) {
    const RingElem one = RingElem::one(a.ring());
    const RingElem ai = inv_named(a, "a");
    const RingElem bi = inv_named(b, "b");
    return inv_named(d - c, "d-c") * (d * bi - c * ai) * inv_named(d * bi - one, "d*b^-1 - 1") *
           (d - one);
}

}  // namespace

HatParams phi_inv_closed(const HatParams& p) {
    return HatParams(phi_inv_slot(p.a, p.b, p.c, p.d), phi_inv_slot(p.b, p.a, p.d, p.c),
                     phi_inv_slot(p.c, p.d, p.a, p.b), phi_inv_slot(p.d, p.c, p.b, p.a));
}

HatParams psi_closed(const HatParams& p) {
    return HatParams(psi_slot(p.a, p.b, p.c, p.d), psi_slot(p.b, p.a, p.d, p.c),
                     psi_slot(p.c, p.d, p.a, p.b), psi_slot(p.d, p.c, p.b, p.a));
}

HatParams phi2_closed(const HatParams& p) {
    require_in_S_hat(p, "phi2_closed");
    // Phi^2 entries are the Psi entries conjugated by the single element
    // zeta(a,b,c,d); the per-slot sign flips of zeta cancel in x^-1 e x.
    const RingElem z = zeta(p);
    const RingElem zi = inv_named(z, "zeta");
    const HatParams plus = psi_closed(p);
    return HatParams(zi * plus.a * z, zi * plus.b * z, zi * plus.c * z, zi * plus.d * z);
}

RingElem zeta(const HatParams& p) {
    const RingElem one = RingElem::one(p.ring());
    return inv_named(p.d - p.c, "d-c") * (p.c - one) - inv_named(p.b - p.a, "b-a") * (p.a - one);
}

RingElem zeta_alt(const HatParams& p) {
    const RingElem one = RingElem::one(p.ring());
    return inv_named(p.d - p.c, "d-c") * (p.d - one) - inv_named(p.b - p.a, "b-a") * (p.b - one);
}

RingElem nu(const HatParams& p) {
    const RingElem one = RingElem::one(p.ring());
    const RingElem dbi = inv_named(p.d - p.b, "d-b");
    const RingElem cai = inv_named(p.c - p.a, "c-a");
    return inv_named(p.d * dbi - p.c * cai, "d(d-b)^-1 - c(c-a)^-1") *
           (p.d * dbi * (p.b - one) - p.c * cai * (p.a - one));
}

RingElem omega(const HatParams& p) { return nu(p) * zeta(p); }

RingElem phi3_witness(const HatParams& p) {
    const HatParams h1 = phi(p);
    const RingElem x = omega(h1);
    const RingElem xi = inv_named(x, "omega(phi(A))");
    const HatParams h3 = phi(phi(h1));
    const HatParams conjugated(xi * p.a * x, xi * p.b * x, xi * p.c * x, xi * p.d * x);
    if (h3 != conjugated)
        throw VerificationFailed("phi^3 conjugation mismatch: phi^3(A) = " + quad_string(h3) +
                                 " but omega-conjugate of A = " + quad_string(conjugated));
    return x;
}

// ---------------------------------------------------------------------------
// Orbit equivalence
//
// A witness with the first entry of D1 fixed to 1 exists exactly when the
// hatted representatives Lambda^L(A) and Lambda^L(B) coincide; the cheap
// solver below tries that first. In general the representatives differ by
// conjugation with a single unit x, so the full solver reduces the
// problem to the entrywise conjugation equations x q = p x and
// solves those linearly over the scalar base field of the ring, then
// searches the solution space for a unit. Every returned witness has been
// re-verified entry by entry, so the solver is sound by construction.

namespace {

bool is_hatted(const Matrix& m) {
    const RingElem one = RingElem::one(m.ring());
    for (int i = 0; i < m.n(); ++i)
        if (m.at(0, i) != one || m.at(i, 0) != one) return false;
    return true;
}

void flatten_into(const RingElem& e, std::vector<RingElem>& out, int dim, int r0, int c0) {
    if (e.ring().kind() != RingKind::BlockMatrix) {
        out[r0 * dim + c0] = e;
        return;
    }
    const int k = e.ring().block_size();
    const int m = e.ring().inner().flat_dim();
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            flatten_into(e.block_entries()[i * k + j], out, dim, r0 + i * m, c0 + j * m);
}

// K x K row-major scalar matrix equal to e under the natural embedding of
// nested blocks into the scalar base.
std::vector<RingElem> flatten(const RingElem& e) {
    const int dim = e.ring().flat_dim();
    std::vector<RingElem> out(static_cast<std::size_t>(dim) * dim,
                              RingElem::zero(e.ring().scalar_base()));
    flatten_into(e, out, dim, 0, 0);
    return out;
}

RingElem unflatten(const RingDescriptor& ring, const std::vector<RingElem>& flat, int dim, int r0,
                   int c0) {
    if (ring.kind() != RingKind::BlockMatrix) return flat[r0 * dim + c0];
    const int k = ring.block_size();
    const int m = ring.inner().flat_dim();
    std::vector<RingElem> entries;
    entries.reserve(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            entries.push_back(unflatten(ring.inner(), flat, dim, r0 + i * m, c0 + j * m));
    return RingElem::block(ring, std::move(entries));
}

// Nullspace basis of a homogeneous system over a field (the scalar base is
// always a field here), by reduced row echelon form.
std::vector<std::vector<RingElem>> nullspace(std::vector<std::vector<RingElem>> rows, int ncols,
                                             const RingDescriptor& field) {
    const int nrows = static_cast<int>(rows.size());
    std::vector<int> pivot_cols;
    int rank = 0;
    for (int col = 0; col < ncols && rank < nrows; ++col) {
        int pr = -1;
        for (int r = rank; r < nrows; ++r) {
            if (!rows[r][col].is_zero()) {
                pr = r;
                break;
            }
        }
        if (pr < 0) continue;
        std::swap(rows[pr], rows[rank]);
        const RingElem pinv = inverse(rows[rank][col]);
        for (int c = 0; c < ncols; ++c) rows[rank][c] = pinv * rows[rank][c];
        for (int r = 0; r < nrows; ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            const RingElem f = rows[r][col];
            for (int c = 0; c < ncols; ++c) rows[r][c] = rows[r][c] - f * rows[rank][c];
        }
        pivot_cols.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(ncols, false);
    for (int c : pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<RingElem>> basis;
    for (int free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<RingElem> v(ncols, RingElem::zero(field));
        v[free] = RingElem::one(field);
        for (int r = 0; r < rank; ++r) v[pivot_cols[r]] = -rows[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Finds a unit x with x q = p x for every pair, or nullopt.
std::optional<RingElem> solve_conjugation(const RingDescriptor& ring,
                                          const std::vector<std::pair<RingElem, RingElem>>& pairs) {
    bool all_equal = true;
    for (const auto& [p, q] : pairs)
        if (p != q) {
            all_equal = false;
            break;
        }
    if (all_equal) return RingElem::one(ring);
    // Units of a commutative ring are central, so distinct entries rule a
    // conjugator out immediately.
    if (ring.commutative()) return std::nullopt;

    const RingDescriptor base = ring.scalar_base();
    const int dim = ring.flat_dim();
    const int unknowns = dim * dim;
    std::vector<std::vector<RingElem>> rows;
    rows.reserve(pairs.size() * static_cast<std::size_t>(unknowns));
    for (const auto& [p, q] : pairs) {
        const std::vector<RingElem> pf = flatten(p);
        const std::vector<RingElem> qf = flatten(q);
        // (x q - p x)[i][j] = sum_l x[i][l] q[l][j] - p[i][l] x[l][j] = 0
        for (int i = 0; i < dim; ++i) {
            for (int jj = 0; jj < dim; ++jj) {
                std::vector<RingElem> row(unknowns, RingElem::zero(base));
                for (int l = 0; l < dim; ++l) {
                    row[i * dim + l] = row[i * dim + l] + qf[l * dim + jj];
                    row[l * dim + jj] = row[l * dim + jj] - pf[i * dim + l];
                }
                rows.push_back(std::move(row));
            }
        }
    }
    const auto basis = nullspace(std::move(rows), unknowns, base);
    if (basis.empty()) return std::nullopt;

    auto accept = [&](const std::vector<RingElem>& vec) -> std::optional<RingElem> {
        RingElem x = unflatten(ring, vec, dim, 0, 0);
        if (x.is_zero() || !try_inverse(x)) return std::nullopt;
        for (const auto& [p, q] : pairs)
            if (x * q != p * x) return std::nullopt;
        return x;
    };

    for (const auto& v : basis)
        if (auto x = accept(v)) return x;
    for (std::size_t i = 1; i < basis.size(); ++i) {
        std::vector<RingElem> v = basis[0];
        for (int c = 0; c < unknowns; ++c) v[c] = v[c] + basis[i][c];
        if (auto x = accept(v)) return x;
    }
    // Units are generic in a linear space that contains one, so a few
    // seeded random combinations settle it. The fixed seed keeps the
    // whole solver a deterministic function of its inputs.
    Rng rng(0x5EEDF00Dull);
    const long long coeff_span =
        base.kind() == RingKind::ModP ? static_cast<long long>(std::min<std::uint64_t>(base.modulus(), 256)) : 17;
    for (int attempt = 0; attempt < 256; ++attempt) {
        std::vector<RingElem> v(unknowns, RingElem::zero(base));
        for (const auto& bvec : basis) {
            long long t = base.kind() == RingKind::ModP
                              ? static_cast<long long>(rng.below(static_cast<std::uint64_t>(coeff_span)))
                              : rng.range(-8, 8);
            if (t == 0) continue;
            const RingElem coeff = RingElem::from_int(base, t);
            for (int c = 0; c < unknowns; ++c) v[c] = v[c] + coeff * bvec[c];
        }
        if (auto x = accept(v)) return x;
    }
    return std::nullopt;
}

}  // namespace

std::optional<EquivWitness> equiv_witness(const Matrix& a, const Matrix& b) {
    if (a.ring() != b.ring())
        throw DescriptorMismatch("equiv_witness: matrices over different rings");
    if (a.n() != b.n()) throw DimensionMismatch("equiv_witness: matrix dimensions differ");
    const int n = a.n();
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
            if (!try_inverse(a.at(j, k)))
                throw PreconditionViolated("equiv_witness: A " + entry_name(j, k) +
                                           " is not invertible");
            if (!try_inverse(b.at(j, k)))
                throw PreconditionViolated("equiv_witness: B " + entry_name(j, k) +
                                           " is not invertible");
        }
    }

    const bool hatted = is_hatted(a) && is_hatted(b);
    auto verify = [&](std::vector<RingElem> d1,
                      std::vector<RingElem> d2) -> std::optional<EquivWitness> {
        for (int j = 0; j < n; ++j) {
            const RingElem lj = inverse(d1[j]);
            for (int k = 0; k < n; ++k)
                if (lj * a.at(j, k) * d2[k] != b.at(j, k)) return std::nullopt;
        }
        EquivWitness w;
        bool central = hatted;
        for (int i = 0; central && i < n; ++i)
            if (d1[i] != d1[0] || d2[i] != d1[0]) central = false;
        if (central) {
            w.kind = EquivWitness::Kind::CentralConjugation;
            w.x = d1[0];
        } else {
            w.kind = EquivWitness::Kind::DiagPairKind;
        }
        w.pair = DiagPair{std::move(d1), std::move(d2)};
        return w;
    };

    // Normalized solver: D1 starts at 1, row 1 gives D2, column 1 gives D1.
    {
        std::vector<RingElem> d2, d1;
        for (int k = 0; k < n; ++k) d2.push_back(inverse(a.at(0, k)) * b.at(0, k));
        for (int j = 0; j < n; ++j) d1.push_back(a.at(j, 0) * d2[0] * inverse(b.at(j, 0)));
        if (auto w = verify(std::move(d1), std::move(d2))) return w;
    }

    // General solver through the hatted representatives.
    auto na = normalize_with_witness(a);
    auto nb = normalize_with_witness(b);
    std::vector<std::pair<RingElem, RingElem>> pairs;
    for (int j = 1; j < n; ++j)
        for (int k = 1; k < n; ++k) pairs.emplace_back(na.first.at(j, k), nb.first.at(j, k));
    std::optional<RingElem> x = solve_conjugation(a.ring(), pairs);
    if (!x) return std::nullopt;
    std::vector<RingElem> d1, d2;
    for (int j = 0; j < n; ++j) d1.push_back(na.second.d1[j] * *x * inverse(nb.second.d1[j]));
    for (int k = 0; k < n; ++k) d2.push_back(na.second.d2[k] * *x * inverse(nb.second.d2[k]));
    return verify(std::move(d1), std::move(d2));
}

}  // namespace ncbir
