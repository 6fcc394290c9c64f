#include "ncbir/matrix.hpp"

#include <string>
#include <utility>

namespace ncbir {

namespace {

void require_compatible(const Matrix& a, const Matrix& b) {
    if (a.ring() != b.ring())
        throw DescriptorMismatch("matrices over different rings: " + a.ring().to_string() +
                                 " vs " + b.ring().to_string());
    if (a.n() != b.n())
        throw DimensionMismatch("matrix dimensions differ: " + std::to_string(a.n()) + " vs " +
                                std::to_string(b.n()));
}

std::string entry_name(int row, int col) {
    return "entry (" + std::to_string(row + 1) + "," + std::to_string(col + 1) + ")";
}

}  // namespace

Matrix::Matrix(const RingDescriptor& ring, int n) : n_(n), ring_(ring) {
    if (n < 1) throw DimensionMismatch("matrix dimension must be >= 1, got " + std::to_string(n));
    entries_.assign(static_cast<std::size_t>(n) * n, RingElem::zero(ring));
}

Matrix Matrix::identity(const RingDescriptor& ring, int n) {
    Matrix m(ring, n);
    for (int i = 0; i < n; ++i) m.set(i, i, RingElem::one(ring));
    return m;
}

Matrix Matrix::all_ones(const RingDescriptor& ring, int n) {
    Matrix m(ring, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.set(i, j, RingElem::one(ring));
    return m;
}

Matrix Matrix::from_rows(std::vector<std::vector<RingElem>> rows) {
    const int n = static_cast<int>(rows.size());
    if (n == 0 || rows[0].empty()) throw DimensionMismatch("from_rows needs at least one entry");
    Matrix m(rows[0][0].ring(), n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n)
            throw DimensionMismatch("from_rows needs a square array");
        for (int j = 0; j < n; ++j) m.set(i, j, std::move(rows[i][j]));
    }
    return m;
}

void Matrix::set(int row, int col, RingElem value) {
    if (value.ring() != ring_)
        throw DescriptorMismatch("entry ring " + value.ring().to_string() +
                                 " does not match matrix ring " + ring_.to_string());
    entries_[row * n_ + col] = std::move(value);
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.n_ == b.n_ && a.ring_ == b.ring_ && a.entries_ == b.entries_;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    require_compatible(a, b);
    const int n = a.n();
    Matrix out(a.ring(), n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            RingElem acc = a.at(i, 0) * b.at(0, j);
            for (int l = 1; l < n; ++l) acc = acc + a.at(i, l) * b.at(l, j);
            out.set(i, j, std::move(acc));
        }
    }
    return out;
}

Matrix hadamard_mul(const Matrix& a, const Matrix& b) {
    require_compatible(a, b);
    const int n = a.n();
    Matrix out(a.ring(), n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.set(i, j, a.at(i, j) * b.at(i, j));
    return out;
}

Matrix transpose(const Matrix& a) {
    const int n = a.n();
    Matrix out(a.ring(), n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.set(i, j, a.at(j, i));
    return out;
}

namespace {

// Gauss-Jordan over the augmented matrix [a | I], all row operations acting
// by left multiplication. Produces a left inverse; the caller checks the
// right-side product. Returns nullopt with a reason when the elimination
// stalls or the final verification fails.
std::optional<Matrix> eliminate(const Matrix& a, std::string* reason) {
    const int n = a.n();
    const RingDescriptor& ring = a.ring();
    std::vector<std::vector<RingElem>> left, right;
    left.reserve(n);
    right.reserve(n);
    for (int i = 0; i < n; ++i) {
        std::vector<RingElem> lrow, rrow;
        for (int j = 0; j < n; ++j) {
            lrow.push_back(a.at(i, j));
            rrow.push_back(RingElem::from_int(ring, i == j ? 1 : 0));
        }
        left.push_back(std::move(lrow));
        right.push_back(std::move(rrow));
    }

    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        bool saw_nonzero = false;
        std::optional<RingElem> pivot_inv;
        for (int row = col; row < n; ++row) {
            if (!left[row][col].is_zero()) saw_nonzero = true;
            pivot_inv = try_inverse(left[row][col]);
            if (pivot_inv) {
                pivot = row;
                break;
            }
        }
        if (pivot < 0) {
            if (reason)
                *reason = saw_nonzero
                              ? "elimination stalled: no invertible pivot in column " +
                                    std::to_string(col + 1)
                              : "column " + std::to_string(col + 1) + " is zero below the pivot";
            return std::nullopt;
        }
        if (pivot != col) {
            std::swap(left[pivot], left[col]);
            std::swap(right[pivot], right[col]);
        }
        for (int j = 0; j < n; ++j) {
            left[col][j] = *pivot_inv * left[col][j];
            right[col][j] = *pivot_inv * right[col][j];
        }
        for (int row = 0; row < n; ++row) {
            if (row == col || left[row][col].is_zero()) continue;
            RingElem factor = left[row][col];
            for (int j = 0; j < n; ++j) {
                left[row][j] = left[row][j] - factor * left[col][j];
                right[row][j] = right[row][j] - factor * right[col][j];
            }
        }
    }

    Matrix inv = Matrix::from_rows(std::move(right));
    // Over a noncommutative ring the elimination only certifies B*a = I, so
    // check both products before trusting the result.
    const Matrix id = Matrix::identity(ring, n);
    if (mat_mul(inv, a) != id || mat_mul(a, inv) != id) {
        if (reason) *reason = "two-sided verification of the inverse failed";
        return std::nullopt;
    }
    return inv;
}

}  // namespace

std::optional<Matrix> try_mat_inverse(const Matrix& a) { return eliminate(a, nullptr); }

Matrix mat_inverse(const Matrix& a) {
    std::string reason;
    std::optional<Matrix> inv = eliminate(a, &reason);
    if (!inv) throw NotInvertible("matrix not invertible: " + reason);
    return *inv;
}

Matrix inverse_2x2_hadamard(const Matrix& m) {
    if (m.n() != 2) throw DimensionMismatch("inverse_2x2_hadamard needs a 2 x 2 matrix");
    const RingElem &a = m.at(0, 0), &b = m.at(0, 1), &c = m.at(1, 0), &d = m.at(1, 1);
    const char* names[] = {"a", "b", "c", "d"};
    const RingElem* entries[] = {&a, &b, &c, &d};
    std::optional<RingElem> invs[4];
    for (int i = 0; i < 4; ++i) {
        invs[i] = try_inverse(*entries[i]);
        if (!invs[i])
            throw PreconditionViolated(std::string("inverse_2x2_hadamard: ") + names[i] +
                                       " is not invertible");
    }
    const RingElem crit = d * invs[1].value() - c * invs[0].value();
    if (!try_inverse(crit))
        throw PreconditionViolated("inverse_2x2_hadamard: d*b^-1 - c*a^-1 is not invertible");
    Matrix out(m.ring(), 2);
    out.set(0, 0, inverse(a - b * invs[3].value() * c));
    out.set(0, 1, inverse(c - d * invs[1].value() * a));
    out.set(1, 0, inverse(b - a * invs[2].value() * d));
    out.set(1, 1, inverse(d - c * invs[0].value() * b));
    return out;
}

std::pair<Matrix, BorderedInverseParts> inverse_hatted_3x3(const RingElem& a, const RingElem& b,
                                                           const RingElem& c, const RingElem& d) {
    const RingDescriptor& ring = a.ring();
    const RingElem one = RingElem::one(ring);
    const RingElem a1 = a - one, b1 = b - one, c1 = c - one, d1 = d - one;

    const char* names[] = {"a-1", "b-1", "c-1", "d-1"};
    const RingElem* shifted[] = {&a1, &b1, &c1, &d1};
    std::optional<RingElem> invs[4];
    for (int i = 0; i < 4; ++i) {
        invs[i] = try_inverse(*shifted[i]);
        if (!invs[i])
            throw PreconditionViolated(std::string("inverse_hatted_3x3: ") + names[i] +
                                       " is not invertible");
    }
    if (!try_inverse(d1 * invs[1].value() - c1 * invs[0].value()))
        throw PreconditionViolated(
            "inverse_hatted_3x3: (d-1)(b-1)^-1 - (c-1)(a-1)^-1 is not invertible");

    BorderedInverseParts parts{
        inverse(a1 - b1 * invs[3].value() * c1),
        inverse(c1 - d1 * invs[1].value() * a1),
        inverse(b1 - a1 * invs[2].value() * d1),
        inverse(d1 - c1 * invs[0].value() * b1),
    };
    const RingElem &s = parts.s, &t = parts.t, &u = parts.u, &v = parts.v;

    Matrix inv(ring, 3);
    inv.set(0, 0, one + s + t + u + v);
    inv.set(0, 1, -(s + u));
    inv.set(0, 2, -(t + v));
    inv.set(1, 0, -(s + t));
    inv.set(1, 1, s);
    inv.set(1, 2, t);
    inv.set(2, 0, -(u + v));
    inv.set(2, 1, u);
    inv.set(2, 2, v);
    return {std::move(inv), std::move(parts)};
}

namespace {

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
        out.push_back(pick);
        int i = k - 1;
        while (i >= 0 && pick[i] == n - k + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

}  // namespace

std::vector<SubmatrixRef> enumerate_square_submatrices(const Matrix& a) {
    const int n = a.n();
    std::vector<SubmatrixRef> out;
    for (int k = 1; k <= n; ++k) {
        const auto row_sets = subsets(n, k);
        const auto col_sets = subsets(n, k);
        for (const auto& rows : row_sets) {
            for (const auto& cols : col_sets) {
                Matrix sub(a.ring(), k);
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) sub.set(i, j, a.at(rows[i], cols[j]));
                out.push_back(SubmatrixRef{rows, cols, std::move(sub)});
            }
        }
    }
    return out;
}

std::vector<Matrix> square_submatrices(const Matrix& a) {
    std::vector<Matrix> out;
    for (SubmatrixRef& ref : enumerate_square_submatrices(a)) out.push_back(std::move(ref.value));
    return out;
}

}  // namespace ncbir
