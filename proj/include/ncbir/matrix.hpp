#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ncbir/ring.hpp"

namespace ncbir {

// Dense n x n matrix over a single ring, row-major, value-semantic.
class Matrix {
public:
    Matrix(const RingDescriptor& ring, int n);  // zero matrix
    static Matrix identity(const RingDescriptor& ring, int n);
    static Matrix all_ones(const RingDescriptor& ring, int n);
    static Matrix from_rows(std::vector<std::vector<RingElem>> rows);

    int n() const { return n_; }
    const RingDescriptor& ring() const { return ring_; }

    const RingElem& at(int row, int col) const { return entries_[row * n_ + col]; }
    void set(int row, int col, RingElem value);

    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    int n_;
    RingDescriptor ring_;
    std::vector<RingElem> entries_;
};

// Usual matrix product; entry order matters over noncommutative rings.
Matrix mat_mul(const Matrix& a, const Matrix& b);

// Entrywise (Hadamard) product, the left factor's entry on the left.
Matrix hadamard_mul(const Matrix& a, const Matrix& b);

Matrix transpose(const Matrix& a);

// Exact inverse by Gauss-Jordan elimination. Each column takes the first
// row (lowest index) whose pivot candidate is invertible in the ring; the
// result is verified two-sided before returning, since over a
// noncommutative ring elimination only constructs a one-sided inverse
// directly. A stalled elimination is reported as NotInvertible.
Matrix mat_inverse(const Matrix& a);
std::optional<Matrix> try_mat_inverse(const Matrix& a);

// Closed form for the inverse of a 2 x 2 matrix with invertible entries:
//   [ (a - b d^-1 c)^-1   (c - d b^-1 a)^-1 ]
//   [ (b - a c^-1 d)^-1   (d - c a^-1 b)^-1 ]
// Requires d b^-1 - c a^-1 invertible, which for such matrices is
// equivalent to invertibility of the matrix itself.
Matrix inverse_2x2_hadamard(const Matrix& a);

// The 2 x 2 inverse block [[s,t],[u,v]] of [[a-1,b-1],[c-1,d-1]], from
// which the inverse of the hatted 3 x 3 matrix is assembled.
struct BorderedInverseParts {
    RingElem s, t, u, v;
};

// Inverse of [[1,1,1],[1,a,b],[1,c,d]] laid out as
//   [ 1+s+t+u+v  -s-u  -t-v ]
//   [   -s-t       s     t  ]
//   [   -u-v       u     v  ]
// with s,t,u,v the closed-form inverse entries of [[a-1,b-1],[c-1,d-1]].
std::pair<Matrix, BorderedInverseParts> inverse_hatted_3x3(const RingElem& a,
                                                           const RingElem& b,
                                                           const RingElem& c,
                                                           const RingElem& d);

struct SubmatrixRef {
    std::vector<int> rows;  // 0-based, strictly increasing
    std::vector<int> cols;
    Matrix value;
};

// Every k x k submatrix for 1 <= k <= n, obtained by choosing k rows and k
// columns order-preserving; enumerated lexicographically by (row set,
// column set) so diagnostics are stable.
std::vector<SubmatrixRef> enumerate_square_submatrices(const Matrix& a);
std::vector<Matrix> square_submatrices(const Matrix& a);

}  // namespace ncbir
