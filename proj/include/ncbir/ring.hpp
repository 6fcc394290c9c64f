#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "ncbir/errors.hpp"

namespace ncbir {

enum class RingKind { Fraction, ModP, BlockMatrix };

// Describes one of the three supported exact rings: arbitrary-precision
// fractions, integers mod a prime, or k x k block matrices over another
// ring. Immutable and cheap to copy. Block descriptors nest at most two
// levels deep; one level already yields a noncommutative ring and the cap
// keeps invertibility checks and error messages manageable.
class RingDescriptor {
public:
    static RingDescriptor fraction();
    static RingDescriptor mod_p(std::uint64_t modulus);
    static RingDescriptor block_matrix(int block_size, const RingDescriptor& inner);

    RingKind kind() const { return node_->kind; }
    std::uint64_t modulus() const;
    int block_size() const;
    RingDescriptor inner() const;

    // 0 for scalar rings, 1 for block over scalar, 2 for block over block.
    int nesting_depth() const { return node_->depth; }

    // Edge length of an element flattened down to the scalar base ring.
    int flat_dim() const { return node_->flat_dim; }
    RingDescriptor scalar_base() const;

    bool commutative() const;

    std::string to_string() const;

    friend bool operator==(const RingDescriptor& a, const RingDescriptor& b);
    friend bool operator!=(const RingDescriptor& a, const RingDescriptor& b) { return !(a == b); }

private:
    struct Node {
        RingKind kind;
        std::uint64_t modulus = 0;
        int block_size = 0;
        int depth = 0;
        int flat_dim = 1;
        std::shared_ptr<const Node> inner;
    };

    explicit RingDescriptor(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

// One element of a ring. Immutable value type: fractions are kept fully
// reduced with positive denominator, residues canonical in [0, p), block
// payloads hold k*k inner elements row-major. Equality is exact
// mathematical equality.
class RingElem {
public:
    static RingElem zero(const RingDescriptor& ring);
    static RingElem one(const RingDescriptor& ring);
    // Canonical image of a small integer (diagonal embedding for blocks).
    static RingElem from_int(const RingDescriptor& ring, long long value);

    static RingElem fraction(const mpq_class& value);
    static RingElem residue(const RingDescriptor& ring, std::uint64_t value);
    static RingElem block(const RingDescriptor& ring, std::vector<RingElem> entries);

    const RingDescriptor& ring() const { return ring_; }

    bool is_zero() const;
    bool is_one() const;

    const mpq_class& fraction_value() const;
    std::uint64_t residue_value() const;
    const std::vector<RingElem>& block_entries() const;

    std::string to_string() const;

    friend RingElem operator+(const RingElem& x, const RingElem& y);
    friend RingElem operator-(const RingElem& x, const RingElem& y);
    friend RingElem operator*(const RingElem& x, const RingElem& y);
    friend RingElem operator-(const RingElem& x);
    friend bool operator==(const RingElem& x, const RingElem& y);
    friend bool operator!=(const RingElem& x, const RingElem& y) { return !(x == y); }

    friend std::optional<RingElem> try_inverse(const RingElem& x);

private:
    struct BlockData {
        std::vector<RingElem> entries;
    };
    using Payload = std::variant<mpq_class, std::uint64_t, BlockData>;

    RingElem(RingDescriptor ring, Payload payload)
        : ring_(std::move(ring)), payload_(std::move(payload)) {}

    RingDescriptor ring_;
    Payload payload_;
};

// x^-1 with x * x^-1 = x^-1 * x = 1, or NotInvertible.
RingElem inverse(const RingElem& x);

// True when every pair of elements commutes: fractions and residues do,
// block matrices of size >= 2 do not, 1 x 1 blocks defer to the inner ring.
bool is_commutative(const RingDescriptor& ring);

bool is_prime(std::uint64_t n);

}  // namespace ncbir
