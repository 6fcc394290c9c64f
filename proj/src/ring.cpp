#include "ncbir/ring.hpp"

#include <sstream>
#include <utility>

#include "ncbir/matrix.hpp"

namespace ncbir {

// ---------------------------------------------------------------------------
// Primality (deterministic Miller-Rabin for 64-bit inputs)

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // This base set decides primality for every n < 2^64.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 0; i < r - 1; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// RingDescriptor

RingDescriptor RingDescriptor::fraction() {
    auto node = std::make_shared<Node>();
    node->kind = RingKind::Fraction;
    return RingDescriptor(std::move(node));
}

RingDescriptor RingDescriptor::mod_p(std::uint64_t modulus) {
    if (modulus >= (1ull << 62)) throw Error("mod-p modulus too large: " + std::to_string(modulus));
    if (!is_prime(modulus)) throw Error("mod-p modulus must be prime, got " + std::to_string(modulus));
    auto node = std::make_shared<Node>();
    node->kind = RingKind::ModP;
    node->modulus = modulus;
    return RingDescriptor(std::move(node));
}

RingDescriptor RingDescriptor::block_matrix(int block_size, const RingDescriptor& inner) {
    if (block_size < 1) throw Error("block_size must be >= 1, got " + std::to_string(block_size));
    if (inner.nesting_depth() >= 2)
        throw Error("block-matrix descriptors may nest at most two levels deep");
    auto node = std::make_shared<Node>();
    node->kind = RingKind::BlockMatrix;
    node->block_size = block_size;
    node->depth = inner.nesting_depth() + 1;
    node->flat_dim = block_size * inner.flat_dim();
    node->inner = inner.node_;
    return RingDescriptor(std::move(node));
}

std::uint64_t RingDescriptor::modulus() const {
    if (kind() != RingKind::ModP) throw Error("modulus() on a non mod-p descriptor");
    return node_->modulus;
}

int RingDescriptor::block_size() const {
    if (kind() != RingKind::BlockMatrix) throw Error("block_size() on a non block descriptor");
    return node_->block_size;
}

RingDescriptor RingDescriptor::inner() const {
    if (kind() != RingKind::BlockMatrix) throw Error("inner() on a non block descriptor");
    return RingDescriptor(node_->inner);
}

RingDescriptor RingDescriptor::scalar_base() const {
    RingDescriptor d = *this;
    while (d.kind() == RingKind::BlockMatrix) d = d.inner();
    return d;
}

bool RingDescriptor::commutative() const {
    switch (kind()) {
        case RingKind::Fraction:
        case RingKind::ModP:
            return true;
        case RingKind::BlockMatrix:
            return node_->block_size == 1 ? inner().commutative() : false;
    }
    return false;
}

std::string RingDescriptor::to_string() const {
    switch (kind()) {
        case RingKind::Fraction:
            return "fraction";
        case RingKind::ModP:
            return "mod-" + std::to_string(node_->modulus);
        case RingKind::BlockMatrix:
            return "block-" + std::to_string(node_->block_size) + "(" + inner().to_string() + ")";
    }
    return "?";
}

bool operator==(const RingDescriptor& a, const RingDescriptor& b) {
    if (a.node_ == b.node_) return true;
    if (a.node_->kind != b.node_->kind) return false;
    switch (a.node_->kind) {
        case RingKind::Fraction:
            return true;
        case RingKind::ModP:
            return a.node_->modulus == b.node_->modulus;
        case RingKind::BlockMatrix:
            return a.node_->block_size == b.node_->block_size && a.inner() == b.inner();
    }
    return false;
}

bool is_commutative(const RingDescriptor& ring) { return ring.commutative(); }

// ---------------------------------------------------------------------------
// RingElem

namespace {

void require_same_ring(const RingElem& x, const RingElem& y) {
    if (x.ring() != y.ring())
        throw DescriptorMismatch("operands over different rings: " + x.ring().to_string() +
                                 " vs " + y.ring().to_string());
}

}  // namespace

RingElem RingElem::zero(const RingDescriptor& ring) { return from_int(ring, 0); }

RingElem RingElem::one(const RingDescriptor& ring) { return from_int(ring, 1); }

RingElem RingElem::from_int(const RingDescriptor& ring, long long value) {
    switch (ring.kind()) {
        case RingKind::Fraction:
            return fraction(mpq_class(static_cast<long>(value)));
        case RingKind::ModP: {
            const auto p = static_cast<long long>(ring.modulus());
            long long r = value % p;
            if (r < 0) r += p;
            return residue(ring, static_cast<std::uint64_t>(r));
        }
        case RingKind::BlockMatrix: {
            const int k = ring.block_size();
            const RingDescriptor inner = ring.inner();
            std::vector<RingElem> entries;
            entries.reserve(static_cast<std::size_t>(k) * k);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    entries.push_back(from_int(inner, i == j ? value : 0));
            return block(ring, std::move(entries));
        }
    }
    throw Error("unreachable ring kind");
}

RingElem RingElem::fraction(const mpq_class& value) {
    mpq_class q = value;
    q.canonicalize();
    return RingElem(RingDescriptor::fraction(), Payload(std::move(q)));
}

RingElem RingElem::residue(const RingDescriptor& ring, std::uint64_t value) {
    if (ring.kind() != RingKind::ModP) throw Error("residue() requires a mod-p descriptor");
    return RingElem(ring, Payload(value % ring.modulus()));
}

RingElem RingElem::block(const RingDescriptor& ring, std::vector<RingElem> entries) {
    if (ring.kind() != RingKind::BlockMatrix) throw Error("block() requires a block descriptor");
    const int k = ring.block_size();
    if (entries.size() != static_cast<std::size_t>(k) * k)
        throw Error("block payload needs " + std::to_string(k * k) + " entries, got " +
                    std::to_string(entries.size()));
    const RingDescriptor inner = ring.inner();
    for (const RingElem& e : entries)
        if (e.ring() != inner)
            throw DescriptorMismatch("block entry ring " + e.ring().to_string() +
                                     " does not match inner ring " + inner.to_string());
    return RingElem(ring, Payload(BlockData{std::move(entries)}));
}

const mpq_class& RingElem::fraction_value() const { return std::get<mpq_class>(payload_); }

std::uint64_t RingElem::residue_value() const { return std::get<std::uint64_t>(payload_); }

const std::vector<RingElem>& RingElem::block_entries() const {
    return std::get<BlockData>(payload_).entries;
}

bool RingElem::is_zero() const {
    switch (ring_.kind()) {
        case RingKind::Fraction:
            return fraction_value() == 0;
        case RingKind::ModP:
            return residue_value() == 0;
        case RingKind::BlockMatrix: {
            for (const RingElem& e : block_entries())
                if (!e.is_zero()) return false;
            return true;
        }
    }
    return false;
}

bool RingElem::is_one() const { return *this == one(ring_); }

std::string RingElem::to_string() const {
    switch (ring_.kind()) {
        case RingKind::Fraction: {
            const mpq_class& q = fraction_value();
            return q.get_num().get_str() + "/" + q.get_den().get_str();
        }
        case RingKind::ModP:
            return std::to_string(residue_value());
        case RingKind::BlockMatrix: {
            const int k = ring_.block_size();
            std::ostringstream out;
            out << "[";
            for (int i = 0; i < k; ++i) {
                out << (i ? ",[" : "[");
                for (int j = 0; j < k; ++j)
                    out << (j ? "," : "") << block_entries()[i * k + j].to_string();
                out << "]";
            }
            out << "]";
            return out.str();
        }
    }
    return "?";
}

RingElem operator+(const RingElem& x, const RingElem& y) {
    require_same_ring(x, y);
    switch (x.ring().kind()) {
        case RingKind::Fraction:
            return RingElem::fraction(x.fraction_value() + y.fraction_value());
        case RingKind::ModP: {
            const std::uint64_t p = x.ring().modulus();
            return RingElem::residue(x.ring(), (x.residue_value() + y.residue_value()) % p);
        }
        case RingKind::BlockMatrix: {
            std::vector<RingElem> out;
            out.reserve(x.block_entries().size());
            for (std::size_t i = 0; i < x.block_entries().size(); ++i)
                out.push_back(x.block_entries()[i] + y.block_entries()[i]);
            return RingElem::block(x.ring(), std::move(out));
        }
    }
    throw Error("unreachable ring kind");
}

RingElem operator-(const RingElem& x, const RingElem& y) {
    require_same_ring(x, y);
    switch (x.ring().kind()) {
        case RingKind::Fraction:
            return RingElem::fraction(x.fraction_value() - y.fraction_value());
        case RingKind::ModP: {
            const std::uint64_t p = x.ring().modulus();
            return RingElem::residue(x.ring(), (x.residue_value() + p - y.residue_value()) % p);
        }
        case RingKind::BlockMatrix: {
            std::vector<RingElem> out;
            out.reserve(x.block_entries().size());
            for (std::size_t i = 0; i < x.block_entries().size(); ++i)
                out.push_back(x.block_entries()[i] - y.block_entries()[i]);
            return RingElem::block(x.ring(), std::move(out));
        }
    }
    throw Error("unreachable ring kind");
}

RingElem operator*(const RingElem& x, const RingElem& y) {
    require_same_ring(x, y);
    switch (x.ring().kind()) {
        case RingKind::Fraction:
            return RingElem::fraction(x.fraction_value() * y.fraction_value());
        case RingKind::ModP:
            return RingElem::residue(
                x.ring(), mulmod(x.residue_value(), y.residue_value(), x.ring().modulus()));
        case RingKind::BlockMatrix: {
            // Block elements multiply as matrices; this is where the
            // noncommutativity comes from.
            const int k = x.ring().block_size();
            const auto& xs = x.block_entries();
            const auto& ys = y.block_entries();
            std::vector<RingElem> out;
            out.reserve(static_cast<std::size_t>(k) * k);
            for (int i = 0; i < k; ++i) {
                for (int j = 0; j < k; ++j) {
                    RingElem acc = xs[i * k] * ys[j];
                    for (int l = 1; l < k; ++l) acc = acc + xs[i * k + l] * ys[l * k + j];
                    out.push_back(std::move(acc));
                }
            }
            return RingElem::block(x.ring(), std::move(out));
        }
    }
    throw Error("unreachable ring kind");
}

RingElem operator-(const RingElem& x) {
    switch (x.ring().kind()) {
        case RingKind::Fraction:
            return RingElem::fraction(-x.fraction_value());
        case RingKind::ModP: {
            const std::uint64_t p = x.ring().modulus();
            return RingElem::residue(x.ring(), (p - x.residue_value()) % p);
        }
        case RingKind::BlockMatrix: {
            std::vector<RingElem> out;
            out.reserve(x.block_entries().size());
            for (const RingElem& e : x.block_entries()) out.push_back(-e);
            return RingElem::block(x.ring(), std::move(out));
        }
    }
    throw Error("unreachable ring kind");
}

bool operator==(const RingElem& x, const RingElem& y) {
    if (x.ring() != y.ring()) return false;
    switch (x.ring().kind()) {
        case RingKind::Fraction:
            return x.fraction_value() == y.fraction_value();
        case RingKind::ModP:
            return x.residue_value() == y.residue_value();
        case RingKind::BlockMatrix:
            return x.block_entries() == y.block_entries();
    }
    return false;
}

std::optional<RingElem> try_inverse(const RingElem& x) {
    switch (x.ring().kind()) {
        case RingKind::Fraction: {
            if (x.fraction_value() == 0) return std::nullopt;
            return RingElem::fraction(1 / x.fraction_value());
        }
        case RingKind::ModP: {
            if (x.residue_value() == 0) return std::nullopt;
            const std::uint64_t p = x.ring().modulus();
            return RingElem::residue(x.ring(), powmod(x.residue_value(), p - 2, p));
        }
        case RingKind::BlockMatrix: {
            // Invert the k x k payload as a matrix over the inner ring.
            const int k = x.ring().block_size();
            Matrix m(x.ring().inner(), k);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) m.set(i, j, x.block_entries()[i * k + j]);
            std::optional<Matrix> inv = try_mat_inverse(m);
            if (!inv) return std::nullopt;
            std::vector<RingElem> out;
            out.reserve(static_cast<std::size_t>(k) * k);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) out.push_back(inv->at(i, j));
            return RingElem::block(x.ring(), std::move(out));
        }
    }
    return std::nullopt;
}

RingElem inverse(const RingElem& x) {
    std::optional<RingElem> inv = try_inverse(x);
    if (!inv) throw NotInvertible("element not invertible: " + x.to_string());
    return *inv;
}

}  // namespace ncbir
