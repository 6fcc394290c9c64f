#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncbir/rng.hpp"
#include "ncbir/ring.hpp"

using namespace ncbir;

namespace {

RingElem frac(long num, long den = 1) {
    return RingElem::fraction(mpq_class(mpz_class(num), mpz_class(den)));
}

RingElem sample(const RingDescriptor& ring, Rng& rng) {
    switch (ring.kind()) {
        case RingKind::Fraction:
            return frac(rng.range(-50, 50), rng.range(1, 50));
        case RingKind::ModP:
            return RingElem::residue(ring, rng.below(ring.modulus()));
        case RingKind::BlockMatrix: {
            std::vector<RingElem> entries;
            for (int i = 0; i < ring.block_size() * ring.block_size(); ++i)
                entries.push_back(sample(ring.inner(), rng));
            return RingElem::block(ring, std::move(entries));
        }
    }
    throw Error("bad kind");
}

const RingDescriptor kQ = RingDescriptor::fraction();
const RingDescriptor kF7 = RingDescriptor::mod_p(7);
const RingDescriptor kF101 = RingDescriptor::mod_p(101);
const RingDescriptor kBlock7 = RingDescriptor::block_matrix(2, kF7);
const RingDescriptor kBlock101 = RingDescriptor::block_matrix(2, kF101);

}  // namespace

TEST_CASE("descriptor construction and invariants") {
    CHECK(kF7.modulus() == 7);
    CHECK_THROWS_AS(RingDescriptor::mod_p(4), Error);
    CHECK_THROWS_AS(RingDescriptor::mod_p(1), Error);
    CHECK_NOTHROW(RingDescriptor::mod_p(2));
    CHECK_THROWS_AS(RingDescriptor::block_matrix(0, kF7), Error);

    const RingDescriptor depth2 = RingDescriptor::block_matrix(2, kBlock7);
    CHECK(depth2.nesting_depth() == 2);
    CHECK(depth2.flat_dim() == 4);
    CHECK_THROWS_AS(RingDescriptor::block_matrix(2, depth2), Error);

    CHECK(kBlock7 == RingDescriptor::block_matrix(2, RingDescriptor::mod_p(7)));
    CHECK(kBlock7 != kBlock101);
    CHECK(kQ != kF7);
}

TEST_CASE("primality") {
    CHECK(is_prime(2));
    CHECK(is_prime(101));
    CHECK(is_prime(2147483647ull));
    CHECK(!is_prime(1));
    CHECK(!is_prime(91));  // 7 * 13
    CHECK(!is_prime(3215031751ull));
}

TEST_CASE("fraction arithmetic") {
    CHECK(frac(1, 3) + frac(1, 6) == frac(1, 2));
    CHECK(frac(2, 4) == frac(1, 2));  // reduced on construction
    CHECK(RingElem::fraction(mpq_class(mpz_class(2), mpz_class(-4))).to_string() == "-1/2");
    CHECK(frac(1) == RingElem::one(kQ));
    CHECK((frac(3, 5) * frac(5, 3)).is_one());
    CHECK((-frac(2, 7)).to_string() == "-2/7");
}

TEST_CASE("mod-p arithmetic") {
    const RingElem three = RingElem::residue(kF7, 3);
    const RingElem five = RingElem::residue(kF7, 5);
    CHECK((three * five).is_one());  // 15 = 1 mod 7
    CHECK(RingElem::from_int(kF7, -1) == RingElem::residue(kF7, 6));
    CHECK(RingElem::residue(kF7, 9) == RingElem::residue(kF7, 2));
    CHECK(inverse(three) == five);
}

TEST_CASE("block-matrix arithmetic") {
    // Unipotent times its inverse over M_2(F_7).
    auto e = [&](long v) { return RingElem::from_int(kF7, v); };
    const RingElem upper = RingElem::block(kBlock7, {e(1), e(1), e(0), e(1)});
    const RingElem lower = RingElem::block(kBlock7, {e(1), e(6), e(0), e(1)});
    CHECK((upper * lower).is_one());
    CHECK(inverse(upper) == lower);
    CHECK(RingElem::one(kBlock7) == RingElem::block(kBlock7, {e(1), e(0), e(0), e(1)}));
    CHECK_THROWS_AS(RingElem::block(kBlock7, {e(1), e(0), e(0)}), Error);
}

TEST_CASE("inversion is partial") {
    CHECK(inverse(frac(1)) == frac(1));
    CHECK_THROWS_AS(inverse(frac(0)), NotInvertible);
    CHECK_THROWS_AS(inverse(RingElem::zero(kF7)), NotInvertible);
    CHECK(!try_inverse(RingElem::zero(kBlock7)).has_value());
    // Rank-1 block is singular.
    auto e = [&](long v) { return RingElem::from_int(kF7, v); };
    CHECK(!try_inverse(RingElem::block(kBlock7, {e(1), e(1), e(1), e(1)})).has_value());
}

TEST_CASE("descriptor mismatch is rejected") {
    CHECK_THROWS_AS(frac(1) + RingElem::residue(kF7, 1), DescriptorMismatch);
    CHECK_THROWS_AS(RingElem::residue(kF7, 1) * RingElem::residue(kF101, 1), DescriptorMismatch);
}

TEST_CASE("is_commutative") {
    CHECK(is_commutative(kQ));
    CHECK(is_commutative(kF101));
    CHECK(!is_commutative(kBlock7));
    CHECK(is_commutative(RingDescriptor::block_matrix(1, kQ)));
    CHECK(!is_commutative(RingDescriptor::block_matrix(1, kBlock7)));
}

TEST_CASE("ring axioms hold exactly on random elements") {
    for (const RingDescriptor& ring :
         {kQ, kF101, kBlock101, RingDescriptor::block_matrix(2, kBlock7)}) {
        Rng rng = Rng::for_trial(11, "ring-axioms", 0);
        const RingElem one = RingElem::one(ring);
        for (int i = 0; i < 25; ++i) {
            const RingElem x = sample(ring, rng);
            const RingElem y = sample(ring, rng);
            const RingElem z = sample(ring, rng);
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
            CHECK((y + z) * x == y * x + z * x);
            CHECK(one * x == x);
            CHECK(x * one == x);
            CHECK(x - x == RingElem::zero(ring));
        }
    }
}

TEST_CASE("double inverse returns the element") {
    for (const RingDescriptor& ring : {kQ, kF101, kBlock101}) {
        Rng rng = Rng::for_trial(12, "double-inverse", 0);
        int found = 0;
        for (int i = 0; i < 200 && found < 25; ++i) {
            const RingElem x = sample(ring, rng);
            auto inv = try_inverse(x);
            if (!inv) continue;
            ++found;
            CHECK(inverse(*inv) == x);
            CHECK((x * *inv).is_one());
            CHECK((*inv * x).is_one());
        }
        CHECK(found == 25);
    }
}

TEST_CASE("noncommutativity witness exists in the block ring") {
    Rng rng = Rng::for_trial(13, "noncomm", 0);
    bool found = false;
    for (int i = 0; i < 100 && !found; ++i) {
        const RingElem x = sample(kBlock101, rng);
        const RingElem y = sample(kBlock101, rng);
        if (x * y != y * x) found = true;
    }
    CHECK(found);
}
