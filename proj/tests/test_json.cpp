#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncbir/json_io.hpp"

using namespace ncbir;
using nlohmann::json;

namespace {

RingElem frac(long num, long den = 1) {
    return RingElem::fraction(mpq_class(mpz_class(num), mpz_class(den)));
}

const RingDescriptor kQ = RingDescriptor::fraction();
const RingDescriptor kF101 = RingDescriptor::mod_p(101);
const RingDescriptor kBlock = RingDescriptor::block_matrix(2, kF101);
const RingDescriptor kNested = RingDescriptor::block_matrix(2, kBlock);

}  // namespace

TEST_CASE("ring descriptor round trips") {
    for (const RingDescriptor& ring : {kQ, kF101, kBlock, kNested}) {
        CHECK(ring_from_json(ring_to_json(ring)) == ring);
    }
    CHECK(ring_to_json(kF101) == json{{"kind", "mod-p"}, {"modulus", 101}});
    CHECK_THROWS_AS(ring_from_json(json{{"kind", "galois"}}), ParseError);
    CHECK_THROWS_AS(ring_from_json(json{{"kind", "mod-p"}}), ParseError);
    CHECK_THROWS_AS(ring_from_json(json{{"kind", "mod-p"}, {"modulus", 6}}), Error);
}

TEST_CASE("element encodings") {
    CHECK(elem_to_json(frac(-4, 3)) == json("-4/3"));
    CHECK(elem_to_json(frac(5)) == json("5/1"));
    CHECK(elem_from_json(kQ, json("22")) == frac(22));
    CHECK(elem_from_json(kQ, json("-6/-4")) == frac(3, 2));
    CHECK(elem_from_json(kQ, json(7)) == frac(7));
    CHECK_THROWS_AS(elem_from_json(kQ, json("1/0")), ParseError);
    CHECK_THROWS_AS(elem_from_json(kQ, json("abc")), ParseError);

    CHECK(elem_to_json(RingElem::residue(kF101, 13)) == json(13));
    CHECK(elem_from_json(kF101, json(-1)) == RingElem::residue(kF101, 100));

    const RingElem block = RingElem::from_int(kBlock, 3);
    CHECK(elem_to_json(block) == json::parse("[[3,0],[0,3]]"));
    CHECK(elem_from_json(kBlock, elem_to_json(block)) == block);
    CHECK_THROWS_AS(elem_from_json(kBlock, json::parse("[[1,2],[3]]")), ParseError);
}

TEST_CASE("element round trips on random values") {
    for (const RingDescriptor& ring : {kQ, kF101, kBlock, kNested}) {
        Rng rng = Rng::for_trial(71, "roundtrip", 0);
        for (int i = 0; i < 30; ++i) {
            const RingElem x = sample_elem(ring, rng);
            CHECK(elem_from_json(ring, elem_to_json(x)) == x);
        }
    }
}

TEST_CASE("matrix and hat documents") {
    Rng rng = Rng::for_trial(72, "docs", 0);
    const Matrix m = sample_in_S(kBlock, rng);
    CHECK(matrix_from_json(matrix_to_json(m)) == m);

    const HatParams p = sample_in_S_hat(kBlock, rng);
    CHECK(hat_from_json(hat_to_json(p)) == p);

    json bad = matrix_to_json(m);
    bad["entries"][0] = json::array({1, 2});
    CHECK_THROWS_AS(matrix_from_json(bad), ParseError);
    CHECK_THROWS_AS(hat_from_json(json{{"ring", ring_to_json(kQ)}, {"a", "1/2"}}), ParseError);
}

TEST_CASE("witness and report documents") {
    Rng rng = Rng::for_trial(73, "witness", 0);
    const Matrix m = sample_in_S(kF101, rng);
    auto w = equiv_witness(m, m);
    REQUIRE(w.has_value());
    const json wj = witness_to_json(*w, kF101);
    CHECK(wj.at("verified") == true);
    CHECK(wj.at("kind") == "diag-pair");

    DomainReport rep = in_S_hat(HatParams(frac(1), frac(1), frac(1), frac(1)));
    const json dj = domain_report_to_json(rep);
    CHECK(dj.at("member") == false);
    CHECK(dj.at("failing_element") == "a-1");
    CHECK(dj.at("checklist").is_array());

    SuiteConfig cfg;
    cfg.ring = kF101;
    cfg.trials = 1;
    cfg.checks = {"zeta-signs"};
    const json rj = suite_report_to_json(run_suite(cfg));
    CHECK(rj.at("report_version") == 1);
    CHECK(rj.at("overall") == "pass");
    CHECK(rj.at("config").at("checks") == json::array({"zeta-signs"}));
}

TEST_CASE("noncommutative M-subset outcomes surface in the report") {
    SuiteConfig cfg;
    cfg.ring = kBlock;
    cfg.trials = 2;
    cfg.seed = 6;
    cfg.checks = {"hadamard-M-subset"};
    const json rj = suite_report_to_json(run_suite(cfg));
    CHECK(rj.at("overall") == "pass");
    const json& entry = rj.at("checks").at(0);
    REQUIRE(entry.contains("note"));
    CHECK(entry.at("note").at("printed_order_all_ones") == false);
    CHECK(entry.at("note").at("order_outcomes").size() == 6);
}

TEST_CASE("canonical dump is sorted and newline-terminated") {
    const json j{{"zebra", 1}, {"alpha", 2}};
    CHECK(canonical_dump(j) == "{\n  \"alpha\": 2,\n  \"zebra\": 1\n}\n");
}
