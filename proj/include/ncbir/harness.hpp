#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ncbir/domain.hpp"
#include "ncbir/rng.hpp"

namespace ncbir {

struct SuiteConfig {
    RingDescriptor ring = RingDescriptor::mod_p(101);
    long trials = 100;
    std::uint64_t seed = 0;
    int depth = 6;
    // Empty means the default set for the ring (every check that applies).
    std::vector<std::string> checks;
};

struct CheckResult {
    std::string name;
    long trials_run = 0;
    long rejections = 0;
    long passes = 0;
    long failures = 0;
    std::optional<nlohmann::json> first_counterexample;
    // Extra structured findings a check wants on record, e.g. the per-order
    // outcomes of the noncommutative Hadamard identity.
    std::optional<nlohmann::json> note;
};

struct Report {
    int report_version = 1;
    SuiteConfig config;
    std::vector<CheckResult> checks;
    bool overall_pass = false;
};

// Names of all verification checks, and the subset that applies to a given
// ring (hadamard-commutative needs a commutative ring).
std::vector<std::string> all_check_names();
std::vector<std::string> default_checks(const RingDescriptor& ring);

// Uniform-entry samples: residues uniform in [0,p), block entries sampled
// recursively, fraction numerators in [-100,100] and denominators in
// [1,100] to keep growth through iterated maps bounded.
RingElem sample_elem(const RingDescriptor& ring, Rng& rng);
RingElem sample_unit(const RingDescriptor& ring, Rng& rng, long* rejections = nullptr);

// Rejection-samples a matrix into S / parameters into S-hat. Gives up with
// SamplingExhausted after 10,000 consecutive rejections, which signals a
// ring too small for the membership predicate.
Matrix sample_in_S(const RingDescriptor& ring, Rng& rng, long* rejections = nullptr);
HatParams sample_in_S_hat(const RingDescriptor& ring, Rng& rng, long* rejections = nullptr);

// Both commutative Hadamard identities at A:
//   A * Phi(A) * Phi^2(A) = 1  and  A * Phi(A) * Phi^-1(A) = 1 entrywise.
// Requires a commutative ring and A in S-hat.
bool check_hadamard_commutative(const HatParams& p);

// The Hadamard identity on the closed subset of matrices (a,b,b,a):
//   xi * Phi^-1(xi) * Phi(xi) = 1 entrywise, factors in printed order.
// Also asserts Phi keeps the subset closed. If `order_outcomes` is given,
// it receives the pass/fail verdict of all six factor orders keyed by a
// permutation label such as "0,-1,+1". Over noncommutative rings the
// identity turns out to fail in every factor order, so the suite check
// demands consistency of the six outcomes across trials and records them,
// instead of insisting on the commutative-ring result.
bool check_hadamard_M_subset(const RingElem& a, const RingElem& b,
                             std::vector<std::pair<std::string, bool>>* order_outcomes = nullptr);

// Runs every selected check over fresh per-trial random streams derived
// from (seed, check name, trial index). Deterministic: equal configs give
// byte-identical serialized reports. Check failures are report content,
// not errors; invalid configs (unknown check name, trials < 1, or
// hadamard-commutative requested over a noncommutative ring) throw.
Report run_suite(const SuiteConfig& config);

}  // namespace ncbir
