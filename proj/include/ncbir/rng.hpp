#pragma once

#include <cstdint>
#include <string_view>

namespace ncbir {

// Deterministic splitmix64 stream. The standard <random> engines are
// portable but the distributions are not, and suite reports must be
// byte-identical across platforms, so bounded draws are done by hand.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    // Independent stream per (seed, check name, trial index) so checks and
    // trials can be reordered or parallelized without perturbing results.
    static Rng for_trial(std::uint64_t seed, std::string_view check, std::uint64_t trial);

    std::uint64_t next();

    // Uniform in [0, bound). Modulo bias is negligible for the small bounds
    // used here and keeps the mapping platform-independent.
    std::uint64_t below(std::uint64_t bound);

    // Uniform in [lo, hi] inclusive.
    long long range(long long lo, long long hi);

private:
    std::uint64_t state_;
};

}  // namespace ncbir
