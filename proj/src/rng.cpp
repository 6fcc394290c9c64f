#include "ncbir/rng.hpp"

namespace ncbir {

namespace {

std::uint64_t splitmix(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001B3ull;
    }
    return h;
}

}  // namespace

Rng Rng::for_trial(std::uint64_t seed, std::string_view check, std::uint64_t trial) {
    std::uint64_t s = seed;
    std::uint64_t a = splitmix(s);
    s ^= fnv1a(check);
    std::uint64_t b = splitmix(s);
    s ^= trial * 0xD1342543DE82EF95ull + 1;
    std::uint64_t c = splitmix(s);
    return Rng(a ^ (b + 0x9E3779B97F4A7C15ull) ^ (c << 1));
}

std::uint64_t Rng::next() { return splitmix(state_); }

std::uint64_t Rng::below(std::uint64_t bound) { return bound ? next() % bound : 0; }

long long Rng::range(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

}  // namespace ncbir
