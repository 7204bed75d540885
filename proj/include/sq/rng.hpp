#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace sq {

// Deterministic random source. All sampling in the library goes through
// this wrapper so that a (seed, call sequence) pair fully determines the
// output stream; std::distributions are avoided because their draw
// sequences are implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    std::uint64_t seed() const { return seed_; }

    // Uniform in [0, 1), 53 random bits.
    double unit_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Standard normal via Box-Muller (fresh pair each call, second value
    // discarded; call order is part of the deterministic contract).
    double gaussian() {
        double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
        double u2 = unit_double();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

    // Uniform integer in [lo, hi], inclusive.
    long uniform_int(long lo, long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next_u64() % span);
    }

    bool coin() { return (next_u64() & 1u) != 0; }

    // Sub-generator for partition i of a check (seed XOR partition index).
    Rng sub(std::uint64_t index) const { return Rng(seed_ ^ index); }

private:
    std::uint64_t seed_;
    std::mt19937_64 eng_;
};

} // namespace sq
