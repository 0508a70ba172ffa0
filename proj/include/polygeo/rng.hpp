#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace polygeo {

/// Mixes two seeds into one (splitmix64 finalizer). Used to derive
/// independent per-trial / per-start streams from a single user seed.
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    std::uint64_t z = a + 0x9E3779B97F4A7C15ull * (b + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return mix_seed(mix_seed(a, b), c);
}

/// Small deterministic generator (splitmix64 core). std:: distributions are
/// implementation-defined, so all sampling is done by hand: identical seeds
/// must give identical streams everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform index in [0, n). Modulo bias is negligible for the small n
    /// used here.
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(next_u64() % n); }

    bool coin() { return (next_u64() & 1ull) != 0; }

    /// Standard normal via Box-Muller; always consumes two uniforms.
    double normal() {
        double u1 = uniform();
        double u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

    std::complex<double> normal_complex() {
        double re = normal();
        double im = normal();
        return {re, im};
    }

    /// Uniform over the disk |z| <= radius (uniform in area).
    std::complex<double> in_disk(double radius) {
        double r = radius * std::sqrt(uniform());
        double t = 6.283185307179586 * uniform();
        return {r * std::cos(t), r * std::sin(t)};
    }

    /// Modulus uniform in [rmin, rmax], angle uniform.
    std::complex<double> in_annulus(double rmin, double rmax) {
        double r = uniform(rmin, rmax);
        double t = 6.283185307179586 * uniform();
        return {r * std::cos(t), r * std::sin(t)};
    }

private:
    std::uint64_t state_;
};

}  // namespace polygeo
