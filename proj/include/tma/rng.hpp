#pragma once

#include <cstdint>
#include <random>

namespace tma {

/// SplitMix64 finalizer. Fully specified, platform-independent bit mixing.
std::uint64_t splitmix64(std::uint64_t x);

/// Counter-based sub-seed derivation: stream `index` of a master seed.
///
/// sub = splitmix64(master + (index + 1) * golden_gamma)
///
/// Independent of execution order and thread count: every consumer that
/// asks for stream `index` of the same master gets the same seed.
std::uint64_t derive_stream_seed(std::uint64_t master, std::uint64_t index);

/// Deterministic Gaussian stream: mt19937_64 + explicit Box-Muller.
///
/// The standard library's normal_distribution is implementation-defined,
/// so byte-reproducible outputs require spelling out the transform.
class GaussianStream {
public:
    explicit GaussianStream(std::uint64_t seed) : engine_(seed) {}

    /// Uniform double in [0, 1), 53 random bits.
    double next_unit() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Standard normal deviate (mean 0, std 1).
    double next_gaussian();

private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace tma
