#pragma once

#include <cstdint>

#include "fsseq/cap.hpp"
#include "fsseq/complex.hpp"

namespace fsseq {

/// SplitMix64: the fixed pseudo-random source for all synthetic data.
/// State transition: state += 0x9E3779B97F4A7C15; the output is the finalizer
///   z = state; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9;
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB; return z ^ (z >> 31).
/// Identical seeds reproduce identical streams on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t n) { return next() % n; }

    long range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::uint64_t state_;
};

struct SynthParams {
    std::uint64_t seed = 0;
    std::size_t n_survivors = 0;
    std::size_t n_pairs = 0;
    std::size_t n_mixing_moves = 0;
    long sf_span = 8;
    long coeff_bound = 3;
};

/// Deterministic valid complex: survivor generators plus acyclic pairs,
/// scrambled by filtration-respecting unimodular basis moves. The output
/// always passes validate_complex; homology before mixing is free on the
/// survivors plus Z/coeff torsion from the pairs.
FilteredComplex random_complex(const SynthParams& params);

/// Deterministic valid cap operator of the given class: an integer point of
/// the exact solution lattice {U : dU - Ud = 0, degree pattern of cls}.
CapOperator random_cap(const FilteredComplex& c, const CohClass& cls, std::uint64_t seed,
                       long coeff_bound = 3);

}  // namespace fsseq
