#pragma once

#include <vector>

#include "fsseq/complex.hpp"
#include "fsseq/int_matrix.hpp"
#include "fsseq/synth.hpp"

namespace testutil {

using namespace fsseq;

/// Rank over Q by fraction-free (Bareiss) elimination: the independent oracle
/// for Smith-normal-form rank checks.
inline std::size_t rational_rank(const IntMatrix& m) {
    std::vector<IntVec> a = m.to_dense();
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t rank = 0;
    Int prev = 1;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            Int f = a[r][col];
            for (std::size_t cc = col; cc < cols; ++cc)
                a[r][cc] = (a[r][cc] * a[rank][col] - a[rank][cc] * f) / prev;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

inline IntMatrix random_matrix(SplitMix64& rng, std::size_t max_dim, long bound) {
    std::size_t rows = 1 + rng.below(max_dim);
    std::size_t cols = 1 + rng.below(max_dim);
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (rng.below(3) != 0) m.set(r, c, Int(rng.range(-bound, bound)));
    return m;
}

/// The shared property-test corpus: 100 deterministic complexes of mixed
/// size, torsion, and spectral-flow span (at most 40 generators, span <= 48).
inline std::vector<FilteredComplex> standard_corpus() {
    std::vector<FilteredComplex> out;
    for (std::uint64_t i = 0; i < 100; ++i) {
        SynthParams p;
        p.seed = 1000 + i;
        p.n_survivors = i % 5;
        p.n_pairs = 2 + i % 8;
        p.n_mixing_moves = i % 12;
        p.sf_span = 8 + static_cast<long>(i % 6) * 8;
        p.coeff_bound = 1 + static_cast<long>(i % 4);
        out.push_back(random_complex(p));
    }
    return out;
}

}  // namespace testutil
