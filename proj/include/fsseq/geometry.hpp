#pragma once

#include "fsseq/complex.hpp"
#include "fsseq/int_matrix.hpp"

namespace fsseq {

/// Caller-supplied analytic inputs of one flat connection: h = dim H^0 + dim H^1,
/// the rho-invariant at 0, and the Chern-Simons value mod 1.
struct FlatConnectionData {
    long h = 0;
    Rat rho0;
    Rat cs_mod1;  // in [0, 1)
};

/// A trajectory class between two generators, with its lift discrepancy and
/// the divisor cuts applied to its moduli.
struct TrajectoryClass {
    Generator source;
    Generator target;
    long shift_k = 0;
    long point_divisors = 0;         // copies of the degree-3 class
    long threemanifold_divisors = 0; // copies of the degree-1 class

    long index() const { return source.sf - target.sf; }
    long divisor_degree() const { return 3 * point_divisors + threemanifold_divisors; }
};

/// Index of the anti-self-duality operator from the APS-type formula:
/// -2*p1_integral - (h_beta + rho_beta)/2 + (-h_alpha + rho_alpha)/2.
/// Returns the exact rational; integrality is the caller's concern.
Rat aps_index(const Rat& p1_integral, const FlatConnectionData& alpha,
              const FlatConnectionData& beta);

/// Unique representative of cs_mod1 (mod 1) strictly inside (r, r+1).
/// Throws NotRegularValue when cs_mod1 = r (mod 1).
Rat lift_cs(const Rat& cs_mod1, const Rat& r);

/// Energy of a trajectory class between preferred lifts, with the target
/// relifted down shift_k bands: cs(a) - cs(b) + shift_k. Must be positive
/// for a realizable trajectory.
Rat trajectory_energy(const Generator& a, const Generator& b, long shift_k);

/// floor(trajectory_energy): the number of unit-energy bubbles the class can
/// afford. Always 0 for k = 0 entries between preferred lifts in one band.
long bubble_budget(const Generator& a, const Generator& b, long shift_k);

/// Maximum number of unbroken pieces in an ideal chain connection compatible
/// with the telescoping spectral-flow count: index - divisor_degree.
/// Values <= 0 mean the cut-down moduli set is empty.
long chain_length_bound(long index, long divisor_degree);

}  // namespace fsseq
