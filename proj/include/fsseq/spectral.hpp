#pragma once

#include <array>
#include <map>
#include <optional>

#include "fsseq/complex.hpp"
#include "fsseq/smith.hpp"

namespace fsseq {

struct PageGroup {
    AbelianInvariants invariants;
    std::size_t dim_q = 0;
    std::vector<Chain> representatives;
    Subquotient presentation;  // quotient presentation, ambient Z^G
};

/// One spectral-sequence page. Groups are keyed by n; the second index is
/// j = n (mod 8) and the (n, j + 8) data coincide with (n, j) by periodicity,
/// so only the canonical residue is stored. Trivial groups are omitted.
/// Differential matrices are in quotient-generator coordinates:
/// d^k : E^k_n -> E^k_{n + 8k - 1}, torsion coordinates normalized.
struct Page {
    long k = 0;
    std::map<long, PageGroup> groups;
    std::map<long, IntMatrix> differentials;
    bool has_differentials = false;

    bool group_trivial(long n) const { return groups.find(n) == groups.end(); }
    std::size_t gens_at(long n) const;
};

/// Z^k_{n,j} = {x in F_n C_j : dx in F_{n-1+8k} C_{j-1}}, columns in Z^G.
IntMatrix cycle_lattice(const FilteredComplex& c, long n, long k);

/// The denominator lattice Z^{k-1}_{n+8,j} + d Z^{k-1}_{n-8(k-1)+1, j+1}.
IntMatrix boundary_denominator(const FilteredComplex& c, long n, long k);

/// E^k groups by the filtered-complex subquotient formula.
Page compute_page(const FilteredComplex& c, long k);

/// Fill the d^k matrices of a page computed from c.
/// Throws RepresentativeMismatch if a stored representative fails containment.
Page page_differential(const FilteredComplex& c, Page page);

/// d^k followed by d^k is the zero map at every position.
bool differentials_square_to_zero(const Page& page);

/// Homology of (E^k, d^k) at position n, computed purely from the page's
/// quotient-coordinate data (the representative-chase route, independent of
/// the subquotient formula route in compute_page).
AbelianInvariants page_homology_at(const Page& page, long n);

/// Smallest k >= 1 with 8k - 1 > sf-span; pages are constant from here on.
long stabilization_page(const FilteredComplex& c);

struct ConvergenceReport {
    long stable_k = 1;
    Page e_infinity;
    HomologyTable assembled;   // keyed by j in Z_8
    HomologyTable hf_direct;   // total_homology_mod8
    std::array<bool, 8> agree_over_q{};

    bool all_agree() const;
};

ConvergenceReport e_infinity(const FilteredComplex& c);

struct CollapseWitness {
    long k = 0;
    long n = 0;
};

struct CollapseResult {
    bool collapses = true;
    std::optional<CollapseWitness> witness;
};

/// Corollary-style collapse check: true iff d^k = 0 for all 1 <= k <= stable_k.
/// When true, additionally verifies that the Z-graded groups assemble to the
/// mod-8 homology over Q; a failure there throws WellDefinednessFailure.
CollapseResult collapse_detect(const FilteredComplex& c);

}  // namespace fsseq
