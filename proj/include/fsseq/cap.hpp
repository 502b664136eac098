#pragma once

#include <map>
#include <string>
#include <vector>

#include "fsseq/complex.hpp"
#include "fsseq/spectral.hpp"

namespace fsseq {

/// A rational cohomology class nu^k cup mu^l; the exterior generator forces
/// mu_exp <= 1, and the degree is 3k + l.
struct CohClass {
    long nu_exp = 0;
    long mu_exp = 0;

    long degree() const { return 3 * nu_exp + mu_exp; }
    bool is_unit() const { return nu_exp == 0 && mu_exp == 0; }
    bool valid() const { return nu_exp >= 0 && (mu_exp == 0 || mu_exp == 1); }
    bool operator==(const CohClass&) const = default;

    static CohClass unit() { return {0, 0}; }
    static CohClass nu(long k = 1) { return {k, 0}; }
    static CohClass mu() { return {0, 1}; }
};

long class_degree(const CohClass& cls);

struct CapEntry {
    std::string from;
    std::string to;
    Int coeff;
};

/// Chain-level cap operator for a class of degree p: entries drop sf by
/// exactly p + 1 modulo nonnegative band shifts, and the operator commutes
/// with the boundary as an exact matrix identity. The unit class is the
/// identity operator and carries no entries.
class CapOperator {
public:
    CapOperator(CohClass cls, std::vector<CapEntry> entries)
        : cls_(cls), entries_(std::move(entries)) {}

    const CohClass& cls() const { return cls_; }
    const std::vector<CapEntry>& entries() const { return entries_; }

    /// Operator matrix on Z^G (identity for the unit class).
    IntMatrix matrix(const FilteredComplex& c) const;
    /// The shift-m component: entries with sf(to) = sf(from) - (p+1) + 8m.
    IntMatrix component(const FilteredComplex& c, long m) const;

    CapOperator operator+(const CapOperator& rhs) const;  // same class required

private:
    CohClass cls_;
    std::vector<CapEntry> entries_;
};

ValidationReport validate_cap(const CapOperator& u, const FilteredComplex& c);
void require_valid_cap(const CapOperator& u, const FilteredComplex& c);  // throws CapInvalid

/// Induced map on graded homology, I_n -> I_{n-p-1}, in the coordinates of
/// the source and target homology generators.
struct GradedMapResult {
    long degree_shift = 0;  // p + 1
    std::map<long, IntMatrix> maps;  // key: source degree n
};
GradedMapResult induced_graded_map(const CapOperator& u, const FilteredComplex& c);

/// Induced map on page k, E^k_n -> E^k_{n-p-1}, with the d^k-commutation
/// certificate. Throws WellDefinednessFailure if the operator fails the
/// cycle-lattice or denominator containments of the page subquotients.
struct PageMapResult {
    long k = 0;
    long degree_shift = 0;
    std::map<long, IntMatrix> maps;
    bool commutes_with_dk = false;
};
PageMapResult induced_page_map(const CapOperator& u, const FilteredComplex& c, long k);

/// Induced map on the mod-8 homology, HF_j -> HF_{j-p-1 mod 8}.
struct HFMapResult {
    long degree_shift = 0;
    std::map<long, IntMatrix> maps;  // key: source residue j
};
HFMapResult induced_hf_map(const CapOperator& u, const FilteredComplex& c);

/// Plain matrix composition of two cap operators. The composed filtration
/// shift is (p1+1)+(p2+1), one more than the cup-product class would give;
/// the mismatch is recorded, never reconciled.
struct ComposedOperator {
    CohClass outer;
    CohClass inner;
    std::vector<CapEntry> entries;
    long composed_shift = 0;   // p1 + p2 + 2
    long cup_class_shift = 0;  // deg(outer * inner) + 1 = p1 + p2 + 1
};
ComposedOperator compose(const CapOperator& outer, const CapOperator& inner,
                         const FilteredComplex& c);

/// Over Q: the E-infinity induced map agrees with the associated graded of
/// the induced HF map under the canonical identification.
bool einfinity_matches_graded_hf(const CapOperator& u, const FilteredComplex& c);

}  // namespace fsseq
