#pragma once

#include <map>
#include <string>
#include <vector>

#include "fsseq/int_matrix.hpp"
#include "fsseq/smith.hpp"

namespace fsseq {

/// One irreducible flat connection, recorded through its preferred lift:
/// integer spectral-flow grading and exact Chern-Simons value inside the
/// open band (r, r+1).
struct Generator {
    std::string id;
    long sf = 0;
    Rat cs;

    long floer_degree() const { return ((sf % 8) + 8) % 8; }
};

struct BoundaryEntry {
    std::string from;
    std::string to;
    Int coeff;
};

struct ValidationReport {
    std::vector<std::string> issues;
    bool ok() const { return issues.empty(); }
};

/// A chain as a sparse combination of generator ids.
using Chain = std::vector<std::pair<std::string, Int>>;

struct HomologyEntry {
    AbelianInvariants invariants;
    std::vector<Chain> representatives;
};

/// Graded homology groups keyed by integer degree n or residue j; trivial
/// groups are omitted.
struct HomologyTable {
    std::map<long, HomologyEntry> groups;

    AbelianInvariants invariants_at(long key) const;
    std::size_t dim_q(long key) const;
};

/// Finitely generated filtered Floer chain complex over one band (r, r+1).
/// Immutable after construction; duplicate generator ids are rejected here.
class FilteredComplex {
public:
    FilteredComplex(Rat band_r, std::vector<Generator> gens, std::vector<BoundaryEntry> boundary);

    const Rat& band_r() const { return band_r_; }
    const std::vector<Generator>& generators() const { return gens_; }
    const std::vector<BoundaryEntry>& boundary() const { return boundary_; }
    std::size_t size() const { return gens_.size(); }

    bool has_generator(const std::string& id) const;
    std::size_t index_of(const std::string& id) const;
    const Generator& generator(const std::string& id) const;

    /// Full boundary operator on Z^G, columns indexed by source generators.
    const IntMatrix& full_boundary() const { return boundary_matrix_; }

    long min_sf() const;
    long max_sf() const;
    long sf_span() const;  // 0 for the empty complex

    std::vector<std::size_t> generators_with_sf(long n) const;
    std::vector<std::size_t> generators_with_residue(long j) const;
    /// Generators spanning F_n C_j: sf >= n and sf = n (mod 8).
    std::vector<std::size_t> filtration_support(long n) const;
    /// Distinct sf values carrying generators, ascending.
    std::vector<long> occupied_degrees() const;

    Chain chain_from_ambient(const IntVec& v) const;

    ValidationReport validate() const;
    void require_valid() const;  // throws InvalidComplex

private:
    Rat band_r_;
    std::vector<Generator> gens_;
    std::vector<BoundaryEntry> boundary_;
    std::map<std::string, std::size_t> index_;
    IntMatrix boundary_matrix_;
};

ValidationReport validate_complex(const FilteredComplex& c);

/// The sf-drop (1 - 8k) part of the boundary, per degree n:
/// matrices of partial_k : C_n -> C_{n-1+8k} in generator coordinates.
std::map<long, IntMatrix> boundary_component(const FilteredComplex& c, long k);

/// Homology of (C_n, partial_0) per integer degree n, over Z with torsion.
HomologyTable graded_homology(const FilteredComplex& c);

/// Homology of the full boundary on C_j = sum over n = j (mod 8), per j in Z_8.
HomologyTable total_homology_mod8(const FilteredComplex& c);

/// Shift to the next band: cs -> cs + 1, sf -> sf - 8, band r -> r + 1.
FilteredComplex relift(const FilteredComplex& c);

}  // namespace fsseq
