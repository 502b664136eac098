#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fsseq/int_matrix.hpp"

namespace fsseq {

/// U * M * V = D with U, V unimodular and D diagonal, d_i | d_{i+1}.
/// Uinv and Vinv are the exact inverses, tracked during elimination.
struct SmithDecomposition {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;
    IntMatrix Uinv;
    IntMatrix Vinv;
    IntVec diagonal;  // nonnegative, divisibility chain, zeros trailing

    std::size_t rank() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Basis of the saturated integer kernel {x : Mx = 0}, one column per basis
/// vector. Column count = cols(M) - rank(M); columns are primitive.
IntMatrix kernel_lattice(const IntMatrix& m);

/// Exact integer solution of M x = v, if one exists.
std::optional<IntVec> solve_lattice(const IntMatrix& m, const IntVec& v);

/// Isomorphism type of a finitely generated abelian group:
/// Z^free_rank + sum Z/t_i with t_i >= 2 and t_i | t_{i+1}.
struct AbelianInvariants {
    std::size_t free_rank = 0;
    IntVec torsion;

    bool trivial() const { return free_rank == 0 && torsion.empty(); }
    bool operator==(const AbelianInvariants& rhs) const = default;
    std::string to_string() const;
};

AbelianInvariants direct_sum(const AbelianInvariants& a, const AbelianInvariants& b);

/// Presentation of (column span of numerator) / (column span of denominator)
/// inside an ambient Z^N. Generators carry orders (0 = infinite) in
/// divisibility order; order-1 slots are pruned.
class Subquotient {
public:
    /// Throws ContainmentViolation if a denominator column is not in the
    /// integer span of the numerator columns.
    static Subquotient build(const IntMatrix& numerator, const IntMatrix& denominator);
    static Subquotient trivial(std::size_t ambient);

    std::size_t ambient() const { return ambient_; }
    const AbelianInvariants& invariants() const { return invariants_; }
    std::size_t generator_count() const { return generator_reps_.size(); }
    const IntVec& representative(std::size_t i) const { return generator_reps_[i]; }
    /// Order of generator i: 0 for a free generator, t >= 2 for torsion.
    const Int& order(std::size_t i) const { return generator_orders_[i]; }

    /// Coordinates of an ambient vector in the quotient, one per generator,
    /// torsion coordinates normalized into [0, order). Empty optional if the
    /// vector is outside the numerator span.
    std::optional<IntVec> reduce(const IntVec& v) const;

    bool coords_are_zero(const IntVec& coords) const;
    /// Normalize coordinate vector: torsion slots mod order, free slots kept.
    IntVec normalize_coords(const IntVec& coords) const;

    /// Columns e_i * unit_i for the torsion generators: the relation lattice
    /// of the presentation Z^gens -> group.
    IntMatrix relation_columns() const;

private:
    std::size_t ambient_ = 0;
    std::size_t rank_ = 0;          // rank of the numerator lattice
    IntMatrix basis_;               // ambient x rank, basis of the numerator lattice
    IntMatrix basis_solver_u_;      // SNF data for solving basis * x = v
    IntVec basis_solver_d_;
    IntMatrix basis_solver_v_;
    IntMatrix coord_change_;        // U2: rank x rank, x-coords -> z-coords
    IntVec orders_full_;            // length rank, including 1s
    std::vector<std::size_t> kept_slots_;
    std::vector<IntVec> generator_reps_;
    IntVec generator_orders_;
    AbelianInvariants invariants_;
};

/// Convenience surface: invariants of the subquotient plus representative
/// columns (ambient) projecting to a generating set.
std::pair<AbelianInvariants, IntMatrix> subquotient_invariants(const IntMatrix& numerator,
                                                               const IntMatrix& denominator);

}  // namespace fsseq
