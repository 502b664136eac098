#include "fsseq/smith.hpp"

#include <algorithm>
#include <sstream>

#include "fsseq/errors.hpp"

namespace fsseq {

namespace {

using Dense = std::vector<IntVec>;

Dense dense_identity(std::size_t n) {
    Dense m(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMatrix to_sparse(const Dense& m, std::size_t rows, std::size_t cols) {
    IntMatrix out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (m[i][j] != 0) out.set(i, j, m[i][j]);
    return out;
}

/// Elimination state: A together with U, Uinv, V, Vinv kept in sync so that
/// U * M * V = A and U * Uinv = I, V * Vinv = I at every step.
struct Elim {
    std::size_t r, c;
    Dense a, u, uinv, v, vinv;

    explicit Elim(const IntMatrix& m)
        : r(m.rows()),
          c(m.cols()),
          a(m.to_dense()),
          u(dense_identity(m.rows())),
          uinv(dense_identity(m.rows())),
          v(dense_identity(m.cols())),
          vinv(dense_identity(m.cols())) {}

    void swap_rows(std::size_t i, std::size_t k) {
        if (i == k) return;
        std::swap(a[i], a[k]);
        std::swap(u[i], u[k]);
        for (std::size_t x = 0; x < r; ++x) std::swap(uinv[x][i], uinv[x][k]);
    }

    void swap_cols(std::size_t j, std::size_t k) {
        if (j == k) return;
        for (std::size_t x = 0; x < r; ++x) std::swap(a[x][j], a[x][k]);
        for (std::size_t x = 0; x < c; ++x) std::swap(v[x][j], v[x][k]);
        std::swap(vinv[j], vinv[k]);
    }

    // row_i -= q * row_k
    void row_sub(std::size_t i, std::size_t k, const Int& q) {
        if (q == 0) return;
        for (std::size_t x = 0; x < c; ++x) a[i][x] -= q * a[k][x];
        for (std::size_t x = 0; x < r; ++x) u[i][x] -= q * u[k][x];
        for (std::size_t x = 0; x < r; ++x) uinv[x][k] += q * uinv[x][i];
    }

    // col_j -= q * col_k
    void col_sub(std::size_t j, std::size_t k, const Int& q) {
        if (q == 0) return;
        for (std::size_t x = 0; x < r; ++x) a[x][j] -= q * a[x][k];
        for (std::size_t x = 0; x < c; ++x) v[x][j] -= q * v[x][k];
        for (std::size_t x = 0; x < c; ++x) vinv[k][x] += q * vinv[j][x];
    }

    // row_i += row_k
    void row_add(std::size_t i, std::size_t k) {
        for (std::size_t x = 0; x < c; ++x) a[i][x] += a[k][x];
        for (std::size_t x = 0; x < r; ++x) u[i][x] += u[k][x];
        for (std::size_t x = 0; x < r; ++x) uinv[x][k] -= uinv[x][i];
    }

    void negate_row(std::size_t i) {
        for (std::size_t x = 0; x < c; ++x) a[i][x] = -a[i][x];
        for (std::size_t x = 0; x < r; ++x) u[i][x] = -u[i][x];
        for (std::size_t x = 0; x < r; ++x) uinv[x][i] = -uinv[x][i];
    }

    // smallest nonzero magnitude, ties by lowest (row, col)
    bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
        bool found = false;
        Int best;
        for (std::size_t i = t; i < r; ++i)
            for (std::size_t j = t; j < c; ++j) {
                if (a[i][j] == 0) continue;
                Int mag = abs(a[i][j]);
                if (!found || mag < best) {
                    found = true;
                    best = mag;
                    pi = i;
                    pj = j;
                }
            }
        return found;
    }
};

Int trunc_quot(const Int& n, const Int& d) {
    Int q;
    mpz_tdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return q;
}

}  // namespace

std::size_t SmithDecomposition::rank() const {
    std::size_t n = 0;
    for (const auto& d : diagonal)
        if (d != 0) ++n;
    return n;
}

SmithDecomposition smith_normal_form(const IntMatrix& m) {
    Elim e(m);
    std::size_t mindim = std::min(e.r, e.c);
    for (std::size_t t = 0; t < mindim; ++t) {
        std::size_t pi = 0, pj = 0;
        if (!e.find_pivot(t, pi, pj)) break;
        e.swap_rows(t, pi);
        e.swap_cols(t, pj);
        for (;;) {
            bool restart = false;
            for (std::size_t i = t + 1; i < e.r && !restart; ++i) {
                if (e.a[i][t] == 0) continue;
                e.row_sub(i, t, trunc_quot(e.a[i][t], e.a[t][t]));
                if (e.a[i][t] != 0) {
                    e.swap_rows(t, i);
                    restart = true;
                }
            }
            if (restart) continue;
            for (std::size_t j = t + 1; j < e.c && !restart; ++j) {
                if (e.a[t][j] == 0) continue;
                e.col_sub(j, t, trunc_quot(e.a[t][j], e.a[t][t]));
                if (e.a[t][j] != 0) {
                    e.swap_cols(t, j);
                    restart = true;
                }
            }
            if (restart) continue;
            // pivot must divide the remaining submatrix for the chain d_i | d_{i+1}
            bool fixed = false;
            for (std::size_t i = t + 1; i < e.r && !fixed; ++i)
                for (std::size_t j = t + 1; j < e.c && !fixed; ++j)
                    if (e.a[i][j] % e.a[t][t] != 0) {
                        e.row_add(t, i);
                        fixed = true;
                    }
            if (!fixed) break;
        }
    }
    for (std::size_t t = 0; t < mindim; ++t)
        if (e.a[t][t] < 0) e.negate_row(t);

    SmithDecomposition out;
    out.U = to_sparse(e.u, e.r, e.r);
    out.Uinv = to_sparse(e.uinv, e.r, e.r);
    out.V = to_sparse(e.v, e.c, e.c);
    out.Vinv = to_sparse(e.vinv, e.c, e.c);
    out.D = to_sparse(e.a, e.r, e.c);
    out.diagonal.resize(mindim, 0);
    for (std::size_t t = 0; t < mindim; ++t) out.diagonal[t] = e.a[t][t];
    return out;
}

IntMatrix kernel_lattice(const IntMatrix& m) {
    SmithDecomposition s = smith_normal_form(m);
    std::size_t rank = s.rank();
    std::vector<std::size_t> idx;
    for (std::size_t j = rank; j < m.cols(); ++j) idx.push_back(j);
    return s.V.columns_subset(idx);
}

std::optional<IntVec> solve_lattice(const IntMatrix& m, const IntVec& v) {
    if (v.size() != m.rows()) throw std::invalid_argument("solve_lattice length");
    SmithDecomposition s = smith_normal_form(m);
    IntVec y = s.U.apply(v);
    IntVec t(m.cols(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const Int& d = i < s.diagonal.size() ? s.diagonal[i] : Int(0);
        if (d == 0) {
            if (y[i] != 0) return std::nullopt;
        } else {
            if (y[i] % d != 0) return std::nullopt;
            t[i] = y[i] / d;
        }
    }
    return s.V.apply(t);
}

std::string AbelianInvariants::to_string() const {
    if (trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : torsion) {
        os << (first ? "" : " ⊕ ") << "Z/" << t.get_str();
        first = false;
    }
    if (free_rank > 0) {
        os << (first ? "" : " ⊕ ") << "Z";
        if (free_rank > 1) os << "^" << free_rank;
    }
    return os.str();
}

AbelianInvariants direct_sum(const AbelianInvariants& a, const AbelianInvariants& b) {
    AbelianInvariants out;
    out.free_rank = a.free_rank + b.free_rank;
    IntVec all = a.torsion;
    all.insert(all.end(), b.torsion.begin(), b.torsion.end());
    if (all.empty()) return out;
    SmithDecomposition s = smith_normal_form(IntMatrix::diagonal(all));
    for (const auto& d : s.diagonal)
        if (d >= 2) out.torsion.push_back(d);
    return out;
}

Subquotient Subquotient::trivial(std::size_t ambient) {
    Subquotient q;
    q.ambient_ = ambient;
    return q;
}

Subquotient Subquotient::build(const IntMatrix& numerator, const IntMatrix& denominator) {
    if (numerator.rows() != denominator.rows())
        throw std::invalid_argument("Subquotient ambient mismatch");
    Subquotient q;
    q.ambient_ = numerator.rows();

    SmithDecomposition sn = smith_normal_form(numerator);
    q.rank_ = sn.rank();
    q.basis_solver_u_ = sn.U;
    q.basis_solver_d_ = sn.diagonal;
    // basis of the numerator lattice: d_i * (Uinv column i), i < rank
    q.basis_ = IntMatrix(q.ambient_, q.rank_);
    for (std::size_t i = 0; i < q.rank_; ++i) {
        IntVec col = sn.Uinv.column(i);
        for (auto& x : col) x *= sn.diagonal[i];
        q.basis_.set_column(i, col);
    }

    // denominator columns in basis coordinates
    IntMatrix rel(q.rank_, denominator.cols());
    for (std::size_t j = 0; j < denominator.cols(); ++j) {
        IntVec y = sn.U.apply(denominator.column(j));
        for (std::size_t i = 0; i < q.ambient_; ++i) {
            const Int& d = i < q.rank_ ? sn.diagonal[i] : Int(0);
            if (d == 0) {
                if (y[i] != 0)
                    throw ContainmentViolation("denominator column " + std::to_string(j) +
                                               " not contained in numerator span");
            } else {
                if (y[i] % d != 0)
                    throw ContainmentViolation("denominator column " + std::to_string(j) +
                                               " not contained in numerator span");
                rel.set(i, j, y[i] / d);
            }
        }
    }

    SmithDecomposition sr = smith_normal_form(rel);
    q.coord_change_ = sr.U;
    q.orders_full_.assign(q.rank_, 0);
    for (std::size_t i = 0; i < sr.diagonal.size(); ++i) q.orders_full_[i] = sr.diagonal[i];

    for (std::size_t i = 0; i < q.rank_; ++i) {
        if (q.orders_full_[i] == 1) continue;
        q.kept_slots_.push_back(i);
        q.generator_orders_.push_back(q.orders_full_[i]);
        q.generator_reps_.push_back(q.basis_.apply(sr.Uinv.column(i)));
        if (q.orders_full_[i] == 0)
            ++q.invariants_.free_rank;
        else
            q.invariants_.torsion.push_back(q.orders_full_[i]);
    }
    return q;
}

std::optional<IntVec> Subquotient::reduce(const IntVec& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("Subquotient::reduce length");
    IntVec y = basis_solver_u_.apply(v);
    IntVec x(rank_, 0);
    for (std::size_t i = 0; i < ambient_; ++i) {
        const Int& d = i < rank_ ? basis_solver_d_[i] : Int(0);
        if (d == 0) {
            if (y[i] != 0) return std::nullopt;
        } else {
            if (y[i] % d != 0) return std::nullopt;
            x[i] = y[i] / d;
        }
    }
    IntVec z = coord_change_.apply(x);
    IntVec coords(kept_slots_.size(), 0);
    for (std::size_t s = 0; s < kept_slots_.size(); ++s) coords[s] = z[kept_slots_[s]];
    return normalize_coords(coords);
}

IntVec Subquotient::normalize_coords(const IntVec& coords) const {
    if (coords.size() != generator_orders_.size())
        throw std::invalid_argument("Subquotient::normalize_coords length");
    IntVec out = coords;
    for (std::size_t i = 0; i < out.size(); ++i) {
        const Int& e = generator_orders_[i];
        if (e != 0) mpz_fdiv_r(out[i].get_mpz_t(), out[i].get_mpz_t(), e.get_mpz_t());
    }
    return out;
}

bool Subquotient::coords_are_zero(const IntVec& coords) const {
    IntVec n = normalize_coords(coords);
    for (const auto& x : n)
        if (x != 0) return false;
    return true;
}

IntMatrix Subquotient::relation_columns() const {
    std::vector<IntVec> cols;
    for (std::size_t i = 0; i < generator_orders_.size(); ++i) {
        if (generator_orders_[i] == 0) continue;
        IntVec c(generator_orders_.size(), 0);
        c[i] = generator_orders_[i];
        cols.push_back(c);
    }
    return IntMatrix::from_columns(generator_orders_.size(), cols);
}

std::pair<AbelianInvariants, IntMatrix> subquotient_invariants(const IntMatrix& numerator,
                                                               const IntMatrix& denominator) {
    Subquotient q = Subquotient::build(numerator, denominator);
    std::vector<IntVec> reps;
    for (std::size_t i = 0; i < q.generator_count(); ++i) reps.push_back(q.representative(i));
    return {q.invariants(), IntMatrix::from_columns(q.ambient(), reps)};
}

}  // namespace fsseq
