#include "fsseq/cap.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "fsseq/errors.hpp"

namespace fsseq {

namespace {

long mod8(long n) { return ((n % 8) + 8) % 8; }

/// Incremental Q-span with exact rational elimination.
class QSpan {
public:
    explicit QSpan(std::size_t dim) : dim_(dim) {}

    void insert(const IntVec& v) {
        std::vector<Rat> row = residual(v);
        for (std::size_t i = 0; i < dim_; ++i) {
            if (row[i] != 0) {
                Rat lead = row[i];
                for (auto& x : row) x /= lead;
                pivots_.emplace(i, std::move(row));
                return;
            }
        }
    }

    bool contains(const IntVec& v) const {
        std::vector<Rat> row = residual(v);
        return std::all_of(row.begin(), row.end(), [](const Rat& x) { return x == 0; });
    }

private:
    std::vector<Rat> residual(const IntVec& v) const {
        std::vector<Rat> row(dim_);
        for (std::size_t i = 0; i < dim_; ++i) row[i] = Rat(v[i]);
        for (const auto& [p, basis_row] : pivots_) {
            if (row[p] == 0) continue;
            Rat f = row[p];
            for (std::size_t i = 0; i < dim_; ++i) row[i] -= f * basis_row[i];
        }
        return row;
    }

    std::size_t dim_;
    std::map<std::size_t, std::vector<Rat>> pivots_;
};

struct BlockHomology {
    std::vector<std::size_t> ambient;
    Subquotient pres;
};

BlockHomology graded_block(const FilteredComplex& c, long n) {
    BlockHomology b;
    b.ambient = c.generators_with_sf(n);
    auto below = c.generators_with_sf(n - 1);
    auto above = c.generators_with_sf(n + 1);
    IntMatrix d_n = c.full_boundary().submatrix(below, b.ambient);
    IntMatrix d_up = c.full_boundary().submatrix(b.ambient, above);
    b.pres = Subquotient::build(kernel_lattice(d_n), d_up);
    return b;
}

BlockHomology total_block(const FilteredComplex& c, long j) {
    BlockHomology b;
    b.ambient = c.generators_with_residue(j);
    auto below = c.generators_with_residue(j - 1);
    auto above = c.generators_with_residue(j + 1);
    IntMatrix d_j = c.full_boundary().submatrix(below, b.ambient);
    IntMatrix d_up = c.full_boundary().submatrix(b.ambient, above);
    b.pres = Subquotient::build(kernel_lattice(d_j), d_up);
    return b;
}

IntVec restrict_to(const IntVec& full, const std::vector<std::size_t>& idx) {
    IntVec out(idx.size(), 0);
    for (std::size_t i = 0; i < idx.size(); ++i) out[i] = full[idx[i]];
    return out;
}

bool supported_on(const IntVec& full, const std::vector<std::size_t>& idx) {
    std::vector<bool> mask(full.size(), false);
    for (std::size_t i : idx) mask[i] = true;
    for (std::size_t i = 0; i < full.size(); ++i)
        if (!mask[i] && full[i] != 0) return false;
    return true;
}

IntVec embed(const IntVec& local, const std::vector<std::size_t>& idx, std::size_t dim) {
    IntVec out(dim, 0);
    for (std::size_t i = 0; i < idx.size(); ++i) out[idx[i]] = local[i];
    return out;
}

}  // namespace

long class_degree(const CohClass& cls) {
    if (!cls.valid()) throw CapInvalid("invalid cohomology class exponents");
    return cls.degree();
}

IntMatrix CapOperator::matrix(const FilteredComplex& c) const {
    if (cls_.is_unit()) return IntMatrix::identity(c.size());
    IntMatrix m(c.size(), c.size());
    for (const auto& e : entries_) m.add_to(c.index_of(e.to), c.index_of(e.from), e.coeff);
    return m;
}

IntMatrix CapOperator::component(const FilteredComplex& c, long m) const {
    IntMatrix out(c.size(), c.size());
    if (cls_.is_unit()) return m == 0 ? IntMatrix::identity(c.size()) : out;
    long p = cls_.degree();
    for (const auto& e : entries_) {
        const Generator& a = c.generator(e.from);
        const Generator& b = c.generator(e.to);
        if (b.sf == a.sf - (p + 1) + 8 * m) out.add_to(c.index_of(e.to), c.index_of(e.from), e.coeff);
    }
    return out;
}

CapOperator CapOperator::operator+(const CapOperator& rhs) const {
    if (!(cls_ == rhs.cls_)) throw CapInvalid("cannot add cap operators of different classes");
    if (cls_.is_unit()) throw CapInvalid("cannot add unit operators");
    std::map<std::pair<std::string, std::string>, Int> merged;
    for (const auto& e : entries_) merged[{e.from, e.to}] += e.coeff;
    for (const auto& e : rhs.entries_) merged[{e.from, e.to}] += e.coeff;
    std::vector<CapEntry> out;
    for (const auto& [key, v] : merged)
        if (v != 0) out.push_back({key.first, key.second, v});
    return CapOperator(cls_, std::move(out));
}

ValidationReport validate_cap(const CapOperator& u, const FilteredComplex& c) {
    ValidationReport report;
    if (!u.cls().valid()) {
        report.issues.push_back("invalid class exponents (need nu_exp >= 0, mu_exp in {0,1})");
        return report;
    }
    if (u.cls().is_unit()) {
        if (!u.entries().empty())
            report.issues.push_back("unit class acts as the identity and carries no entries");
        return report;
    }
    long p = u.cls().degree();
    for (const auto& e : u.entries()) {
        if (!c.has_generator(e.from) || !c.has_generator(e.to)) {
            report.issues.push_back("cap entry " + e.from + " -> " + e.to +
                                    " references unknown generator");
            continue;
        }
        if (e.coeff == 0) {
            report.issues.push_back("cap entry " + e.from + " -> " + e.to + ": zero coefficient");
            continue;
        }
        long drop = c.generator(e.from).sf - c.generator(e.to).sf;
        long diff = (p + 1) - drop;
        if (diff % 8 != 0) {
            std::ostringstream os;
            os << "cap entry " << e.from << " -> " << e.to << ": sf drop " << drop
               << " is not " << (p + 1) << " mod 8";
            report.issues.push_back(os.str());
            continue;
        }
        if (diff / 8 < 0) {
            std::ostringstream os;
            os << "cap entry " << e.from << " -> " << e.to
               << ": negative band shift m = " << diff / 8;
            report.issues.push_back(os.str());
        }
    }
    IntMatrix um = u.matrix(c);
    const IntMatrix& bd = c.full_boundary();
    if (!(bd * um == um * bd)) report.issues.push_back("chain-map law dU = Ud fails");
    return report;
}

void require_valid_cap(const CapOperator& u, const FilteredComplex& c) {
    ValidationReport r = validate_cap(u, c);
    if (!r.ok()) throw CapInvalid("invalid cap operator: " + r.issues.front());
}

GradedMapResult induced_graded_map(const CapOperator& u, const FilteredComplex& c) {
    c.require_valid();
    require_valid_cap(u, c);
    GradedMapResult result;
    result.degree_shift = u.cls().is_unit() ? 0 : u.cls().degree() + 1;
    IntMatrix u0 = u.component(c, 0);
    for (long n : c.occupied_degrees()) {
        BlockHomology src = graded_block(c, n);
        if (src.pres.generator_count() == 0) continue;
        BlockHomology dst = graded_block(c, n - result.degree_shift);
        IntMatrix m(dst.pres.generator_count(), src.pres.generator_count());
        for (std::size_t i = 0; i < src.pres.generator_count(); ++i) {
            IntVec image = u0.apply(embed(src.pres.representative(i), src.ambient, c.size()));
            if (!supported_on(image, dst.ambient))
                throw WellDefinednessFailure("graded image leaves the target degree block");
            auto coords = dst.pres.reduce(restrict_to(image, dst.ambient));
            if (!coords)
                throw WellDefinednessFailure("graded image is not a cycle in the target degree");
            m.set_column(i, *coords);
        }
        result.maps.emplace(n, std::move(m));
    }
    return result;
}

PageMapResult induced_page_map(const CapOperator& u, const FilteredComplex& c, long k) {
    c.require_valid();
    require_valid_cap(u, c);
    PageMapResult result;
    result.k = k;
    result.degree_shift = u.cls().is_unit() ? 0 : u.cls().degree() + 1;

    Page page = page_differential(c, compute_page(c, k));
    IntMatrix um = u.matrix(c);

    for (const auto& [n, group] : page.groups) {
        long target_n = n - result.degree_shift;

        // verified containments: U maps the cycle lattice into the target's
        // cycle lattice and the denominator into the target's denominator
        IntMatrix num = cycle_lattice(c, n, k);
        IntMatrix den = boundary_denominator(c, n, k);
        IntMatrix tnum = cycle_lattice(c, target_n, k);
        IntMatrix tden = boundary_denominator(c, target_n, k);
        for (std::size_t j = 0; j < num.cols(); ++j)
            if (!solve_lattice(tnum, um.apply(num.column(j))))
                throw WellDefinednessFailure("U does not map Z^k at n = " + std::to_string(n) +
                                             " into Z^k at the target");
        for (std::size_t j = 0; j < den.cols(); ++j)
            if (!solve_lattice(tden, um.apply(den.column(j))))
                throw WellDefinednessFailure("U does not map the page denominator at n = " +
                                             std::to_string(n) + " into the target denominator");

        auto target = page.groups.find(target_n);
        std::size_t source_gens = group.presentation.generator_count();
        if (target == page.groups.end()) {
            result.maps.emplace(n, IntMatrix(0, source_gens));
            continue;
        }
        const Subquotient& tq = target->second.presentation;
        IntMatrix m(tq.generator_count(), source_gens);
        for (std::size_t i = 0; i < source_gens; ++i) {
            auto coords = tq.reduce(um.apply(group.presentation.representative(i)));
            if (!coords)
                throw WellDefinednessFailure("induced page image escapes the target subquotient");
            m.set_column(i, *coords);
        }
        result.maps.emplace(n, std::move(m));
    }

    // commutation certificate: d^k U = U d^k on E^k, exactly
    auto map_at = [&](const std::map<long, IntMatrix>& maps, long n, std::size_t rows,
                      std::size_t cols) {
        auto it = maps.find(n);
        return it == maps.end() ? IntMatrix(rows, cols) : it->second;
    };
    result.commutes_with_dk = true;
    for (const auto& [n, group] : page.groups) {
        long tn = n - result.degree_shift;          // after U
        long dn = n + 8 * k - 1;                     // after d^k
        long fin = n + 8 * k - 1 - result.degree_shift;
        std::size_t src = page.gens_at(n);
        IntMatrix u_here = map_at(result.maps, n, page.gens_at(tn), src);
        IntMatrix d_then = map_at(page.differentials, tn, page.gens_at(fin), page.gens_at(tn));
        IntMatrix d_here = map_at(page.differentials, n, page.gens_at(dn), src);
        IntMatrix u_then = map_at(result.maps, dn, page.gens_at(fin), page.gens_at(dn));
        IntMatrix diff = d_then * u_here - u_then * d_here;
        if (diff.rows() == 0) continue;
        const Subquotient& fq = page.groups.at(fin).presentation;
        for (std::size_t j = 0; j < diff.cols(); ++j)
            if (!fq.coords_are_zero(diff.column(j))) result.commutes_with_dk = false;
    }
    return result;
}

HFMapResult induced_hf_map(const CapOperator& u, const FilteredComplex& c) {
    c.require_valid();
    require_valid_cap(u, c);
    HFMapResult result;
    result.degree_shift = u.cls().is_unit() ? 0 : u.cls().degree() + 1;
    IntMatrix um = u.matrix(c);
    for (long j = 0; j < 8; ++j) {
        BlockHomology src = total_block(c, j);
        if (src.pres.generator_count() == 0) continue;
        BlockHomology dst = total_block(c, j - result.degree_shift);
        IntMatrix m(dst.pres.generator_count(), src.pres.generator_count());
        for (std::size_t i = 0; i < src.pres.generator_count(); ++i) {
            IntVec image = um.apply(embed(src.pres.representative(i), src.ambient, c.size()));
            if (!supported_on(image, dst.ambient))
                throw WellDefinednessFailure("HF image leaves the target residue block");
            auto coords = dst.pres.reduce(restrict_to(image, dst.ambient));
            if (!coords) throw WellDefinednessFailure("HF image is not a cycle");
            m.set_column(i, *coords);
        }
        result.maps.emplace(j, std::move(m));
    }
    return result;
}

ComposedOperator compose(const CapOperator& outer, const CapOperator& inner,
                         const FilteredComplex& c) {
    if (!validate_cap(outer, c).ok() || !validate_cap(inner, c).ok())
        throw ComplexMismatch("compose requires two operators valid over the same complex");
    ComposedOperator out;
    out.outer = outer.cls();
    out.inner = inner.cls();
    auto op_shift = [](const CohClass& cls) { return cls.is_unit() ? 0 : cls.degree() + 1; };
    out.composed_shift = op_shift(outer.cls()) + op_shift(inner.cls());
    out.cup_class_shift = outer.cls().degree() + inner.cls().degree() + 1;
    IntMatrix prod = outer.matrix(c) * inner.matrix(c);
    for (const auto& [key, v] : prod.entries())
        out.entries.push_back({c.generators()[key.second].id, c.generators()[key.first].id, v});
    return out;
}

bool einfinity_matches_graded_hf(const CapOperator& u, const FilteredComplex& c) {
    c.require_valid();
    require_valid_cap(u, c);
    if (u.cls().is_unit()) return true;
    long shift = u.cls().degree() + 1;
    long stable = stabilization_page(c);
    Page einf = compute_page(c, stable);
    PageMapResult pm = induced_page_map(u, c, stable);
    IntMatrix um = u.matrix(c);

    for (const auto& [n, group] : einf.groups) {
        long tn = n - shift;
        auto target = einf.groups.find(tn);
        // Q-span of boundaries plus cycles one filtration step deeper:
        // the defining relations of gr_{tn} HF over Q
        QSpan span(c.size());
        for (std::size_t j = 0; j < c.size(); ++j) span.insert(c.full_boundary().column(j));
        IntMatrix deeper = cycle_lattice(c, tn + 8, stable);
        for (std::size_t j = 0; j < deeper.cols(); ++j) span.insert(deeper.column(j));

        const IntMatrix* pmap = nullptr;
        auto pit = pm.maps.find(n);
        if (pit != pm.maps.end()) pmap = &pit->second;

        for (std::size_t i = 0; i < group.presentation.generator_count(); ++i) {
            if (group.presentation.order(i) != 0) continue;  // torsion dies over Q
            IntVec lhs = um.apply(group.presentation.representative(i));
            IntVec rhs(c.size(), 0);
            if (target != einf.groups.end() && pmap) {
                const Subquotient& tq = target->second.presentation;
                for (std::size_t t = 0; t < tq.generator_count(); ++t) {
                    const Int& coeff = pmap->at(t, i);
                    if (coeff == 0) continue;
                    const IntVec& rep = tq.representative(t);
                    for (std::size_t x = 0; x < c.size(); ++x) rhs[x] += coeff * rep[x];
                }
            }
            IntVec delta(c.size());
            for (std::size_t x = 0; x < c.size(); ++x) delta[x] = lhs[x] - rhs[x];
            if (!span.contains(delta)) return false;
        }
    }
    return true;
}

}  // namespace fsseq
