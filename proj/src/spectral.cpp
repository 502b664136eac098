#include "fsseq/spectral.hpp"

#include <algorithm>

#include "fsseq/errors.hpp"

namespace fsseq {

namespace {

long mod8(long n) { return ((n % 8) + 8) % 8; }

}  // namespace

std::size_t Page::gens_at(long n) const {
    auto it = groups.find(n);
    return it == groups.end() ? 0 : it->second.presentation.generator_count();
}

IntMatrix cycle_lattice(const FilteredComplex& c, long n, long k) {
    const std::size_t g = c.size();
    std::vector<std::size_t> support = c.filtration_support(n);
    if (support.empty()) return IntMatrix(g, 0);

    // constraint rows: coordinates of dx that must vanish, i.e. generators of
    // residue j-1 below filtration level n-1+8k
    std::vector<std::size_t> constraints;
    for (std::size_t i : c.generators_with_residue(n - 1))
        if (c.generators()[i].sf < n - 1 + 8 * k) constraints.push_back(i);

    IntMatrix restricted = c.full_boundary().submatrix(constraints, support);
    IntMatrix kernel = kernel_lattice(restricted);

    IntMatrix out(g, kernel.cols());
    for (const auto& [key, v] : kernel.entries()) out.set(support[key.first], key.second, v);
    return out;
}

IntMatrix boundary_denominator(const FilteredComplex& c, long n, long k) {
    long level = std::max(k - 1, 0L);
    IntMatrix survivors = cycle_lattice(c, n + 8, level);
    IntMatrix sources = cycle_lattice(c, n - 8 * (k - 1) + 1, level);
    return survivors.hstack(c.full_boundary() * sources);
}

Page compute_page(const FilteredComplex& c, long k) {
    c.require_valid();
    Page page;
    page.k = k;
    for (long n : c.occupied_degrees()) {
        IntMatrix num = cycle_lattice(c, n, k);
        if (num.cols() == 0) continue;
        IntMatrix den = boundary_denominator(c, n, k);
        Subquotient q = Subquotient::build(num, den);
        if (q.invariants().trivial()) continue;
        PageGroup group;
        group.invariants = q.invariants();
        group.dim_q = q.invariants().free_rank;
        for (std::size_t i = 0; i < q.generator_count(); ++i)
            group.representatives.push_back(c.chain_from_ambient(q.representative(i)));
        group.presentation = std::move(q);
        page.groups.emplace(n, std::move(group));
    }
    return page;
}

Page page_differential(const FilteredComplex& c, Page page) {
    const IntMatrix& bd = c.full_boundary();
    page.differentials.clear();
    for (const auto& [n, group] : page.groups) {
        long target_n = n + 8 * page.k - 1;
        auto target = page.groups.find(target_n);
        std::size_t source_gens = group.presentation.generator_count();
        if (target == page.groups.end()) {
            page.differentials.emplace(n, IntMatrix(0, source_gens));
            continue;
        }
        const Subquotient& tq = target->second.presentation;
        IntMatrix d(tq.generator_count(), source_gens);
        for (std::size_t i = 0; i < source_gens; ++i) {
            IntVec image = bd.apply(group.presentation.representative(i));
            auto coords = tq.reduce(image);
            if (!coords)
                throw RepresentativeMismatch("page " + std::to_string(page.k) +
                                             ", position n = " + std::to_string(n) +
                                             ": boundary of representative escapes the target "
                                             "subquotient");
            d.set_column(i, *coords);
        }
        page.differentials.emplace(n, std::move(d));
    }
    page.has_differentials = true;
    return page;
}

bool differentials_square_to_zero(const Page& page) {
    for (const auto& [n, d1] : page.differentials) {
        long mid = n + 8 * page.k - 1;
        auto d2_it = page.differentials.find(mid);
        if (d2_it == page.differentials.end()) continue;
        const IntMatrix& d2 = d2_it->second;
        if (d1.rows() == 0 || d2.rows() == 0) continue;
        IntMatrix prod = d2 * d1;
        long final_n = mid + 8 * page.k - 1;
        auto fin = page.groups.find(final_n);
        if (fin == page.groups.end()) {
            if (!prod.is_zero()) return false;
            continue;
        }
        const Subquotient& fq = fin->second.presentation;
        for (std::size_t j = 0; j < prod.cols(); ++j)
            if (!fq.coords_are_zero(prod.column(j))) return false;
    }
    return true;
}

AbelianInvariants page_homology_at(const Page& page, long n) {
    auto here = page.groups.find(n);
    if (here == page.groups.end()) return {};
    const Subquotient& q = here->second.presentation;
    const std::size_t m = q.generator_count();

    // kernel of the outgoing map, read modulo the target's relations
    IntMatrix kernel_gens = IntMatrix::identity(m);
    auto out_it = page.differentials.find(n);
    if (out_it != page.differentials.end() && out_it->second.rows() > 0) {
        long target_n = n + 8 * page.k - 1;
        const Subquotient& tq = page.groups.at(target_n).presentation;
        IntMatrix lifted = out_it->second.hstack(tq.relation_columns());
        IntMatrix full_kernel = kernel_lattice(lifted);
        IntMatrix projected(m, full_kernel.cols());
        for (const auto& [key, v] : full_kernel.entries())
            if (key.first < m) projected.set(key.first, key.second, v);
        kernel_gens = projected;
    }

    IntMatrix image(m, 0);
    auto in_it = page.differentials.find(n - (8 * page.k - 1));
    if (in_it != page.differentials.end() && in_it->second.rows() == m) image = in_it->second;

    return Subquotient::build(kernel_gens, image.hstack(q.relation_columns())).invariants();
}

long stabilization_page(const FilteredComplex& c) {
    long k = 1;
    while (8 * k - 1 <= c.sf_span()) ++k;
    return k;
}

bool ConvergenceReport::all_agree() const {
    return std::all_of(agree_over_q.begin(), agree_over_q.end(), [](bool b) { return b; });
}

ConvergenceReport e_infinity(const FilteredComplex& c) {
    ConvergenceReport report;
    report.stable_k = stabilization_page(c);
    report.e_infinity = page_differential(c, compute_page(c, report.stable_k));
    for (const auto& [n, group] : report.e_infinity.groups) {
        long j = mod8(n);
        auto [it, inserted] = report.assembled.groups.try_emplace(j);
        it->second.invariants = inserted
                                    ? group.invariants
                                    : direct_sum(it->second.invariants, group.invariants);
        it->second.representatives.insert(it->second.representatives.end(),
                                          group.representatives.begin(),
                                          group.representatives.end());
    }
    report.hf_direct = total_homology_mod8(c);
    for (long j = 0; j < 8; ++j) {
        std::size_t assembled_dim = 0;
        auto it = report.assembled.groups.find(j);
        if (it != report.assembled.groups.end()) assembled_dim = it->second.invariants.free_rank;
        report.agree_over_q[j] = assembled_dim == report.hf_direct.dim_q(j);
    }
    return report;
}

CollapseResult collapse_detect(const FilteredComplex& c) {
    CollapseResult result;
    long stable = stabilization_page(c);
    for (long k = 1; k <= stable; ++k) {
        Page page = page_differential(c, compute_page(c, k));
        for (const auto& [n, d] : page.differentials) {
            if (!d.is_zero()) {
                result.collapses = false;
                result.witness = CollapseWitness{k, n};
                return result;
            }
        }
    }
    // the collapse identity: graded groups assemble to HF over Q
    HomologyTable graded = graded_homology(c);
    HomologyTable hf = total_homology_mod8(c);
    std::array<std::size_t, 8> summed{};
    for (const auto& [n, entry] : graded.groups) summed[mod8(n)] += entry.invariants.free_rank;
    for (long j = 0; j < 8; ++j)
        if (summed[j] != hf.dim_q(j))
            throw WellDefinednessFailure(
                "collapse detected but graded groups do not assemble to HF at j = " +
                std::to_string(j));
    return result;
}

}  // namespace fsseq
