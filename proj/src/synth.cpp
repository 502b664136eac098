#include "fsseq/synth.hpp"

#include <algorithm>
#include <map>

#include "fsseq/errors.hpp"
#include "fsseq/smith.hpp"

namespace fsseq {

FilteredComplex random_complex(const SynthParams& params) {
    if (params.sf_span < 1) throw InvalidInput("sf_span must be >= 1");
    if (params.coeff_bound < 1) throw InvalidInput("coeff_bound must be >= 1");
    SplitMix64 rng(params.seed);

    std::vector<Generator> gens;
    std::vector<BoundaryEntry> entries;
    struct Pair {
        std::size_t x, y;
        long k;
    };
    std::vector<Pair> pairs;

    for (std::size_t i = 0; i < params.n_survivors; ++i)
        gens.push_back({"s" + std::to_string(i), rng.range(0, params.sf_span), Rat(0)});

    for (std::size_t i = 0; i < params.n_pairs; ++i) {
        long sf_x = rng.range(1, params.sf_span);
        std::vector<long> feasible;
        for (long k = 0; sf_x - 1 + 8 * k <= params.sf_span; ++k) feasible.push_back(k);
        long k = feasible[rng.below(feasible.size())];
        std::size_t xi = gens.size();
        gens.push_back({"x" + std::to_string(i), sf_x, Rat(0)});
        gens.push_back({"y" + std::to_string(i), sf_x - 1 + 8 * k, Rat(0)});
        entries.push_back({gens[xi].id, gens[xi + 1].id, Int(rng.range(1, params.coeff_bound))});
        pairs.push_back({xi, xi + 1, k});
    }

    // distinct cs values in (0, 1) via a Fisher-Yates permutation of slots,
    // then per-pair swaps to honor cs(x) > cs(y) on k = 0 entries
    const std::size_t n = gens.size();
    std::vector<std::size_t> slot(n);
    for (std::size_t i = 0; i < n; ++i) slot[i] = i;
    for (std::size_t i = n; i > 1; --i) std::swap(slot[i - 1], slot[rng.below(i)]);
    for (std::size_t i = 0; i < n; ++i) gens[i].cs = Rat(static_cast<long>(slot[i]) + 1, n + 1);
    for (const auto& p : pairs)
        if (p.k == 0 && gens[p.x].cs < gens[p.y].cs) std::swap(gens[p.x].cs, gens[p.y].cs);

    FilteredComplex base(Rat(0), gens, entries);
    IntMatrix bd = base.full_boundary();

    // cs-upper-triangular unimodular mixing: add m * (lower-cs generator h)
    // to (higher-cs generator g), allowed when sf(h) = sf(g) mod 8 and
    // sf(h) >= sf(g); this preserves the filtration and every validity rule
    for (std::size_t move = 0; move < params.n_mixing_moves; ++move) {
        std::vector<std::pair<std::size_t, std::size_t>> candidates;
        for (std::size_t g = 0; g < n; ++g)
            for (std::size_t h = 0; h < n; ++h) {
                if (g == h) continue;
                if (((gens[h].sf - gens[g].sf) % 8) != 0) continue;
                if (gens[h].sf < gens[g].sf) continue;
                if (!(gens[h].cs < gens[g].cs)) continue;
                candidates.emplace_back(g, h);
            }
        if (candidates.empty()) break;
        auto [g, h] = candidates[rng.below(candidates.size())];
        Int m(rng.range(1, params.coeff_bound));
        if (rng.below(2) == 1) m = -m;
        // basis change e_g -> e_g + m e_h, conjugating the boundary
        for (std::size_t r = 0; r < n; ++r) bd.add_to(r, g, m * bd.at(r, h));
        for (std::size_t cidx = 0; cidx < n; ++cidx) bd.add_to(h, cidx, -m * bd.at(g, cidx));
    }

    std::vector<BoundaryEntry> mixed;
    for (const auto& [key, v] : bd.entries())
        mixed.push_back({gens[key.second].id, gens[key.first].id, v});
    FilteredComplex out(Rat(0), std::move(gens), std::move(mixed));
    out.require_valid();
    return out;
}

CapOperator random_cap(const FilteredComplex& c, const CohClass& cls, std::uint64_t seed,
                       long coeff_bound) {
    c.require_valid();
    if (!cls.valid()) throw CapInvalid("invalid cohomology class");
    if (cls.is_unit()) return CapOperator(cls, {});
    SplitMix64 rng(seed);
    const std::size_t n = c.size();
    long p = cls.degree();

    // unknowns: the degree-pattern entry slots, ordered by (from, to) index
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            long lift = c.generators()[b].sf - c.generators()[a].sf + p + 1;
            if (lift % 8 == 0 && lift >= 0) slots.emplace_back(a, b);
        }
    if (slots.empty()) return CapOperator(cls, {});

    // dU - Ud = 0 as a linear system over the slots, empty rows dropped
    const IntMatrix& bd = c.full_boundary();
    std::map<std::pair<std::size_t, std::size_t>, std::map<std::size_t, Int>> rows;
    for (std::size_t s = 0; s < slots.size(); ++s) {
        auto [a, b] = slots[s];
        for (std::size_t t = 0; t < n; ++t) {
            const Int& dv = bd.at(t, b);  // (dU)(t, a) picks up dv * u(b, a)
            if (dv != 0) rows[{t, a}][s] += dv;
        }
        for (std::size_t t = 0; t < n; ++t) {
            const Int& dv = bd.at(a, t);  // (Ud)(b, t) picks up u(b, a) * dv
            if (dv != 0) rows[{b, t}][s] -= dv;
        }
    }
    std::vector<std::map<std::size_t, Int>> nonzero_rows;
    for (auto& [key, row] : rows) {
        bool any = false;
        for (const auto& [s, v] : row) any = any || v != 0;
        if (any) nonzero_rows.push_back(row);
    }
    IntMatrix constraints(nonzero_rows.size(), slots.size());
    for (std::size_t r = 0; r < nonzero_rows.size(); ++r)
        for (const auto& [s, v] : nonzero_rows[r]) constraints.set(r, s, v);

    IntMatrix kernel = constraints.rows() == 0 ? IntMatrix::identity(slots.size())
                                               : kernel_lattice(constraints);

    for (int attempt = 0; attempt < 32; ++attempt) {
        IntVec combo(kernel.cols(), 0);
        for (auto& t : combo) t = rng.range(-1, 1);
        IntVec values = kernel.apply(combo);
        bool bounded = std::all_of(values.begin(), values.end(),
                                   [&](const Int& v) { return abs(v) <= coeff_bound; });
        if (!bounded) continue;
        std::vector<CapEntry> entries;
        for (std::size_t s = 0; s < slots.size(); ++s)
            if (values[s] != 0)
                entries.push_back({c.generators()[slots[s].first].id,
                                   c.generators()[slots[s].second].id, values[s]});
        return CapOperator(cls, std::move(entries));
    }
    return CapOperator(cls, {});
}

}  // namespace fsseq
