#include "fsseq/complex.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "fsseq/errors.hpp"

namespace fsseq {

AbelianInvariants HomologyTable::invariants_at(long key) const {
    auto it = groups.find(key);
    return it == groups.end() ? AbelianInvariants{} : it->second.invariants;
}

std::size_t HomologyTable::dim_q(long key) const { return invariants_at(key).free_rank; }

FilteredComplex::FilteredComplex(Rat band_r, std::vector<Generator> gens,
                                 std::vector<BoundaryEntry> boundary)
    : band_r_(std::move(band_r)), gens_(std::move(gens)), boundary_(std::move(boundary)) {
    band_r_.canonicalize();
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        gens_[i].cs.canonicalize();
        if (!index_.emplace(gens_[i].id, i).second)
            throw InvalidComplex("duplicate generator id '" + gens_[i].id + "'");
    }
    boundary_matrix_ = IntMatrix(gens_.size(), gens_.size());
    for (const auto& e : boundary_) {
        auto f = index_.find(e.from);
        auto t = index_.find(e.to);
        if (f == index_.end()) throw InvalidComplex("boundary references unknown id '" + e.from + "'");
        if (t == index_.end()) throw InvalidComplex("boundary references unknown id '" + e.to + "'");
        boundary_matrix_.add_to(t->second, f->second, e.coeff);
    }
}

bool FilteredComplex::has_generator(const std::string& id) const { return index_.count(id) > 0; }

std::size_t FilteredComplex::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw InvalidComplex("unknown generator id '" + id + "'");
    return it->second;
}

const Generator& FilteredComplex::generator(const std::string& id) const {
    return gens_[index_of(id)];
}

long FilteredComplex::min_sf() const {
    long m = 0;
    bool first = true;
    for (const auto& g : gens_) {
        if (first || g.sf < m) m = g.sf;
        first = false;
    }
    return m;
}

long FilteredComplex::max_sf() const {
    long m = 0;
    bool first = true;
    for (const auto& g : gens_) {
        if (first || g.sf > m) m = g.sf;
        first = false;
    }
    return m;
}

long FilteredComplex::sf_span() const { return gens_.empty() ? 0 : max_sf() - min_sf(); }

std::vector<std::size_t> FilteredComplex::generators_with_sf(long n) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].sf == n) out.push_back(i);
    return out;
}

std::vector<std::size_t> FilteredComplex::generators_with_residue(long j) const {
    long jj = ((j % 8) + 8) % 8;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].floer_degree() == jj) out.push_back(i);
    return out;
}

std::vector<std::size_t> FilteredComplex::filtration_support(long n) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].sf >= n && (gens_[i].sf - n) % 8 == 0) out.push_back(i);
    return out;
}

std::vector<long> FilteredComplex::occupied_degrees() const {
    std::set<long> s;
    for (const auto& g : gens_) s.insert(g.sf);
    return {s.begin(), s.end()};
}

Chain FilteredComplex::chain_from_ambient(const IntVec& v) const {
    Chain out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) out.emplace_back(gens_[i].id, v[i]);
    return out;
}

ValidationReport FilteredComplex::validate() const {
    ValidationReport report;
    for (const auto& g : gens_) {
        if (!(g.cs > band_r_ && g.cs < band_r_ + 1)) {
            std::ostringstream os;
            os << "generator '" << g.id << "': cs = " << g.cs.get_str()
               << " not strictly inside band (" << band_r_.get_str() << ", "
               << Rat(band_r_ + 1).get_str() << ")";
            report.issues.push_back(os.str());
        }
    }
    for (const auto& e : boundary_) {
        if (e.coeff == 0) {
            report.issues.push_back("boundary entry " + e.from + " -> " + e.to +
                                    ": zero coefficient");
            continue;
        }
        const Generator& a = gens_[index_.at(e.from)];
        const Generator& b = gens_[index_.at(e.to)];
        long diff = b.sf - (a.sf - 1);
        if (diff % 8 != 0) {
            report.issues.push_back("boundary entry " + e.from + " -> " + e.to +
                                    ": sf(from) - sf(to) not congruent to 1 mod 8");
            continue;
        }
        long k = diff / 8;
        if (k < 0) {
            report.issues.push_back("boundary entry " + e.from + " -> " + e.to +
                                    ": negative lift shift (sf(to) < sf(from) - 1 mod band)");
            continue;
        }
        if (k == 0 && !(a.cs > b.cs)) {
            std::ostringstream os;
            os << "boundary entry " << e.from << " -> " << e.to
               << ": k = 0 requires cs(from) > cs(to), got " << a.cs.get_str()
               << " <= " << b.cs.get_str();
            report.issues.push_back(os.str());
        }
    }
    if (!(boundary_matrix_ * boundary_matrix_).is_zero())
        report.issues.push_back("boundary squared is nonzero");
    return report;
}

void FilteredComplex::require_valid() const {
    ValidationReport r = validate();
    if (!r.ok()) throw InvalidComplex("invalid complex: " + r.issues.front());
}

ValidationReport validate_complex(const FilteredComplex& c) { return c.validate(); }

std::map<long, IntMatrix> boundary_component(const FilteredComplex& c, long k) {
    c.require_valid();
    std::map<long, IntMatrix> out;
    for (long n : c.occupied_degrees()) {
        auto cols = c.generators_with_sf(n);
        auto rows = c.generators_with_sf(n - 1 + 8 * k);
        out.emplace(n, c.full_boundary().submatrix(rows, cols));
    }
    return out;
}

namespace {

HomologyEntry homology_entry(const FilteredComplex& c, const std::vector<std::size_t>& ambient,
                             const IntMatrix& cycles, const IntMatrix& boundaries) {
    Subquotient q = Subquotient::build(cycles, boundaries);
    HomologyEntry e;
    e.invariants = q.invariants();
    for (std::size_t i = 0; i < q.generator_count(); ++i) {
        const IntVec& rep = q.representative(i);
        IntVec full(c.size(), 0);
        for (std::size_t t = 0; t < ambient.size(); ++t) full[ambient[t]] = rep[t];
        e.representatives.push_back(c.chain_from_ambient(full));
    }
    return e;
}

}  // namespace

HomologyTable graded_homology(const FilteredComplex& c) {
    c.require_valid();
    HomologyTable table;
    for (long n : c.occupied_degrees()) {
        auto cols = c.generators_with_sf(n);
        auto below = c.generators_with_sf(n - 1);
        auto above = c.generators_with_sf(n + 1);
        IntMatrix d_n = c.full_boundary().submatrix(below, cols);
        IntMatrix d_up = c.full_boundary().submatrix(cols, above);
        IntMatrix cycles = kernel_lattice(d_n);
        HomologyEntry e = homology_entry(c, cols, cycles, d_up);
        if (!e.invariants.trivial()) table.groups.emplace(n, std::move(e));
    }
    return table;
}

HomologyTable total_homology_mod8(const FilteredComplex& c) {
    c.require_valid();
    HomologyTable table;
    for (long j = 0; j < 8; ++j) {
        auto cols = c.generators_with_residue(j);
        if (cols.empty()) continue;
        auto below = c.generators_with_residue(j - 1);
        auto above = c.generators_with_residue(j + 1);
        IntMatrix d_j = c.full_boundary().submatrix(below, cols);
        IntMatrix d_up = c.full_boundary().submatrix(cols, above);
        IntMatrix cycles = kernel_lattice(d_j);
        HomologyEntry e = homology_entry(c, cols, cycles, d_up);
        if (!e.invariants.trivial()) table.groups.emplace(j, std::move(e));
    }
    return table;
}

FilteredComplex relift(const FilteredComplex& c) {
    c.require_valid();
    std::vector<Generator> gens = c.generators();
    for (auto& g : gens) {
        g.sf -= 8;
        g.cs += 1;
    }
    return FilteredComplex(c.band_r() + 1, std::move(gens), c.boundary());
}

}  // namespace fsseq
