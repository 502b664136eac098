#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fsseq/cap.hpp"
#include "fsseq/errors.hpp"
#include "helpers.hpp"

using namespace fsseq;

namespace {

FilteredComplex sigma235() {
    return FilteredComplex(Rat(0),
                           {{"a_alpha", 1, Rat(1, 120)}, {"a_beta", 5, Rat(49, 120)}}, {});
}

CapOperator nu_op() { return CapOperator(CohClass::nu(), {{"a_beta", "a_alpha", 2}}); }

}  // namespace

TEST_CASE("class degrees") {
    CHECK(class_degree(CohClass::nu()) == 3);
    CHECK(class_degree(CohClass::mu()) == 1);
    CHECK(class_degree(CohClass{2, 1}) == 7);
    CHECK_THROWS_AS(class_degree(CohClass{1, 2}), CapInvalid);
}

TEST_CASE("cap validation") {
    FilteredComplex c = sigma235();
    SUBCASE("zero operator of any class is valid") {
        for (CohClass cls : {CohClass::nu(), CohClass::mu(), CohClass{2, 0}, CohClass{1, 1}})
            CHECK(validate_cap(CapOperator(cls, {}), c).ok());
    }
    SUBCASE("degree-3 class dropping sf by 4 is valid") {
        CHECK(validate_cap(nu_op(), c).ok());
    }
    SUBCASE("degree-1 class cannot drop sf by 4") {
        CapOperator bad(CohClass::mu(), {{"a_beta", "a_alpha", 1}});
        CHECK_FALSE(validate_cap(bad, c).ok());
    }
    SUBCASE("unit class carries no entries") {
        CapOperator bad(CohClass::unit(), {{"a_beta", "a_alpha", 1}});
        CHECK_FALSE(validate_cap(bad, c).ok());
    }
    SUBCASE("chain-map law is enforced") {
        FilteredComplex pairc(Rat(0),
                              {{"x", 4, Rat(3, 4)},
                               {"y", 3, Rat(1, 4)},
                               {"u", 0, Rat(1, 2)},
                               {"v", -1, Rat(1, 3)}},
                              {{"x", "y", 1}});
        // drops sf by 4 on both entries, but dU != Ud: U(y) = v has no
        // matching boundary image
        CapOperator bad(CohClass::nu(), {{"y", "v", 1}});
        CHECK_FALSE(validate_cap(bad, pairc).ok());
        // the honest chain map x -> u, y -> v with du = v matches dx = y
        FilteredComplex pairc2(Rat(0),
                               {{"x", 4, Rat(3, 4)},
                                {"y", 3, Rat(1, 4)},
                                {"u", 0, Rat(1, 2)},
                                {"v", -1, Rat(1, 3)}},
                               {{"x", "y", 1}, {"u", "v", 1}});
        CapOperator good(CohClass::nu(), {{"x", "u", 1}, {"y", "v", 1}});
        CHECK(validate_cap(good, pairc2).ok());
    }
}

TEST_CASE("induced maps on the zero-boundary two-generator complex") {
    FilteredComplex c = sigma235();
    SUBCASE("graded: multiplication by 2 from degree 5 to degree 1") {
        GradedMapResult r = induced_graded_map(nu_op(), c);
        CHECK(r.degree_shift == 4);
        REQUIRE(r.maps.count(5));
        CHECK(r.maps.at(5).at(0, 0) == 2);
        CHECK(r.maps.at(1).rows() == 0);  // target degree -3 is empty
    }
    SUBCASE("degree-1 class induces zero") {
        GradedMapResult r = induced_graded_map(CapOperator(CohClass::mu(), {}), c);
        for (const auto& [n, m] : r.maps) CHECK(m.is_zero());
    }
    SUBCASE("page 1: multiplication by 2") {
        PageMapResult r = induced_page_map(nu_op(), c, 1);
        CHECK(r.maps.at(5).at(0, 0) == 2);
        CHECK(r.commutes_with_dk);
    }
    SUBCASE("HF: multiplication by 2 from residue 5 to residue 1") {
        HFMapResult r = induced_hf_map(nu_op(), c);
        CHECK(r.maps.at(5).at(0, 0) == 2);
        CHECK(r.maps.at(1).rows() == 1);
        CHECK(r.maps.at(1).is_zero());  // HF_1 -> HF_5 gets nothing
    }
    SUBCASE("unit class acts as the identity on HF") {
        HFMapResult r = induced_hf_map(CapOperator(CohClass::unit(), {}), c);
        CHECK(r.degree_shift == 0);
        CHECK(r.maps.at(1) == IntMatrix::identity(1));
        CHECK(r.maps.at(5) == IntMatrix::identity(1));
    }
    SUBCASE("zero operator induces zero everywhere") {
        CapOperator z(CohClass::nu(), {});
        for (const auto& [n, m] : induced_graded_map(z, c).maps) CHECK(m.is_zero());
        for (const auto& [j, m] : induced_hf_map(z, c).maps) CHECK(m.is_zero());
    }
}

TEST_CASE("composition bookkeeping") {
    FilteredComplex c = sigma235();
    SUBCASE("composing with the zero operator gives zero") {
        ComposedOperator r = compose(CapOperator(CohClass::nu(), {}), nu_op(), c);
        CHECK(r.entries.empty());
    }
    SUBCASE("two degree-3 operators compose to zero on two generators") {
        ComposedOperator r = compose(nu_op(), nu_op(), c);
        CHECK(r.entries.empty());
        CHECK(r.composed_shift == 8);
        CHECK(r.cup_class_shift == 7);  // the shift mismatch, never reconciled
    }
    SUBCASE("invalid operand is rejected") {
        CapOperator bad(CohClass::mu(), {{"a_beta", "a_alpha", 1}});
        CHECK_THROWS_AS(compose(bad, nu_op(), c), ComplexMismatch);
    }
}

TEST_CASE("operator addition merges entries of one class") {
    CapOperator a(CohClass::nu(), {{"a_beta", "a_alpha", 2}});
    CapOperator b(CohClass::nu(), {{"a_beta", "a_alpha", -2}});
    CHECK((a + b).entries().empty());
    CHECK_THROWS_AS(a + CapOperator(CohClass::mu(), {}), CapInvalid);
}

TEST_CASE("additivity of induced maps on generated data") {
    for (std::uint64_t seed = 5; seed < 9; ++seed) {
        SynthParams p;
        p.seed = seed;
        p.n_survivors = 2;
        p.n_pairs = 3;
        p.n_mixing_moves = 6;
        p.sf_span = 12;
        FilteredComplex c = random_complex(p);
        for (long k : {1L, stabilization_page(c)}) {
            CapOperator u1 = random_cap(c, CohClass::mu(), seed * 31 + 1);
            CapOperator u2 = random_cap(c, CohClass::mu(), seed * 31 + 2);
            CapOperator sum = u1 + u2;
            PageMapResult r1 = induced_page_map(u1, c, k);
            PageMapResult r2 = induced_page_map(u2, c, k);
            PageMapResult rs = induced_page_map(sum, c, k);
            // the page presentations are deterministic, so the three results
            // share coordinates; compare columns normalized in the target
            Page page = compute_page(c, k);
            for (const auto& [n, m] : rs.maps) {
                const IntMatrix& m1 = r1.maps.at(n);
                const IntMatrix& m2 = r2.maps.at(n);
                REQUIRE(m.rows() == m1.rows());
                if (m.rows() == 0) continue;
                long shift = rs.degree_shift;
                const Subquotient& tq = page.groups.at(n - shift).presentation;
                IntMatrix added = m1 + m2;
                for (std::size_t col = 0; col < m.cols(); ++col)
                    CHECK(m.column(col) == tq.normalize_coords(added.column(col)));
            }
        }
    }
}

TEST_CASE("e-infinity action matches the graded HF action over Q") {
    FilteredComplex c = sigma235();
    CHECK(einfinity_matches_graded_hf(nu_op(), c));
    CHECK(einfinity_matches_graded_hf(CapOperator(CohClass::mu(), {}), c));
}

TEST_CASE("page maps of generated chain maps are well-defined and commute") {
    for (std::uint64_t seed = 15; seed < 19; ++seed) {
        SynthParams p;
        p.seed = seed;
        p.n_survivors = 1;
        p.n_pairs = 3;
        p.n_mixing_moves = 5;
        p.sf_span = 16;
        FilteredComplex c = random_complex(p);
        for (CohClass cls : {CohClass::nu(), CohClass::mu()}) {
            CapOperator u = random_cap(c, cls, seed * 97);
            REQUIRE(validate_cap(u, c).ok());
            for (long k = 1; k <= stabilization_page(c); ++k) {
                PageMapResult r = induced_page_map(u, c, k);
                CHECK(r.commutes_with_dk);
            }
            CHECK(einfinity_matches_graded_hf(u, c));
        }
    }
}
