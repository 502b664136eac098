#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fsseq/errors.hpp"
#include "fsseq/smith.hpp"
#include "helpers.hpp"

using namespace fsseq;
using testutil::random_matrix;
using testutil::rational_rank;

namespace {

void check_decomposition(const IntMatrix& m) {
    SmithDecomposition s = smith_normal_form(m);
    CHECK(s.U * m * s.V == s.D);
    CHECK(s.U * s.Uinv == IntMatrix::identity(m.rows()));
    CHECK(s.Uinv * s.U == IntMatrix::identity(m.rows()));
    CHECK(s.V * s.Vinv == IntMatrix::identity(m.cols()));
    CHECK(s.Vinv * s.V == IntMatrix::identity(m.cols()));
    for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i) {
        CHECK(s.diagonal[i] >= 0);
        if (s.diagonal[i] != 0) CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
        if (s.diagonal[i] == 0) CHECK(s.diagonal[i + 1] == 0);
    }
    CHECK(s.rank() == rational_rank(m));
}

}  // namespace

TEST_CASE("smith normal form of the 1x1 zero matrix") {
    IntMatrix m(1, 1);
    SmithDecomposition s = smith_normal_form(m);
    CHECK(s.D == IntMatrix(1, 1));
    CHECK(s.U == IntMatrix::identity(1));
    CHECK(s.V == IntMatrix::identity(1));
    CHECK(s.rank() == 0);
}

TEST_CASE("smith normal form of the identity") {
    for (std::size_t n : {1u, 3u, 7u}) {
        SmithDecomposition s = smith_normal_form(IntMatrix::identity(n));
        CHECK(s.D == IntMatrix::identity(n));
        CHECK(s.rank() == n);
    }
}

TEST_CASE("smith normal form of [[2,4],[6,8]] has diagonal (2,4)") {
    IntMatrix m = IntMatrix::from_rows({{2, 4}, {6, 8}});
    SmithDecomposition s = smith_normal_form(m);
    REQUIRE(s.diagonal.size() == 2);
    CHECK(s.diagonal[0] == 2);
    CHECK(s.diagonal[1] == 4);
    check_decomposition(m);
}

TEST_CASE("kernel of a zero 2x3 matrix spans Z^3") {
    IntMatrix k = kernel_lattice(IntMatrix(2, 3));
    REQUIRE(k.cols() == 3);
    // the three columns form a unimodular basis of the full lattice
    SmithDecomposition s = smith_normal_form(k);
    CHECK(s.diagonal == IntVec{1, 1, 1});
}

TEST_CASE("kernel of the identity is empty") {
    CHECK(kernel_lattice(IntMatrix::identity(2)).cols() == 0);
}

TEST_CASE("kernel of [[2,-4]] is spanned by (2,1)") {
    IntMatrix k = kernel_lattice(IntMatrix::from_rows({{2, -4}}));
    REQUIRE(k.cols() == 1);
    IntVec col = k.column(0);
    bool plus = col == IntVec{2, 1};
    bool minus = col == IntVec{-2, -1};
    CHECK((plus || minus));
}

TEST_CASE("subquotient e1 / 2e1 is Z/2") {
    IntMatrix num = IntMatrix::from_columns(2, {{1, 0}});
    IntMatrix den = IntMatrix::from_columns(2, {{2, 0}});
    auto [inv, reps] = subquotient_invariants(num, den);
    CHECK(inv.free_rank == 0);
    CHECK(inv.torsion == IntVec{2});
    CHECK(reps.cols() == 1);
}

TEST_CASE("subquotient with empty denominator is the free lattice") {
    IntMatrix num = IntMatrix::from_columns(3, {{1, 0, 2}, {0, 1, 1}});
    auto [inv, reps] = subquotient_invariants(num, IntMatrix(3, 0));
    CHECK(inv.free_rank == 2);
    CHECK(inv.torsion.empty());
}

TEST_CASE("subquotient span{e1,e2} / span{e1+e2, 3e2} is Z/3") {
    IntMatrix num = IntMatrix::from_columns(2, {{1, 0}, {0, 1}});
    IntMatrix den = IntMatrix::from_columns(2, {{1, 1}, {0, 3}});
    auto [inv, reps] = subquotient_invariants(num, den);
    CHECK(inv.free_rank == 0);
    CHECK(inv.torsion == IntVec{3});
}

TEST_CASE("subquotient rejects a denominator outside the numerator span") {
    IntMatrix num = IntMatrix::from_columns(2, {{2, 0}});
    IntMatrix den = IntMatrix::from_columns(2, {{1, 0}});
    CHECK_THROWS_AS(subquotient_invariants(num, den), ContainmentViolation);
}

TEST_CASE("decomposition invariants and rank oracle on random matrices") {
    SplitMix64 rng(7);
    for (int i = 0; i < 60; ++i) check_decomposition(random_matrix(rng, 12, 9));
}

TEST_CASE("kernel columns are annihilated and count matches corank") {
    SplitMix64 rng(11);
    for (int i = 0; i < 40; ++i) {
        IntMatrix m = random_matrix(rng, 10, 9);
        IntMatrix k = kernel_lattice(m);
        CHECK(k.cols() == m.cols() - rational_rank(m));
        CHECK((m * k).is_zero());
        // saturation: the kernel basis extends to a basis of Z^cols, so its
        // own Smith diagonal is all ones
        if (k.cols() > 0) {
            SmithDecomposition s = smith_normal_form(k);
            for (const auto& d : s.diagonal) CHECK(d == 1);
        }
    }
}

TEST_CASE("subquotient invariants survive unimodular column operations") {
    SplitMix64 rng(13);
    for (int i = 0; i < 20; ++i) {
        IntMatrix num = random_matrix(rng, 6, 4);
        // denominator: numerator columns scaled, guaranteed inside the span
        IntMatrix den(num.rows(), num.cols());
        for (std::size_t j = 0; j < num.cols(); ++j) {
            IntVec col = num.column(j);
            Int scale(rng.range(1, 3));
            for (auto& v : col) v *= scale;
            den.set_column(j, col);
        }
        auto [inv, reps] = subquotient_invariants(num, den);

        // shear one argument by a random unimodular column move
        auto shear = [&](IntMatrix m) {
            if (m.cols() < 2) return m;
            std::size_t a = rng.below(m.cols()), b = rng.below(m.cols());
            if (a == b) return m;
            IntVec ca = m.column(a), cb = m.column(b);
            Int f(rng.range(-2, 2));
            for (std::size_t r = 0; r < m.rows(); ++r) ca[r] += f * cb[r];
            m.set_column(a, ca);
            return m;
        };
        auto [inv_n, r1] = subquotient_invariants(shear(num), den);
        auto [inv_d, r2] = subquotient_invariants(num, shear(den));
        CHECK(inv == inv_n);
        CHECK(inv == inv_d);
    }
}

TEST_CASE("solve_lattice finds exact integer solutions when they exist") {
    IntMatrix m = IntMatrix::from_rows({{2, 0}, {0, 3}});
    auto sol = solve_lattice(m, IntVec{4, 9});
    REQUIRE(sol.has_value());
    CHECK(*sol == IntVec{2, 3});
    CHECK_FALSE(solve_lattice(m, IntVec{1, 0}).has_value());
}

TEST_CASE("direct sum merges torsion into one divisibility chain") {
    AbelianInvariants a{1, {2}};
    AbelianInvariants b{0, {4}};
    AbelianInvariants s = direct_sum(a, b);
    CHECK(s.free_rank == 1);
    CHECK(s.torsion == IntVec{2, 4});
    AbelianInvariants t = direct_sum(AbelianInvariants{0, {2}}, AbelianInvariants{0, {3}});
    CHECK(t.torsion == IntVec{6});
}
