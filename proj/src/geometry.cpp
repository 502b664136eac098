#include "fsseq/geometry.hpp"

#include "fsseq/errors.hpp"

namespace fsseq {

namespace {

Int rat_floor(const Rat& q) {
    Int out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

}  // namespace

Rat aps_index(const Rat& p1_integral, const FlatConnectionData& alpha,
              const FlatConnectionData& beta) {
    Rat out = -2 * p1_integral;
    out -= (Rat(beta.h) + beta.rho0) / 2;
    out += (Rat(-alpha.h) + alpha.rho0) / 2;
    out.canonicalize();
    return out;
}

Rat lift_cs(const Rat& cs_mod1, const Rat& r) {
    Rat gap = r - cs_mod1;
    gap.canonicalize();
    if (gap.get_den() == 1)
        throw NotRegularValue("cs = " + cs_mod1.get_str() +
                              " is congruent to r = " + r.get_str() + " mod 1");
    Rat out = cs_mod1 + Rat(rat_floor(gap)) + 1;
    out.canonicalize();
    return out;
}

Rat trajectory_energy(const Generator& a, const Generator& b, long shift_k) {
    Rat out = a.cs - b.cs + shift_k;
    out.canonicalize();
    return out;
}

long bubble_budget(const Generator& a, const Generator& b, long shift_k) {
    return static_cast<long>(rat_floor(trajectory_energy(a, b, shift_k)).get_si());
}

long chain_length_bound(long index, long divisor_degree) {
    if (index < 1) throw InvalidInput("chain_length_bound requires index >= 1");
    if (divisor_degree < 0) throw InvalidInput("chain_length_bound requires divisor_degree >= 0");
    return index - divisor_degree;
}

}  // namespace fsseq
