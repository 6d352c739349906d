#include <catch2/catch_amalgamated.hpp>

#include "qfock/fock.hpp"

using namespace qfock;

namespace {
const Sector L0{0, 0};
const Sector L1{1, 0};
RatQT C(long n) { return RatQT::integer(Int(n)); }

FockVector vac(const Sector& s) { return FockVector::vacuum(s); }
}  // namespace

TEST_CASE("heisenberg action") {
  FockVector v = heisenberg_apply(-1, vac(L0));
  CHECK(v == FockVector::term(Partition{1}, L0, C(1)));

  FockVector w = heisenberg_apply(1, heisenberg_apply(-1, vac(L0)));
  CHECK(w == heis_bracket(1) * vac(L0));
  CHECK(heis_bracket(1) == C(1) / (qq(1) + qq(-1)));

  CHECK(heisenberg_apply(2, vac(L0)).is_zero());
  CHECK_THROWS_AS(heisenberg_apply(0, vac(L0)), std::invalid_argument);
}

TEST_CASE("sector operators") {
  // K|L1> = q|L1>
  CHECK(k_power_apply(1, vac(L1)) == qq(1) * vac(L1));
  // partial e^alpha |L0> = 2 e^alpha |L0>
  FockVector ea = half_root_shift(2, vac(L0));
  CHECK(ea == vac(Sector{0, 1}));
  CHECK(partial_apply(ea) == C(2) * ea);
  // e^{alpha/2}|L0> = |L1>-sector vacuum at m=0
  CHECK(half_root_shift(1, vac(L0)) == vac(L1));
}

TEST_CASE("loop generator coefficients on the vacuum") {
  const int cap = 6;
  CHECK(loop_apply(0, +1, vac(L0), cap).is_zero());
  CHECK(loop_apply(-1, +1, vac(L0), cap) == vac(Sector{0, 1}));
  FockVector x2 = loop_apply(-2, +1, vac(L0), cap);
  CHECK(x2 == FockVector::term(Partition{1}, Sector{0, 1},
                               uq(-1) * (qq(1) + qq(-1))));
}

TEST_CASE("chevalley examples") {
  const int cap = 6;
  CHECK(chevalley_apply(Gen::E1, vac(L0), cap).is_zero());
  CHECK(chevalley_apply(Gen::E0, vac(L0), cap).is_zero());
  CHECK(chevalley_apply(Gen::E1, vac(L1), cap).is_zero());
  CHECK(chevalley_apply(Gen::E0, vac(L1), cap).is_zero());
  CHECK(chevalley_apply(Gen::K1, vac(L0), cap) == vac(L0));
  FockVector f1 = chevalley_apply(Gen::F1, vac(L1), cap);
  CHECK(f1 == vac(Sector{1, -1}));
  CHECK(f1.terms().begin()->first.s.h() == -1);
  // F0 F1 |L1> = q^{1/2}(q+q^-1) a_{-1} |L1>  (hand-derived oracle)
  FockVector u = chevalley_apply(Gen::F0, f1, cap);
  CHECK(u == FockVector::term(Partition{1}, L1, uq(1) * (qq(1) + qq(-1))));
  // F1 F0 |L0> = -q^{5/2}(q+q^-1) a_{-1}|L0>  (hand-derived oracle)
  FockVector w = chevalley_apply(Gen::F1, chevalley_apply(Gen::F0, vac(L0), cap), cap);
  CHECK(w == FockVector::term(Partition{1}, L0, -uq(5) * (qq(1) + qq(-1))));
}

TEST_CASE("divided powers") {
  const int cap = 8;
  CHECK(divided_power_apply(Gen::E1, 1, vac(L1), cap) ==
        chevalley_apply(Gen::E1, vac(L1), cap));
  CHECK(divided_power_apply(Gen::E1, 2, vac(L0), cap).is_zero());
  FockVector d2 = divided_power_loop(-1, +1, 2, vac(L0), cap);
  CHECK(d2 == uquantum_factorial(2).inverse() *
                  loop_apply(-1, +1, loop_apply(-1, +1, vac(L0), cap), cap));
  CHECK(lattice_membership(d2).member);
}

TEST_CASE("degree cap failure is loud") {
  CHECK_THROWS_AS(loop_apply(-5, +1, vac(L0), 2), TruncationError);
}

TEST_CASE("normalized vacua") {
  CHECK(normalized_vacuum(Sector{0, 1}) == qq(2) * vac(Sector{0, 1}));  // v_{1,0} = q^2 e^a|L0>
  CHECK(normalized_vacuum(L1) == vac(L1));
  CHECK(normalized_vacuum(L0) == vac(L0));
}

TEST_CASE("macd_vector families") {
  for (const Sector& s : {L1, Sector{0, 1}, L0, Sector{1, -1}}) {
    CHECK(macd_vector(FockFamily::Ptilde, Partition{}, s) == normalized_vacuum(s));
    CHECK(macd_vector(FockFamily::Qtilde, Partition{}, s) == normalized_vacuum(s));
    // Qtilde = b(q^4,q^2) Ptilde
    for (const auto& lam : partitions_of(3)) {
      RatQT b42 = b_c_scalars(lam).b.subst(8, 4, 0, 0);
      CHECK(macd_vector(FockFamily::Qtilde, lam, s) ==
            b42 * macd_vector(FockFamily::Ptilde, lam, s));
    }
  }
  // stilde_(1) is proportional to a_{-1} v_{m,i}
  FockVector st = macd_vector(FockFamily::stilde, Partition{1}, L1);
  CHECK(st == FockVector::term(Partition{1}, L1, uq(1) * (qq(1) + qq(-1))));
}

TEST_CASE("lattice membership") {
  for (const auto& lam : partitions_of(3)) {
    CHECK(lattice_membership(macd_vector(FockFamily::Jstartilde, lam, L1)).member);
  }
  FockVector bad = (C(1) / (C(1) + qq(1))) *
                   macd_vector(FockFamily::Jstartilde, Partition{1}, L1);
  CHECK(!lattice_membership(bad).member);
}

TEST_CASE("q-Vandermonde expansion") {
  auto r2 = qvandermonde_expand(2);
  CHECK(r2.pass);
  CHECK(r2.permutation_terms == 2);
  CHECK(r2.repeated_terms == 0);
  auto r3 = qvandermonde_expand(3);
  CHECK(r3.pass);
  CHECK(r3.permutation_terms == 6);
  CHECK(r3.length_sum == qq(-3) * uquantum_factorial(3));
  CHECK(qvandermonde_expand(4).pass);
}

TEST_CASE("Heisenberg relations, degree <= 6") {
  auto rep = verify_heisenberg(6, {L0, L1});
  CHECK(rep.pass);
}

TEST_CASE("Chevalley and Serre relations, degree <= 3, |m| <= 1") {
  std::vector<Sector> secs = {L0, L1, Sector{0, 1}, Sector{1, 1}, Sector{0, -1}, Sector{1, -1}};
  auto rep = verify_chevalley_serre(3, secs);
  for (const auto& it : rep.items) {
    INFO(it.identity << " at " << it.where);
    CHECK(it.pass);
  }
}

TEST_CASE("Drinfeld relations, degree <= 3, |m| <= 1") {
  std::vector<Sector> secs = {L0, L1, Sector{0, 1}, Sector{1, -1}};
  auto rep = verify_drinfeld(3, secs);
  for (const auto& it : rep.items) {
    INFO(it.identity << " at " << it.where);
    CHECK(it.pass);
  }
}
