#include <catch2/catch_amalgamated.hpp>

#include "qfock/genseries.hpp"

using namespace qfock;

namespace {
const Sector L0{0, 0};
const Sector L1{1, 0};
}  // namespace

TEST_CASE("vertex normalizations") {
  auto rep = verify_vertex_normalization();
  for (const auto& it : rep.items) {
    INFO(it.identity);
    CHECK(it.pass);
  }
}

TEST_CASE("dual of dual returns the original kind up to (-q)-powers") {
  const int cap = 8;
  // Phi*_eps(z) = (-q)^{i+(eps-1)/2} Phi_{-eps}(q^{-2}z): applying the formula
  // twice with opposite eps recovers Phi_eps up to an explicit scalar
  FockVector v = FockVector::vacuum(L0);
  for (int zp = -2; zp <= 2; ++zp) {
    FockVector direct = vertex_apply(VertexKind::PhiMinus, zp, v, cap);
    FockVector via = dual_vertex_apply(false, +1, zp, v, cap);
    // via = (-q)^{0} q^{-2 zp} direct
    CHECK(via == qq(-2 * zp) * direct);
  }
}

TEST_CASE("vertex relation system, degree <= 2") {
  std::vector<Sector> secs = {L0, L1, Sector{0, 1}, Sector{1, -1}};
  auto rep = verify_vertex_relations(2, secs);
  for (const auto& it : rep.items) {
    INFO(it.identity << " " << it.where);
    CHECK(it.pass);
  }
}

TEST_CASE("intertwiner property, degree <= 1") {
  std::vector<Sector> secs = {L0, L1};
  for (Gen g : {Gen::E0, Gen::E1, Gen::F0, Gen::F1, Gen::K0, Gen::K1}) {
    auto rep = verify_intertwiner(g, 1, secs);
    for (const auto& it : rep.items) {
      INFO(it.identity << " " << it.where);
      CHECK(it.pass);
    }
  }
}

TEST_CASE("generating series, N <= 2, degree <= 2") {
  auto rep = verify_genseries(2, 2);
  for (const auto& it : rep.items) {
    INFO(it.identity << " " << it.where << " " << it.witness);
    CHECK(it.pass);
  }
}

TEST_CASE("iplemma kernels, total degree <= 2") {
  std::vector<Sector> secs = {L1, Sector{0, 1}, L0, Sector{1, -1}};
  auto rep = verify_iplemma_kernels(2, secs);
  for (const auto& it : rep.items) {
    INFO(it.identity << " " << it.where);
    CHECK(it.pass);
  }
}
