#include <random>

#include "coquasi/cocycle.hpp"
#include "doctest.h"
#include "oracles/oracles.hpp"

using namespace coquasi;

namespace {

TwoCochain random_normalized_cochain(std::mt19937& rng, const FiniteAbelianGroup& g, Residue modulus) {
  TwoCochain mu(g, modulus);
  std::uniform_int_distribution<Residue> d(0, modulus - 1);
  for (int a = 1; a < g.order(); ++a)
    for (int b = 1; b < g.order(); ++b) mu.set({a, b}, d(rng));
  return mu;
}

}  // namespace

TEST_CASE("phi_s values") {
  const auto phi = phi_s(3, 1);
  CHECK(phi.modulus() == 3);
  CHECK(phi(1, 1, 2) == 1);
  CHECK(phi(2, 2, 2) == 2);
  CHECK(phi(1, 1, 1) == 0);
  CHECK(phi(0, 2, 2) == 0);
  for (int n = 2; n <= 6; ++n)
    for (int s = 0; s < n; ++s) {
      const auto p = phi_s(n, s);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k) CHECK(p(i, j, k) == oracle::phi_s(n, s, i, j, k));
    }
}

TEST_CASE("cocycle identity agrees with the pointwise oracle") {
  for (int n = 2; n <= 8; ++n)
    for (int s = 0; s < n; ++s) {
      const auto p = phi_s(n, s);
      const bool ref = oracle::cocycle_ok(n, [&](int a, int b, int c) { return p(a, b, c); }, n);
      CHECK(ref);
      CHECK(is_3cocycle(p).ok == ref);
      CHECK(is_3cocycle(p, 4).ok == ref);
      CHECK(is_normalized(p).ok);
    }
}

TEST_CASE("a normalized non-cocycle is caught with a witness") {
  auto r = is_3cocycle(phi_s(2, 1));
  CHECK(r.ok);
  Associator phi = phi_s(3, 1);
  phi.set({1, 1, 1}, 1);
  r = is_3cocycle(phi);
  CHECK_FALSE(r.ok);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->condition == "cocycle_identity");
  CHECK(r.witness->args.size() == 4);
  CHECK(is_3cocycle(phi, 3).witness->args == r.witness->args);

  Associator unnormalized(FiniteAbelianGroup::cyclic(2), 2);
  unnormalized.set({1, 1, 0}, 1);
  CHECK_FALSE(is_normalized(unnormalized).ok);
}

TEST_CASE("coboundaries and the triviality dichotomy") {
  for (int n : {2, 3, 4, 5}) {
    CHECK_FALSE(is_coboundary(phi_s(n, 0)).empty());
    for (int s = 1; s < n; ++s) CHECK(is_coboundary(phi_s(n, s)).empty());
  }
  std::mt19937 rng(5);
  const auto g = FiniteAbelianGroup::parse("2,2");
  for (int trial = 0; trial < 10; ++trial) {
    const auto mu = random_normalized_cochain(rng, g, 4);
    const auto d = coboundary(mu);
    CHECK(is_3cocycle(d).ok);
    const auto sols = is_coboundary(d);
    REQUIRE_FALSE(sols.empty());
    const auto first = sols.enumerate_first(1).front();
    CHECK(coboundary(TwoCochain(g, 4, first)) == d);
  }
  Associator broken = phi_s(3, 0);
  broken.set({1, 1, 1}, 1);
  CHECK_THROWS_AS(is_coboundary(broken), NotACocycle);
}

TEST_CASE("R-form counts agree with exhaustive search") {
  // Z_2: every table, not just normalized ones.
  for (int s = 0; s < 2; ++s) {
    const auto ref = oracle::brute_rforms_full(2, s, 8);
    const auto got = enumerate_rforms(phi_s(2, s).lifted(8), 100);
    REQUIRE(got.size() == ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i)
      CHECK(std::vector<long long>(got[i].dense().begin(), got[i].dense().end()) == ref[i]);
  }
  // Z_3 over normalized tables; the Z_2 case shows normalization is forced.
  for (int s = 0; s < 3; ++s) {
    const auto ref = oracle::brute_rforms_normalized(3, s, 18);
    const auto got = enumerate_rforms(phi_s(3, s).lifted(18), 100);
    REQUIRE(got.size() == ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i)
      CHECK(std::vector<long long>(got[i].dense().begin(), got[i].dense().end()) == ref[i]);
  }
  CHECK(rform_solutions(phi_s(2, 0).lifted(8)).count() == 2);
  CHECK(rform_solutions(phi_s(3, 0).lifted(18)).count() == 1);

  const auto k = FiniteAbelianGroup::parse("2,2");
  const Associator trivial(k, default_modulus(k));
  CHECK(rform_solutions(trivial).count() == oracle::count_bicharacters_z2z2(default_modulus(k)));
  CHECK(rform_solutions(trivial).count() == 8);
}

TEST_CASE("check_rform reports the failing identity") {
  RForm omega(FiniteAbelianGroup::cyclic(3), 18);
  omega.set({1, 1}, 6);
  const auto r = check_rform(phi_s(3, 0).lifted(18), omega);
  CHECK_FALSE(r.ok);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->condition.rfind("rform_", 0) == 0);

  RForm sign(FiniteAbelianGroup::cyclic(2), 2);
  sign.set({1, 1}, 1);
  CHECK(check_rform(phi_s(2, 0), sign).ok);
  CHECK_FALSE(check_rform(phi_s(2, 1), sign).ok);
}

TEST_CASE("every enumerated R-form satisfies the pointwise identities") {
  for (int n = 2; n <= 5; ++n) {
    const Residue modulus = 2LL * n * n;
    const auto phi = phi_s(n, 0).lifted(modulus);
    for (const auto& r : enumerate_rforms(phi, 100)) {
      CHECK(oracle::rform_ok(n, [&](int a, int b, int c) { return phi(a, b, c); },
                             [&](int a, int b) { return r(a, b); }, modulus));
      CHECK(check_rform(phi, r).ok);
    }
  }
}

TEST_CASE("twisting preserves the R-form identities") {
  std::mt19937 rng(17);
  for (int n = 2; n <= 4; ++n) {
    const FiniteAbelianGroup g = FiniteAbelianGroup::cyclic(n);
    const Residue modulus = 2LL * n * n;
    const auto phi = phi_s(n, 0).lifted(modulus);
    auto forms = enumerate_rforms(phi, 100);
    RForm wrong = forms.front();
    wrong.set({1, 1}, wrong(1, 1) + 1);
    forms.push_back(wrong);
    for (int trial = 0; trial < 20; ++trial) {
      const auto mu = random_normalized_cochain(rng, g, modulus);
      for (const auto& r : forms) {
        const auto [phi2, r2] = twist_pair(phi, r, mu);
        CHECK(check_rform(phi2, r2).ok == check_rform(phi, r).ok);
        CHECK(is_3cocycle(phi2).ok);
      }
      CHECK_FALSE(is_coboundary(coboundary(mu)).empty());
    }
  }
}

TEST_CASE("ramification conditions") {
  const std::vector<ElemIndex> support{1};
  CHECK(check_phi_ram_conditions(phi_s(2, 0), support).ok);
  CHECK(check_phi_ram_conditions(phi_s(2, 1), support).ok);
  CHECK(check_phi_ram_conditions(phi_s(2, 1), support, PhiRamForm::InverseRatio).ok);
  const auto r = check_phi_ram_conditions(phi_s(3, 1), support);
  if (!r.ok) CHECK(r.witness->condition.rfind("phi_ram_", 0) == 0);
}

TEST_CASE("product associators") {
  const std::vector<std::pair<int, int>> f{{2, 1}, {4, 3}};
  const auto phi = product_associator(f);
  CHECK(phi.group().order() == 8);
  CHECK(phi.modulus() == 4);
  CHECK(is_3cocycle(phi).ok);
  CHECK(is_normalized(phi).ok);
  CHECK(is_coboundary(phi).empty());
}
