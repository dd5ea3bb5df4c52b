// Acceptance suite: one PASS/FAIL line per criterion, exact comparisons only.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cli.hpp"
#include "coquasi/classify.hpp"
#include "coquasi/cocycle.hpp"
#include "coquasi/majid.hpp"
#include "coquasi/quiver.hpp"
#include "oracles/oracles.hpp"

using namespace coquasi;

namespace {

unsigned jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

Outcome cocycle_suite() {
  Outcome o;
  int cases = 0;
  for (int n = 2; n <= 8; ++n)
    for (int s = 0; s < n; ++s) {
      const auto phi = phi_s(n, s);
      ++cases;
      if (!is_3cocycle(phi, jobs()).ok) o.fail("is_3cocycle false at n=" + std::to_string(n) + " s=" + std::to_string(s));
      if (!oracle::cocycle_ok(n, [&](int a, int b, int c) { return phi(a, b, c); }, n))
        o.fail("oracle disagrees at n=" + std::to_string(n));
    }
  if (o.ok) o.detail = std::to_string(cases) + " associators";
  return o;
}

Outcome triviality() {
  Outcome o;
  for (int n = 2; n <= 6; ++n)
    for (int s = 0; s < n; ++s) {
      const bool trivial = !is_coboundary(phi_s(n, s)).empty();
      if (trivial != (s == 0)) o.fail("n=" + std::to_string(n) + " s=" + std::to_string(s));
    }
  if (o.ok) o.detail = "coboundary iff s = 0 for n = 2..6";
  return o;
}

struct Pair {
  int n;
  Associator phi;
  RForm r;
};

std::vector<Pair> g_pairs;

Outcome forcing() {
  Outcome o;
  ClassifyOptions opts;
  opts.max_len = 3;
  opts.jobs = jobs();
  for (int n = 2; n <= 8; ++n) {
    const auto g = FiniteAbelianGroup::cyclic(n);
    const auto rep = classify_zn(n, RamificationDatum::parse(g, "1:1"), opts);
    for (const auto& e : rep.results) {
      const int s = e.s.at(0);
      const long expected = s != 0 ? 0 : (n % 2 == 0 ? 2 : 1);
      if (e.rform_count != expected)
        o.fail("n=" + std::to_string(n) + " s=" + std::to_string(s) + " count " + e.rform_count.get_str());
      if (s == 0) {
        const auto phi = phi_s(n, 0).lifted(rep.modulus);
        for (const auto& r : e.representatives) g_pairs.push_back({n, phi, r});
      }
    }
    if (!rep.forced_s_zero) o.fail("forced_s_zero false at n=" + std::to_string(n));
  }
  if (o.ok) o.detail = std::to_string(g_pairs.size()) + " structures over n = 2..8";
  return o;
}

/// Runs the verifiers in order and stops at the first failure.
std::optional<Witness> first_failure(const MajidStructure& s, int L) {
  const std::vector<std::function<VerifyReport()>> checks{
      [&] { return verify_bimodule_axioms(s, jobs()); },
      [&] { return verify_cqt_degree0(s); },
      [&] { return verify_cotriangular(s, L); },
      [&] { return verify_r_naturality(s, L, jobs()); },
      [&] { return verify_quasi_associativity(s, L, jobs()); },
      [&] { return verify_cqt_paths(s, L, jobs()); },
  };
  for (const auto& c : checks) {
    const auto rep = c();
    if (!rep.result.ok) return rep.result.witness.value_or(Witness{rep.check, {}, "no witness"});
  }
  return std::nullopt;
}

/// Independent judgement of whether a modified pair is still a valid structure on Q(Z_n, {g:1}).
bool still_valid(int n, const Associator& phi, const RForm& r) {
  const Residue m = phi.modulus();
  auto p = [&](int a, int b, int c) { return phi(a, b, c); };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (phi(0, a, b) != 0 || phi(a, 0, b) != 0 || phi(a, b, 0) != 0) return false;
  return oracle::cocycle_ok(n, p, m) && oracle::rform_ok(n, p, [&](int a, int b) { return r(a, b); }, m) &&
         check_phi_ram_conditions(phi, std::vector<ElemIndex>{1}).ok;
}

Outcome converse() {
  Outcome o;
  const int L = 3;
  std::size_t corruptions = 0, relabelings = 0;
  std::vector<std::string> undetected;
  for (const auto& [n, phi, r] : g_pairs) {
    const auto g = FiniteAbelianGroup::cyclic(n);
    const auto q = build_quiver(g, RamificationDatum::parse(g, "1:1"));
    const auto s = MajidStructure::create(q, phi, r, L, jobs());
    if (!all_ok(verify_all(s, L, jobs()))) o.fail("verification failed for a valid pair at n=" + std::to_string(n));
    // Every entry, shifted by every nonzero exponent.
    for (Residue delta = 1; delta < phi.modulus(); ++delta) {
      const std::string tag = "n=" + std::to_string(n) + " +" + std::to_string(delta);
      for (std::size_t i = 0; i < phi.size(); ++i) {
        auto bad = phi;
        bad.set(bad.unoffset(i), bad.dense()[i] + delta);
        ++corruptions;
        const auto w = first_failure(MajidStructure::unchecked(q, bad, r, L), L);
        if (!w || w->args.empty()) {
          if (still_valid(n, bad, r)) ++relabelings;
          else undetected.push_back(tag + " phi#" + std::to_string(i));
        }
      }
      for (std::size_t i = 0; i < r.size(); ++i) {
        auto bad = r;
        bad.set(bad.unoffset(i), bad.dense()[i] + delta);
        ++corruptions;
        const auto w = first_failure(MajidStructure::unchecked(q, phi, bad, L), L);
        if (!w || w->args.empty()) {
          if (still_valid(n, phi, bad)) ++relabelings;
          else undetected.push_back(tag + " R#" + std::to_string(i));
        }
      }
    }
  }
  if (!undetected.empty()) {
    std::string list;
    for (std::size_t i = 0; i < undetected.size() && i < 6; ++i) list += " " + undetected[i];
    o.fail(std::to_string(undetected.size()) + "/" + std::to_string(corruptions) + " corruptions undetected:" + list);
  }
  if (o.ok)
    o.detail = std::to_string(g_pairs.size()) + " pairs pass; " + std::to_string(corruptions - relabelings) +
               " corruptions caught with a witness, " + std::to_string(relabelings) + " land on another valid pair";
  return o;
}

Outcome taft() {
  Outcome o;
  for (int n : {2, 4, 6, 8, 10}) {
    const auto t = taft_check(n, 3);
    if (!t.alpha_squared_zero || !t.anticommutes) o.fail("relations fail at n=" + std::to_string(n));
    if (!t.control_fails) o.fail("control did not fail at n=" + std::to_string(n));
  }
  if (o.ok) o.detail = "n = 2,4,6,8,10; control gives " + taft_check(2, 3).control_alpha_squared;
  return o;
}

Outcome obstruction() {
  Outcome o;
  for (const char* name : {"S3", "Q8"})
    if (!nonabelian_obstruction(MultiplicationTable::builtin(name))) o.fail(std::string("no witness for ") + name);
  int abelian = 0;
  for (const char* name : {"Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "2,2", "2,4", "2,2,2"}) {
    ++abelian;
    if (nonabelian_obstruction(MultiplicationTable::builtin(name))) o.fail(std::string("witness for abelian ") + name);
  }
  if (o.ok) o.detail = "S3 and Q8 obstructed, " + std::to_string(abelian) + " abelian tables clear";
  return o;
}

TwoCochain normalized_cochain(std::mt19937_64& rng, const FiniteAbelianGroup& g, Residue modulus) {
  TwoCochain mu(g, modulus);
  std::uniform_int_distribution<Residue> d(0, modulus - 1);
  for (int a = 1; a < g.order(); ++a)
    for (int b = 1; b < g.order(); ++b) mu.set({a, b}, d(rng));
  return mu;
}

Outcome twist() {
  Outcome o;
  std::mt19937_64 rng(20240601);
  std::size_t comparisons = 0;
  for (int n = 2; n <= 4; ++n) {
    const auto g = FiniteAbelianGroup::cyclic(n);
    const Residue modulus = default_modulus(g);
    std::vector<std::pair<Associator, RForm>> pairs;
    for (int s = 0; s < n; ++s) {
      const auto phi = phi_s(n, s).lifted(modulus);
      for (const auto& r : enumerate_rforms(phi, 100)) {
        pairs.emplace_back(phi, r);
        RForm bad = r;
        bad.set({1, 1}, r(1, 1) + 1);
        pairs.emplace_back(phi, bad);
      }
      pairs.emplace_back(phi, RForm(g, modulus));
    }
    for (int k = 0; k < 100; ++k) {
      const auto mu = normalized_cochain(rng, g, modulus);
      const auto d = coboundary(mu);
      const auto sols = is_coboundary(d);
      if (sols.empty() || coboundary(TwoCochain(g, modulus, sols.enumerate_first(1).front())) != d)
        o.fail("d(mu) not recognized at n=" + std::to_string(n));
      for (const auto& [phi, r] : pairs) {
        const auto [phi2, r2] = twist_pair(phi, r, mu);
        ++comparisons;
        if (check_rform(phi2, r2).ok != check_rform(phi, r).ok) o.fail("twist changed check_rform at n=" + std::to_string(n));
      }
    }
  }
  if (o.ok) o.detail = std::to_string(comparisons) + " twisted pairs, 300 cochains";
  return o;
}

Path z_path(int base, int length) {
  Path p{base, {}};
  for (int i = 0, x = base; i < length; ++i, x = (x + 1) % 2) p.arrows.push_back(Arrow{x, 1, 0});
  return p;
}

Outcome oracle_shuffle() {
  Outcome o;
  const auto g = FiniteAbelianGroup::cyclic(2);
  const auto q = build_quiver(g, RamificationDatum::parse(g, "1:1"));
  std::size_t pairs = 0;
  std::vector<MajidStructure> structures;
  for (int sign = 0; sign < 2; ++sign) {
    RForm r(g, 2);
    r.set({1, 1}, sign);
    structures.push_back(MajidStructure::create(q, phi_s(2, 0), r, 2));
    structures.push_back(MajidStructure::unchecked(q, phi_s(2, 1), r, 2));
  }
  for (const auto& s : structures) {
    for (const auto& la : q.paths_up_to(2))
      for (const auto& a : la)
        for (const auto& lb : q.paths_up_to(2 - a.length()))
          for (const auto& b : lb) {
            ++pairs;
            const auto got = s.shuffle_product(a, b);
            const auto ref = oracle::shuffle_z(
                2, [&](int x, int y, int z) { return s.phi()(x, y, z); }, [&](int x, int y) { return s.rform()(x, y); },
                s.modulus(), {a.base, a.length()}, {b.base, b.length()});
            bool same = got.terms().size() == ref.size();
            for (const auto& [p, c] : ref)
              same = same && got.coefficient(z_path(p.base, p.length)) == exact::Cyclo::from_rational(1, static_cast<long>(c));
            if (!same) o.fail(q.format(a) + " * " + q.format(b) + " = " + got.to_string(q));
          }
  }
  if (o.ok) o.detail = std::to_string(pairs) + " basis pairs over 4 table choices";
  return o;
}

Outcome coalgebra() {
  Outcome o;
  std::size_t paths = 0;
  const std::vector<std::pair<std::string, std::string>> quivers{
      {"2", "1:1"}, {"2", "1:2"}, {"2", "0:1;1:1"}, {"3", "1:1;2:1"}, {"4", "1:1"},
      {"4", "1:2"}, {"2,2", "1,0:1;0,1:1"}, {"8", "1:1"}, {"2", "1:4"}};
  for (const auto& [gs, rs] : quivers) {
    const auto g = FiniteAbelianGroup::parse(gs);
    const auto q = build_quiver(g, RamificationDatum::parse(g, rs));
    if (q.arrows().size() > 8) o.fail("quiver too large");
    for (const auto& level : q.paths_up_to(4))
      for (const auto& p : level) {
        ++paths;
        const auto delta = coproduct(q, p);
        std::multiset<std::vector<Path>> lhs, rhs;
        std::vector<Path> left, right;
        for (const auto& [a, b] : delta) {
          for (const auto& [a1, a2] : coproduct(q, a)) lhs.insert({a1, a2, b});
          for (const auto& [b1, b2] : coproduct(q, b)) rhs.insert({a, b1, b2});
          if (counit(a)) left.push_back(b);
          if (counit(b)) right.push_back(a);
        }
        if (lhs != rhs) o.fail("coassociativity fails at " + q.format(p));
        if (left != std::vector<Path>{p} || right != std::vector<Path>{p}) o.fail("counit fails at " + q.format(p));
      }
  }
  if (o.ok) o.detail = std::to_string(paths) + " paths on " + std::to_string(quivers.size()) + " quivers";
  return o;
}

Outcome determinism() {
  Outcome o;
  const std::vector<std::vector<std::string>> invocations{
      {"quiver", "build", "--n", "3", "--ram", "1:1", "--max-len", "3"},
      {"cocycle", "check", "--n", "4", "--s", "1", "--ram", "1:1"},
      {"cocycle", "coboundary", "--n", "3", "--s", "0"},
      {"rform", "enumerate", "--group", "2,2"},
      {"verify", "--n", "4", "--ram", "1:1", "--max-len", "3"},
      {"classify", "zn", "--n", "6"},
      {"classify", "zn", "--n", "5", "--jobs", "4", "--format", "csv"},
      {"classify", "abelian", "--group", "2,2", "--ram", "1,0:1;0,1:1"},
      {"taft", "--n", "6"},
      {"obstruct", "Q8"},
  };
  for (const auto& args : invocations) {
    std::ostringstream a, b, ea, eb;
    const int ca = cli::run(args, a, ea), cb = cli::run(args, b, eb);
    if (ca != cb || a.str() != b.str() || a.str().empty()) o.fail("differs: " + args[0] + " " + args[1]);
  }
  if (o.ok) o.detail = std::to_string(invocations.size()) + " invocations byte-identical";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"cocycle suite", cocycle_suite},   {"triviality dichotomy", triviality}, {"forcing s = 0", forcing},
      {"converse and negative controls", converse}, {"Taft relations", taft},       {"nonabelian obstruction", obstruction},
      {"twist consistency", twist},       {"oracle equivalence", oracle_shuffle}, {"coalgebra suite", coalgebra},
      {"determinism", determinism},
  };
  int failures = 0, index = 0;
  for (const auto& [name, fn] : criteria) {
    ++index;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.ok) ++failures;
    std::printf("%-4s %2d %-32s %7.2fs  %s\n", o.ok ? "PASS" : "FAIL", index, name.c_str(), secs, o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
