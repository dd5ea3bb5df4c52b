#include "coquasi/cocycle.hpp"

#include <numeric>
#include <string>

#include "coquasi/parallel.hpp"

namespace coquasi {

using exact::BigInt;
using exact::IntMatrix;
using exact::ModSolutionSet;

namespace {

std::string residue_str(Residue v, Residue n) { return std::to_string(v) + " mod " + std::to_string(n); }

Witness make_witness(const FiniteAbelianGroup& g, std::string condition,
                     std::initializer_list<ElemIndex> args, std::string detail) {
  Witness w{std::move(condition), {}, std::move(detail)};
  for (ElemIndex a : args) w.args.push_back(g.format(a));
  return w;
}

void require_same(const FiniteAbelianGroup& a, Residue na, const FiniteAbelianGroup& b, Residue nb) {
  if (!(a == b)) throw GroupMismatch("tables live on different groups");
  if (na != nb) throw GroupMismatch("tables use different moduli");
}

}  // namespace

Residue default_modulus(const FiniteAbelianGroup& group) {
  const Residue l = group.exponent();
  return 2 * l * l;
}

Associator phi_s(int n, int s) {
  if (n < 1) throw Error("phi_s needs n >= 1");
  if (s < 0 || s >= n) throw Error("phi_s needs 0 <= s < n");
  const auto g = FiniteAbelianGroup::cyclic(n);
  Associator phi(g, n);
  // Element index i is g^i for a cyclic group.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Residue carry = (j + k) / n;
        phi.set({i, j, k}, static_cast<Residue>(s) * i * carry);
      }
  return phi;
}

Associator product_associator(std::span<const std::pair<int, int>> factors) {
  std::vector<int> ns;
  Residue modulus = 1;
  for (auto [n, s] : factors) {
    if (n < 1 || s < 0 || s >= n) throw Error("product_associator needs 0 <= s_i < n_i");
    ns.push_back(n);
    modulus = std::lcm(modulus, static_cast<Residue>(n));
  }
  const FiniteAbelianGroup g(ns);
  Associator phi(g, modulus);
  const auto elems = g.elements();
  const auto m = static_cast<std::size_t>(g.order());
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c) {
        Residue e = 0;
        for (std::size_t f = 0; f < factors.size(); ++f) {
          const auto [n, s] = factors[f];
          const Residue i = elems[a].residues[f];
          const Residue carry = (elems[b].residues[f] + elems[c].residues[f]) / n;
          e += (static_cast<Residue>(s) * i * carry % n) * (modulus / n);
        }
        phi.set({static_cast<ElemIndex>(a), static_cast<ElemIndex>(b), static_cast<ElemIndex>(c)}, e);
      }
  return phi;
}

Associator coboundary(const TwoCochain& mu) {
  const auto& g = mu.group();
  const int m = g.order();
  Associator phi(g, mu.modulus());
  for (int f = 0; f < m; ++f)
    for (int x = 0; x < m; ++x)
      for (int h = 0; h < m; ++h) {
        phi.set({f, x, h}, mu(x, h) - mu(g.mul(f, x), h) + mu(f, g.mul(x, h)) - mu(f, x));
      }
  return phi;
}

CheckResult is_normalized(const Associator& phi) {
  CheckResult res;
  const auto& g = phi.group();
  const int m = g.order();
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) {
        if (a != 0 && b != 0 && c != 0) continue;
        ++res.tuples_checked;
        if (phi(a, b, c) != 0) {
          res.ok = false;
          res.witness = make_witness(g, "normalization", {a, b, c},
                                     "exponent " + residue_str(phi(a, b, c), phi.modulus()));
          return res;
        }
      }
  return res;
}

CheckResult is_3cocycle(const Associator& phi, unsigned jobs) {
  const auto& g = phi.group();
  const std::uint64_t m = static_cast<std::uint64_t>(g.order());
  const std::uint64_t total = m * m * m * m;
  auto split = [m](std::uint64_t i) {
    std::array<ElemIndex, 4> t{};
    for (int k = 4; k-- > 0;) {
      t[static_cast<std::size_t>(k)] = static_cast<ElemIndex>(i % m);
      i /= m;
    }
    return t;
  };
  auto defect = [&](std::uint64_t i) {
    auto [f, x, h, k] = split(i);
    return phi.reduce(phi(x, h, k) + phi(f, g.mul(x, h), k) + phi(f, x, h) - phi(g.mul(f, x), h, k) -
                      phi(f, x, g.mul(h, k)));
  };
  CheckResult res;
  auto bad = first_failure(total, jobs, [&](std::uint64_t i) { return defect(i) != 0; });
  if (!bad) {
    res.tuples_checked = total;
    return res;
  }
  auto [f, x, h, k] = split(*bad);
  res.ok = false;
  res.tuples_checked = *bad + 1;
  res.witness = make_witness(g, "cocycle_identity", {f, x, h, k},
                             "defect " + residue_str(defect(*bad), phi.modulus()));
  return res;
}

ModSolutionSet is_coboundary(const Associator& phi) {
  if (auto c = is_3cocycle(phi); !c.ok) {
    throw NotACocycle("associator fails the cocycle identity at (" +
                      (c.witness->args.empty() ? std::string() : c.witness->args[0]) + ", ...)");
  }
  const auto& g = phi.group();
  const int m = g.order();
  const std::size_t unknowns = static_cast<std::size_t>(m) * static_cast<std::size_t>(m);
  IntMatrix a(0, unknowns);
  std::vector<BigInt> rhs;
  auto col = [m](int x, int y) { return static_cast<std::size_t>(x) * static_cast<std::size_t>(m) + static_cast<std::size_t>(y); };
  for (int f = 0; f < m; ++f)
    for (int x = 0; x < m; ++x)
      for (int h = 0; h < m; ++h) {
        std::vector<BigInt> row(unknowns, BigInt(0));
        row[col(x, h)] += 1;
        row[col(g.mul(f, x), h)] -= 1;
        row[col(f, g.mul(x, h))] += 1;
        row[col(f, x)] -= 1;
        a.push_row(row);
        rhs.emplace_back(static_cast<long>(phi(f, x, h)));
      }
  return exact::solve_linear_mod(a, rhs, phi.modulus());
}

CheckResult check_phi_ram_conditions(const Associator& phi, std::span<const ElemIndex> support,
                                     PhiRamForm form, unsigned jobs) {
  const auto& g = phi.group();
  const std::uint64_t m = static_cast<std::uint64_t>(g.order());
  const std::uint64_t per_t = m * m * m;
  const std::uint64_t total = per_t * support.size();
  const Residue sign = form == PhiRamForm::Standard ? 1 : -1;

  struct Tuple {
    ElemIndex t, e, f, x;
  };
  auto split = [&](std::uint64_t i) {
    Tuple tp{};
    tp.t = support[i / per_t];
    i %= per_t;
    tp.x = static_cast<ElemIndex>(i % m);
    tp.f = static_cast<ElemIndex>((i / m) % m);
    tp.e = static_cast<ElemIndex>(i / (m * m));
    return tp;
  };
  // Defects of the right-action and middle identities; x plays the role of
  // the source vertex g of the translated arrow.
  auto right_defect = [&](const Tuple& p) {
    const auto [t, e, f, x] = p;
    const ElemIndex ex = g.mul(e, x), xt = g.mul(x, t), ef = g.mul(e, f);
    const Residue lhs = phi(ex, f, t) + phi(x, e, t) + phi(e, t, f) - phi(ex, t, f) - phi(x, t, e) - phi(e, f, t);
    const Residue rhs = sign * (phi(x, e, f) - phi(xt, e, f)) + phi(x, ef, t) + phi(t, e, f) - phi(x, t, ef);
    return phi.reduce(lhs - rhs);
  };
  auto middle_defect = [&](const Tuple& p) {
    const auto [t, e, f, x] = p;
    const ElemIndex ex = g.mul(e, x), xt = g.mul(x, t), fx = g.mul(f, x);
    const Residue lhs = phi(e, x, t) + phi(ex, f, t) - phi(f, x, t) - phi(ex, t, f);
    const Residue rhs = sign * (phi(e, x, f) - phi(e, xt, f)) + phi(e, fx, t) + phi(x, f, t) - phi(x, t, f) - phi(f, x, t);
    return phi.reduce(lhs - rhs);
  };

  CheckResult res;
  auto bad = first_failure(total, jobs, [&](std::uint64_t i) {
    const Tuple p = split(i);
    return right_defect(p) != 0 || middle_defect(p) != 0;
  });
  if (!bad) {
    res.tuples_checked = total;
    return res;
  }
  const Tuple p = split(*bad);
  res.ok = false;
  res.tuples_checked = *bad + 1;
  const Residue rd = right_defect(p);
  const bool right = rd != 0;
  res.witness = make_witness(g, right ? "phi_ram_right_action" : "phi_ram_middle", {p.e, p.f, p.x, p.t},
                             "defect " + residue_str(right ? rd : middle_defect(p), phi.modulus()) +
                                 " at (e, f, g, t)");
  return res;
}

LinearSystem rform_conditions_system(const Associator& phi) {
  const auto& g = phi.group();
  const int m = g.order();
  const std::size_t unknowns = static_cast<std::size_t>(m) * static_cast<std::size_t>(m);
  auto col = [m](int x, int y) { return static_cast<std::size_t>(x) * static_cast<std::size_t>(m) + static_cast<std::size_t>(y); };
  LinearSystem sys;
  sys.modulus = phi.modulus();
  sys.matrix = IntMatrix(0, unknowns);
  std::vector<BigInt> row(unknowns);
  auto clear = [&] { std::fill(row.begin(), row.end(), BigInt(0)); };

  for (int f = 0; f < m; ++f)
    for (int x = 0; x < m; ++x)
      for (int h = 0; h < m; ++h) {
        clear();
        row[col(f, g.mul(x, h))] += 1;
        row[col(f, x)] -= 1;
        row[col(f, h)] -= 1;
        sys.matrix.push_row(row);
        sys.rhs.emplace_back(static_cast<long>(phi.reduce(phi(x, f, h) - phi(x, h, f) - phi(f, x, h))));
      }
  for (int f = 0; f < m; ++f)
    for (int x = 0; x < m; ++x)
      for (int h = 0; h < m; ++h) {
        clear();
        row[col(g.mul(f, x), h)] += 1;
        row[col(f, h)] -= 1;
        row[col(x, h)] -= 1;
        sys.matrix.push_row(row);
        sys.rhs.emplace_back(static_cast<long>(phi.reduce(phi(h, f, x) + phi(f, x, h) - phi(f, h, x))));
      }
  for (int x = 0; x < m; ++x)
    for (int h = 0; h < m; ++h) {
      clear();
      row[col(x, h)] += 1;
      row[col(h, x)] += 1;
      sys.matrix.push_row(row);
      sys.rhs.emplace_back(0L);
    }
  return sys;
}

ModSolutionSet rform_solutions(const Associator& phi) {
  const LinearSystem sys = rform_conditions_system(phi);
  return exact::solve_linear_mod(sys.matrix, sys.rhs, sys.modulus);
}

std::vector<RForm> enumerate_rforms(const Associator& phi, std::size_t limit) {
  const auto sols = rform_solutions(phi).enumerate(limit);
  std::vector<RForm> out;
  out.reserve(sols.size());
  for (const auto& s : sols) out.emplace_back(phi.group(), phi.modulus(), s);
  return out;
}

CheckResult check_rform(const Associator& phi, const RForm& r, unsigned jobs) {
  require_same(phi.group(), phi.modulus(), r.group(), r.modulus());
  const auto& g = phi.group();
  const std::uint64_t m = static_cast<std::uint64_t>(g.order());
  const std::uint64_t triples = m * m * m;
  // Tuples 0..triples-1 test both multiplicativity laws at (f,g,h); the
  // remaining m^2 test skew-symmetry at (g,h).
  auto second_arg = [&](ElemIndex f, ElemIndex x, ElemIndex h) {
    return phi.reduce(r(f, g.mul(x, h)) - r(f, x) - r(f, h) - (phi(x, f, h) - phi(x, h, f) - phi(f, x, h)));
  };
  auto first_arg = [&](ElemIndex f, ElemIndex x, ElemIndex h) {
    return phi.reduce(r(g.mul(f, x), h) - r(f, h) - r(x, h) - (phi(h, f, x) + phi(f, x, h) - phi(f, h, x)));
  };
  auto skew = [&](ElemIndex x, ElemIndex h) { return phi.reduce(r(x, h) + r(h, x)); };

  auto fails = [&](std::uint64_t i) {
    if (i < triples) {
      const auto f = static_cast<ElemIndex>(i / (m * m)), x = static_cast<ElemIndex>((i / m) % m),
                 h = static_cast<ElemIndex>(i % m);
      return second_arg(f, x, h) != 0 || first_arg(f, x, h) != 0;
    }
    i -= triples;
    return skew(static_cast<ElemIndex>(i / m), static_cast<ElemIndex>(i % m)) != 0;
  };
  CheckResult res;
  const std::uint64_t total = triples + m * m;
  auto bad = first_failure(total, jobs, fails);
  if (!bad) {
    res.tuples_checked = total;
    return res;
  }
  res.ok = false;
  res.tuples_checked = *bad + 1;
  std::uint64_t i = *bad;
  if (i < triples) {
    const auto f = static_cast<ElemIndex>(i / (m * m)), x = static_cast<ElemIndex>((i / m) % m),
               h = static_cast<ElemIndex>(i % m);
    if (Residue d = second_arg(f, x, h); d != 0) {
      res.witness = make_witness(g, "rform_second_argument", {f, x, h}, "defect " + residue_str(d, r.modulus()));
    } else {
      res.witness = make_witness(g, "rform_first_argument", {f, x, h},
                                 "defect " + residue_str(first_arg(f, x, h), r.modulus()));
    }
  } else {
    i -= triples;
    const auto x = static_cast<ElemIndex>(i / m), h = static_cast<ElemIndex>(i % m);
    res.witness = make_witness(g, "rform_skew_symmetry", {x, h}, "R(g,h)R(h,g) = zeta^" + std::to_string(skew(x, h)));
  }
  return res;
}

std::pair<Associator, RForm> twist_pair(const Associator& phi, const RForm& r, const TwoCochain& mu) {
  require_same(phi.group(), phi.modulus(), r.group(), r.modulus());
  require_same(phi.group(), phi.modulus(), mu.group(), mu.modulus());
  const auto& g = phi.group();
  const int m = g.order();
  const Associator dmu = coboundary(mu);
  Associator phi2 = phi;
  for (std::size_t i = 0; i < phi.size(); ++i) phi2.set(phi.unoffset(i), phi.dense()[i] + dmu.dense()[i]);
  RForm r2 = r;
  for (int x = 0; x < m; ++x)
    for (int h = 0; h < m; ++h) r2.set({x, h}, r(x, h) + mu(h, x) - mu(x, h));
  return {std::move(phi2), std::move(r2)};
}

}  // namespace coquasi
