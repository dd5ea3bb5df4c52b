#include "coquasi/majid.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "coquasi/errors.hpp"
#include "coquasi/parallel.hpp"

namespace coquasi {

// ---------------------------------------------------------------- GradedElement

void GradedElement::add(const Path& p, const Cyclo& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Cyclo GradedElement::coefficient(const Path& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Cyclo() : it->second;
}

void GradedElement::mark_truncated(int degree) {
  valid_through_ = valid_through_ ? std::min(*valid_through_, degree) : degree;
}

std::vector<int> GradedElement::degrees() const {
  std::vector<int> out;
  for (const auto& [p, c] : terms_) out.push_back(p.length());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

GradedElement GradedElement::component(int degree) const {
  GradedElement out;
  for (const auto& [p, c] : terms_) {
    if (p.length() == degree) out.terms_.emplace(p, c);
  }
  return out;
}

GradedElement GradedElement::scaled(const Cyclo& c) const {
  GradedElement out;
  out.valid_through_ = valid_through_;
  if (c.is_zero()) return out;
  for (const auto& [p, v] : terms_) out.terms_.emplace(p, v * c);
  return out;
}

GradedElement& GradedElement::operator+=(const GradedElement& rhs) {
  for (const auto& [p, c] : rhs.terms_) add(p, c);
  if (rhs.valid_through_) mark_truncated(*rhs.valid_through_);
  return *this;
}

GradedElement& GradedElement::operator-=(const GradedElement& rhs) {
  for (const auto& [p, c] : rhs.terms_) add(p, -c);
  if (rhs.valid_through_) mark_truncated(*rhs.valid_through_);
  return *this;
}

std::string GradedElement::to_string(const HopfQuiver& q) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [p, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")*" + q.format(p);
  }
  return out;
}

// ---------------------------------------------------------------- MajidStructure

namespace {

template <class Table>
Table lift_to(const Table& t, Residue n) {
  return t.modulus() == n ? t : t.lifted(n);
}

}  // namespace

MajidStructure::MajidStructure(HopfQuiver quiver, const Associator& phi, const RForm& r, int max_len,
                               ActionVariant variant)
    : quiver_(std::move(quiver)),
      phi_(lift_to(phi, std::lcm(phi.modulus(), r.modulus()))),
      r_(lift_to(r, std::lcm(phi.modulus(), r.modulus()))),
      max_len_(max_len),
      variant_(variant) {
  if (!(phi.group() == quiver_.group()) || !(r.group() == quiver_.group())) {
    throw GroupMismatch("tables and quiver live on different groups");
  }
  if (max_len < 0) throw TruncationOverflow("max_len must be nonnegative");
  Residue g = modulus();
  for (Residue v : phi_.dense()) g = std::gcd(g, v);
  for (Residue v : r_.dense()) g = std::gcd(g, v);
  coeff_step_ = g;
  coeff_order_ = static_cast<int>(modulus() / g);
}

MajidStructure MajidStructure::unchecked(HopfQuiver quiver, const Associator& phi, const RForm& r, int max_len,
                                         ActionVariant variant) {
  return MajidStructure(std::move(quiver), phi, r, max_len, variant);
}

MajidStructure MajidStructure::create(HopfQuiver quiver, const Associator& phi, const RForm& r, int max_len,
                                      unsigned jobs) {
  auto fail = [](const CheckResult& c) {
    std::string msg = c.witness->condition + " fails at (";
    for (std::size_t i = 0; i < c.witness->args.size(); ++i) msg += (i ? ", " : "") + c.witness->args[i];
    throw Error(msg + "): " + c.witness->detail);
  };
  if (auto c = is_normalized(phi); !c.ok) fail(c);
  if (auto c = is_3cocycle(phi, jobs); !c.ok) fail(c);
  const auto support = quiver.ram().support();
  if (auto c = check_phi_ram_conditions(phi, support, PhiRamForm::Standard, jobs); !c.ok) fail(c);
  const Residue n = std::lcm(phi.modulus(), r.modulus());
  if (auto c = check_rform(lift_to(phi, n), lift_to(r, n), jobs); !c.ok) fail(c);
  return MajidStructure(std::move(quiver), phi, r, max_len, ActionVariant::Standard);
}

Cyclo MajidStructure::root(Residue e) const {
  Residue v = e % modulus();
  if (v < 0) v += modulus();
  if (v % coeff_step_ != 0) throw Error("exponent outside the coefficient field");
  return exact::root_of_unity(coeff_order_, v / coeff_step_);
}

ScaledArrow MajidStructure::act_left(ElemIndex f, const Arrow& a) const {
  const auto& g = group();
  ScaledArrow out{0, Arrow{g.mul(f, a.source), a.gen, a.index}};
  if (variant_ != ActionVariant::LeftWithoutPhi) out.exponent = phi_(f, a.source, a.gen);
  return out;
}

ScaledArrow MajidStructure::act_right(const Arrow& a, ElemIndex f) const {
  const auto& g = group();
  ScaledArrow out{phi_(f, a.source, a.gen), Arrow{g.mul(f, a.source), a.gen, a.index}};
  if (variant_ != ActionVariant::RightWithoutR) {
    out.exponent += r_(f, g.mul(a.source, a.gen)) - r_(f, a.source);
  }
  out.exponent = phi_.reduce(out.exponent);
  return out;
}

GradedElement MajidStructure::shuffle_product(const Path& a, const Path& b) const {
  const int m = a.length(), n = b.length();
  if (m + n > max_len_) {
    throw TruncationOverflow("product of degree " + std::to_string(m + n) + " exceeds max_len " +
                             std::to_string(max_len_));
  }
  const auto& g = group();
  // Root counts per resulting path, converted to field elements once at the end.
  std::map<Path, std::vector<std::int64_t>> counts;
  const auto splits = thin_splits(m, m + n);
  for (const ThinSplit& d : splits) {
    ThinSplit dbar(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) dbar[i] = d[i] ? 0 : 1;
    const auto left = apply_split(quiver_, d, a);
    const auto right = apply_split(quiver_, dbar, b);
    Path out{g.mul(a.base, b.base), {}};
    out.arrows.reserve(d.size());
    Residue e = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
      const ScaledArrow s =
          d[i] ? act_right(left[i].arrow, right[i].vertex) : act_left(left[i].vertex, right[i].arrow);
      e += s.exponent;
      out.arrows.push_back(s.arrow);
    }
    auto& c = counts[out];
    if (c.empty()) c.assign(static_cast<std::size_t>(coeff_order_), 0);
    e = phi_.reduce(e);
    c[static_cast<std::size_t>(e / coeff_step_)] += 1;
  }
  GradedElement result;
  for (const auto& [p, c] : counts) result.add(p, Cyclo::from_root_counts(coeff_order_, c));
  return result;
}

GradedElement MajidStructure::product(const GradedElement& x, const GradedElement& y, ProductMode mode) const {
  GradedElement out;
  bool dropped = false;
  for (const auto& [p, cp] : x.terms()) {
    for (const auto& [q, cq] : y.terms()) {
      if (p.length() + q.length() > max_len_ && mode == ProductMode::Graded) {
        dropped = true;
        continue;
      }
      out += shuffle_product(p, q).scaled(cp * cq);
    }
  }
  if (dropped) out.mark_truncated(max_len_);
  if (x.valid_through()) out.mark_truncated(*x.valid_through());
  if (y.valid_through()) out.mark_truncated(*y.valid_through());
  return out;
}

// ---------------------------------------------------------------- verifiers

namespace {

std::string residue_str(Residue v, Residue n) { return std::to_string(v) + " mod " + std::to_string(n); }

void require_len(const MajidStructure& s, int max_len) {
  if (max_len > s.max_len()) {
    throw TruncationOverflow("verification degree " + std::to_string(max_len) + " exceeds the structure's max_len " +
                             std::to_string(s.max_len()));
  }
  if (max_len < 0) throw TruncationOverflow("verification degree must be nonnegative");
}

std::vector<Path> all_paths(const MajidStructure& s, int max_len) {
  std::vector<Path> out;
  for (auto& level : s.quiver().paths_up_to(max_len)) {
    for (auto& p : level) out.push_back(std::move(p));
  }
  return out;
}

/// Index tuples of paths whose lengths sum to at most max_len, in lexicographic order.
template <std::size_t K>
std::vector<std::array<std::uint32_t, K>> bounded_tuples(const std::vector<Path>& paths, int max_len) {
  std::vector<std::array<std::uint32_t, K>> out;
  std::array<std::uint32_t, K> cur{};
  auto rec = [&](auto&& self, std::size_t pos, int budget) -> void {
    if (pos == K) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = 0; i < paths.size(); ++i) {
      const int l = paths[i].length();
      if (l > budget) continue;
      cur[pos] = static_cast<std::uint32_t>(i);
      self(self, pos + 1, budget - l);
    }
  };
  rec(rec, 0, max_len);
  return out;
}

template <class Fails, class Describe>
CheckResult run_checks(std::uint64_t count, unsigned jobs, Fails fails, Describe describe) {
  CheckResult res;
  auto bad = first_failure(count, jobs, fails);
  if (!bad) {
    res.tuples_checked = count;
    return res;
  }
  res.ok = false;
  res.tuples_checked = *bad + 1;
  res.witness = describe(*bad);
  return res;
}

/// Sweedler tuples of p whose components are all vertices: the only ones on
/// which the trivially extended Phi and R are nonzero.
std::vector<std::vector<ElemIndex>> grouplike_tuples(const HopfQuiver& q, const Path& p, int k) {
  std::vector<std::vector<ElemIndex>> out;
  for (const auto& t : iterated_coproduct(q, p, k)) {
    std::vector<ElemIndex> v;
    bool ok = true;
    for (const Path& c : t) {
      if (!c.is_vertex()) {
        ok = false;
        break;
      }
      v.push_back(c.base);
    }
    if (ok) out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

VerifyReport verify_bimodule_axioms(const MajidStructure& s, unsigned jobs) {
  const auto& g = s.group();
  const auto& phi = s.phi();
  const auto& arrows = s.quiver().arrows();
  const std::uint64_t m = static_cast<std::uint64_t>(g.order());
  const std::uint64_t per_cond = m * m * arrows.size();
  const char* names[] = {"left_associativity", "right_associativity", "middle_associativity"};

  struct Side {
    Residue exponent;
    Arrow arrow;
  };
  // Both sides of condition c at (e, f, arrow); exponents unreduced.
  auto sides = [&](std::uint64_t i) {
    const int cond = static_cast<int>(i / per_cond);
    i %= per_cond;
    const Arrow& a = arrows[i % arrows.size()];
    const auto f = static_cast<ElemIndex>((i / arrows.size()) % m);
    const auto e = static_cast<ElemIndex>(i / (arrows.size() * m));
    const ElemIndex tgt = s.quiver().target(a), src = a.source;
    std::pair<Side, Side> out;
    if (cond == 0) {
      const auto x = s.act_left(f, a);
      const auto y = s.act_left(e, x.arrow);
      const auto z = s.act_left(g.mul(e, f), a);
      out = {{x.exponent + y.exponent, y.arrow}, {phi(e, f, tgt) - phi(e, f, src) + z.exponent, z.arrow}};
    } else if (cond == 1) {
      const auto x = s.act_right(a, e);
      const auto y = s.act_right(x.arrow, f);
      const auto z = s.act_right(a, g.mul(e, f));
      out = {{x.exponent + y.exponent, y.arrow}, {phi(src, e, f) - phi(tgt, e, f) + z.exponent, z.arrow}};
    } else {
      const auto x = s.act_left(e, a);
      const auto y = s.act_right(x.arrow, f);
      const auto z = s.act_right(a, f);
      const auto w = s.act_left(e, z.arrow);
      out = {{x.exponent + y.exponent, y.arrow},
             {phi(e, src, f) - phi(e, tgt, f) + z.exponent + w.exponent, w.arrow}};
    }
    return std::pair{cond, out};
  };
  auto fails = [&](std::uint64_t i) {
    const auto [cond, lr] = sides(i);
    return lr.first.arrow != lr.second.arrow || phi.reduce(lr.first.exponent - lr.second.exponent) != 0;
  };
  auto describe = [&](std::uint64_t i) {
    const auto [cond, lr] = sides(i);
    const std::uint64_t r = i % per_cond;
    const Arrow& a = arrows[r % arrows.size()];
    const auto f = static_cast<ElemIndex>((r / arrows.size()) % m);
    const auto e = static_cast<ElemIndex>(r / (arrows.size() * m));
    Witness w{names[cond], {g.format(e), g.format(f), s.quiver().format(HopfQuiver::single(a))}, ""};
    if (lr.first.arrow != lr.second.arrow) {
      w.detail = "sides land on different arrows";
    } else {
      w.detail = "scalar ratio zeta^" + residue_str(phi.reduce(lr.first.exponent - lr.second.exponent), s.modulus());
    }
    return w;
  };
  return {"bimodule_axioms", run_checks(3 * per_cond, jobs, fails, describe), s.max_len()};
}

VerifyReport verify_quasi_associativity(const MajidStructure& s, int max_len, unsigned jobs) {
  require_len(s, max_len);
  const auto paths = all_paths(s, max_len);
  const auto tuples = bounded_tuples<3>(paths, max_len);
  const auto& q = s.quiver();
  const auto& phi = s.phi();
  auto sides = [&](std::uint64_t i) {
    const Path& x = paths[tuples[i][0]];
    const Path& y = paths[tuples[i][1]];
    const Path& z = paths[tuples[i][2]];
    const auto bx = GradedElement::basis(x), by = GradedElement::basis(y), bz = GradedElement::basis(z);
    auto lhs = s.product(s.shuffle_product(x, y), bz)
                   .scaled(s.root(phi(q.target(x), q.target(y), q.target(z))));
    auto rhs = s.product(bx, s.shuffle_product(y, z)).scaled(s.root(phi(x.base, y.base, z.base)));
    return std::pair{std::move(lhs), std::move(rhs)};
  };
  auto fails = [&](std::uint64_t i) {
    const auto [l, r] = sides(i);
    return !(l == r);
  };
  auto describe = [&](std::uint64_t i) {
    const auto [l, r] = sides(i);
    return Witness{"quasi_associativity",
                   {q.format(paths[tuples[i][0]]), q.format(paths[tuples[i][1]]), q.format(paths[tuples[i][2]])},
                   "Phi(t)(xy)z = " + l.to_string(q) + " but Phi(s)x(yz) = " + r.to_string(q)};
  };
  return {"quasi_associativity", run_checks(tuples.size(), jobs, fails, describe), max_len};
}

VerifyReport verify_r_naturality(const MajidStructure& s, int max_len, unsigned jobs) {
  require_len(s, max_len);
  const auto paths = all_paths(s, max_len);
  const auto pairs = bounded_tuples<2>(paths, max_len);
  const auto& q = s.quiver();
  const auto& r = s.rform();
  auto sides = [&](std::uint64_t i) {
    const Path& a = paths[pairs[i][0]];
    const Path& b = paths[pairs[i][1]];
    auto lhs = s.shuffle_product(b, a).scaled(s.root(r(a.base, b.base)));
    auto rhs = s.shuffle_product(a, b).scaled(s.root(r(q.target(a), q.target(b))));
    return std::pair{std::move(lhs), std::move(rhs)};
  };
  auto fails = [&](std::uint64_t i) {
    const auto [l, rr] = sides(i);
    return !(l == rr);
  };
  auto describe = [&](std::uint64_t i) {
    const auto [l, rr] = sides(i);
    return Witness{"r_naturality",
                   {q.format(paths[pairs[i][0]]), q.format(paths[pairs[i][1]])},
                   "yx R(s) = " + l.to_string(q) + " but R(t) xy = " + rr.to_string(q)};
  };
  return {"r_naturality", run_checks(pairs.size(), jobs, fails, describe), max_len};
}

VerifyReport verify_cqt_degree0(const MajidStructure& s) {
  const auto& g = s.group();
  const auto& phi = s.phi();
  const auto& r = s.rform();
  const std::uint64_t m = static_cast<std::uint64_t>(g.order());
  const std::uint64_t triples = m * m * m;
  auto split = [m](std::uint64_t i) {
    return std::array<ElemIndex, 3>{static_cast<ElemIndex>(i / (m * m)), static_cast<ElemIndex>((i / m) % m),
                                    static_cast<ElemIndex>(i % m)};
  };
  // R(fg,h) = Phi(h,f,g) R(f,h) Phi(f,h,g)^-1 R(g,h) Phi(f,g,h)
  auto first = [&](std::uint64_t i) {
    auto [f, x, h] = split(i);
    return phi.reduce(r(g.mul(f, x), h) -
                      (phi(h, f, x) + r(f, h) - phi(f, h, x) + r(x, h) + phi(f, x, h)));
  };
  // R(f,gh) = Phi(g,h,f)^-1 R(f,h) Phi(g,f,h) R(f,g) Phi(f,g,h)^-1
  auto second = [&](std::uint64_t i) {
    auto [f, x, h] = split(i);
    return phi.reduce(r(f, g.mul(x, h)) -
                      (-phi(x, h, f) + r(f, h) + phi(x, f, h) + r(f, x) - phi(f, x, h)));
  };
  auto fails = [&](std::uint64_t i) { return i < triples ? first(i) != 0 : second(i - triples) != 0; };
  auto describe = [&](std::uint64_t i) {
    const bool is_first = i < triples;
    const std::uint64_t j = is_first ? i : i - triples;
    auto [f, x, h] = split(j);
    return Witness{is_first ? "r_multiplicative_first" : "r_multiplicative_second",
                   {g.format(f), g.format(x), g.format(h)},
                   "defect " + residue_str(is_first ? first(j) : second(j), s.modulus())};
  };
  return {"cqt_degree0", run_checks(2 * triples, 1, fails, describe), 0};
}

VerifyReport verify_cqt_paths(const MajidStructure& s, int max_len, unsigned jobs) {
  require_len(s, max_len);
  const auto paths = all_paths(s, max_len);
  const auto triples = bounded_tuples<3>(paths, max_len);
  const auto& q = s.quiver();
  const auto& phi = s.phi();
  const auto& r = s.rform();

  // Extended R on a combination against a path.
  auto r_on = [&](const GradedElement& w, const Path& z) {
    Cyclo acc = Cyclo::zero(s.coefficient_order());
    if (!z.is_vertex()) return acc;
    for (const auto& [p, c] : w.terms()) {
      if (p.is_vertex()) acc += c * s.root(r(p.base, z.base));
    }
    return acc;
  };
  // R(xy, z) = Phi(z1,x1,y1) R(x2,z2) Phi^-1(x3,z3,y2) R(y3,z4) Phi(x4,y4,z5)
  auto first = [&](const Path& x, const Path& y, const Path& z) {
    const Cyclo lhs = r_on(s.shuffle_product(x, y), z);
    Cyclo rhs = Cyclo::zero(s.coefficient_order());
    for (const auto& xs : grouplike_tuples(q, x, 4))
      for (const auto& ys : grouplike_tuples(q, y, 4))
        for (const auto& zs : grouplike_tuples(q, z, 5)) {
          rhs += s.root(phi(zs[0], xs[0], ys[0]) + r(xs[1], zs[1]) - phi(xs[2], zs[2], ys[1]) + r(ys[2], zs[3]) +
                        phi(xs[3], ys[3], zs[4]));
        }
    return std::pair{lhs, rhs};
  };
  // R(x, yz) = Phi^-1(y1,z1,x1) R(x2,z2) Phi(y2,x3,z3) R(x4,y3) Phi^-1(x5,y4,z4)
  auto second = [&](const Path& x, const Path& y, const Path& z) {
    Cyclo lhs = Cyclo::zero(s.coefficient_order());
    if (x.is_vertex()) {
      const auto yz = s.shuffle_product(y, z);
      for (const auto& [p, c] : yz.terms()) {
        if (p.is_vertex()) lhs += c * s.root(r(x.base, p.base));
      }
    }
    Cyclo rhs = Cyclo::zero(s.coefficient_order());
    for (const auto& xs : grouplike_tuples(q, x, 5))
      for (const auto& ys : grouplike_tuples(q, y, 4))
        for (const auto& zs : grouplike_tuples(q, z, 4)) {
          rhs += s.root(-phi(ys[0], zs[0], xs[0]) + r(xs[1], zs[1]) + phi(ys[1], xs[2], zs[2]) + r(xs[3], ys[2]) -
                        phi(xs[4], ys[3], zs[3]));
        }
    return std::pair{lhs, rhs};
  };
  const std::uint64_t n = triples.size();
  auto eval = [&](std::uint64_t i) {
    const bool is_first = i < n;
    const auto& t = triples[is_first ? i : i - n];
    return is_first ? first(paths[t[0]], paths[t[1]], paths[t[2]]) : second(paths[t[0]], paths[t[1]], paths[t[2]]);
  };
  auto fails = [&](std::uint64_t i) {
    const auto [l, rr] = eval(i);
    return !(l == rr);
  };
  auto describe = [&](std::uint64_t i) {
    const auto [l, rr] = eval(i);
    const auto& t = triples[i < n ? i : i - n];
    return Witness{i < n ? "r_multiplicative_first" : "r_multiplicative_second",
                   {q.format(paths[t[0]]), q.format(paths[t[1]]), q.format(paths[t[2]])},
                   "lhs " + l.to_string() + ", rhs " + rr.to_string()};
  };
  return {"cqt_paths", run_checks(2 * n, jobs, fails, describe), max_len};
}

VerifyReport verify_cotriangular(const MajidStructure& s, int max_len) {
  require_len(s, max_len);
  const auto& g = s.group();
  const auto& r = s.rform();
  const auto& q = s.quiver();
  const std::uint64_t m = static_cast<std::uint64_t>(g.order());
  const auto paths = all_paths(s, max_len);
  const auto pairs = bounded_tuples<2>(paths, max_len);
  // Tuples 0..m^2-1 are group-like pairs; the rest are path pairs for
  // sum R(x1,y1) R(y2,x2) = counit(x) counit(y).
  auto path_sides = [&](std::uint64_t j) {
    const Path& x = paths[pairs[j][0]];
    const Path& y = paths[pairs[j][1]];
    Cyclo lhs = Cyclo::zero(s.coefficient_order());
    for (const auto& xs : grouplike_tuples(q, x, 2))
      for (const auto& ys : grouplike_tuples(q, y, 2)) lhs += s.root(r(xs[0], ys[0]) + r(ys[1], xs[1]));
    return std::pair{lhs, Cyclo::from_rational(1, counit(x) * counit(y))};
  };
  auto fails = [&](std::uint64_t i) {
    if (i < m * m) return r.reduce(r(static_cast<ElemIndex>(i / m), static_cast<ElemIndex>(i % m)) +
                                   r(static_cast<ElemIndex>(i % m), static_cast<ElemIndex>(i / m))) != 0;
    const auto [l, rr] = path_sides(i - m * m);
    return !(l == rr);
  };
  auto describe = [&](std::uint64_t i) {
    if (i < m * m) {
      const auto a = static_cast<ElemIndex>(i / m), b = static_cast<ElemIndex>(i % m);
      return Witness{"skew_symmetry", {g.format(a), g.format(b)},
                     "R(g,h)R(h,g) = zeta^" + residue_str(r.reduce(r(a, b) + r(b, a)), s.modulus())};
    }
    const std::uint64_t j = i - m * m;
    const auto [l, rr] = path_sides(j);
    return Witness{"cotriangular_paths", {q.format(paths[pairs[j][0]]), q.format(paths[pairs[j][1]])},
                   "lhs " + l.to_string() + ", rhs " + rr.to_string()};
  };
  return {"cotriangular", run_checks(m * m + pairs.size(), 1, fails, describe), max_len};
}

std::vector<VerifyReport> verify_all(const MajidStructure& s, int max_len, unsigned jobs) {
  return {verify_bimodule_axioms(s, jobs),       verify_quasi_associativity(s, max_len, jobs),
          verify_r_naturality(s, max_len, jobs), verify_cqt_degree0(s),
          verify_cqt_paths(s, max_len, jobs),    verify_cotriangular(s, max_len)};
}

bool all_ok(const std::vector<VerifyReport>& reports) {
  for (const auto& r : reports) {
    if (!r.result.ok) return false;
  }
  return true;
}

}  // namespace coquasi
