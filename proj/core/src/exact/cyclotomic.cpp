#include "coquasi/exact/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <utility>

#include "coquasi/errors.hpp"

namespace coquasi::exact {

namespace {

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact quotient of num by a monic divisor.
IntPoly divide_exact_monic(IntPoly num, const IntPoly& den) {
  const std::size_t dd = den.size() - 1;
  if (num.size() <= dd) return {};
  IntPoly quot(num.size() - dd);
  for (std::size_t i = num.size(); i-- > dd;) {
    BigInt c = num[i];
    quot[i - dd] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  trim(num);
  if (!num.empty()) throw Error("cyclotomic division left a remainder");
  trim(quot);
  return quot;
}

std::mutex& poly_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

IntPoly cyclotomic_polynomial(int order) {
  if (order < 1) throw Error("cyclotomic polynomial needs a positive order");
  static std::map<int, IntPoly> cache;
  {
    std::lock_guard lock(poly_mutex());
    if (auto it = cache.find(order); it != cache.end()) return it->second;
  }
  IntPoly poly(static_cast<std::size_t>(order) + 1, BigInt(0));
  poly[0] = -1;
  poly[static_cast<std::size_t>(order)] = 1;
  for (int d = 1; d < order; ++d) {
    if (order % d == 0) poly = divide_exact_monic(std::move(poly), cyclotomic_polynomial(d));
  }
  std::lock_guard lock(poly_mutex());
  cache.emplace(order, poly);
  return poly;
}

int totient(int order) {
  int result = order;
  int n = order;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::string to_string(const IntPoly& poly, char var) {
  if (poly.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = poly.size(); i-- > 0;) {
    const BigInt& c = poly[i];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || i == 0) out << mag.get_str();
    if (i >= 1) out << var;
    if (i >= 2) out << '^' << i;
  }
  return out.str();
}

// Immutable per-order data: Phi_N and zeta^j reduced mod Phi_N for 0 <= j < N.
class CycloContext {
 public:
  explicit CycloContext(int order) : order_(order), phi_(cyclotomic_polynomial(order)) {
    const std::size_t d = phi_.size() - 1;
    powers_.assign(static_cast<std::size_t>(order), std::vector<BigInt>(d, BigInt(0)));
    std::vector<BigInt> cur(d, BigInt(0));
    cur[0] = 1;
    for (int j = 0; j < order; ++j) {
      powers_[static_cast<std::size_t>(j)] = cur;
      // cur *= x, then reduce with the monic relation x^d = -sum phi_i x^i.
      BigInt top = cur[d - 1];
      for (std::size_t i = d - 1; i > 0; --i) cur[i] = cur[i - 1];
      cur[0] = 0;
      if (top != 0) {
        for (std::size_t i = 0; i < d; ++i) cur[i] -= top * phi_[i];
      }
    }
  }

  int order() const { return order_; }
  std::size_t degree() const { return phi_.size() - 1; }
  const IntPoly& phi() const { return phi_; }
  const std::vector<BigInt>& power(std::size_t j) const { return powers_[j % powers_.size()]; }

 private:
  int order_;
  IntPoly phi_;
  std::vector<std::vector<BigInt>> powers_;
};

namespace {

std::shared_ptr<const CycloContext> context_for(int order) {
  if (order < 1) throw Error("cyclotomic order must be positive");
  static std::mutex m;
  static std::map<int, std::shared_ptr<const CycloContext>> cache;
  {
    std::lock_guard lock(m);
    if (auto it = cache.find(order); it != cache.end()) return it->second;
  }
  auto ctx = std::make_shared<const CycloContext>(order);
  std::lock_guard lock(m);
  return cache.emplace(order, std::move(ctx)).first->second;
}

// Reduce a polynomial in zeta of any length using the power table.
std::vector<Rational> reduce(const CycloContext& ctx, std::span<const Rational> poly) {
  const std::size_t d = ctx.degree();
  std::vector<Rational> out(d, Rational(0));
  for (std::size_t j = 0; j < poly.size(); ++j) {
    if (poly[j] == 0) continue;
    if (j < d) {
      out[j] += poly[j];
      continue;
    }
    const auto& pw = ctx.power(j);
    for (std::size_t i = 0; i < d; ++i) {
      if (pw[i] != 0) out[i] += poly[j] * pw[i];
    }
  }
  return out;
}

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// a = q*b + r over Q[x]; b nonzero and trimmed.
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  trim(a);
  QPoly q;
  if (a.size() < b.size()) return {q, a};
  q.assign(a.size() - b.size() + 1, Rational(0));
  const Rational& lead = b.back();
  for (std::size_t k = a.size() - b.size() + 1; k-- > 0;) {
    Rational c = a[k + b.size() - 1] / lead;
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
  }
  trim(a);
  trim(q);
  return {q, a};
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

QPoly sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

int lcm_int(int a, int b) { return std::lcm(a, b); }

}  // namespace

Cyclo::Cyclo() : Cyclo(context_for(1), {Rational(0)}) {}

Cyclo::Cyclo(std::shared_ptr<const CycloContext> ctx, std::vector<Rational> coeffs)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {}

Cyclo Cyclo::zero(int order) {
  auto ctx = context_for(order);
  std::vector<Rational> c(ctx->degree(), Rational(0));
  return Cyclo(std::move(ctx), std::move(c));
}

Cyclo Cyclo::one(int order) { return from_rational(order, Rational(1)); }

Cyclo Cyclo::from_rational(int order, const Rational& value) {
  Cyclo z = zero(order);
  z.coeffs_[0] = value;
  z.coeffs_[0].canonicalize();
  return z;
}

Cyclo Cyclo::from_polynomial(int order, std::span<const Rational> coeffs) {
  auto ctx = context_for(order);
  std::vector<Rational> canon(coeffs.begin(), coeffs.end());
  for (auto& c : canon) c.canonicalize();
  auto reduced = reduce(*ctx, canon);
  return Cyclo(std::move(ctx), std::move(reduced));
}

Cyclo Cyclo::from_root_counts(int order, std::span<const std::int64_t> counts) {
  auto ctx = context_for(order);
  const std::size_t d = ctx->degree();
  std::vector<BigInt> acc(d, BigInt(0));
  for (std::size_t e = 0; e < counts.size(); ++e) {
    if (counts[e] == 0) continue;
    const auto& pw = ctx->power(e);
    const BigInt c(static_cast<long>(counts[e]));
    for (std::size_t i = 0; i < d; ++i) {
      if (pw[i] != 0) acc[i] += c * pw[i];
    }
  }
  std::vector<Rational> out;
  out.reserve(d);
  for (auto& a : acc) out.emplace_back(a);
  return Cyclo(std::move(ctx), std::move(out));
}

int Cyclo::order() const { return ctx_->order(); }

bool Cyclo::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool Cyclo::is_one() const {
  if (coeffs_[0] != 1) return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

Cyclo Cyclo::lift(int multiple_order) const {
  if (multiple_order == order()) return *this;
  if (multiple_order % order() != 0) throw Error("lift target order must be a multiple");
  auto ctx = context_for(multiple_order);
  const std::size_t step = static_cast<std::size_t>(multiple_order / order());
  const std::size_t d = ctx->degree();
  std::vector<Rational> out(d, Rational(0));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    const auto& pw = ctx->power(j * step);
    for (std::size_t i = 0; i < d; ++i) {
      if (pw[i] != 0) out[i] += coeffs_[j] * pw[i];
    }
  }
  return Cyclo(std::move(ctx), std::move(out));
}

Cyclo Cyclo::inverse() const {
  if (is_zero()) throw DivisionByZero();
  // Extended Euclid: find u with u*a = 1 mod Phi_N.
  QPoly m;
  for (const auto& c : ctx_->phi()) m.emplace_back(c);
  QPoly a(coeffs_.begin(), coeffs_.end());
  trim(a);
  QPoly r0 = m, r1 = a;
  QPoly s0, s1{Rational(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    QPoly s2 = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant because Phi_N is irreducible.
  if (r0.size() != 1) throw Error("cyclotomic inverse: modulus not irreducible");
  for (auto& c : s0) c /= r0[0];
  return from_polynomial(order(), s0);
}

Cyclo Cyclo::times_root(std::int64_t k) const {
  const std::int64_t n = order();
  const std::size_t shift = static_cast<std::size_t>(((k % n) + n) % n);
  if (shift == 0) return *this;
  const std::size_t d = coeffs_.size();
  std::vector<Rational> out(d, Rational(0));
  for (std::size_t j = 0; j < d; ++j) {
    if (coeffs_[j] == 0) continue;
    const auto& pw = ctx_->power(j + shift);
    for (std::size_t i = 0; i < d; ++i) {
      if (pw[i] != 0) out[i] += coeffs_[j] * pw[i];
    }
  }
  return Cyclo(ctx_, std::move(out));
}

Cyclo Cyclo::operator-() const {
  Cyclo r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclo& Cyclo::operator+=(const Cyclo& rhs) {
  if (order() != rhs.order()) {
    const int l = lcm_int(order(), rhs.order());
    *this = lift(l);
    return *this += rhs.lift(l);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& rhs) { return *this += -rhs; }

Cyclo& Cyclo::operator*=(const Cyclo& rhs) {
  if (order() != rhs.order()) {
    const int l = lcm_int(order(), rhs.order());
    *this = lift(l);
    return *this *= rhs.lift(l);
  }
  const std::size_t d = coeffs_.size();
  std::vector<Rational> prod(2 * d - 1, Rational(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (rhs.coeffs_[j] != 0) prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  coeffs_ = reduce(*ctx_, prod);
  return *this;
}

Cyclo& Cyclo::operator/=(const Cyclo& rhs) { return *this *= rhs.inverse(); }

bool operator==(const Cyclo& lhs, const Cyclo& rhs) {
  if (lhs.order() != rhs.order()) {
    const int l = std::lcm(lhs.order(), rhs.order());
    return lhs.lift(l).coeffs_ == rhs.lift(l).coeffs_;
  }
  return lhs.coeffs_ == rhs.coeffs_;
}

std::string Cyclo::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << '*';
    out << 'z';
    if (i >= 2) out << '^' << i;
  }
  return first ? "0" : out.str();
}

Cyclo root_of_unity(int order, std::int64_t k) { return Cyclo::one(order).times_root(k); }

}  // namespace coquasi::exact
