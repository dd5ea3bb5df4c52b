#pragma once

// Independent reference implementations used only by the tests. None of
// this code calls into the library's algorithms: everything is brute force
// over small cases, with plain machine integers.

#include <algorithm>
#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

namespace oracle {

using Poly = std::vector<long long>;

inline void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

/// Exact division of integer polynomials with a monic divisor.
inline Poly divide_monic(Poly num, const Poly& den) {
  Poly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    const long long c = num[k + den.size() - 1];
    q[k] = c;
    for (std::size_t i = 0; i < den.size(); ++i) num[k + i] -= c * den[i];
  }
  trim(num);
  if (!num.empty()) return {};  // not exact
  return q;
}

/// Phi_N by dividing x^N - 1 by every Phi_d, d a proper divisor of N.
inline Poly cyclotomic(int n) {
  Poly p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) p = divide_monic(p, cyclotomic(d));
  }
  return p;
}

/// All x in (Z/N)^k with A x = b mod N, lexicographic.
inline std::vector<std::vector<long long>> brute_solve(const std::vector<std::vector<long long>>& a,
                                                       const std::vector<long long>& b, long long n, std::size_t k) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> x(k, 0);
  for (;;) {
    bool ok = true;
    for (std::size_t r = 0; r < a.size() && ok; ++r) {
      long long acc = -b[r];
      for (std::size_t c = 0; c < k; ++c) acc += a[r][c] * x[c];
      ok = ((acc % n) + n) % n == 0;
    }
    if (ok) out.push_back(x);
    std::size_t i = k;
    while (i > 0 && ++x[i - 1] == n) x[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

/// Cyclic group Z_n with residues as elements; exponent tables as std::map.
struct Zn {
  int n;
  int mul(int a, int b) const { return (a + b) % n; }
};

/// phi_s directly from its defining formula.
inline long long phi_s(int n, int s, int i, int j, int k) { return (static_cast<long long>(s) * i * ((j + k) / n)) % n; }

inline bool cocycle_ok(int n, const std::function<long long(int, int, int)>& phi, long long modulus) {
  for (int f = 0; f < n; ++f)
    for (int g = 0; g < n; ++g)
      for (int h = 0; h < n; ++h)
        for (int k = 0; k < n; ++k) {
          const long long d = phi(g, h, k) + phi(f, (g + h) % n, k) + phi(f, g, h) - phi((f + g) % n, h, k) -
                              phi(f, g, (h + k) % n);
          if (((d % modulus) + modulus) % modulus != 0) return false;
        }
  return true;
}

/// The three R-form identities on Z_n, evaluated pointwise.
inline bool rform_ok(int n, const std::function<long long(int, int, int)>& phi,
                     const std::function<long long(int, int)>& r, long long modulus) {
  auto md = [&](long long v) { return ((v % modulus) + modulus) % modulus; };
  for (int f = 0; f < n; ++f)
    for (int g = 0; g < n; ++g) {
      if (md(r(f, g) + r(g, f)) != 0) return false;
      for (int h = 0; h < n; ++h) {
        if (md(r(f, (g + h) % n) - r(f, g) - r(f, h) - (phi(g, f, h) - phi(g, h, f) - phi(f, g, h))) != 0) return false;
        if (md(r((f + g) % n, h) - r(f, h) - r(g, h) - (phi(h, f, g) + phi(f, g, h) - phi(f, h, g))) != 0) return false;
      }
    }
  return true;
}

/// Every R-form on Z_n for phi_s with values in mu_N, by exhaustive search
/// over all N^(n*n) tables (feasible only for tiny n).
inline std::vector<std::vector<long long>> brute_rforms_full(int n, int s, long long modulus) {
  const long long scale = modulus / n;
  auto phi = [&](int i, int j, int k) { return phi_s(n, s, i, j, k) * scale; };
  std::vector<std::vector<long long>> out;
  const std::size_t m = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  std::vector<long long> t(m, 0);
  for (;;) {
    auto r = [&](int a, int b) { return t[static_cast<std::size_t>(a * n + b)]; };
    if (rform_ok(n, phi, r, modulus)) out.push_back(t);
    std::size_t i = m;
    while (i > 0 && ++t[i - 1] == modulus) t[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

/// As above but only over normalized tables (r(e, .) = r(., e) = 0).
inline std::vector<std::vector<long long>> brute_rforms_normalized(int n, int s, long long modulus) {
  const long long scale = modulus / n;
  auto phi = [&](int i, int j, int k) { return phi_s(n, s, i, j, k) * scale; };
  std::vector<std::vector<long long>> out;
  const std::size_t k = static_cast<std::size_t>(n - 1) * static_cast<std::size_t>(n - 1);
  std::vector<long long> t(k, 0);
  for (;;) {
    auto r = [&](int a, int b) {
      return a == 0 || b == 0 ? 0LL : t[static_cast<std::size_t>((a - 1) * (n - 1) + (b - 1))];
    };
    if (rform_ok(n, phi, r, modulus)) {
      std::vector<long long> full(static_cast<std::size_t>(n * n));
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) full[static_cast<std::size_t>(a * n + b)] = r(a, b);
      out.push_back(full);
    }
    std::size_t i = k;
    while (i > 0 && ++t[i - 1] == modulus) t[--i] = 0;
    if (i == 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Skew-symmetric bicharacters on Z_2 x Z_2 with values in mu_N: determined
/// by their values on generator pairs, then checked pointwise.
inline int count_bicharacters_z2z2(long long modulus) {
  int count = 0;
  // Elements (a, b) with index 2a + b.
  for (long long r11 = 0; r11 < modulus; ++r11)
    for (long long r12 = 0; r12 < modulus; ++r12)
      for (long long r21 = 0; r21 < modulus; ++r21)
        for (long long r22 = 0; r22 < modulus; ++r22) {
          auto r = [&](int x, int y) {
            const int a1 = x / 2, b1 = x % 2, a2 = y / 2, b2 = y % 2;
            return a1 * a2 * r11 + a1 * b2 * r12 + b1 * a2 * r21 + b1 * b2 * r22;
          };
          auto md = [&](long long v) { return ((v % modulus) + modulus) % modulus; };
          bool ok = true;
          for (int f = 0; f < 4 && ok; ++f)
            for (int g = 0; g < 4 && ok; ++g) {
              ok = md(r(f, g) + r(g, f)) == 0;
              for (int h = 0; h < 4 && ok; ++h) {
                const int gh = g ^ h, fg = f ^ g;
                ok = md(r(f, gh) - r(f, g) - r(f, h)) == 0 && md(r(fg, h) - r(f, h) - r(g, h)) == 0;
              }
            }
          if (ok) ++count;
        }
  return count;
}

/// A path on Q(Z_n, {g:1}) with the unique arrow out of each vertex: base and length.
struct ZPath {
  int base;
  int length;
  friend auto operator<=>(const ZPath&, const ZPath&) = default;
};

/// Direct expansion of the shuffle product on Q(Z_n, {g:1}) for exponent
/// tables over Z/N with N | 2 (so every scalar is +1 or -1): all binary words
/// with the right number of ones, brackets evaluated from the action formulas.
inline std::map<ZPath, long long> shuffle_z(int n, const std::function<long long(int, int, int)>& phi,
                                            const std::function<long long(int, int)>& r, long long modulus,
                                            ZPath a, ZPath b) {
  std::map<ZPath, long long> out;
  const int total = a.length + b.length;
  for (int word = 0; word < (1 << total); ++word) {
    int ones = 0;
    for (int i = 0; i < total; ++i) ones += (word >> i) & 1;
    if (ones != a.length) continue;
    // Walk both factors: position i uses bit i of the word (bit 0 first).
    int va = a.base, vb = b.base;
    long long e = 0;
    for (int i = 0; i < total; ++i) {
      if ((word >> i) & 1) {
        // arrow of a from va (gen 1) acted on by vertex vb on the right
        e += r(vb, (va + 1) % n) - r(vb, va) + phi(vb, va, 1);
        va = (va + 1) % n;
      } else {
        // vertex va acting on the left of the arrow of b from vb
        e += phi(va, vb, 1);
        vb = (vb + 1) % n;
      }
    }
    const long long sign = ((e % modulus) + modulus) % modulus == 0 ? 1 : -1;
    out[ZPath{(a.base + b.base) % n, total}] += sign;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

/// Complex embedding zeta_N -> exp(2 pi i / N), used to cross-check field arithmetic.
inline std::complex<double> embed(int order, const std::vector<double>& coeffs) {
  const double two_pi = 6.283185307179586476925286766559;
  std::complex<double> z = std::polar(1.0, two_pi / order), acc = 0, p = 1;
  for (double c : coeffs) {
    acc += c * p;
    p *= z;
  }
  return acc;
}

}  // namespace oracle
