#include "coquasi/exact/smith.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

#include "coquasi/errors.hpp"

namespace coquasi::exact {

namespace {

bool abs_less(const BigInt& a, const BigInt& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0; }

Residue mod_floor(const BigInt& v, Residue n) {
  BigInt r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(n));
  return static_cast<Residue>(r.get_si());
}

Residue mod_floor(Residue v, Residue n) {
  Residue r = v % n;
  return r < 0 ? r + n : r;
}

// Inverse of a modulo m, gcd(a, m) = 1, m >= 1.
Residue inverse_mod(Residue a, Residue m) {
  if (m == 1) return 0;
  Residue t = 0, new_t = 1, r = m, new_r = mod_floor(a, m);
  while (new_r != 0) {
    Residue q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return mod_floor(t, m);
}

// Runs the diagonalisation, mirroring row operations onto U (optional) and
// onto a right-hand side (optional), and column operations onto V.
class SmithReducer {
 public:
  SmithReducer(IntMatrix a, bool track_u, std::vector<BigInt>* rhs)
      : a_(std::move(a)), track_u_(track_u), rhs_(rhs) {
    if (track_u_) u_ = IntMatrix::identity(a_.rows());
    v_ = IntMatrix::identity(a_.cols());
  }

  void run() {
    const std::size_t steps = std::min(a_.rows(), a_.cols());
    for (std::size_t t = 0; t < steps; ++t) {
      if (!place_pivot(t)) break;
      reduce_step(t);
      if (a_.at(t, t) < 0) negate_row(t);
    }
  }

  IntMatrix& a() { return a_; }
  IntMatrix& u() { return u_; }
  IntMatrix& v() { return v_; }

 private:
  bool place_pivot(std::size_t t) {
    std::size_t best_r = 0, best_c = 0;
    bool found = false;
    BigInt best;
    for (std::size_t r = t; r < a_.rows(); ++r) {
      for (std::size_t c = t; c < a_.cols(); ++c) {
        const BigInt& x = a_.at(r, c);
        if (x == 0) continue;
        if (!found || abs_less(x, best)) {
          best = x;
          best_r = r;
          best_c = c;
          found = true;
          if (best == 1 || best == -1) break;
        }
      }
      if (found && (best == 1 || best == -1)) break;
    }
    if (!found) return false;
    swap_rows(t, best_r);
    swap_cols(t, best_c);
    return true;
  }

  void reduce_step(std::size_t t) {
    BigInt q;
    for (;;) {
      bool clean = true;
      for (std::size_t r = t + 1; r < a_.rows(); ++r) {
        if (a_.at(r, t) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a_.at(r, t).get_mpz_t(), a_.at(t, t).get_mpz_t());
        add_row(r, t, -q);
        if (a_.at(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < a_.cols(); ++c) {
        if (a_.at(t, c) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a_.at(t, c).get_mpz_t(), a_.at(t, t).get_mpz_t());
        add_col(c, t, -q);
        if (a_.at(t, c) != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot survived; promote the smallest.
        std::size_t best_r = t, best_c = t;
        for (std::size_t r = t + 1; r < a_.rows(); ++r) {
          if (a_.at(r, t) != 0 && abs_less(a_.at(r, t), a_.at(best_r, best_c))) {
            best_r = r;
            best_c = t;
          }
        }
        for (std::size_t c = t + 1; c < a_.cols(); ++c) {
          if (a_.at(t, c) != 0 && abs_less(a_.at(t, c), a_.at(best_r, best_c))) {
            best_r = t;
            best_c = c;
          }
        }
        swap_rows(t, best_r);
        swap_cols(t, best_c);
        continue;
      }
      // Row and column are clear; enforce divisibility of the remaining block.
      bool divisible = true;
      for (std::size_t r = t + 1; r < a_.rows() && divisible; ++r) {
        for (std::size_t c = t + 1; c < a_.cols(); ++c) {
          if (a_.at(r, c) != 0 && !mpz_divisible_p(a_.at(r, c).get_mpz_t(), a_.at(t, t).get_mpz_t())) {
            add_row(t, r, BigInt(1));
            divisible = false;
            break;
          }
        }
      }
      if (divisible) return;
    }
  }

  void swap_rows(std::size_t x, std::size_t y) {
    if (x == y) return;
    a_.swap_rows(x, y);
    if (track_u_) u_.swap_rows(x, y);
    if (rhs_) std::swap((*rhs_)[x], (*rhs_)[y]);
  }

  void swap_cols(std::size_t x, std::size_t y) {
    if (x == y) return;
    a_.swap_cols(x, y);
    v_.swap_cols(x, y);
  }

  void add_row(std::size_t dst, std::size_t src, const BigInt& f) {
    a_.add_row_multiple(dst, src, f);
    if (track_u_) u_.add_row_multiple(dst, src, f);
    if (rhs_) (*rhs_)[dst] += f * (*rhs_)[src];
  }

  void add_col(std::size_t dst, std::size_t src, const BigInt& f) {
    a_.add_col_multiple(dst, src, f);
    v_.add_col_multiple(dst, src, f);
  }

  void negate_row(std::size_t r) {
    a_.negate_row(r);
    if (track_u_) u_.negate_row(r);
    if (rhs_) (*rhs_)[r] = -(*rhs_)[r];
  }

  IntMatrix a_;
  IntMatrix u_;
  IntMatrix v_;
  bool track_u_;
  std::vector<BigInt>* rhs_;
};

}  // namespace

std::vector<BigInt> SmithDecomposition::diagonal() const {
  std::vector<BigInt> d;
  for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i) d.push_back(S.at(i, i));
  return d;
}

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  SmithReducer red(a, true, nullptr);
  red.run();
  return SmithDecomposition{std::move(red.u()), std::move(red.a()), std::move(red.v())};
}

BigInt ModSolutionSet::count() const {
  if (empty()) return 0;
  BigInt c = 1;
  for (const auto& g : kernel_basis) c *= g.period;
  return c;
}

std::vector<ResidueVector> ModSolutionSet::enumerate(std::size_t limit) const {
  if (empty()) return {};
  const BigInt total = count();
  if (total > BigInt(static_cast<unsigned long>(limit))) {
    throw LimitExceeded("solution set has " + total.get_str() + " points, limit is " +
                        std::to_string(limit));
  }
  return enumerate_first(limit);
}

std::vector<ResidueVector> ModSolutionSet::enumerate_first(std::size_t limit) const {
  std::vector<ResidueVector> out;
  if (empty() || limit == 0) return out;
  std::vector<Residue> digits(kernel_basis.size(), 0);
  while (out.size() < limit) {
    ResidueVector x = *particular;
    for (std::size_t g = 0; g < kernel_basis.size(); ++g) {
      if (digits[g] == 0) continue;
      for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] = mod_floor(x[i] + digits[g] * kernel_basis[g].vector[i], modulus);
      }
    }
    out.push_back(std::move(x));
    std::size_t g = 0;
    while (g < digits.size() && ++digits[g] == kernel_basis[g].period) digits[g++] = 0;
    if (g == digits.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

ModSolutionSet solve_linear_mod(const IntMatrix& a, std::span<const BigInt> b, Residue modulus) {
  if (modulus < 1) throw Error("modulus must be positive");
  if (b.size() != a.rows()) throw Error("right-hand side length does not match the system");
  const std::size_t n = a.cols();

  ModSolutionSet result;
  result.modulus = modulus;
  result.unknowns = n;

  // The congruence only sees residues, so rows are reduced mod N first;
  // zero rows are consistency checks and repeated rows carry no information.
  std::set<std::pair<std::vector<Residue>, Residue>> seen;
  IntMatrix reduced(0, n);
  std::vector<BigInt> rhs;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::vector<Residue> row(n);
    bool zero = true;
    for (std::size_t c = 0; c < n; ++c) {
      row[c] = mod_floor(a.at(r, c), modulus);
      zero = zero && row[c] == 0;
    }
    const Residue br = mod_floor(b[r], modulus);
    if (zero) {
      if (br != 0) return result;
      continue;
    }
    if (!seen.emplace(row, br).second) continue;
    std::vector<BigInt> big;
    big.reserve(n);
    for (Residue v : row) big.emplace_back(static_cast<long>(v));
    reduced.push_row(big);
    rhs.emplace_back(static_cast<long>(br));
  }

  SmithReducer red(reduced, false, &rhs);
  red.run();
  const IntMatrix& s = red.a();
  const IntMatrix& v = red.v();

  ResidueVector y(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const BigInt d = i < s.rows() ? BigInt(s.at(i, i)) : BigInt(0);
    const Residue dm = mod_floor(d, modulus);
    const Residue g = std::gcd(dm, modulus);
    if (i < s.rows()) {
      const Residue ci = mod_floor(rhs[i], modulus);
      if (ci % g != 0) {
        result.kernel_basis.clear();
        return result;
      }
      const Residue m = modulus / g;
      y[i] = mod_floor((ci / g) % m * inverse_mod(dm / g, m), m);
    }
    if (g > 1) {
      ResidueVector gen(n);
      const Residue step = modulus / g;
      for (std::size_t r = 0; r < n; ++r) gen[r] = mod_floor(mod_floor(v.at(r, i), modulus) * step, modulus);
      result.kernel_basis.push_back({std::move(gen), g});
    }
  }
  for (std::size_t i = n; i < s.rows(); ++i) {
    if (mod_floor(rhs[i], modulus) != 0) {
      result.kernel_basis.clear();
      return result;
    }
  }

  ResidueVector x(n, 0);
  for (std::size_t r = 0; r < n; ++r) {
    Residue acc = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (y[c] == 0) continue;
      acc = mod_floor(acc + mod_floor(v.at(r, c), modulus) * y[c], modulus);
    }
    x[r] = acc;
  }
  result.particular = std::move(x);
  return result;
}

bool satisfies(const IntMatrix& a, std::span<const BigInt> b, Residue modulus,
               std::span<const Residue> x) {
  if (x.size() != a.cols() || b.size() != a.rows()) return false;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    BigInt acc = -b[r];
    for (std::size_t c = 0; c < a.cols(); ++c) acc += a.at(r, c) * BigInt(static_cast<long>(x[c]));
    if (mod_floor(acc, modulus) != 0) return false;
  }
  return true;
}

}  // namespace coquasi::exact
