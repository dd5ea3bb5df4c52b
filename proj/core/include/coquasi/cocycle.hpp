#pragma once

// Associators and R-forms on a finite abelian group, stored as exponent
// tables: the value at a tuple is zeta_N^table(tuple). Everything here is
// modular integer arithmetic on those exponents.

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "coquasi/check.hpp"
#include "coquasi/errors.hpp"
#include "coquasi/exact/smith.hpp"
#include "coquasi/group.hpp"

namespace coquasi {

using exact::Residue;
using exact::ResidueVector;

template <int Arity, class Tag>
class ExponentTable {
 public:
  using Args = std::array<ElemIndex, Arity>;

  ExponentTable(FiniteAbelianGroup group, Residue modulus)
      : group_(std::move(group)), modulus_(modulus), table_(size_for(group_), 0) {
    if (modulus_ < 1) throw Error("modulus must be positive");
  }

  /// `dense` is indexed lexicographically by element indices.
  ExponentTable(FiniteAbelianGroup group, Residue modulus, std::vector<Residue> dense)
      : ExponentTable(std::move(group), modulus) {
    if (dense.size() != table_.size()) throw GroupMismatch("exponent table has the wrong size");
    for (std::size_t i = 0; i < dense.size(); ++i) table_[i] = reduce(dense[i]);
  }

  const FiniteAbelianGroup& group() const { return group_; }
  Residue modulus() const { return modulus_; }
  const std::vector<Residue>& dense() const { return table_; }

  template <class... I>
    requires(sizeof...(I) == Arity)
  Residue operator()(I... idx) const {
    return table_[offset(Args{static_cast<ElemIndex>(idx)...})];
  }
  Residue at(const Args& args) const { return table_[offset(args)]; }
  void set(const Args& args, Residue value) { table_[offset(args)] = reduce(value); }

  template <class... E>
    requires(sizeof...(E) == Arity)
  Residue eval(const E&... elems) const {
    return at(Args{group_.index_of(elems)...});
  }

  /// The same root-of-unity valued map with exponents over a multiple of the modulus.
  ExponentTable lifted(Residue multiple) const {
    if (multiple % modulus_ != 0) throw Error("lift target must be a multiple of the modulus");
    ExponentTable out(group_, multiple);
    const Residue scale = multiple / modulus_;
    for (std::size_t i = 0; i < table_.size(); ++i) out.table_[i] = table_[i] * scale;
    return out;
  }

  bool is_trivial() const {
    for (Residue v : table_) {
      if (v != 0) return false;
    }
    return true;
  }

  /// Nonzero entries in lexicographic order of their arguments.
  std::vector<std::pair<Args, Residue>> nonzero_entries() const {
    std::vector<std::pair<Args, Residue>> out;
    for (std::size_t i = 0; i < table_.size(); ++i) {
      if (table_[i] != 0) out.emplace_back(unoffset(i), table_[i]);
    }
    return out;
  }

  std::size_t size() const { return table_.size(); }
  Args unoffset(std::size_t flat) const {
    Args a{};
    const auto m = static_cast<std::size_t>(group_.order());
    for (int k = Arity; k-- > 0;) {
      a[static_cast<std::size_t>(k)] = static_cast<ElemIndex>(flat % m);
      flat /= m;
    }
    return a;
  }

  Residue reduce(Residue v) const {
    Residue r = v % modulus_;
    return r < 0 ? r + modulus_ : r;
  }

  friend bool operator==(const ExponentTable&, const ExponentTable&) = default;

 private:
  static std::size_t size_for(const FiniteAbelianGroup& g) {
    std::size_t s = 1;
    for (int k = 0; k < Arity; ++k) s *= static_cast<std::size_t>(g.order());
    return s;
  }
  std::size_t offset(const Args& a) const {
    std::size_t o = 0;
    const auto m = static_cast<std::size_t>(group_.order());
    for (ElemIndex i : a) o = o * m + static_cast<std::size_t>(i);
    return o;
  }

  FiniteAbelianGroup group_;
  Residue modulus_;
  std::vector<Residue> table_;
};

struct AssociatorTag;
struct RFormTag;
struct TwoCochainTag;

/// Phi: G^3 -> mu_N.
using Associator = ExponentTable<3, AssociatorTag>;
/// R: G^2 -> mu_N.
using RForm = ExponentTable<2, RFormTag>;
/// mu: G^2 -> mu_N, the gauge parameter of a twist.
using TwoCochain = ExponentTable<2, TwoCochainTag>;

/// 2 * exponent(G)^2: large enough for every R-form value forced by the
/// R-form conditions along a cyclic factor.
Residue default_modulus(const FiniteAbelianGroup& group);

/// The cyclic family on Z_n: exponent s * i * floor((j + k) / n) at (g^i, g^j, g^k), modulus n.
Associator phi_s(int n, int s);

/// Pullback of phi_s along each projection onto Z_{n_i}, multiplied; modulus lcm(n_i).
Associator product_associator(std::span<const std::pair<int, int>> factors);

/// The coboundary d(mu)(f,g,h) = mu(g,h) - mu(fg,h) + mu(f,gh) - mu(f,g).
Associator coboundary(const TwoCochain& mu);

/// Exponent 0 whenever an argument is the identity.
CheckResult is_normalized(const Associator& phi);

/// The 3-cocycle identity on G^4, in exponents mod N.
CheckResult is_3cocycle(const Associator& phi, unsigned jobs = 1);

/// Solves d(mu) = phi over the |G|^2 unknowns mu(g,h) (index g*|G| + h);
/// nonempty iff phi is the coboundary of a mu_N-valued 2-cochain.
exact::ModSolutionSet is_coboundary(const Associator& phi);

enum class PhiRamForm {
  /// The constraints equivalent to the right and middle bimodule
  /// associativity laws for the actions built from (Phi, R).
  Standard,
  /// The same identities with the Phi-ratio of each law inverted.
  InverseRatio,
};

/// Associator constraints tied to the arrows of the quiver: checked for all
/// (e, f, g) in G^3 and every t in `support` (elements with R_t != 0).
CheckResult check_phi_ram_conditions(const Associator& phi, std::span<const ElemIndex> support,
                                     PhiRamForm form = PhiRamForm::Standard, unsigned jobs = 1);

struct LinearSystem {
  exact::IntMatrix matrix;
  std::vector<exact::BigInt> rhs;
  Residue modulus = 1;
};

/// Linearised R-form conditions over unknowns r(g,h), column g*|G| + h:
///   r(f,gh) - r(f,g) - r(f,h) = phi(g,f,h) - phi(g,h,f) - phi(f,g,h)   for all f,g,h
///   r(fg,h) - r(f,h) - r(g,h) = phi(h,f,g) + phi(f,g,h) - phi(f,h,g)   for all f,g,h
///   r(g,h) + r(h,g)           = 0                                      for all g,h
LinearSystem rform_conditions_system(const Associator& phi);

exact::ModSolutionSet rform_solutions(const Associator& phi);

/// Every R-form for phi with values in mu_N, N = phi.modulus(). Throws LimitExceeded.
std::vector<RForm> enumerate_rforms(const Associator& phi, std::size_t limit);

/// Evaluates the three R-form identities tuple by tuple.
CheckResult check_rform(const Associator& phi, const RForm& r, unsigned jobs = 1);

/// Gauge transformation by mu:
///   phi'(f,g,h) = phi(f,g,h) * d(mu)(f,g,h)
///   R'(g,h)     = mu(h,g) * R(g,h) * mu(g,h)^{-1}
std::pair<Associator, RForm> twist_pair(const Associator& phi, const RForm& r, const TwoCochain& mu);

}  // namespace coquasi
