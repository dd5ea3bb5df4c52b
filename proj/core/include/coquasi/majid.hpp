#pragma once

// The graded Majid algebra kQ built from (Phi, R): the Majid bimodule
// structure on arrows, the quantum shuffle product, and verifiers for the
// Majid and coquasitriangular axioms on truncated path spaces.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coquasi/check.hpp"
#include "coquasi/cocycle.hpp"
#include "coquasi/exact/cyclotomic.hpp"
#include "coquasi/quiver.hpp"

namespace coquasi {

using exact::Cyclo;

/// Finite combination of paths with cyclotomic coefficients; zero terms are never stored.
class GradedElement {
 public:
  GradedElement() = default;
  static GradedElement basis(const Path& p) { GradedElement x; x.add(p, Cyclo::one(1)); return x; }

  void add(const Path& p, const Cyclo& c);
  const std::map<Path, Cyclo>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of p, zero if absent.
  Cyclo coefficient(const Path& p) const;

  /// Set when a graded-mode product dropped terms: degrees above it are incomplete.
  std::optional<int> valid_through() const { return valid_through_; }
  void mark_truncated(int degree);

  /// Degrees that occur, ascending.
  std::vector<int> degrees() const;
  GradedElement component(int degree) const;

  GradedElement scaled(const Cyclo& c) const;
  GradedElement operator-() const { return scaled(Cyclo::from_rational(1, -1)); }
  GradedElement& operator+=(const GradedElement& rhs);
  GradedElement& operator-=(const GradedElement& rhs);
  friend GradedElement operator+(GradedElement a, const GradedElement& b) { return a += b; }
  friend GradedElement operator-(GradedElement a, const GradedElement& b) { return a -= b; }

  /// Equality of the combinations; truncation markers are ignored.
  friend bool operator==(const GradedElement& a, const GradedElement& b) { return a.terms_ == b.terms_; }

  std::string to_string(const HopfQuiver& q) const;

 private:
  std::map<Path, Cyclo> terms_;
  std::optional<int> valid_through_;
};

enum class ProductMode {
  /// Terms beyond max_len raise TruncationOverflow.
  Strict,
  /// Terms beyond max_len are dropped and the result is marked valid through max_len.
  Graded,
};

/// Deliberately broken actions, for negative controls.
enum class ActionVariant {
  Standard,
  /// f(g alpha) without its Phi factor.
  LeftWithoutPhi,
  /// (g alpha) f without its R ratio.
  RightWithoutR,
};

struct ScaledArrow {
  Residue exponent = 0;
  Arrow arrow;
};

class MajidStructure {
 public:
  /// Validates the cocycle identity, the conditions on Phi tied to the
  /// ramification, and the R-form conditions; throws Error naming the first failure.
  static MajidStructure create(HopfQuiver quiver, const Associator& phi, const RForm& r, int max_len,
                               unsigned jobs = 1);
  /// No validation: for negative controls and for inspecting invalid data.
  static MajidStructure unchecked(HopfQuiver quiver, const Associator& phi, const RForm& r, int max_len,
                                  ActionVariant variant = ActionVariant::Standard);

  const HopfQuiver& quiver() const { return quiver_; }
  const FiniteAbelianGroup& group() const { return quiver_.group(); }
  /// Both tables over the common modulus lcm(N_phi, N_R).
  const Associator& phi() const { return phi_; }
  const RForm& rform() const { return r_; }
  int max_len() const { return max_len_; }
  Residue modulus() const { return phi_.modulus(); }
  /// Coefficients live in Q(zeta_M) for this M, the least order holding every table value.
  int coefficient_order() const { return coeff_order_; }
  ActionVariant variant() const { return variant_; }

  /// zeta_N^e as an element of Q(zeta_M).
  Cyclo root(Residue e) const;

  /// f(x alpha) = Phi(f, x, t(alpha)) (f x) alpha.
  ScaledArrow act_left(ElemIndex f, const Arrow& a) const;
  /// (x alpha) f = R(f, x t(alpha)) / R(f, x) * Phi(f, x, t(alpha)) (f x) alpha.
  ScaledArrow act_right(const Arrow& a, ElemIndex f) const;

  /// The product of two basis paths, summed over thin splits.
  GradedElement shuffle_product(const Path& a, const Path& b) const;
  GradedElement product(const GradedElement& x, const GradedElement& y, ProductMode mode = ProductMode::Strict) const;
  GradedElement unit() const { return GradedElement::basis(HopfQuiver::vertex(0)); }

 private:
  MajidStructure(HopfQuiver quiver, const Associator& phi, const RForm& r, int max_len, ActionVariant variant);

  HopfQuiver quiver_;
  Associator phi_;
  RForm r_;
  int max_len_ = 0;
  int coeff_order_ = 1;
  Residue coeff_step_ = 1;
  ActionVariant variant_ = ActionVariant::Standard;
};

struct VerifyReport {
  std::string check;
  CheckResult result;
  int max_len = 0;
};

/// e(fm), (me)f and (em)f against their Phi-twisted rebracketings, for all e, f and arrows m.
VerifyReport verify_bimodule_axioms(const MajidStructure& s, unsigned jobs = 1);
/// Phi(tx,ty,tz) (xy)z = Phi(sx,sy,sz) x(yz) for path triples of total length <= L.
VerifyReport verify_quasi_associativity(const MajidStructure& s, int max_len, unsigned jobs = 1);
/// yx R(sx,sy) = R(tx,ty) xy for path pairs of total length <= L.
VerifyReport verify_r_naturality(const MajidStructure& s, int max_len, unsigned jobs = 1);
/// The two multiplicativity axioms of R on group-likes, evaluated directly.
VerifyReport verify_cqt_degree0(const MajidStructure& s);
/// The same axioms for the trivial extensions of Phi and R, on path triples of total length <= L.
VerifyReport verify_cqt_paths(const MajidStructure& s, int max_len, unsigned jobs = 1);
/// R(g,h) R(h,g) = 1 on group-likes, and the extended identity on path pairs of total length <= L.
VerifyReport verify_cotriangular(const MajidStructure& s, int max_len);

/// Every verifier above, in a fixed order.
std::vector<VerifyReport> verify_all(const MajidStructure& s, int max_len, unsigned jobs = 1);
bool all_ok(const std::vector<VerifyReport>& reports);

}  // namespace coquasi
