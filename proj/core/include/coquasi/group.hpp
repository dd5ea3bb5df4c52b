#pragma once

// Finite abelian groups Z_{n1} x ... x Z_{nk}, presented by invariant factors.
//
// Elements are stored additively as residue vectors but printed
// multiplicatively: the generator of the i-th factor is g_i (or g when there
// is a single factor) and the identity is e.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace coquasi {

struct GroupElement {
  std::vector<int> residues;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// Position of an element in the lexicographic enumeration of its group.
using ElemIndex = int;

class FiniteAbelianGroup {
 public:
  /// Groups larger than this are rejected; every downstream table is cubic in the order.
  static constexpr int kMaxOrder = 4096;

  FiniteAbelianGroup() : FiniteAbelianGroup(std::vector<int>{}) {}
  explicit FiniteAbelianGroup(std::vector<int> factors);

  static FiniteAbelianGroup cyclic(int n) { return FiniteAbelianGroup({n}); }

  const std::vector<int>& factors() const { return factors_; }
  int order() const { return order_; }
  /// lcm of the invariant factors.
  int exponent() const { return exponent_; }
  bool is_trivial() const { return order_ == 1; }

  GroupElement identity() const;
  GroupElement mul(const GroupElement& g, const GroupElement& h) const;
  GroupElement inv(const GroupElement& g) const;
  GroupElement pow(const GroupElement& g, std::int64_t k) const;
  int element_order(const GroupElement& g) const;
  /// Every element, lexicographic in the residue vector.
  std::vector<GroupElement> elements() const;
  bool contains(const GroupElement& g) const;

  /// Throws GroupMismatch for foreign elements.
  ElemIndex index_of(const GroupElement& g) const;
  GroupElement element_at(ElemIndex i) const;

  // Index-level group law, precomputed.
  ElemIndex mul(ElemIndex a, ElemIndex b) const {
    return mul_table_[static_cast<std::size_t>(a) * static_cast<std::size_t>(order_) +
                      static_cast<std::size_t>(b)];
  }
  ElemIndex inv(ElemIndex a) const { return inv_table_[static_cast<std::size_t>(a)]; }
  static constexpr ElemIndex identity_index() { return 0; }

  /// True iff the subgroup generated by the set is the whole group.
  bool generates(std::span<const GroupElement> set) const;
  bool generates_indices(std::span<const ElemIndex> set) const;

  /// Multiplicative rendering, e.g. "g1 g2^3" or "e".
  std::string format(const GroupElement& g) const;
  std::string format(ElemIndex i) const { return format(element_at(i)); }
  /// Parses "1,3" (residues, comma separated).
  GroupElement parse_element(std::string_view text) const;
  /// Parses "2,4" into a group; "" or "1" is the trivial group.
  static FiniteAbelianGroup parse(std::string_view text);
  /// e.g. "Z2 x Z4".
  std::string describe() const;

  friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    return a.factors_ == b.factors_;
  }

 private:
  void check(const GroupElement& g) const;

  std::vector<int> factors_;
  int order_ = 1;
  int exponent_ = 1;
  std::vector<ElemIndex> mul_table_;
  std::vector<ElemIndex> inv_table_;
};

}  // namespace coquasi
