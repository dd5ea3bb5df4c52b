#pragma once

// Hopf quivers Q(G, R) over a finite abelian group and their path coalgebra.
//
// Arrow (x, t, j) runs from x to t*x. A path stores its base vertex and its
// arrows in the order they are traversed; it is written right to left,
// a_l ... a_1, so arrows[0] is a_1.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coquasi/group.hpp"

namespace coquasi {

class RamificationDatum {
 public:
  RamificationDatum() = default;
  /// Zero multiplicities are dropped.
  RamificationDatum(FiniteAbelianGroup group, std::map<ElemIndex, int> mult);

  /// "1:1" or "1,0:2;0,1:1": element residues, colon, multiplicity; ';' separated.
  static RamificationDatum parse(const FiniteAbelianGroup& group, std::string_view text);

  const FiniteAbelianGroup& group() const { return group_; }
  int multiplicity(ElemIndex g) const;
  const std::map<ElemIndex, int>& entries() const { return mult_; }
  /// Elements with nonzero multiplicity, ascending.
  std::vector<ElemIndex> support() const;
  int total_multiplicity() const;
  /// Inverse of parse, canonical order.
  std::string to_string() const;

 private:
  FiniteAbelianGroup group_;
  std::map<ElemIndex, int> mult_;
};

struct Arrow {
  ElemIndex source = 0;
  ElemIndex gen = 0;
  int index = 0;

  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

struct Path {
  ElemIndex base = 0;
  std::vector<Arrow> arrows;

  int length() const { return static_cast<int>(arrows.size()); }
  bool is_vertex() const { return arrows.empty(); }

  friend auto operator<=>(const Path&, const Path&) = default;
};

class HopfQuiver {
 public:
  static constexpr std::uint64_t kDefaultPathCeiling = 1'000'000;

  HopfQuiver() = default;
  explicit HopfQuiver(RamificationDatum ram);

  const FiniteAbelianGroup& group() const { return ram_.group(); }
  const RamificationDatum& ram() const { return ram_; }
  int vertex_count() const { return group().order(); }
  /// Ordered by (source, gen, index).
  const std::vector<Arrow>& arrows() const { return arrows_; }
  /// Arrows leaving x, in the order of arrows().
  std::vector<Arrow> arrows_from(ElemIndex x) const;

  ElemIndex target(const Arrow& a) const { return group().mul(a.gen, a.source); }
  ElemIndex source(const Path& p) const { return p.base; }
  ElemIndex target(const Path& p) const { return p.arrows.empty() ? p.base : target(p.arrows.back()); }

  /// Throws InvalidPath on a foreign arrow or a broken junction.
  void validate(const Path& p) const;
  bool contains(const Arrow& a) const;

  static Path vertex(ElemIndex x) { return Path{x, {}}; }
  static Path single(const Arrow& a) { return Path{a.source, {a}}; }
  /// Arrows [begin, end) of p as a path; an empty range is the vertex at that position.
  Path segment(const Path& p, int begin, int end) const;
  /// first followed by then: requires target(first) == source(then).
  Path concat(const Path& first, const Path& then) const;

  /// Connected iff the support of the ramification generates G.
  bool is_connected() const;

  /// Paths of length exactly l in lexicographic order. Throws SizeExceeded past `ceiling`.
  std::vector<Path> paths_of_length(int l, std::uint64_t ceiling = kDefaultPathCeiling) const;
  /// Q_0, ..., Q_L; the ceiling bounds the total.
  std::vector<std::vector<Path>> paths_up_to(int max_len, std::uint64_t ceiling = kDefaultPathCeiling) const;

  std::string format(const Arrow& a) const;
  /// e.g. "e" for a vertex, "[g#0 g^2#0]@e" for a path from e: arrows listed a_1 first.
  std::string format(const Path& p) const;

 private:
  RamificationDatum ram_;
  std::vector<Arrow> arrows_;
};

HopfQuiver build_quiver(const FiniteAbelianGroup& group, const RamificationDatum& ram);

/// A binary sequence with l ones and n - l zeros.
using ThinSplit = std::vector<std::uint8_t>;

/// All of D_l^n in lexicographic order; C(n, l) entries.
std::vector<ThinSplit> thin_splits(int l, int n);

/// Position i of a thin split applied to a path.
struct SplitComponent {
  bool is_arrow = false;
  ElemIndex vertex = 0;
  Arrow arrow;

  ElemIndex source() const { return is_arrow ? arrow.source : vertex; }
  ElemIndex target(const HopfQuiver& q) const { return is_arrow ? q.target(arrow) : vertex; }

  friend bool operator==(const SplitComponent&, const SplitComponent&) = default;
};

/// Places the arrows of p at the ones of d; each zero gets the vertex reached so far.
std::vector<SplitComponent> apply_split(const HopfQuiver& q, const ThinSplit& d, const Path& p);

/// Delta(p) = sum over cuts of (right segment) (x) (left segment), cut after
/// l, l-1, ..., 0 arrows.
std::vector<std::pair<Path, Path>> coproduct(const HopfQuiver& q, const Path& p);

/// 1 on vertices, 0 on longer paths.
int counit(const Path& p);

/// The (k-1)-fold iterated coproduct as k-tuples of consecutive segments,
/// first tensor factor = the last segment traversed.
std::vector<std::vector<Path>> iterated_coproduct(const HopfQuiver& q, const Path& p, int k);

}  // namespace coquasi
