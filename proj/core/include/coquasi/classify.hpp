#pragma once

// Classification drivers: which (Phi, R) pairs exist over a Hopf quiver, the
// forcing of s = 0 for the cyclic family, the generalized Taft relations, and
// the commutativity obstruction for nonabelian groups.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coquasi/cocycle.hpp"
#include "coquasi/majid.hpp"
#include "coquasi/quiver.hpp"

namespace coquasi {

struct ClassifyOptions {
  int max_len = 3;
  /// R-form modulus; unset means lcm(default_modulus(G), modulus of Phi).
  std::optional<Residue> modulus;
  /// Cap on materialized R-forms per associator.
  std::size_t limit = 1000;
  /// How many R-forms per associator are listed in the report.
  std::size_t representatives = 8;
  unsigned jobs = 1;
};

struct ClassificationEntry {
  /// Family parameters: {s} for Z_n, one per factor for product associators, empty for a user table.
  std::vector<int> s;
  bool from_table = false;
  bool phi_trivial = false;
  CheckResult phi_conditions;
  exact::BigInt rform_count = 0;
  /// The count is exact; when it exceeds the limit only the first `limit`
  /// R-forms are materialized and verified.
  bool truncated = false;
  std::vector<RForm> representatives;
  /// Every materialized structure passed every verifier.
  bool verified = true;
  std::size_t structures_verified = 0;
  std::vector<Witness> witnesses;
};

struct ClassificationReport {
  FiniteAbelianGroup group;
  RamificationDatum ram;
  Residue modulus = 1;
  int max_len = 0;
  std::vector<ClassificationEntry> results;
  /// R-forms exist for the trivial associator and for no other.
  bool forced_s_zero = false;
  /// Wall time; kept out of serialized output so reports are reproducible.
  double seconds = 0;
};

/// Runs the full pipeline for phi_s, s = 0..n-1, on Q(Z_n, ram). Throws NotConnected.
ClassificationReport classify_zn(int n, const RamificationDatum& ram, const ClassifyOptions& opts = {});

/// The same pipeline for a given associator on the ramification's group.
/// Throws NotConnected or NotACocycle.
ClassificationReport classify_abelian(const RamificationDatum& ram, const Associator& phi,
                                      const ClassifyOptions& opts = {}, std::vector<int> s = {});

/// The pipeline over every product associator prod_i phi_{s_i} on the group.
ClassificationReport classify_abelian_family(const RamificationDatum& ram, const ClassifyOptions& opts = {});

struct TaftReport {
  int n = 0;
  int max_len = 0;
  /// The R-form (-1)^{ij} passes the R-form conditions.
  bool rform_valid = false;
  bool alpha_squared_zero = false;
  bool anticommutes = false;
  bool group_relation = false;
  std::string alpha_squared;
  std::string g_alpha;
  std::string alpha_g;
  /// The same computation with R(g,g) = +1.
  std::string control_alpha_squared;
  bool control_fails = false;

  bool ok() const { return rform_valid && alpha_squared_zero && anticommutes && group_relation && control_fails; }
};

/// x^2 = 0, gx = -xg and g^n = 1 on Q(Z_n, {g:1}) with trivial Phi and
/// R(g^i, g^j) = (-1)^{ij}. Throws OddN unless n is even and >= 2.
TaftReport taft_check(int n, int max_len = 3);

/// An arbitrary finite group given by its Cayley table over elements 0..k-1.
struct MultiplicationTable {
  std::string name;
  std::vector<std::string> elements;
  std::vector<std::vector<int>> table;

  int order() const { return static_cast<int>(elements.size()); }
  int mul(int a, int b) const { return table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }

  /// Closure, identity, inverses and associativity; throws NotAGroup.
  void validate() const;

  static MultiplicationTable from_abelian(const FiniteAbelianGroup& g);
  /// S3, D4, Q8, Z<n>, or invariant factors like "2,4"; throws ParseError.
  static MultiplicationTable builtin(std::string_view name);
  static std::vector<std::string> builtin_names();
};

struct ObstructionWitness {
  int g = 0;
  int h = 0;
  int gh = 0;
  int hg = 0;
};

/// The lexicographically first pair with gh != hg, or nullopt for an abelian
/// table. Any such pair rules out coquasitriangular structures on every Hopf
/// quiver over the group.
std::optional<ObstructionWitness> nonabelian_obstruction(const MultiplicationTable& table);

}  // namespace coquasi
