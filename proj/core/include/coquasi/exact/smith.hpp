#pragma once

// Smith normal form over Z and the solver for linear congruence systems
// A x = b (mod N) built on it.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "coquasi/exact/int_matrix.hpp"

namespace coquasi::exact {

using Residue = std::int64_t;
using ResidueVector = std::vector<Residue>;

/// U * A * V = S with U, V unimodular and S diagonal, d1 | d2 | ..., d_i >= 0.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;

  /// Diagonal of S, min(rows, cols) entries.
  std::vector<BigInt> diagonal() const;
};

/// Pivoting rule: the smallest nonzero |entry| of the remaining block,
/// first in row-major order on ties. Output is deterministic.
SmithDecomposition smith_normal_form(const IntMatrix& a);

struct KernelGenerator {
  ResidueVector vector;
  Residue period = 1;

  friend bool operator==(const KernelGenerator&, const KernelGenerator&) = default;
};

/// {particular + sum t_i * kernel_basis[i] : 0 <= t_i < period_i} mod N.
/// Distinct coefficient tuples give distinct residue vectors.
struct ModSolutionSet {
  Residue modulus = 1;
  std::size_t unknowns = 0;
  std::optional<ResidueVector> particular;
  std::vector<KernelGenerator> kernel_basis;

  bool empty() const { return !particular.has_value(); }

  /// Exact number of solutions (product of the periods, or 0).
  BigInt count() const;

  /// Every solution, sorted lexicographically. Throws LimitExceeded when
  /// count() > limit.
  std::vector<ResidueVector> enumerate(std::size_t limit) const;
  /// The first `limit` points in coefficient order (first generator fastest), sorted.
  std::vector<ResidueVector> enumerate_first(std::size_t limit) const;
};

ModSolutionSet solve_linear_mod(const IntMatrix& a, std::span<const BigInt> b, Residue modulus);

/// Direct check that A x = b (mod N).
bool satisfies(const IntMatrix& a, std::span<const BigInt> b, Residue modulus,
               std::span<const Residue> x);

}  // namespace coquasi::exact
