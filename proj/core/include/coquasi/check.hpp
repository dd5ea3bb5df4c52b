#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace coquasi {

/// First violating tuple of an identity check, in lexicographic order.
struct Witness {
  std::string condition;
  std::vector<std::string> args;
  std::string detail;
};

struct CheckResult {
  bool ok = true;
  std::optional<Witness> witness;
  std::uint64_t tuples_checked = 0;

  explicit operator bool() const { return ok; }
};

}  // namespace coquasi
