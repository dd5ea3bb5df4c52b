#include "coquasi/group.hpp"

#include <charconv>
#include <numeric>
#include <sstream>

#include "coquasi/errors.hpp"

namespace coquasi {

namespace {

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(pos, comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw ParseError("expected an integer, got '" + std::string(tok) + "'");
    }
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

}  // namespace

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> factors) : factors_(std::move(factors)) {
  long order = 1;
  for (int n : factors_) {
    if (n < 1) throw GroupMismatch("invariant factors must be >= 1");
    order *= n;
    if (order > kMaxOrder) throw SizeExceeded("group order exceeds " + std::to_string(kMaxOrder));
    exponent_ = std::lcm(exponent_, n);
  }
  order_ = static_cast<int>(order);

  const auto elems = elements();
  const std::size_t m = elems.size();
  mul_table_.resize(m * m);
  inv_table_.resize(m);
  for (std::size_t a = 0; a < m; ++a) {
    inv_table_[a] = index_of(inv(elems[a]));
    for (std::size_t b = 0; b < m; ++b) {
      mul_table_[a * m + b] = index_of(mul(elems[a], elems[b]));
    }
  }
}

void FiniteAbelianGroup::check(const GroupElement& g) const {
  if (g.residues.size() != factors_.size()) {
    throw GroupMismatch("element has " + std::to_string(g.residues.size()) +
                        " components, group has " + std::to_string(factors_.size()));
  }
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (g.residues[i] < 0 || g.residues[i] >= factors_[i]) {
      throw GroupMismatch("residue " + std::to_string(g.residues[i]) + " out of range for Z" +
                          std::to_string(factors_[i]));
    }
  }
}

bool FiniteAbelianGroup::contains(const GroupElement& g) const {
  if (g.residues.size() != factors_.size()) return false;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (g.residues[i] < 0 || g.residues[i] >= factors_[i]) return false;
  }
  return true;
}

GroupElement FiniteAbelianGroup::identity() const {
  return GroupElement{std::vector<int>(factors_.size(), 0)};
}

GroupElement FiniteAbelianGroup::mul(const GroupElement& g, const GroupElement& h) const {
  check(g);
  check(h);
  GroupElement r = g;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    r.residues[i] = (g.residues[i] + h.residues[i]) % factors_[i];
  }
  return r;
}

GroupElement FiniteAbelianGroup::inv(const GroupElement& g) const {
  check(g);
  GroupElement r = g;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    r.residues[i] = (factors_[i] - g.residues[i]) % factors_[i];
  }
  return r;
}

GroupElement FiniteAbelianGroup::pow(const GroupElement& g, std::int64_t k) const {
  check(g);
  GroupElement r = g;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const std::int64_t n = factors_[i];
    r.residues[i] = static_cast<int>((((g.residues[i] * (k % n)) % n) + n) % n);
  }
  return r;
}

int FiniteAbelianGroup::element_order(const GroupElement& g) const {
  check(g);
  int ord = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const int n = factors_[i];
    ord = std::lcm(ord, n / std::gcd(g.residues[i], n));
  }
  return ord;
}

std::vector<GroupElement> FiniteAbelianGroup::elements() const {
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(order_));
  GroupElement cur = identity();
  for (int i = 0; i < order_; ++i) {
    out.push_back(cur);
    for (std::size_t k = factors_.size(); k-- > 0;) {
      if (++cur.residues[k] < factors_[k]) break;
      cur.residues[k] = 0;
    }
  }
  return out;
}

ElemIndex FiniteAbelianGroup::index_of(const GroupElement& g) const {
  check(g);
  int idx = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) idx = idx * factors_[i] + g.residues[i];
  return idx;
}

GroupElement FiniteAbelianGroup::element_at(ElemIndex i) const {
  if (i < 0 || i >= order_) throw GroupMismatch("element index out of range");
  GroupElement g = identity();
  for (std::size_t k = factors_.size(); k-- > 0;) {
    g.residues[k] = i % factors_[k];
    i /= factors_[k];
  }
  return g;
}

bool FiniteAbelianGroup::generates_indices(std::span<const ElemIndex> set) const {
  std::vector<char> in(static_cast<std::size_t>(order_), 0);
  std::vector<ElemIndex> frontier{identity_index()};
  in[0] = 1;
  std::size_t reached = 1;
  // Closure under right multiplication by the generators; finite, so inverses come for free.
  while (!frontier.empty()) {
    ElemIndex x = frontier.back();
    frontier.pop_back();
    for (ElemIndex s : set) {
      ElemIndex y = mul(x, s);
      if (!in[static_cast<std::size_t>(y)]) {
        in[static_cast<std::size_t>(y)] = 1;
        ++reached;
        frontier.push_back(y);
      }
    }
  }
  return reached == static_cast<std::size_t>(order_);
}

bool FiniteAbelianGroup::generates(std::span<const GroupElement> set) const {
  std::vector<ElemIndex> idx;
  idx.reserve(set.size());
  for (const auto& g : set) idx.push_back(index_of(g));
  return generates_indices(idx);
}

std::string FiniteAbelianGroup::format(const GroupElement& g) const {
  check(g);
  std::ostringstream out;
  bool any = false;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (g.residues[i] == 0) continue;
    if (any) out << ' ';
    any = true;
    out << 'g';
    if (factors_.size() > 1) out << (i + 1);
    if (g.residues[i] != 1) out << '^' << g.residues[i];
  }
  return any ? out.str() : "e";
}

GroupElement FiniteAbelianGroup::parse_element(std::string_view text) const {
  GroupElement g{parse_int_list(text)};
  if (factors_.empty() && g.residues.size() == 1 && g.residues[0] == 0) g.residues.clear();
  check(g);
  return g;
}

FiniteAbelianGroup FiniteAbelianGroup::parse(std::string_view text) {
  return FiniteAbelianGroup(parse_int_list(text));
}

std::string FiniteAbelianGroup::describe() const {
  if (factors_.empty()) return "1";
  std::ostringstream out;
  for (std::size_t i = 0; i < factors_.size(); ++i) out << (i ? " x " : "") << 'Z' << factors_[i];
  return out.str();
}

}  // namespace coquasi
