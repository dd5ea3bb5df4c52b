#include "coquasi/quiver.hpp"

#include <charconv>
#include <sstream>

#include "coquasi/errors.hpp"

namespace coquasi {

RamificationDatum::RamificationDatum(FiniteAbelianGroup group, std::map<ElemIndex, int> mult)
    : group_(std::move(group)) {
  for (auto [g, m] : mult) {
    if (g < 0 || g >= group_.order()) throw GroupMismatch("ramification element out of range");
    if (m < 0) throw ParseError("multiplicities must be nonnegative");
    if (m > 0) mult_[g] = m;
  }
}

RamificationDatum RamificationDatum::parse(const FiniteAbelianGroup& group, std::string_view text) {
  std::map<ElemIndex, int> mult;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t semi = text.find(';', pos);
    if (semi == std::string_view::npos) semi = text.size();
    const std::string_view item = text.substr(pos, semi - pos);
    pos = semi + 1;
    if (item.find_first_not_of(' ') == std::string_view::npos) continue;
    const std::size_t colon = item.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError("ramification entry '" + std::string(item) + "' lacks ':multiplicity'");
    }
    const ElemIndex g = group.index_of(group.parse_element(item.substr(0, colon)));
    std::string_view ms = item.substr(colon + 1);
    while (!ms.empty() && ms.front() == ' ') ms.remove_prefix(1);
    while (!ms.empty() && ms.back() == ' ') ms.remove_suffix(1);
    int m = 0;
    auto [ptr, ec] = std::from_chars(ms.data(), ms.data() + ms.size(), m);
    if (ms.empty() || ec != std::errc() || ptr != ms.data() + ms.size() || m < 0) {
      throw ParseError("bad multiplicity '" + std::string(ms) + "'");
    }
    mult[g] += m;
  }
  return RamificationDatum(group, std::move(mult));
}

int RamificationDatum::multiplicity(ElemIndex g) const {
  auto it = mult_.find(g);
  return it == mult_.end() ? 0 : it->second;
}

std::vector<ElemIndex> RamificationDatum::support() const {
  std::vector<ElemIndex> out;
  for (auto [g, m] : mult_) out.push_back(g);
  return out;
}

int RamificationDatum::total_multiplicity() const {
  int total = 0;
  for (auto [g, m] : mult_) total += m;
  return total;
}

std::string RamificationDatum::to_string() const {
  std::string out;
  for (auto [g, m] : mult_) {
    if (!out.empty()) out += ';';
    const auto elem = group_.element_at(g);
    for (std::size_t i = 0; i < elem.residues.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(elem.residues[i]);
    }
    if (elem.residues.empty()) out += '0';
    out += ':' + std::to_string(m);
  }
  return out;
}

HopfQuiver::HopfQuiver(RamificationDatum ram) : ram_(std::move(ram)) {
  for (ElemIndex x = 0; x < group().order(); ++x) {
    for (auto [g, m] : ram_.entries()) {
      for (int j = 0; j < m; ++j) arrows_.push_back(Arrow{x, g, j});
    }
  }
}

HopfQuiver build_quiver(const FiniteAbelianGroup& group, const RamificationDatum& ram) {
  if (!(ram.group() == group)) throw GroupMismatch("ramification datum belongs to another group");
  return HopfQuiver(ram);
}

std::vector<Arrow> HopfQuiver::arrows_from(ElemIndex x) const {
  std::vector<Arrow> out;
  for (auto [g, m] : ram_.entries()) {
    for (int j = 0; j < m; ++j) out.push_back(Arrow{x, g, j});
  }
  return out;
}

bool HopfQuiver::contains(const Arrow& a) const {
  return a.source >= 0 && a.source < group().order() && a.index >= 0 && a.index < ram_.multiplicity(a.gen);
}

void HopfQuiver::validate(const Path& p) const {
  if (p.base < 0 || p.base >= group().order()) throw InvalidPath("base vertex out of range");
  ElemIndex at = p.base;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    const Arrow& a = p.arrows[i];
    if (!contains(a)) throw InvalidPath("arrow " + std::to_string(i + 1) + " is not in the quiver");
    if (a.source != at) throw InvalidPath("arrow " + std::to_string(i + 1) + " does not start where the path is");
    at = target(a);
  }
}

Path HopfQuiver::segment(const Path& p, int begin, int end) const {
  if (begin < 0 || end > p.length() || begin > end) throw InvalidPath("segment out of range");
  Path out;
  if (begin == end) {
    out.base = begin == 0 ? p.base : target(p.arrows[static_cast<std::size_t>(begin - 1)]);
    return out;
  }
  out.base = p.arrows[static_cast<std::size_t>(begin)].source;
  out.arrows.assign(p.arrows.begin() + begin, p.arrows.begin() + end);
  return out;
}

Path HopfQuiver::concat(const Path& first, const Path& then) const {
  if (target(first) != then.base) throw InvalidPath("paths are not composable");
  Path out = first;
  out.arrows.insert(out.arrows.end(), then.arrows.begin(), then.arrows.end());
  return out;
}

bool HopfQuiver::is_connected() const { return group().generates_indices(ram_.support()); }

std::vector<Path> HopfQuiver::paths_of_length(int l, std::uint64_t ceiling) const {
  if (l < 0) throw InvalidPath("negative path length");
  std::vector<Path> cur;
  for (ElemIndex x = 0; x < group().order(); ++x) cur.push_back(vertex(x));
  if (cur.size() > ceiling) throw SizeExceeded("path count exceeds ceiling " + std::to_string(ceiling));
  const auto out_degree = static_cast<std::uint64_t>(ram_.total_multiplicity());
  for (int step = 0; step < l; ++step) {
    if (static_cast<std::uint64_t>(cur.size()) * out_degree > ceiling) {
      throw SizeExceeded("path count exceeds ceiling " + std::to_string(ceiling));
    }
    std::vector<Path> next;
    next.reserve(cur.size() * out_degree);
    for (const Path& p : cur) {
      for (const Arrow& a : arrows_from(target(p))) {
        Path q = p;
        q.arrows.push_back(a);
        next.push_back(std::move(q));
      }
    }
    cur = std::move(next);
  }
  return cur;
}

std::vector<std::vector<Path>> HopfQuiver::paths_up_to(int max_len, std::uint64_t ceiling) const {
  if (max_len < 0) throw InvalidPath("negative path length");
  std::vector<std::vector<Path>> out;
  std::uint64_t total = 0;
  for (int l = 0; l <= max_len; ++l) {
    out.push_back(paths_of_length(l, ceiling - std::min(ceiling, total)));
    total += out.back().size();
    if (total > ceiling) throw SizeExceeded("path count exceeds ceiling " + std::to_string(ceiling));
  }
  return out;
}

std::string HopfQuiver::format(const Arrow& a) const {
  std::string out = group().format(a.gen) + '#' + std::to_string(a.index);
  return out;
}

std::string HopfQuiver::format(const Path& p) const {
  if (p.arrows.empty()) return group().format(p.base);
  std::string out = "[";
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) out += ' ';
    out += format(p.arrows[i]);
  }
  return out + "]@" + group().format(p.base);
}

std::vector<ThinSplit> thin_splits(int l, int n) {
  if (l < 0 || n < 0 || l > n) throw InvalidPath("thin split needs 0 <= l <= n");
  std::vector<ThinSplit> out;
  ThinSplit d(static_cast<std::size_t>(n), 0);
  // Recursion over positions, zeros before ones, yields lexicographic order.
  auto rec = [&](auto&& self, int pos, int ones_left) -> void {
    if (pos == n) {
      if (ones_left == 0) out.push_back(d);
      return;
    }
    if (n - pos > ones_left) {
      d[static_cast<std::size_t>(pos)] = 0;
      self(self, pos + 1, ones_left);
    }
    if (ones_left > 0) {
      d[static_cast<std::size_t>(pos)] = 1;
      self(self, pos + 1, ones_left - 1);
    }
  };
  rec(rec, 0, l);
  return out;
}

std::vector<SplitComponent> apply_split(const HopfQuiver& q, const ThinSplit& d, const Path& p) {
  std::size_t ones = 0;
  for (auto b : d) ones += b ? 1 : 0;
  if (ones != p.arrows.size()) throw InvalidPath("thin split does not match the path length");
  std::vector<SplitComponent> out;
  out.reserve(d.size());
  ElemIndex at = p.base;
  std::size_t next = 0;
  for (auto b : d) {
    SplitComponent c;
    if (b) {
      c.is_arrow = true;
      c.arrow = p.arrows[next++];
      at = q.target(c.arrow);
    } else {
      c.vertex = at;
    }
    out.push_back(c);
  }
  return out;
}

std::vector<std::pair<Path, Path>> coproduct(const HopfQuiver& q, const Path& p) {
  std::vector<std::pair<Path, Path>> out;
  for (int c = p.length(); c >= 0; --c) out.emplace_back(q.segment(p, c, p.length()), q.segment(p, 0, c));
  return out;
}

int counit(const Path& p) { return p.is_vertex() ? 1 : 0; }

std::vector<std::vector<Path>> iterated_coproduct(const HopfQuiver& q, const Path& p, int k) {
  if (k < 1) throw InvalidPath("iterated coproduct needs k >= 1");
  std::vector<std::vector<Path>> out;
  std::vector<int> cuts(static_cast<std::size_t>(k + 1));
  cuts[0] = 0;
  cuts[static_cast<std::size_t>(k)] = p.length();
  // cuts[1] <= ... <= cuts[k-1]; factor i (0-based) is segment (cuts[k-1-i], cuts[k-i]).
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == k) {
      std::vector<Path> tuple;
      tuple.reserve(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) {
        tuple.push_back(q.segment(p, cuts[static_cast<std::size_t>(k - 1 - i)], cuts[static_cast<std::size_t>(k - i)]));
      }
      out.push_back(std::move(tuple));
      return;
    }
    for (int c = cuts[static_cast<std::size_t>(pos - 1)]; c <= p.length(); ++c) {
      cuts[static_cast<std::size_t>(pos)] = c;
      self(self, pos + 1);
    }
  };
  rec(rec, 1);
  return out;
}

}  // namespace coquasi
