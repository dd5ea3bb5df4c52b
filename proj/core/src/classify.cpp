#include "coquasi/classify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cctype>
#include <charconv>
#include <numeric>

#include "coquasi/errors.hpp"

namespace coquasi {

namespace {

constexpr std::size_t kMaxWitnesses = 8;

void require_connected(const RamificationDatum& ram) {
  if (!HopfQuiver(ram).is_connected()) {
    throw NotConnected("the support of the ramification datum '" + ram.to_string() + "' does not generate " +
                       ram.group().describe());
  }
}

Residue report_modulus(const FiniteAbelianGroup& g, const ClassifyOptions& opts, Residue phi_modulus) {
  if (!opts.modulus) return std::lcm(default_modulus(g), phi_modulus);
  if (*opts.modulus < 1 || *opts.modulus % phi_modulus != 0) {
    throw Error("modulus " + std::to_string(*opts.modulus) + " is not a multiple of the associator modulus " +
                std::to_string(phi_modulus));
  }
  return *opts.modulus;
}

ClassificationEntry classify_one(const HopfQuiver& quiver, const Associator& phi_n, const ClassifyOptions& opts) {
  ClassificationEntry entry;
  entry.phi_trivial = phi_n.is_trivial();
  const auto support = quiver.ram().support();
  entry.phi_conditions = check_phi_ram_conditions(phi_n, support, PhiRamForm::Standard, opts.jobs);

  const auto sols = rform_solutions(phi_n);
  entry.rform_count = sols.count();
  entry.truncated = entry.rform_count > exact::BigInt(static_cast<unsigned long>(opts.limit));
  const auto vectors = sols.enumerate_first(opts.limit);

  for (const auto& v : vectors) {
    RForm r(phi_n.group(), phi_n.modulus(), v);
    if (entry.representatives.size() < opts.representatives) entry.representatives.push_back(r);
    if (!entry.phi_conditions.ok) continue;
    const auto s = MajidStructure::unchecked(quiver, phi_n, r, opts.max_len);
    for (const auto& rep : verify_all(s, opts.max_len, opts.jobs)) {
      if (rep.result.ok) continue;
      entry.verified = false;
      if (entry.witnesses.size() < kMaxWitnesses) entry.witnesses.push_back(*rep.result.witness);
    }
    ++entry.structures_verified;
  }
  if (!entry.phi_conditions.ok && !vectors.empty()) {
    entry.verified = false;
    entry.witnesses.insert(entry.witnesses.begin(), *entry.phi_conditions.witness);
  }
  return entry;
}

bool forced_zero(const std::vector<ClassificationEntry>& results) {
  bool trivial_seen = false;
  for (const auto& e : results) {
    if (e.phi_trivial) {
      trivial_seen = true;
      if (e.rform_count == 0) return false;
    } else if (e.rform_count != 0) {
      return false;
    }
  }
  return trivial_seen;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

ClassificationReport classify_zn(int n, const RamificationDatum& ram, const ClassifyOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  const auto group = FiniteAbelianGroup::cyclic(n);
  if (!(ram.group() == group)) throw GroupMismatch("ramification datum is not over Z" + std::to_string(n));
  require_connected(ram);
  const HopfQuiver quiver(ram);

  ClassificationReport rep;
  rep.group = group;
  rep.ram = ram;
  rep.max_len = opts.max_len;
  rep.modulus = report_modulus(group, opts, n);
  for (int s = 0; s < n; ++s) {
    auto entry = classify_one(quiver, phi_s(n, s).lifted(rep.modulus), opts);
    entry.s = {s};
    rep.results.push_back(std::move(entry));
  }
  rep.forced_s_zero = forced_zero(rep.results);
  rep.seconds = seconds_since(start);
  return rep;
}

ClassificationReport classify_abelian(const RamificationDatum& ram, const Associator& phi,
                                      const ClassifyOptions& opts, std::vector<int> s) {
  const auto start = std::chrono::steady_clock::now();
  if (!(ram.group() == phi.group())) throw GroupMismatch("associator and ramification live on different groups");
  require_connected(ram);
  if (auto c = is_normalized(phi); !c.ok) throw NotACocycle("associator is not normalized");
  if (auto c = is_3cocycle(phi, opts.jobs); !c.ok) throw NotACocycle("associator fails the cocycle identity");

  ClassificationReport rep;
  rep.group = ram.group();
  rep.ram = ram;
  rep.max_len = opts.max_len;
  rep.modulus = report_modulus(rep.group, opts, phi.modulus());
  auto entry = classify_one(HopfQuiver(ram), phi.lifted(rep.modulus), opts);
  entry.from_table = s.empty();
  entry.s = std::move(s);
  rep.results.push_back(std::move(entry));
  rep.forced_s_zero = forced_zero(rep.results);
  rep.seconds = seconds_since(start);
  return rep;
}

ClassificationReport classify_abelian_family(const RamificationDatum& ram, const ClassifyOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  require_connected(ram);
  const auto& factors = ram.group().factors();
  Residue phi_mod = 1;
  for (int n : factors) phi_mod = std::lcm(phi_mod, static_cast<Residue>(n));

  ClassificationReport rep;
  rep.group = ram.group();
  rep.ram = ram;
  rep.max_len = opts.max_len;
  rep.modulus = report_modulus(rep.group, opts, phi_mod);
  const HopfQuiver quiver(ram);
  // Parameter tuples in lexicographic order, which is the element order of the group itself.
  for (const auto& params : rep.group.elements()) {
    std::vector<std::pair<int, int>> fs;
    for (std::size_t i = 0; i < factors.size(); ++i) fs.emplace_back(factors[i], params.residues[i]);
    auto entry = classify_one(quiver, product_associator(fs).lifted(rep.modulus), opts);
    entry.s = params.residues;
    rep.results.push_back(std::move(entry));
  }
  rep.forced_s_zero = forced_zero(rep.results);
  rep.seconds = seconds_since(start);
  return rep;
}

TaftReport taft_check(int n, int max_len) {
  if (n < 2 || n % 2 != 0) throw OddN("the Taft relations need an even n >= 2, got " + std::to_string(n));
  if (max_len < 2) throw TruncationOverflow("the Taft check multiplies two arrows: max_len must be >= 2");
  const auto group = FiniteAbelianGroup::cyclic(n);
  const RamificationDatum ram(group, {{1, 1}});
  const HopfQuiver quiver(ram);
  const Associator phi(group, 2);
  RForm r(group, 2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.set({i, j}, static_cast<Residue>(i) * j);

  TaftReport rep;
  rep.n = n;
  rep.max_len = max_len;
  rep.rform_valid = check_rform(phi, r).ok;

  const Arrow alpha{0, 1, 0};
  const Path a = HopfQuiver::single(alpha);
  const Path g = HopfQuiver::vertex(1);
  const auto s = MajidStructure::unchecked(quiver, phi, r, max_len);

  const auto aa = s.shuffle_product(a, a);
  rep.alpha_squared = aa.to_string(quiver);
  rep.alpha_squared_zero = aa.is_zero();

  const auto ga = s.shuffle_product(g, a);
  const auto ag = s.shuffle_product(a, g);
  rep.g_alpha = ga.to_string(quiver);
  rep.alpha_g = ag.to_string(quiver);
  rep.anticommutes = !ga.is_zero() && ga == -ag;

  GradedElement power = s.unit();
  for (int i = 0; i < n; ++i) power = s.product(power, GradedElement::basis(g));
  rep.group_relation = power == s.unit();

  const auto control = MajidStructure::unchecked(quiver, phi, RForm(group, 2), max_len);
  const auto cc = control.shuffle_product(a, a);
  rep.control_alpha_squared = cc.to_string(quiver);
  // Expected: 2 (g alpha) alpha, the path alpha followed by the arrow from g.
  const Path ga_alpha{0, {alpha, Arrow{1, 1, 0}}};
  GradedElement expected;
  expected.add(ga_alpha, Cyclo::from_rational(1, 2));
  rep.control_fails = !cc.is_zero() && cc == expected;
  return rep;
}

void MultiplicationTable::validate() const {
  const int k = order();
  if (k == 0) throw NotAGroup("empty table");
  if (static_cast<int>(table.size()) != k) throw NotAGroup("table has the wrong number of rows");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != k) throw NotAGroup("table row has the wrong length");
    for (int v : row) {
      if (v < 0 || v >= k) throw NotAGroup("table entry out of range");
    }
  }
  int e = -1;
  for (int c = 0; c < k && e < 0; ++c) {
    bool ok = true;
    for (int x = 0; x < k && ok; ++x) ok = mul(c, x) == x && mul(x, c) == x;
    if (ok) e = c;
  }
  if (e < 0) throw NotAGroup("no identity element");
  for (int x = 0; x < k; ++x) {
    bool has_inv = false;
    for (int y = 0; y < k && !has_inv; ++y) has_inv = mul(x, y) == e && mul(y, x) == e;
    if (!has_inv) throw NotAGroup("element " + elements[static_cast<std::size_t>(x)] + " has no inverse");
  }
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
          throw NotAGroup("not associative at (" + elements[static_cast<std::size_t>(a)] + ", " +
                          elements[static_cast<std::size_t>(b)] + ", " + elements[static_cast<std::size_t>(c)] + ")");
        }
      }
}

MultiplicationTable MultiplicationTable::from_abelian(const FiniteAbelianGroup& g) {
  MultiplicationTable t;
  t.name = g.describe();
  const int k = g.order();
  for (int i = 0; i < k; ++i) t.elements.push_back(g.format(i));
  t.table.assign(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(k)));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) t.table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = g.mul(a, b);
  return t;
}

namespace {

MultiplicationTable symmetric3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  MultiplicationTable t;
  t.name = "S3";
  for (const auto& q : perms) t.elements.push_back(std::to_string(q[0] + 1) + std::to_string(q[1] + 1) + std::to_string(q[2] + 1));
  const auto k = perms.size();
  t.table.assign(k, std::vector<int>(k));
  // (a b)(i) = a(b(i)): b acts first.
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[static_cast<std::size_t>(i)] = perms[a][static_cast<std::size_t>(perms[b][static_cast<std::size_t>(i)])];
      t.table[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return t;
}

MultiplicationTable dihedral4() {
  // r^i s^j at index 4j + i; s r = r^-1 s.
  MultiplicationTable t;
  t.name = "D4";
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 4; ++i) {
      std::string nm = i == 0 ? "" : (i == 1 ? "r" : "r^" + std::to_string(i));
      if (j) nm += "s";
      t.elements.push_back(nm.empty() ? "e" : nm);
    }
  t.table.assign(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const int ia = a % 4, ja = a / 4, ib = b % 4, jb = b / 4;
      const int i = ((ia + (ja ? -ib : ib)) % 4 + 4) % 4;
      const int j = (ja + jb) % 2;
      t.table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 4 * j + i;
    }
  return t;
}

MultiplicationTable quaternion8() {
  // Index 2u + sign, units u = 1, i, j, k; sign 1 means negative.
  static constexpr int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int unit_sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  const char* names[] = {"1", "i", "j", "k"};
  MultiplicationTable t;
  t.name = "Q8";
  for (int u = 0; u < 4; ++u) {
    t.elements.push_back(names[u]);
    t.elements.push_back(std::string("-") + names[u]);
  }
  t.table.assign(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const int ua = a / 2, ub = b / 2;
      const int sign = (a % 2 + b % 2 + unit_sign[ua][ub]) % 2;
      t.table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 2 * unit_mul[ua][ub] + sign;
    }
  return t;
}

}  // namespace

MultiplicationTable MultiplicationTable::builtin(std::string_view name) {
  if (name == "S3") return symmetric3();
  if (name == "D4") return dihedral4();
  if (name == "Q8") return quaternion8();
  if (name.size() > 1 && name[0] == 'Z') {
    int n = 0;
    auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), n);
    if (ec == std::errc() && ptr == name.data() + name.size() && n >= 1) {
      return from_abelian(FiniteAbelianGroup::cyclic(n));
    }
  }
  if (!name.empty() && std::isdigit(static_cast<unsigned char>(name[0]))) {
    return from_abelian(FiniteAbelianGroup::parse(name));
  }
  throw ParseError("unknown group '" + std::string(name) + "'");
}

std::vector<std::string> MultiplicationTable::builtin_names() { return {"S3", "D4", "Q8", "Z<n>", "<n1>,<n2>,..."}; }

std::optional<ObstructionWitness> nonabelian_obstruction(const MultiplicationTable& table) {
  table.validate();
  for (int g = 0; g < table.order(); ++g)
    for (int h = 0; h < table.order(); ++h) {
      if (table.mul(g, h) != table.mul(h, g)) return ObstructionWitness{g, h, table.mul(g, h), table.mul(h, g)};
    }
  return std::nullopt;
}

}  // namespace coquasi
