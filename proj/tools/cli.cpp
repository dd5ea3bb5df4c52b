#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>

#include "coquasi/classify.hpp"
#include "coquasi/cocycle.hpp"
#include "coquasi/errors.hpp"
#include "coquasi/json_io.hpp"
#include "coquasi/majid.hpp"
#include "coquasi/quiver.hpp"

namespace coquasi::cli {

namespace {

using json_io::Json;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct RunConfig {
  std::optional<std::string> group;
  std::optional<int> n;
  std::optional<std::string> s;
  std::optional<std::string> ram;
  std::optional<std::string> phi_file;
  std::optional<std::string> rform_file;
  std::optional<int> max_len;
  std::string modulus = "auto";
  std::size_t limit = 1000;
  unsigned jobs = 1;
  std::string out;
  std::string format = "json";
  bool strict = false;
  std::string table;
};

/// A finished command: the document in both formats and whether it is a mathematical negative.
struct Outcome {
  Json json;
  std::string csv;
  bool negative = false;
};

enum Flag : unsigned {
  kGroup = 1u << 0,
  kN = 1u << 1,
  kS = 1u << 2,
  kRam = 1u << 3,
  kPhi = 1u << 4,
  kRform = 1u << 5,
  kMaxLen = 1u << 6,
  kModulus = 1u << 7,
  kLimit = 1u << 8,
  kJobs = 1u << 9,
};

void add_options(CLI::App* app, RunConfig& cfg, unsigned flags) {
  if (flags & kGroup) app->add_option("--group", cfg.group, "Invariant factors, e.g. 2,4");
  if (flags & kN) app->add_option("--n", cfg.n, "Order of the cyclic group Z_n")->check(CLI::PositiveNumber);
  if (flags & kS) app->add_option("--s", cfg.s, "Cocycle family parameter(s), one per invariant factor");
  if (flags & kRam) app->add_option("--ram", cfg.ram, "Ramification datum, e.g. 1:1 or 1,0:2;0,1:1");
  if (flags & kPhi) app->add_option("--phi", cfg.phi_file, "Associator table (JSON file)");
  if (flags & kRform) app->add_option("--rform", cfg.rform_file, "R-form table (JSON file)");
  if (flags & kMaxLen) app->add_option("--max-len", cfg.max_len, "Truncation degree L")->check(CLI::NonNegativeNumber);
  if (flags & kModulus) app->add_option("--modulus", cfg.modulus, "auto or a positive integer N");
  if (flags & kLimit) app->add_option("--limit", cfg.limit, "Maximum number of R-forms to materialize");
  if (flags & kJobs) app->add_option("--jobs", cfg.jobs, "Worker threads for exhaustive checks")->check(CLI::PositiveNumber);
  app->add_option("--out", cfg.out, "Write the document to this file instead of standard output");
  app->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app->add_flag("--strict", cfg.strict, "Exit 1 on a mathematical negative");
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
}

std::vector<int> parse_ints(const std::string& text, const char* flag) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw UsageError(std::string(flag) + ": expected integers, got '" + text + "'");
    }
    if (tok.find_first_not_of(' ', used) != std::string::npos) {
      throw UsageError(std::string(flag) + ": expected integers, got '" + text + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) throw UsageError(std::string(flag) + ": empty value");
  return out;
}

FiniteAbelianGroup resolve_group(const RunConfig& cfg, const std::optional<Associator>& phi = std::nullopt) {
  if (cfg.group && cfg.n) throw UsageError("--group and --n are mutually exclusive");
  if (cfg.n) return FiniteAbelianGroup::cyclic(*cfg.n);
  if (cfg.group) {
    for (int f : parse_ints(*cfg.group, "--group")) {
      if (f < 1) throw UsageError("--group: invariant factors must be >= 1");
    }
    return FiniteAbelianGroup::parse(*cfg.group);
  }
  if (phi) return phi->group();
  throw UsageError("one of --group or --n is required");
}

std::optional<Associator> phi_from_file(const RunConfig& cfg) {
  if (!cfg.phi_file) return std::nullopt;
  return json_io::parse_associator(read_json_file(*cfg.phi_file));
}

Associator resolve_phi(const RunConfig& cfg, const FiniteAbelianGroup& g, const std::optional<Associator>& file) {
  if (file && cfg.s) throw UsageError("--phi and --s are mutually exclusive");
  if (file) {
    if (!(file->group() == g)) throw UsageError("--phi: table is over " + file->group().describe() + ", not " + g.describe());
    return *file;
  }
  if (!cfg.s) return Associator(g, 1);
  const auto s = parse_ints(*cfg.s, "--s");
  const auto& factors = g.factors();
  if (s.size() != factors.size()) {
    throw UsageError("--s: expected " + std::to_string(factors.size()) + " value(s), one per invariant factor");
  }
  std::vector<std::pair<int, int>> fs;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= factors[i]) {
      throw UsageError("--s: value " + std::to_string(s[i]) + " out of range 0.." + std::to_string(factors[i] - 1));
    }
    fs.emplace_back(factors[i], s[i]);
  }
  if (fs.size() == 1) return phi_s(fs[0].first, fs[0].second);
  return product_associator(fs);
}

std::optional<Residue> explicit_modulus(const RunConfig& cfg) {
  if (cfg.modulus == "auto") return std::nullopt;
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(cfg.modulus, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != cfg.modulus.size() || v < 1) throw UsageError("--modulus: expected 'auto' or a positive integer");
  return static_cast<Residue>(v);
}

Residue choose_modulus(const RunConfig& cfg, const FiniteAbelianGroup& g, Residue base) {
  if (auto m = explicit_modulus(cfg)) {
    if (*m % base != 0) {
      throw UsageError("--modulus: " + std::to_string(*m) + " is not a multiple of " + std::to_string(base));
    }
    return *m;
  }
  return std::lcm(default_modulus(g), base);
}

RamificationDatum resolve_ram(const RunConfig& cfg, const FiniteAbelianGroup& g, const char* fallback = "") {
  return RamificationDatum::parse(g, cfg.ram ? *cfg.ram : std::string(fallback));
}

int max_len_or(const RunConfig& cfg, int fallback) { return cfg.max_len ? *cfg.max_len : fallback; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) out += (i ? "," : "") + csv_field(fields[i]);
  return out + "\n";
}

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

std::string b(bool v) { return v ? "true" : "false"; }

std::string check_csv(const std::string& name, const CheckResult& c) {
  return csv_row({name, b(c.ok), std::to_string(c.tuples_checked), c.witness ? c.witness->condition : "",
                  c.witness ? join(c.witness->args, " ") : "", c.witness ? c.witness->detail : ""});
}

// ------------------------------------------------------------------ commands

Outcome quiver_build(const RunConfig& cfg) {
  const auto g = resolve_group(cfg);
  const auto q = build_quiver(g, resolve_ram(cfg, g));
  Outcome o;
  o.json = json_io::quiver(q);
  if (cfg.max_len) {
    Json counts = Json::array();
    for (const auto& level : q.paths_up_to(*cfg.max_len)) counts.push_back(level.size());
    o.json["path_counts"] = counts;
  }
  o.csv = csv_row({"source", "gen", "index", "target"});
  for (const auto& a : q.arrows()) {
    o.csv += csv_row({g.format(a.source), g.format(a.gen), std::to_string(a.index), g.format(q.target(a))});
  }
  o.negative = !q.is_connected();
  return o;
}

Outcome cocycle_check(const RunConfig& cfg) {
  const auto file = phi_from_file(cfg);
  const auto g = resolve_group(cfg, file);
  const auto phi = resolve_phi(cfg, g, file);
  const auto norm = is_normalized(phi);
  const auto coc = is_3cocycle(phi, cfg.jobs);
  Outcome o;
  o.json = Json{{"group", g.factors()}, {"modulus", phi.modulus()}, {"normalized", json_io::check(norm)},
                {"cocycle", json_io::check(coc)}};
  o.csv = csv_row({"check", "ok", "tuples_checked", "condition", "args", "detail"}) + check_csv("normalized", norm) +
          check_csv("cocycle", coc);
  o.negative = !norm.ok || !coc.ok;
  if (cfg.ram) {
    const auto ram = resolve_ram(cfg, g);
    const auto c = check_phi_ram_conditions(phi, ram.support(), PhiRamForm::Standard, cfg.jobs);
    o.json["ram"] = ram.to_string();
    o.json["phi_ram_conditions"] = json_io::check(c);
    o.csv += check_csv("phi_ram_conditions", c);
    o.negative = o.negative || !c.ok;
  } else {
    o.json["ram"] = nullptr;
    o.json["phi_ram_conditions"] = nullptr;
  }
  return o;
}

Outcome cocycle_coboundary(const RunConfig& cfg) {
  const auto file = phi_from_file(cfg);
  const auto g = resolve_group(cfg, file);
  const auto phi = resolve_phi(cfg, g, file);
  const auto sols = is_coboundary(phi);
  Outcome o;
  o.json = Json{{"group", g.factors()},
                {"modulus", phi.modulus()},
                {"coboundary", !sols.empty()},
                {"solutions", json_io::solution_set(sols)}};
  o.json["mu"] = sols.empty() ? Json(nullptr) : json_io::table(TwoCochain(g, phi.modulus(), *sols.particular));
  o.csv = csv_row({"coboundary", "solution_count", "modulus"}) +
          csv_row({b(!sols.empty()), sols.count().get_str(), std::to_string(phi.modulus())});
  o.negative = sols.empty();
  return o;
}

Outcome rform_enumerate(const RunConfig& cfg) {
  const auto file = phi_from_file(cfg);
  const auto g = resolve_group(cfg, file);
  const auto phi0 = resolve_phi(cfg, g, file);
  const Residue n = choose_modulus(cfg, g, phi0.modulus());
  const auto phi = phi0.lifted(n);
  const auto rforms = enumerate_rforms(phi, cfg.limit);
  Outcome o;
  Json list = Json::array();
  o.csv = csv_row({"rform", "g", "h", "exp"});
  for (std::size_t i = 0; i < rforms.size(); ++i) {
    list.push_back(json_io::table(rforms[i]));
    for (const auto& [args, e] : rforms[i].nonzero_entries()) {
      o.csv += csv_row({std::to_string(i), g.format(args[0]), g.format(args[1]), std::to_string(e)});
    }
  }
  o.json = Json{{"group", g.factors()}, {"modulus", n},          {"phi", json_io::table(phi)},
                {"count", rforms.size()}, {"limit", cfg.limit}, {"rforms", list}};
  o.negative = rforms.empty();
  return o;
}

VerifyReport as_report(std::string name, CheckResult c, int max_len) { return {std::move(name), std::move(c), max_len}; }

Outcome verify(const RunConfig& cfg) {
  const auto file = phi_from_file(cfg);
  const auto g = resolve_group(cfg, file);
  const auto phi0 = resolve_phi(cfg, g, file);
  std::optional<RForm> r0;
  if (cfg.rform_file) {
    r0 = json_io::parse_rform(read_json_file(*cfg.rform_file));
    if (!(r0->group() == g)) throw UsageError("--rform: table is over " + r0->group().describe() + ", not " + g.describe());
  } else {
    r0 = RForm(g, 1);
  }
  Residue n = std::lcm(phi0.modulus(), r0->modulus());
  if (auto m = explicit_modulus(cfg)) {
    if (*m % n != 0) throw UsageError("--modulus: " + std::to_string(*m) + " is not a multiple of " + std::to_string(n));
    n = *m;
  }
  const auto phi = phi0.lifted(n);
  const auto r = r0->lifted(n);
  const auto ram = resolve_ram(cfg, g);
  const int len = max_len_or(cfg, 3);
  const auto s = MajidStructure::unchecked(HopfQuiver(ram), phi, r, len);

  std::vector<VerifyReport> reports;
  reports.push_back(as_report("normalized", is_normalized(phi), len));
  reports.push_back(as_report("cocycle", is_3cocycle(phi, cfg.jobs), len));
  reports.push_back(as_report("phi_ram_conditions",
                              check_phi_ram_conditions(phi, ram.support(), PhiRamForm::Standard, cfg.jobs), len));
  reports.push_back(as_report("rform_conditions", check_rform(phi, r, cfg.jobs), len));
  for (auto& rep : verify_all(s, len, cfg.jobs)) reports.push_back(std::move(rep));

  Outcome o;
  Json checks = Json::array();
  o.csv = csv_row({"check", "ok", "tuples_checked", "max_len", "condition", "args", "detail"});
  for (const auto& rep : reports) {
    checks.push_back(json_io::verify_report(rep));
    const auto& w = rep.result.witness;
    o.csv += csv_row({rep.check, b(rep.result.ok), std::to_string(rep.result.tuples_checked), std::to_string(rep.max_len),
                      w ? w->condition : "", w ? join(w->args, " ") : "", w ? w->detail : ""});
  }
  const bool ok = all_ok(reports);
  o.json = Json{{"group", g.factors()}, {"ram", ram.to_string()}, {"modulus", n},
                {"max_len", len},       {"checks", checks},         {"ok", ok}};
  o.negative = !ok;
  return o;
}

ClassifyOptions classify_options(const RunConfig& cfg) {
  ClassifyOptions opts;
  opts.max_len = max_len_or(cfg, 3);
  opts.modulus = explicit_modulus(cfg);
  opts.limit = cfg.limit;
  opts.jobs = cfg.jobs;
  return opts;
}

Outcome classification_outcome(const ClassificationReport& rep) {
  Outcome o;
  o.json = json_io::classification(rep);
  o.csv = csv_row({"s", "phi_trivial", "phi_ok", "rform_count", "truncated", "verified", "structures_verified",
                   "forced_s_zero"});
  bool all_verified = true;
  for (const auto& e : rep.results) {
    std::vector<std::string> s;
    for (int v : e.s) s.push_back(std::to_string(v));
    o.csv += csv_row({e.from_table ? "table" : join(s, " "), b(e.phi_trivial), b(e.phi_conditions.ok),
                      e.rform_count.get_str(), b(e.truncated), b(e.verified), std::to_string(e.structures_verified),
                      b(rep.forced_s_zero)});
    all_verified = all_verified && e.verified;
  }
  o.negative = !all_verified;
  return o;
}

Outcome classify_zn_cmd(const RunConfig& cfg) {
  if (!cfg.n) throw UsageError("--n is required");
  const auto g = FiniteAbelianGroup::cyclic(*cfg.n);
  const auto ram = resolve_ram(cfg, g, *cfg.n == 1 ? "" : "1:1");
  return classification_outcome(classify_zn(*cfg.n, ram, classify_options(cfg)));
}

Outcome classify_abelian_cmd(const RunConfig& cfg) {
  const auto file = phi_from_file(cfg);
  const auto g = resolve_group(cfg, file);
  if (!cfg.ram) throw UsageError("--ram is required");
  const auto ram = resolve_ram(cfg, g);
  const auto opts = classify_options(cfg);
  if (!file && !cfg.s) return classification_outcome(classify_abelian_family(ram, opts));
  const auto phi = resolve_phi(cfg, g, file);
  std::vector<int> s;
  if (cfg.s) s = parse_ints(*cfg.s, "--s");
  return classification_outcome(classify_abelian(ram, phi, opts, s));
}

Outcome taft_cmd(const RunConfig& cfg) {
  if (!cfg.n) throw UsageError("--n is required");
  const auto rep = taft_check(*cfg.n, max_len_or(cfg, 3));
  Outcome o;
  o.json = json_io::taft(rep);
  o.csv = csv_row({"relation", "holds"}) + csv_row({"x^2 = 0", b(rep.alpha_squared_zero)}) +
          csv_row({"gx = -xg", b(rep.anticommutes)}) + csv_row({"g^n = 1", b(rep.group_relation)}) +
          csv_row({"control x^2 != 0", b(rep.control_fails)});
  o.negative = !rep.ok();
  return o;
}

Outcome obstruct_cmd(const RunConfig& cfg) {
  MultiplicationTable t;
  std::error_code ec;
  if (std::filesystem::is_regular_file(cfg.table, ec)) {
    t = json_io::parse_multiplication_table(read_json_file(cfg.table));
    if (t.name.empty()) t.name = std::filesystem::path(cfg.table).stem().string();
  } else {
    t = MultiplicationTable::builtin(cfg.table);
  }
  const auto w = nonabelian_obstruction(t);
  Outcome o;
  o.json = json_io::obstruction(t, w);
  auto name = [&](int i) { return t.elements[static_cast<std::size_t>(i)]; };
  o.csv = csv_row({"group", "order", "abelian", "g", "h"}) +
          csv_row({t.name, std::to_string(t.order()), b(!w), w ? name(w->g) : "", w ? name(w->h) : ""});
  o.negative = w.has_value();
  return o;
}

void emit(const RunConfig& cfg, const Outcome& o, std::ostream& out) {
  const std::string text = cfg.format == "csv" ? o.csv : o.json.dump(2) + "\n";
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw UsageError("--out: cannot write '" + cfg.out + "'");
  f << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Coquasitriangular Majid algebras on Hopf quivers", "coquasi"};
  app.require_subcommand(1);

  auto* quiver = app.add_subcommand("quiver", "Hopf quivers")->require_subcommand(1);
  auto* quiver_build_cmd = quiver->add_subcommand("build", "Vertices and arrows of Q(G, R)");
  add_options(quiver_build_cmd, cfg, kGroup | kN | kRam | kMaxLen);

  auto* cocycle = app.add_subcommand("cocycle", "Associators")->require_subcommand(1);
  auto* cocycle_check_cmd = cocycle->add_subcommand("check", "Normalization, cocycle identity, quiver conditions");
  add_options(cocycle_check_cmd, cfg, kGroup | kN | kS | kPhi | kRam | kJobs);
  auto* cocycle_cob_cmd = cocycle->add_subcommand("coboundary", "Solve d(mu) = Phi");
  add_options(cocycle_cob_cmd, cfg, kGroup | kN | kS | kPhi);

  auto* rform = app.add_subcommand("rform", "R-forms")->require_subcommand(1);
  auto* rform_enum_cmd = rform->add_subcommand("enumerate", "Every R-form for an associator");
  add_options(rform_enum_cmd, cfg, kGroup | kN | kS | kPhi | kModulus | kLimit);

  auto* verify_cmd = app.add_subcommand("verify", "Run every verifier on one (Phi, R) pair");
  add_options(verify_cmd, cfg, kGroup | kN | kS | kPhi | kRform | kRam | kMaxLen | kModulus | kJobs);

  auto* classify = app.add_subcommand("classify", "Classification drivers")->require_subcommand(1);
  auto* classify_zn_sub = classify->add_subcommand("zn", "The phi_s family on Z_n");
  add_options(classify_zn_sub, cfg, kN | kRam | kMaxLen | kModulus | kLimit | kJobs);
  auto* classify_ab_sub = classify->add_subcommand("abelian", "A finite abelian group");
  add_options(classify_ab_sub, cfg, kGroup | kN | kS | kPhi | kRam | kMaxLen | kModulus | kLimit | kJobs);

  auto* taft = app.add_subcommand("taft", "Generalized Taft relations");
  add_options(taft, cfg, kN | kMaxLen);

  auto* obstruct = app.add_subcommand("obstruct", "Commutativity obstruction for a finite group");
  obstruct->add_option("table", cfg.table, "S3, D4, Q8, Z<n>, invariant factors, or a JSON table file")->required();
  add_options(obstruct, cfg, 0);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    Outcome o;
    if (*quiver_build_cmd) o = quiver_build(cfg);
    else if (*cocycle_check_cmd) o = cocycle_check(cfg);
    else if (*cocycle_cob_cmd) o = cocycle_coboundary(cfg);
    else if (*rform_enum_cmd) o = rform_enumerate(cfg);
    else if (*verify_cmd) o = verify(cfg);
    else if (*classify_zn_sub) o = classify_zn_cmd(cfg);
    else if (*classify_ab_sub) o = classify_abelian_cmd(cfg);
    else if (*taft) o = taft_cmd(cfg);
    else o = obstruct_cmd(cfg);
    emit(cfg, o, out);
    return cfg.strict && o.negative ? kNegative : kSuccess;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace coquasi::cli
