#include "coquasi/json_io.hpp"

#include "coquasi/errors.hpp"

namespace coquasi::json_io {

namespace {

Json big(const exact::BigInt& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

Json element(const FiniteAbelianGroup& g, ElemIndex i) { return Json(g.element_at(i).residues); }

ElemIndex parse_element(const FiniteAbelianGroup& g, const Json& j) {
  if (!j.is_array()) throw ParseError("group element must be an array of residues");
  GroupElement e;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw ParseError("residues must be integers");
    e.residues.push_back(v.get<int>());
  }
  return g.index_of(e);
}

template <class Table, int Arity>
Table parse_table(const Json& j) {
  const Json& gj = field(j, "group");
  if (!gj.is_array()) throw ParseError("'group' must be an array of invariant factors");
  std::vector<int> factors;
  for (const auto& v : gj) {
    if (!v.is_number_integer()) throw ParseError("invariant factors must be integers");
    factors.push_back(v.get<int>());
  }
  const Json& mj = field(j, "modulus");
  if (!mj.is_number_integer() || mj.get<Residue>() < 1) throw ParseError("'modulus' must be a positive integer");
  Table t(FiniteAbelianGroup(std::move(factors)), mj.get<Residue>());
  const Json& ej = field(j, "entries");
  if (!ej.is_array()) throw ParseError("'entries' must be an array");
  for (const auto& e : ej) {
    const Json& aj = field(e, "args");
    if (!aj.is_array() || aj.size() != static_cast<std::size_t>(Arity)) {
      throw ParseError("each entry needs " + std::to_string(Arity) + " args");
    }
    typename Table::Args args{};
    for (int k = 0; k < Arity; ++k) args[static_cast<std::size_t>(k)] = parse_element(t.group(), aj[static_cast<std::size_t>(k)]);
    const Json& xj = field(e, "exp");
    if (!xj.is_number_integer()) throw ParseError("'exp' must be an integer");
    t.set(args, xj.get<Residue>());
  }
  return t;
}

Associator parse_associator(const Json& j) { return parse_table<Associator, 3>(j); }
RForm parse_rform(const Json& j) { return parse_table<RForm, 2>(j); }
TwoCochain parse_two_cochain(const Json& j) { return parse_table<TwoCochain, 2>(j); }

Json solution_set(const exact::ModSolutionSet& s) {
  Json out{{"modulus", s.modulus}, {"unknowns", s.unknowns}, {"consistent", !s.empty()}, {"count", big(s.count())}};
  out["particular"] = s.particular ? Json(*s.particular) : Json(nullptr);
  Json basis = Json::array();
  for (const auto& g : s.kernel_basis) basis.push_back(Json{{"vector", g.vector}, {"period", g.period}});
  out["kernel_basis"] = basis;
  return out;
}

Json cyclo(const exact::Cyclo& c) {
  Json coeffs = Json::array();
  for (const auto& q : c.coeffs()) coeffs.push_back(q.get_str());
  return Json{{"order", c.order()}, {"coeffs", coeffs}, {"text", c.to_string()}};
}

Json path(const HopfQuiver& q, const Path& p) {
  Json arrows = Json::array();
  for (const auto& a : p.arrows) arrows.push_back(Json{{"gen", element(q.group(), a.gen)}, {"index", a.index}});
  return Json{{"base", element(q.group(), p.base)}, {"arrows", arrows}};
}

Json graded_element(const HopfQuiver& q, const GradedElement& x) {
  Json terms = Json::array();
  for (const auto& [p, c] : x.terms()) terms.push_back(Json{{"path", path(q, p)}, {"coeff", cyclo(c)}});
  return terms;
}

Json quiver(const HopfQuiver& q) {
  const auto& g = q.group();
  Json vertices = Json::array();
  for (ElemIndex x = 0; x < g.order(); ++x) vertices.push_back(element(g, x));
  Json arrows = Json::array();
  for (const auto& a : q.arrows()) {
    arrows.push_back(Json{{"source", element(g, a.source)},
                          {"gen", element(g, a.gen)},
                          {"index", a.index},
                          {"target", element(g, q.target(a))}});
  }
  return Json{{"group", g.factors()},
              {"ram", q.ram().to_string()},
              {"vertices", vertices},
              {"arrows", arrows},
              {"connected", q.is_connected()}};
}

Json witness(const Witness& w) {
  return Json{{"condition", w.condition}, {"args", w.args}, {"detail", w.detail}};
}

Json check(const CheckResult& c) {
  Json out{{"ok", c.ok}};
  if (c.witness) out["witness"] = witness(*c.witness);
  out["tuples_checked"] = c.tuples_checked;
  return out;
}

Json verify_report(const VerifyReport& r) {
  Json out{{"check", r.check}, {"ok", r.result.ok}};
  if (r.result.witness) out["witness"] = witness(*r.result.witness);
  out["tuples_checked"] = r.result.tuples_checked;
  out["max_len"] = r.max_len;
  return out;
}

Json classification(const ClassificationReport& r) {
  Json results = Json::array();
  for (const auto& e : r.results) {
    Json s;
    if (e.from_table) {
      s = nullptr;
    } else if (e.s.size() == 1 && r.group.factors().size() <= 1) {
      s = e.s[0];
    } else {
      s = e.s;
    }
    Json reps = Json::array();
    for (const auto& rf : e.representatives) reps.push_back(table(rf));
    Json wits = Json::array();
    for (const auto& w : e.witnesses) wits.push_back(witness(w));
    results.push_back(Json{{"s", s},
                           {"phi_trivial", e.phi_trivial},
                           {"phi_ok", e.phi_conditions.ok},
                           {"rform_count", big(e.rform_count)},
                           {"truncated", e.truncated},
                           {"verified", e.verified},
                           {"structures_verified", e.structures_verified},
                           {"representatives", reps},
                           {"witnesses", wits}});
  }
  return Json{{"group", r.group.factors()}, {"ram", r.ram.to_string()}, {"modulus", r.modulus},
              {"max_len", r.max_len},       {"results", results},          {"forced_s_zero", r.forced_s_zero}};
}

Json taft(const TaftReport& r) {
  return Json{{"n", r.n},
              {"max_len", r.max_len},
              {"rform_valid", r.rform_valid},
              {"alpha_squared_zero", r.alpha_squared_zero},
              {"anticommutes", r.anticommutes},
              {"group_relation", r.group_relation},
              {"alpha_squared", r.alpha_squared},
              {"g_alpha", r.g_alpha},
              {"alpha_g", r.alpha_g},
              {"control_alpha_squared", r.control_alpha_squared},
              {"control_fails", r.control_fails},
              {"ok", r.ok()}};
}

Json multiplication_table(const MultiplicationTable& t) {
  return Json{{"name", t.name}, {"elements", t.elements}, {"table", t.table}};
}

MultiplicationTable parse_multiplication_table(const Json& j) {
  MultiplicationTable t;
  if (j.is_object() && j.contains("name")) {
    if (!j.at("name").is_string()) throw ParseError("'name' must be a string");
    t.name = j.at("name").get<std::string>();
  }
  const Json& ej = field(j, "elements");
  const Json& tj = field(j, "table");
  if (!ej.is_array() || !tj.is_array()) throw ParseError("'elements' and 'table' must be arrays");
  for (const auto& e : ej) {
    if (!e.is_string()) throw ParseError("element names must be strings");
    t.elements.push_back(e.get<std::string>());
  }
  for (const auto& row : tj) {
    if (!row.is_array()) throw ParseError("table rows must be arrays");
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw ParseError("table entries must be element indices");
      r.push_back(v.get<int>());
    }
    t.table.push_back(std::move(r));
  }
  return t;
}

Json obstruction(const MultiplicationTable& t, const std::optional<ObstructionWitness>& w) {
  Json out{{"group", t.name}, {"order", t.order()}, {"abelian", !w.has_value()}};
  if (w) {
    const auto name = [&](int i) { return t.elements[static_cast<std::size_t>(i)]; };
    out["witness"] = Json{{"g", name(w->g)},
                          {"h", name(w->h)},
                          {"gh", name(w->gh)},
                          {"hg", name(w->hg)},
                          {"relation", name(w->g) + "*" + name(w->h) + " = " + name(w->gh) + " != " + name(w->hg) +
                                           " = " + name(w->h) + "*" + name(w->g)}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

}  // namespace coquasi::json_io
