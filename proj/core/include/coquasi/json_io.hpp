#pragma once

// JSON forms of the library's values. Group elements are residue arrays,
// big integers and rationals are decimal strings, and every list is emitted
// in a fixed order so that output is reproducible byte for byte.

#include <nlohmann/json.hpp>

#include "coquasi/classify.hpp"
#include "coquasi/cocycle.hpp"
#include "coquasi/exact/smith.hpp"
#include "coquasi/majid.hpp"
#include "coquasi/quiver.hpp"

namespace coquasi::json_io {

using Json = nlohmann::ordered_json;

Json element(const FiniteAbelianGroup& g, ElemIndex i);
ElemIndex parse_element(const FiniteAbelianGroup& g, const Json& j);

/// {"group": [...], "modulus": N, "entries": [{"args": [[...], ...], "exp": k}, ...]}; zero entries omitted.
template <int Arity, class Tag>
Json table(const ExponentTable<Arity, Tag>& t) {
  Json entries = Json::array();
  for (const auto& [args, exp] : t.nonzero_entries()) {
    Json a = Json::array();
    for (ElemIndex i : args) a.push_back(element(t.group(), i));
    entries.push_back(Json{{"args", a}, {"exp", exp}});
  }
  return Json{{"group", t.group().factors()}, {"modulus", t.modulus()}, {"entries", entries}};
}

/// Inverses of table(); throw ParseError on malformed input or GroupMismatch on bad elements.
Associator parse_associator(const Json& j);
RForm parse_rform(const Json& j);
TwoCochain parse_two_cochain(const Json& j);

Json solution_set(const exact::ModSolutionSet& s);
Json cyclo(const exact::Cyclo& c);
Json path(const HopfQuiver& q, const Path& p);
Json graded_element(const HopfQuiver& q, const GradedElement& x);
Json quiver(const HopfQuiver& q);
Json witness(const Witness& w);
Json check(const CheckResult& c);
Json verify_report(const VerifyReport& r);
Json classification(const ClassificationReport& r);
Json taft(const TaftReport& r);
Json multiplication_table(const MultiplicationTable& t);
MultiplicationTable parse_multiplication_table(const Json& j);
Json obstruction(const MultiplicationTable& t, const std::optional<ObstructionWitness>& w);

}  // namespace coquasi::json_io
