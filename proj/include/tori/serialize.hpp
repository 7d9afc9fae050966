#pragma once

#include <sstream>
#include <string>

#include "json.hpp"

#include "tori/bruteforce.hpp"
#include "tori/classify.hpp"
#include "tori/rootsys.hpp"
#include "tori/torus.hpp"
#include "tori/verify.hpp"

namespace tori {

using Json = nlohmann::ordered_json;

inline Json to_json(const RationalVector& v) {
  Json a = Json::array();
  for (auto& x : v)
    a.push_back(x.str());
  return a;
}

inline Json to_json(const RootSystem& rs) {
  Json j;
  j["type"] = rs.type.name();
  j["ambient_dim"] = rs.ambient_dim;
  j["root_count"] = rs.size();
  j["delta"] = rs.delta;
  j["q_bound"] = q_bound(rs.type);
  Json simple = Json::array();
  for (auto& r : rs.simple)
    simple.push_back(to_json(r.coords));
  j["simple_roots"] = simple;
  j["cartan"] = rs.cartan;
  Json weights = Json::array();
  for (auto& w : rs.weights)
    weights.push_back(to_json(w));
  j["fundamental_weights"] = weights;
  Json roots = Json::array();
  for (auto& r : rs.roots)
    roots.push_back(to_json(r.coords));
  j["roots"] = roots;
  return j;
}

inline Json to_json(const TorusClassDescriptor& d) {
  return Json{{"family", to_string(d.family)}, {"n", d.n}, {"q", d.q}, {"class", d.class_string()}};
}

inline TorusClassDescriptor descriptor_from_json(const Json& j, bool simple_filter = true) {
  try {
    return make_descriptor(parse_family(j.at("family").get<std::string>()), j.at("n").get<int>(),
                           j.at("q").get<std::uint64_t>(), j.at("class").get<std::string>(), simple_filter);
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError(std::string("bad descriptor JSON: ") + e.what());
  }
}

inline Json to_json(const TorusStructure& t) {
  Json factors = Json::array();
  for (auto& f : t.factors)
    factors.push_back({{"order", f.order}, {"sign", f.sign > 0 ? "+" : "-"}});
  return Json{{"factors", factors},
              {"constraint", to_string(t.constraint)},
              {"full_order", t.full_order},
              {"intersected_order", t.intersected_order}};
}

inline Json to_json(const std::vector<WitnessRoot>& roots) {
  Json a = Json::array();
  for (auto& r : roots)
    a.push_back(r.str());
  return a;
}

/// Verdict with torus data; the algebraic normaliser is null where no formula or oracle applies.
inline Json verdict_json(const TorusClassDescriptor& d, const DegeneracyVerdict& v) {
  Json j;
  j["descriptor"] = to_json(d);
  j["status"] = v.status();
  j["clauses"] = v.clauses;
  j["witness_roots"] = to_json(v.witness_roots);
  try {
    j["torus"] = to_json(torus_factor_orders(d));
  } catch (const BudgetError&) {
    j["torus"] = nullptr;
  }
  Json orders;
  try {
    orders["algebraic"] = algebraic_normaliser_order(d);
  } catch (const std::runtime_error&) {
    orders["algebraic"] = nullptr;
  }
  j["normaliser_orders"] = orders;
  return j;
}

inline Json verdict_json(const ExceptionalCensusRow& r) {
  Json j;
  j["descriptor"] = {{"group", to_string(r.group)}, {"q", r.q}, {"class", r.label}};
  j["status"] = r.verdict.status();
  j["clauses"] = r.verdict.clauses;
  j["witness_roots"] = to_json(r.verdict.witness_roots);
  return j;
}

inline Json to_json(const WitnessReport& rep) {
  Json checks = Json::array();
  for (auto& c : rep.checks)
    checks.push_back({{"clause", c.clause},
                      {"root", c.root.str()},
                      {"parameter", c.parameter},
                      {"membership", c.membership},
                      {"centralizes", c.centralizes},
                      {"not_normalizing", c.not_normalizing},
                      {"passed", c.passed()},
                      {"witness", c.witness_hex}});
  return Json{{"descriptor", to_json(rep.descriptor)}, {"passed", rep.passed()}, {"checks", checks}};
}

inline Json to_json(const BruteForceReport& rep) {
  Json rows = Json::array();
  for (auto& r : rep.rows) {
    Json j{{"class", r.descriptor.class_string()},
           {"torus_order", r.torus_order},
           {"normaliser_order", r.normaliser_order},
           {"algebraic_order", r.algebraic_order}};
    j["formula_order"] = r.formula_order ? Json(*r.formula_order) : Json(nullptr);
    j["oracle_degenerate"] = r.oracle_degenerate();
    j["classified_degenerate"] = r.classified_degenerate;
    j["agrees"] = r.agrees();
    rows.push_back(j);
  }
  return Json{{"group", rep.group}, {"group_order", rep.group_order}, {"agrees", rep.agrees()}, {"rows", rows}};
}

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"')
      out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? sep : "") + v[i];
  return s;
}

} // namespace detail

inline const char* kCensusCsvHeader = "family,n,q,class,status,clauses,torus_order,algebraic_normaliser_order";

inline std::string census_csv_row(const TorusClassDescriptor& d, const DegeneracyVerdict& v) {
  std::string torus, alg;
  try {
    torus = std::to_string(intersected_torus_order(d));
  } catch (const std::runtime_error&) {
  }
  try {
    alg = std::to_string(algebraic_normaliser_order(d));
  } catch (const std::runtime_error&) {
  }
  std::ostringstream os;
  os << to_string(d.family) << ',' << d.n << ',' << d.q << ',' << detail::csv_field(d.class_string()) << ','
     << v.status() << ',' << detail::csv_field(detail::join(v.clauses, ";")) << ',' << torus << ',' << alg;
  return os.str();
}

inline std::string census_csv_row(const ExceptionalCensusRow& r) {
  std::ostringstream os;
  os << to_string(r.group) << ",," << r.q << ',' << detail::csv_field(r.label) << ',' << r.verdict.status() << ','
     << detail::csv_field(detail::join(r.verdict.clauses, ";")) << ",,";
  return os.str();
}

} // namespace tori
