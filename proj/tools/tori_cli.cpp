#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "tori/tori.hpp"

using namespace tori;

namespace {

struct Options {
  std::string format = "json";
  std::string family, group, cls, type, n_range, q_list;
  int n = 0;
  int rank = 0;
  std::uint64_t q = 0;
  std::uint64_t budget = 0;
  bool no_simple_filter = false;
  bool exceptional = false;
  bool all = false;
  bool derived = false;
  bool require_brute_force = false;
};

std::uint64_t effective_budget(const Options& o) {
  if (o.budget)
    return o.budget;
  if (const char* env = std::getenv("TORI_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ParameterError(std::string("TORI_BUDGET is not a number: ") + env);
    }
  }
  return kDefaultBudget;
}

void require(bool ok, const std::string& what) {
  if (!ok)
    throw ParameterError(what);
}

std::pair<int, int> parse_range(const std::string& s) {
  auto c = s.find(':');
  try {
    if (c == std::string::npos) {
      int v = std::stoi(s);
      return {v, v};
    }
    return {std::stoi(s.substr(0, c)), std::stoi(s.substr(c + 1))};
  } catch (const std::exception&) {
    throw ParameterError("bad range '" + s + "'; expected LO:HI");
  }
}

// "2,3,4" or "2:9" (prime powers in range)
std::vector<std::uint64_t> parse_q_list(const std::string& s) {
  std::vector<std::uint64_t> out;
  if (s.find(':') != std::string::npos) {
    auto [lo, hi] = parse_range(s);
    for (int q = lo; q <= hi; ++q)
      if (prime_power(static_cast<std::uint64_t>(q)))
        out.push_back(static_cast<std::uint64_t>(q));
  } else {
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
      try {
        out.push_back(std::stoull(item));
      } catch (const std::exception&) {
        throw ParameterError("bad q value '" + item + "'");
      }
  }
  require(!out.empty(), "empty q list");
  for (auto q : out)
    require_prime_power(q);
  return out;
}

RootSystemType parse_root_type(const std::string& s) {
  for (auto f : {RootFamily::G2, RootFamily::F4, RootFamily::E6, RootFamily::E7, RootFamily::E8})
    if (to_string(f) == s)
      return RootSystemType::exceptional(f);
  std::size_t k = 0;
  while (k < s.size() && std::isalpha(static_cast<unsigned char>(s[k])))
    ++k;
  require(k > 0 && k < s.size(), "bad root system type '" + s + "'; expected e.g. B3 or E8");
  int rank = 0;
  try {
    rank = std::stoi(s.substr(k));
  } catch (const std::exception&) {
    throw ParameterError("bad rank in '" + s + "'");
  }
  return RootSystemType(parse_root_family(s.substr(0, k)), rank);
}

std::string md_row(const std::vector<std::string>& cells) {
  std::string s = "|";
  for (auto& c : cells)
    s += " " + c + " |";
  return s;
}

std::string md_header(const std::vector<std::string>& cells) {
  std::string s = md_row(cells) + "\n|";
  for (std::size_t i = 0; i < cells.size(); ++i)
    s += "---|";
  return s;
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

TorusClassDescriptor descriptor_from(const Options& o) {
  require(!o.family.empty(), "--family is required");
  require(o.n > 0, "--n is required");
  require(o.q > 0, "--q is required");
  require(!o.cls.empty(), "--class is required");
  return make_descriptor(parse_family(o.family), o.n, o.q, o.cls, !o.no_simple_filter);
}

int cmd_rootsys(const Options& o) {
  RootSystemType t;
  if (!o.type.empty())
    t = parse_root_type(o.type);
  else {
    require(!o.family.empty(), "--type or --family is required");
    RootFamily f = parse_root_family(o.family);
    t = is_exceptional(f) ? RootSystemType::exceptional(f) : RootSystemType(f, o.rank);
  }
  RootSystem rs = build_root_system(t);
  if (o.format == "json") {
    Json j = to_json(rs);
    j["weight_lattice_min_norm"] = weight_lattice_min_norm(t).str();
    print_json(j);
  } else if (o.format == "csv") {
    std::cout << "type,root_count,delta,q_bound,weight_lattice_min_norm\n"
              << t.name() << ',' << rs.size() << ',' << rs.delta << ',' << q_bound(t) << ','
              << weight_lattice_min_norm(t).str() << "\n";
  } else {
    std::cout << md_header({"type", "roots", "delta", "q bound", "min weight norm"}) << "\n"
              << md_row({t.name(), std::to_string(rs.size()),
                         std::to_string(rs.delta), std::to_string(q_bound(t)), weight_lattice_min_norm(t).str()})
              << "\n";
  }
  return 0;
}

int cmd_classes(const Options& o) {
  require(!o.family.empty() && o.n > 0 && o.q > 0, "--family, --n and --q are required");
  Family f = parse_family(o.family);
  auto classes = enumerate_torus_classes(f, o.n, o.q, !o.no_simple_filter);
  const std::uint64_t w = weyl_group_order(f, o.n);
  Json arr = Json::array();
  if (o.format == "csv")
    std::cout << "family,n,q,class,centralizer_order,class_size\n";
  if (o.format == "md")
    std::cout << md_header({"class", "centralizer order", "class size"}) << "\n";
  for (auto& d : classes) {
    std::uint64_t c = centralizer_order(d);
    if (o.format == "json") {
      Json j = to_json(d);
      j["centralizer_order"] = c;
      j["class_size"] = w / c;
      arr.push_back(j);
    } else if (o.format == "csv") {
      std::cout << to_string(f) << ',' << o.n << ',' << o.q << ',' << d.class_string() << ',' << c << ',' << w / c
                << "\n";
    } else {
      std::cout << md_row({d.class_string(), std::to_string(c), std::to_string(w / c)}) << "\n";
    }
  }
  if (o.format == "json")
    print_json(arr);
  return 0;
}

int cmd_classify(const Options& o) {
  if (!o.group.empty()) {
    require(o.q > 0 && !o.cls.empty(), "--q and --class are required");
    ExceptionalCensusRow row{parse_exceptional_group(o.group), o.q, {}, {}};
    row.label = canonical_label(row.group, o.cls);
    row.verdict = classify_exceptional({row.group, row.label}, o.q);
    if (o.format == "json")
      print_json(verdict_json(row));
    else if (o.format == "csv")
      std::cout << kCensusCsvHeader << "\n" << census_csv_row(row) << "\n";
    else
      std::cout << md_header({"group", "q", "class", "status", "clauses"}) << "\n"
                << md_row({to_string(row.group), std::to_string(o.q), row.label, row.verdict.status(),
                           detail::join(row.verdict.clauses, ", ")})
                << "\n";
    return 0;
  }
  auto d = descriptor_from(o);
  auto v = classify_classical(d);
  if (o.format == "json")
    print_json(verdict_json(d, v));
  else if (o.format == "csv")
    std::cout << kCensusCsvHeader << "\n" << census_csv_row(d, v) << "\n";
  else
    std::cout << md_header({"family", "n", "q", "class", "status", "clauses", "witness roots"}) << "\n"
              << md_row({to_string(d.family), std::to_string(d.n), std::to_string(d.q), d.class_string(), v.status(),
                         detail::join(v.clauses, ", "),
                         detail::join([&] {
                           std::vector<std::string> s;
                           for (auto& r : v.witness_roots)
                             s.push_back(r.str());
                           return s;
                         }(),
                                      ", ")})
              << "\n";
  return 0;
}

template <class Row, class CsvFn, class JsonFn, class MdFn>
void emit_census(const Options& o, const Census<Row>& c, CsvFn csv, JsonFn js, MdFn md,
                 const std::vector<std::string>& md_cols, const std::vector<std::string>& breakdown = {}) {
  if (o.format == "json") {
    Json rows = Json::array();
    for (auto& r : c.rows)
      rows.push_back(js(r));
    print_json(Json{{"total_classes", c.total}, {"total_degenerate", c.degenerate}, {"rows", rows}});
    return;
  }
  if (o.format == "csv") {
    std::cout << kCensusCsvHeader << "\n";
    for (auto& r : c.rows)
      std::cout << csv(r) << "\n";
  } else {
    std::cout << md_header(md_cols) << "\n";
    for (auto& r : c.rows)
      if (r.verdict.degenerate || o.all)
        std::cout << md_row(md(r)) << "\n";
    std::cout << "\n";
  }
  for (auto& b : breakdown)
    std::cout << b << "\n";
  std::cout << "total classes: " << c.total << "\n";
  std::cout << "total degenerate classes: " << c.degenerate << "\n";
}

int cmd_census(const Options& o, const std::string& sub) {
  const bool exceptional = o.exceptional || sub == "exceptional";
  if (exceptional) {
    std::vector<ExGroup> groups;
    if (!o.group.empty())
      groups.push_back(parse_exceptional_group(o.group));
    else {
      require(o.all || sub == "exceptional", "--group or --all is required");
      groups = all_exceptional_groups();
    }
    std::vector<std::uint64_t> qs = o.q_list.empty() ? std::vector<std::uint64_t>{} : parse_q_list(o.q_list);
    if (o.q)
      qs = {o.q};
    auto c = exceptional_census(groups, qs);
    std::map<std::string, std::size_t> per;
    for (auto& r : c.rows)
      if (r.verdict.degenerate)
        per[to_string(r.group) + "(" + std::to_string(r.q) + ")"]++;
    std::vector<std::string> breakdown;
    for (auto& [g, k] : per)
      breakdown.push_back("degenerate in " + g + ": " + std::to_string(k));
    emit_census(
        o, c, [](auto& r) { return census_csv_row(r); }, [](auto& r) { return verdict_json(r); },
        [](auto& r) {
          return std::vector<std::string>{to_string(r.group), std::to_string(r.q), r.label, r.verdict.status()};
        },
        {"group", "q", "class", "status"}, breakdown);
    return 0;
  }
  require(!o.family.empty(), "--family is required (or --exceptional)");
  Family f = parse_family(o.family);
  auto [lo, hi] = o.n_range.empty() ? std::pair<int, int>{o.n, o.n} : parse_range(o.n_range);
  require(lo > 0, "--n or --n-range is required");
  std::vector<std::uint64_t> qs = o.q ? std::vector<std::uint64_t>{o.q} : parse_q_list(o.q_list.empty() ? "2:5" : o.q_list);
  auto c = degenerate_census(f, lo, hi, qs, !o.no_simple_filter);
  emit_census(
      o, c, [](auto& r) { return census_csv_row(r.descriptor, r.verdict); },
      [](auto& r) { return verdict_json(r.descriptor, r.verdict); },
      [](auto& r) {
        return std::vector<std::string>{to_string(r.descriptor.family), std::to_string(r.descriptor.n),
                                        std::to_string(r.descriptor.q), r.descriptor.class_string(),
                                        r.verdict.status(), detail::join(r.verdict.clauses, ", ")};
      },
      {"family", "n", "q", "class", "status", "clauses"});
  return 0;
}

int cmd_torus(const Options& o) {
  auto d = descriptor_from(o);
  auto t = torus_factor_orders(d);
  Json j{{"descriptor", to_json(d)}, {"torus", to_json(t)}};
  try {
    j["algebraic_normaliser_order"] = algebraic_normaliser_order(d);
  } catch (const UnsupportedError&) {
    j["algebraic_normaliser_order"] = nullptr;
  }
  if (o.format == "json") {
    print_json(j);
    return 0;
  }
  std::string factors;
  for (auto& f : t.factors)
    factors += (factors.empty() ? "" : " x ") + std::to_string(f.order) + (f.sign > 0 ? "+" : "-");
  if (o.format == "csv")
    std::cout << "family,n,q,class,factors,constraint,full_order,intersected_order\n"
              << to_string(d.family) << ',' << d.n << ',' << d.q << ',' << d.class_string() << ',' << factors << ','
              << to_string(t.constraint) << ',' << t.full_order << ',' << t.intersected_order << "\n";
  else
    std::cout << md_header({"class", "factors", "constraint", "order T-bar", "order T"}) << "\n"
              << md_row({d.class_string(), factors, to_string(t.constraint), std::to_string(t.full_order),
                         std::to_string(t.intersected_order)})
              << "\n";
  return 0;
}

// One JSON line per class: classifier, vanishing roots, witness checks and, where enumerable, brute force.
int cmd_verify(const Options& o) {
  require(!o.family.empty() && o.n > 0 && o.q > 0, "--family, --n and --q are required");
  Family f = parse_family(o.family);
  const std::uint64_t budget = effective_budget(o);
  std::vector<TorusClassDescriptor> classes;
  if (!o.cls.empty())
    classes.push_back(descriptor_from(o));
  else
    classes = enumerate_torus_classes(f, o.n, o.q, !o.no_simple_filter);

  std::optional<BruteForceReport> bf;
  std::string bf_note;
  if ((f == Family::A || f == Family::C) && is_prime(o.q)) {
    try {
      bf = brute_force_normalizers(f, o.n, o.q, o.derived, budget);
    } catch (const BudgetError& e) {
      if (o.require_brute_force)
        throw;
      bf_note = std::string("not computed: ") + e.what();
    }
  } else {
    if (o.require_brute_force)
      throw UnsupportedError("brute force needs family A or C and a prime q");
    bf_note = "not computed: no enumerable model";
  }

  bool all_ok = true;
  for (auto& d : classes) {
    auto v = classify_classical(d);
    Json j{{"descriptor", to_json(d)}, {"status", v.status()}, {"clauses", v.clauses}};
    bool ok = true;
    try {
      auto r = realize_torus(d);
      auto vr = vanishing_roots(r);
      j["vanishing_roots"] = to_json(vr);
      ok = ok && (vr.empty() != v.degenerate);
      for (auto& w : v.witness_roots)
        ok = ok && std::any_of(vr.begin(), vr.end(), [&](auto& x) { return x.str() == w.str(); });
      if (v.degenerate) {
        auto rep = verify_witness(r);
        j["witness"] = to_json(rep);
        ok = ok && rep.passed();
      }
    } catch (const BudgetError& e) {
      j["vanishing_roots"] = std::string("not computed: ") + e.what();
    }
    if (bf) {
      for (auto& row : bf->rows)
        if (row.descriptor.class_string() == d.class_string()) {
          Json b{{"group", bf->group},
                 {"torus_order", row.torus_order},
                 {"algebraic_order", row.algebraic_order},
                 {"full_normalizer_order", row.normaliser_order},
                 {"degenerate", row.oracle_degenerate()}};
          j["brute_force"] = b;
          ok = ok && row.agrees();
        }
    } else {
      j["brute_force"] = bf_note;
    }
    j["consistent"] = ok;
    all_ok = all_ok && ok;
    std::cout << j.dump() << "\n";
  }
  return all_ok ? 0 : 1;
}

int cmd_exceptional(const Options& o) {
  std::vector<ExGroup> groups = o.group.empty() ? all_exceptional_groups() : std::vector{parse_exceptional_group(o.group)};
  Json arr = Json::array();
  for (auto g : groups) {
    const auto& t = exceptional_table(g);
    if (o.format == "json") {
      arr.push_back({{"group", to_string(g)},
                     {"q_bound", exceptional_q_bound(g)},
                     {"tabulated_q", tabulated_q(g)},
                     {"universe_complete", t.universe_complete},
                     {"note", t.note},
                     {"degenerate", t.degenerate_q2},
                     {"universe", t.universe}});
    } else {
      std::cout << "## " << to_string(g) << " (" << t.degenerate_q2.size() << " degenerate"
                << (t.universe_complete ? "" : ", partial class list") << ")\n";
      for (auto& l : t.degenerate_q2)
        std::cout << "- " << l << "\n";
    }
  }
  if (o.format == "json")
    print_json(arr);
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximal tori of finite groups of Lie type: degeneracy classification and verification"};
  app.require_subcommand(1);
  Options o;
  auto add_common = [&](CLI::App* s) {
    s->add_option("--format", o.format, "json, csv or md")->check(CLI::IsMember({"json", "csv", "md"}));
    s->add_option("--budget", o.budget, "enumeration budget (default TORI_BUDGET or 2000000)");
    s->add_flag("--no-simple-filter", o.no_simple_filter, "allow ranks and q outside the simple range");
  };
  auto add_desc = [&](CLI::App* s) {
    s->add_option("--family", o.family, "A, 2A, B, C, D or 2D");
    s->add_option("--n", o.n, "rank parameter");
    s->add_option("--q", o.q, "field order");
    s->add_option("--class", o.cls, "signed cycle type, e.g. (1)(2)(1-)");
  };
  auto* rootsys = app.add_subcommand("rootsys", "root system data");
  rootsys->add_option("--type", o.type, "e.g. B3, E8");
  rootsys->add_option("--family", o.family, "A..G");
  rootsys->add_option("--rank", o.rank);
  add_common(rootsys);
  auto* classes = app.add_subcommand("classes", "list torus classes");
  add_desc(classes);
  add_common(classes);
  auto* classify = app.add_subcommand("classify", "classify one class");
  add_desc(classify);
  classify->add_option("--group", o.group, "exceptional group: G2 F4 E6 E7 E8 2E6 3D4 2B2");
  add_common(classify);
  auto* census = app.add_subcommand("census", "classify many classes");
  add_desc(census);
  census->add_option("--n-range", o.n_range, "LO:HI");
  census->add_option("--qs", o.q_list, "comma list or LO:HI range of prime powers");
  census->add_flag("--exceptional", o.exceptional, "exceptional tables instead of classical families");
  census->add_option("--group", o.group, "one exceptional group");
  census->add_flag("--all", o.all, "all groups; in md output also list nondegenerate rows");
  add_common(census);
  auto* torus = app.add_subcommand("torus", "torus structure");
  add_desc(torus);
  add_common(torus);
  auto* verify = app.add_subcommand("verify", "matrix-level verification, one JSON line per class");
  add_desc(verify);
  verify->add_flag("--derived", o.derived, "brute force in the derived subgroup");
  verify->add_flag("--brute-force", o.require_brute_force, "fail instead of falling back when enumeration is impossible");
  add_common(verify);
  auto* exceptional = app.add_subcommand("exceptional", "exceptional degenerate tables");
  exceptional->add_option("--group", o.group);
  add_common(exceptional);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (rootsys->parsed())
      return cmd_rootsys(o);
    if (classes->parsed())
      return cmd_classes(o);
    if (classify->parsed())
      return cmd_classify(o);
    if (census->parsed()) {
      if (census->get_option("--format")->count() == 0)
        o.format = "md"; // summary lines by default
      return cmd_census(o, "census");
    }
    if (torus->parsed())
      return cmd_torus(o);
    if (verify->parsed())
      return cmd_verify(o);
    if (exceptional->parsed())
      return cmd_exceptional(o);
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << " (partial count " << e.partial_count << ")\n";
    return 3;
  } catch (const UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
