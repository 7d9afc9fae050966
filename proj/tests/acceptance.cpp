// Acceptance run: one PASS/FAIL line per criterion, with indented detail lines.
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "tori/tori.hpp"

using namespace tori;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::string summary;
  std::vector<std::string> details;
};

int failures = 0;

void report(int n, const Outcome& o) {
  std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << n << ": " << o.summary << "\n";
  for (auto& d : o.details)
    std::cout << "    " << d << "\n";
  if (!o.pass)
    ++failures;
}

// Classical descriptors in the oracle domain: n <= 5, q in {2,3,4,5}, simple range.
std::vector<TorusClassDescriptor> oracle_domain(const std::vector<Family>& fams) {
  std::vector<TorusClassDescriptor> out;
  for (Family f : fams)
    for (int n = 2; n <= 5; ++n)
      for (std::uint64_t q : {2u, 3u, 4u, 5u}) {
        if (!in_simple_range(f, n, q))
          continue;
        for (auto& d : enumerate_torus_classes(f, n, q))
          if (layout_of(d).dim <= 64)
            out.push_back(d);
      }
  return out;
}

// Odd-orthogonal cases at q=3 below the simple range.
std::vector<TorusClassDescriptor> small_rank_cases() {
  std::vector<TorusClassDescriptor> out;
  for (auto [f, n] : std::vector<std::pair<Family, int>>{{Family::B, 1}, {Family::B, 2}, {Family::D, 2}})
    for (auto& d : enumerate_torus_classes(f, n, 3, false))
      out.push_back(d);
  return out;
}

Outcome criterion1() {
  auto t0 = Clock::now();
  auto c = exceptional_census(all_exceptional_groups());
  std::map<ExGroup, std::size_t> per;
  for (auto& r : c.rows)
    if (r.verdict.degenerate)
      per[r.group]++;
  const std::map<ExGroup, std::size_t> expect{{ExGroup::G2, 3},   {ExGroup::F4, 14},  {ExGroup::E6, 11},
                                              {ExGroup::E7, 33},  {ExGroup::E8, 56},  {ExGroup::E6_2, 11},
                                              {ExGroup::D4_3, 2}};
  double dt = seconds_since(t0);
  Outcome o;
  std::ostringstream s;
  for (auto g : all_exceptional_groups()) {
    std::size_t want = expect.count(g) ? expect.at(g) : 0;
    s << to_string(g) << ":" << per[g] << " ";
    if (per[g] != want) {
      o.pass = false;
      o.details.push_back(to_string(g) + " has " + std::to_string(per[g]) + ", expected " + std::to_string(want));
    }
  }
  if (c.degenerate != 130)
    o.pass = false;
  if (dt >= 1.0) {
    o.pass = false;
    o.details.push_back("runtime " + std::to_string(dt) + " s exceeds 1 s");
  }
  s << "total " << c.degenerate << " (" << dt << " s)";
  o.summary = "exceptional degenerate counts " + s.str();
  return o;
}

Outcome criterion2() {
  auto t0 = Clock::now();
  Outcome o;
  std::size_t checked = 0, skipped = 0, disagree = 0;
  for (auto& d : oracle_domain({Family::A, Family::A2, Family::C, Family::D, Family::D2})) {
    std::vector<WitnessRoot> v;
    try {
      v = vanishing_roots(d);
    } catch (const BudgetError&) {
      ++skipped;
      continue;
    }
    ++checked;
    auto verdict = classify_classical(d);
    bool subset = std::all_of(verdict.witness_roots.begin(), verdict.witness_roots.end(), [&](auto& w) {
      return std::any_of(v.begin(), v.end(), [&](auto& x) { return x.str() == w.str(); });
    });
    if (verdict.degenerate != !v.empty() || !subset) {
      ++disagree;
      std::string roots;
      for (auto& r : v)
        roots += " " + r.str();
      o.details.push_back(d.str() + ": classifier " + verdict.status() + ", vanishing roots:" +
                          (roots.empty() ? " none" : roots));
    }
  }
  double dt = seconds_since(t0);
  o.pass = disagree == 0 && dt < 300;
  o.summary = std::to_string(checked) + " descriptors checked, " + std::to_string(disagree) + " disagreements, " +
              std::to_string(skipped) + " beyond the GF(2^16) cap (" + std::to_string(dt) + " s)";
  return o;
}

Outcome criterion3() {
  auto t0 = Clock::now();
  Outcome o;
  struct G {
    Family f;
    int n;
    std::uint64_t q;
    bool derived;
  };
  std::size_t equivalence_failures = 0, equality_failures = 0;
  bool golden = true;
  for (auto g : {G{Family::A, 3, 2, false}, G{Family::A, 4, 2, false}, G{Family::C, 2, 2, false},
                 G{Family::C, 2, 2, true}, G{Family::C, 2, 3, false}}) {
    auto rep = brute_force_normalizers(g.f, g.n, g.q, g.derived);
    std::size_t degenerate = 0;
    for (auto& r : rep.rows) {
      const std::uint64_t cw = centralizer_order(r.descriptor) * r.torus_order;
      const bool full_exceeds = r.normaliser_order > cw;
      if (r.oracle_degenerate())
        ++degenerate;
      if (full_exceeds != r.classified_degenerate) {
        ++equivalence_failures;
        o.details.push_back(rep.group + " " + r.descriptor.class_string() + ": |N|=" +
                            std::to_string(r.normaliser_order) + " vs |C_W||S|=" + std::to_string(cw) +
                            ", classifier " + (r.classified_degenerate ? "Degenerate" : "Nondegenerate"));
      }
      if (!r.classified_degenerate && r.normaliser_order != cw) {
        ++equality_failures;
        o.details.push_back(rep.group + " " + r.descriptor.class_string() + " nondegenerate: |N|=" +
                            std::to_string(r.normaliser_order) + " but |C_W||S|=" + std::to_string(cw) +
                            " (counted |N_G(T-bar)|=" + std::to_string(r.algebraic_order) + ")");
      }
      if (rep.group == "SL3(2)" && r.descriptor.class_string() == "(3)")
        golden = golden && r.torus_order == 7 && r.normaliser_order == 21;
      if (rep.group == "SL3(2)" && r.descriptor.class_string() == "(1)(1)(1)")
        golden = golden && cw == 6 && r.normaliser_order == 168;
    }
    if (rep.group == "Sp4(2)'")
      golden = golden && degenerate == 3;
  }
  double dt = seconds_since(t0);
  o.pass = equivalence_failures == 0 && equality_failures == 0 && golden && dt < 600;
  o.summary = "brute force in SL3(2), SL4(2), Sp4(2), Sp4(2)', Sp4(3): " + std::to_string(equivalence_failures) +
              " equivalence failures, " + std::to_string(equality_failures) +
              " nondegenerate equality failures, golden values " + (golden ? "match" : "differ") + " (" +
              std::to_string(dt) + " s)";
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::size_t checked = 0, skipped = 0, failed = 0;
  auto domain = oracle_domain({Family::A, Family::A2, Family::B, Family::C, Family::D, Family::D2});
  auto extra = small_rank_cases();
  domain.insert(domain.end(), extra.begin(), extra.end());
  for (auto& d : domain) {
    if (!classify_classical(d).degenerate)
      continue;
    try {
      auto rep = verify_witness(d);
      ++checked;
      for (auto& c : rep.checks)
        if (!c.passed()) {
          ++failed;
          o.details.push_back(d.str() + " " + c.clause + ": membership=" + std::to_string(c.membership) +
                              " centralizes=" + std::to_string(c.centralizes) +
                              " not_normalizing=" + std::to_string(c.not_normalizing));
        }
    } catch (const BudgetError&) {
      ++skipped;
    }
  }
  o.pass = failed == 0 && checked > 0;
  o.summary = std::to_string(checked) + " degenerate descriptors verified, " + std::to_string(failed) +
              " witness failures, " + std::to_string(skipped) + " beyond the field cap";
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::size_t classes = 0, violations = 0;
  struct T {
    RootFamily rf;
    std::vector<Family> fams;
    int rank_lo;
  };
  for (auto t : {T{RootFamily::A, {Family::A, Family::A2}, 1}, T{RootFamily::B, {Family::B}, 2},
                 T{RootFamily::C, {Family::C}, 2}, T{RootFamily::D, {Family::D, Family::D2}, 4}})
    for (int l = t.rank_lo; l <= 8; ++l) {
      const int bound = q_bound(RootSystemType(t.rf, l));
      for (std::uint64_t q = static_cast<std::uint64_t>(bound) + 1; q <= 9; ++q) {
        if (!prime_power(q))
          continue;
        for (Family f : t.fams) {
          const int n = t.rf == RootFamily::A ? l + 1 : l;
          if (!in_simple_range(f, n, q))
            continue;
          for (auto& d : enumerate_torus_classes(f, n, q)) {
            ++classes;
            if (classify_classical(d).degenerate) {
              ++violations;
              o.details.push_back(d.str() + " is degenerate above the bound " + std::to_string(bound));
            }
          }
        }
      }
    }
  o.pass = violations == 0 && classes > 0;
  o.summary = std::to_string(classes) + " classes above the q bound, " + std::to_string(violations) + " degenerate";
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::size_t checked = 0;
  auto check = [&](const RootSystemType& t, const Rational& want) {
    ++checked;
    Rational got = weight_lattice_min_norm(t);
    if (got != want) {
      o.pass = false;
      o.details.push_back(t.name() + ": " + got.str() + ", expected " + want.str());
    }
  };
  for (int l = 1; l <= 8; ++l)
    check({RootFamily::A, l}, Rational(l * l + l, (l + 1) * (l + 1)));
  for (int l = 2; l <= 8; ++l) {
    check({RootFamily::B, l}, 1);
    if (l >= 3)
      check({RootFamily::C, l}, 2);
    if (l >= 4)
      check({RootFamily::D, l}, 2);
  }
  check(RootSystemType::exceptional(RootFamily::F4), 1);
  for (auto f : {RootFamily::G2, RootFamily::E6, RootFamily::E7, RootFamily::E8})
    check(RootSystemType::exceptional(f), 2);
  o.summary = std::to_string(checked) + " root systems, minimum weight-lattice norms " +
              (o.pass ? "exact" : "differ");
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::size_t roots = 0, equations = 0, tori = 0, skipped = 0;
  auto fail = [&](const std::string& s) {
    o.pass = false;
    o.details.push_back(s);
  };
  std::vector<RootSystemType> types;
  for (int l = 1; l <= 8; ++l)
    types.push_back({RootFamily::A, l});
  for (int l = 2; l <= 8; ++l) {
    types.push_back({RootFamily::B, l});
    types.push_back({RootFamily::C, l});
  }
  for (int l = 3; l <= 8; ++l)
    types.push_back({RootFamily::D, l});
  for (auto f : {RootFamily::G2, RootFamily::F4, RootFamily::E6, RootFamily::E7, RootFamily::E8})
    types.push_back(RootSystemType::exceptional(f));
  for (auto& t : types) {
    ++roots;
    auto rs = build_root_system(t);
    if (rs.size() != expected_root_count(t))
      fail(t.name() + " has " + std::to_string(rs.size()) + " roots");
  }
  for (Family f : {Family::A, Family::A2, Family::B, Family::C, Family::D, Family::D2})
    for (int n = 2; n <= 7; ++n) {
      ++equations;
      std::uint64_t sum = 0;
      for (auto& d : enumerate_torus_classes(f, n, 5, false))
        sum += weyl_group_order(f, n) / centralizer_order(d);
      if (sum != weyl_group_order(f, n))
        fail(to_string(f) + std::to_string(n) + ": class sizes sum to " + std::to_string(sum));
    }
  auto domain = oracle_domain({Family::A, Family::A2, Family::B, Family::C, Family::D, Family::D2});
  auto extra = small_rank_cases();
  domain.insert(domain.end(), extra.begin(), extra.end());
  for (auto& d : domain) {
    try {
      auto r = realize_torus(d);
      auto ts = torus_factor_orders(d);
      ++tori;
      auto full = diagonal_group_order(r.generator_logs, r.modulus());
      auto meet = diagonal_group_order(r.intersected_logs, r.modulus());
      if (full != ts.full_order || meet != ts.intersected_order)
        fail(d.str() + ": realized " + std::to_string(full) + "/" + std::to_string(meet) + ", formula " +
             std::to_string(ts.full_order) + "/" + std::to_string(ts.intersected_order));
    } catch (const BudgetError&) {
      ++skipped;
    }
  }
  o.summary = std::to_string(roots) + " root counts, " + std::to_string(equations) + " class equations, " +
              std::to_string(tori) + " realized tori (" + std::to_string(skipped) + " beyond the field cap)";
  return o;
}

} // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria{criterion1, criterion2, criterion3, criterion4,
                                                       criterion5, criterion6, criterion7};
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    try {
      report(static_cast<int>(i + 1), criteria[i]());
    } catch (const std::exception& e) {
      report(static_cast<int>(i + 1), {false, std::string("aborted: ") + e.what(), {}});
    }
  }
  return failures == 0 ? 0 : 1;
}
