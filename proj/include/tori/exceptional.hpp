#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "tori/arith.hpp"
#include "tori/error.hpp"

namespace tori {

enum class ExGroup { G2, F4, E6, E7, E8, E6_2, D4_3, B2_2 };

inline const std::vector<ExGroup>& all_exceptional_groups() {
  static const std::vector<ExGroup> g{ExGroup::G2, ExGroup::F4, ExGroup::E6,   ExGroup::E7,
                                      ExGroup::E8, ExGroup::E6_2, ExGroup::D4_3, ExGroup::B2_2};
  return g;
}

inline std::string to_string(ExGroup g) {
  switch (g) {
  case ExGroup::G2: return "G2";
  case ExGroup::F4: return "F4";
  case ExGroup::E6: return "E6";
  case ExGroup::E7: return "E7";
  case ExGroup::E8: return "E8";
  case ExGroup::E6_2: return "2E6";
  case ExGroup::D4_3: return "3D4";
  case ExGroup::B2_2: return "2B2";
  }
  return "?";
}

inline ExGroup parse_exceptional_group(const std::string& s) {
  for (auto g : all_exceptional_groups())
    if (to_string(g) == s)
      return g;
  throw ParameterError("unknown exceptional group '" + s + "' (expected G2, F4, E6, E7, E8, 2E6, 3D4, 2B2)");
}

/// Rank-type used for the q bound: twisted groups use their ambient type.
inline int exceptional_q_bound(ExGroup g) {
  switch (g) {
  case ExGroup::G2: return 3;
  case ExGroup::F4: return 2;
  case ExGroup::E6:
  case ExGroup::E6_2: return 4;
  case ExGroup::E7: return 3;
  case ExGroup::E8: return 2;
  case ExGroup::D4_3: return 5;
  case ExGroup::B2_2: return 8;
  }
  return 0;
}

/// q values the classification covers explicitly; larger q are nondegenerate.
/// For 2B2 the parameter is q^2 = 2^{2a+1}, so the checked case a=1 is 8.
inline std::vector<std::uint64_t> tabulated_q(ExGroup g) {
  switch (g) {
  case ExGroup::G2: return {2, 3};
  case ExGroup::F4: return {2};
  case ExGroup::E6: return {2, 3, 4};
  case ExGroup::E7: return {2, 3};
  case ExGroup::E8: return {2};
  case ExGroup::E6_2: return {2, 3, 4};
  case ExGroup::D4_3: return {2, 3, 4, 5};
  case ExGroup::B2_2: return {8};
  }
  return {};
}

/// Map the accepted spellings of an admissible-diagram label to the ASCII form
/// used in the tables: "A~_1", "A_1^2xA~_1", "(A_3xA_1)'", "(C_3)*", "empty".
inline std::string normalize_label(std::string s) {
  auto replace_all = [&](const std::string& from, const std::string& to) {
    for (std::size_t pos = 0; (pos = s.find(from, pos)) != std::string::npos; pos += to.size())
      s.replace(pos, from.size(), to);
  };
  replace_all("\\widetilde{A}", "A~");
  replace_all("\\tilde{A}", "A~");
  replace_all("\\emptyset", "empty");
  replace_all("\\times", "x");
  replace_all("\xC3\x83", "A~"); // precomposed A tilde
  replace_all("A\xCC\x83", "A~"); // A + combining tilde
  replace_all("×", "x");
  replace_all("∅", "empty");
  replace_all("Ø", "empty");
  replace_all("′", "'");
  replace_all("″", "''");
  replace_all("²", "^2");
  replace_all("³", "^3");
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c) || c == '$'; }), s.end());
  replace_all("^*", "*");
  replace_all("^{*}", "*");
  // _{k} and ^{k} with a single token inside
  for (const char* mark : {"_{", "^{"}) {
    for (std::size_t pos = 0; (pos = s.find(mark, pos)) != std::string::npos;) {
      auto close = s.find('}', pos);
      if (close == std::string::npos)
        break;
      s = s.substr(0, pos + 1) + s.substr(pos + 2, close - pos - 2) + s.substr(close + 1);
    }
  }
  if (s == "0" || s == "{}" || s == "Empty")
    s = "empty";
  return s;
}

struct ExceptionalTable {
  std::vector<std::string> universe; // full list, or a documented partial list for E7/E8
  std::vector<std::string> degenerate_q2;
  bool universe_complete = true;
  std::string note;
};

inline const ExceptionalTable& exceptional_table(ExGroup g) {
  static const std::map<ExGroup, ExceptionalTable> tables = [] {
    std::map<ExGroup, ExceptionalTable> t;
    t[ExGroup::G2] = {{"empty", "A_1", "A~_1", "A_1xA~_1", "A_2", "G_2"}, {"empty", "A_1", "A~_1"}, true, ""};
    t[ExGroup::F4] = {{"empty",   "A_1",     "A~_1",      "A_1^2",    "A_1xA~_1", "A_2",      "A~_2",
                       "B_2",     "A_1^3",   "A_1^2xA~_1", "A_2xA~_1", "A~_2xA_1", "B_2xA_1",  "A_3",
                       "C_3",     "B_3",     "A_1^4",     "A_2xA~_2", "D_4",      "D_4(a_1)", "C_3xA_1",
                       "B_4",     "F_4",     "F_4(a_1)",  "A_3xA~_1"},
                      {"empty", "A_1", "A~_1", "A_1^2", "A_1xA~_1", "A_2", "A~_2", "B_2", "A_1^3", "A_1^2xA~_1",
                       "A_3", "B_2xA_1", "C_3", "B_3"},
                      true,
                      ""};
    const std::vector<std::string> e6 = {"empty",    "A_1",      "A_1^2",   "A_2",   "A_1^3",    "A_2xA_1", "A_3",
                                         "A_1^4",    "A_2xA_1^2", "A_2^2",  "A_3xA_1", "A_4",     "D_4",     "D_4(a_1)",
                                         "A_2^2xA_1", "A_3xA_1^2", "A_4xA_1", "A_5",   "D_5",      "D_5(a_1)", "A_2^3",
                                         "A_5xA_1",  "E_6",      "E_6(a_1)", "E_6(a_2)"};
    t[ExGroup::E6] = {e6,
                      {"empty", "A_1", "A_1^2", "A_2", "A_1^3", "A_2xA_1", "A_3", "A_2^2", "A_3xA_1", "A_4", "A_5"},
                      true,
                      ""};
    t[ExGroup::E6_2] = {e6,
                        {"A_1", "A_1^2", "A_1^3", "A_2xA_1", "A_1^4", "A_2xA_1^2", "A_3xA_1", "A_4", "A_2^2xA_1",
                         "A_3xA_1^2", "A_5xA_1"},
                        true,
                        "label X means w0*w lies in the W-class X"};
    std::vector<std::string> e7_deg = {
        "empty",       "A_1",          "A_1^2",     "A_2",         "(A_1^3)'",    "(A_1^3)''", "A_2xA_1",
        "A_3",         "(A_1^4)'",     "(A_1^4)''", "A_2xA_1^2",   "A_2^2",       "(A_3xA_1)'", "(A_3xA_1)''",
        "A_4",         "D_4",          "D_4(a_1)",  "A_1^5",       "(A_3xA_1^2)'", "(A_3xA_1^2)''", "A_3xA_2",
        "(A_5)'",      "(A_5)''",      "D_4xA_1",   "D_4(a_1)xA_1", "D_5",        "D_5(a_1)",  "A_1^6",
        "A_3^2",       "D_4xA_1^2",    "D_6",       "D_6(a_1)",    "D_6(a_2)"};
    std::vector<std::string> e7_uni = e7_deg;
    for (auto x : {"E_7", "E_7(a_1)", "E_7(a_2)", "E_7(a_3)", "E_7(a_4)", "E_6", "E_6(a_1)", "E_6(a_2)", "A_7", "A_6",
                   "A_1^7", "A_5xA_2", "A_4xA_2", "A_4xA_1", "A_2^3"})
      e7_uni.push_back(x);
    t[ExGroup::E7] = {e7_uni, e7_deg, false, "label universe lists the degenerate classes and a subset of the rest"};
    std::vector<std::string> e8_deg = {
        "empty",     "A_1",        "A_1^2",        "A_2",          "A_1^3",       "A_2xA_1",     "A_3",
        "(A_1^4)'",  "(A_1^4)''",  "A_2xA_1^2",    "A_2^2",        "A_3xA_1",     "A_4",         "D_4",
        "D_4(a_1)",  "A_1^5",      "A_2xA_1^3",    "A_2^2xA_1",    "(A_3xA_1^2)'", "(A_3xA_1^2)''", "A_3xA_2",
        "A_4xA_1",   "A_5",        "D_4xA_1",      "D_4(a_1)xA_1", "D_5",         "D_5(a_1)",    "A_1^6",
        "A_2^2xA_1^2", "A_2^3",    "A_3xA_1^3",    "A_3xA_2xA_1",  "(A_3^2)'",    "A_4xA_2",     "(A_5xA_1)'",
        "(A_5xA_1)''", "A_6",      "D_4xA_1^2",    "D_5xA_1",      "D_5(a_1)xA_1", "D_6",        "D_6(a_1)",
        "D_6(a_2)",  "E_6",        "E_6(a_1)",     "E_6(a_2)",     "A_1^7",       "A_3^2xA_1",   "D_4xA_1^3",
        "D_6xA_1",   "D_6(a_2)xA_1", "E_7",        "E_7(a_1)",     "E_7(a_2)",    "E_7(a_3)",    "D_4^2"};
    std::vector<std::string> e8_uni = e8_deg;
    for (auto x : {"E_8", "E_8(a_1)", "E_8(a_2)", "E_8(a_3)", "E_8(a_4)", "E_8(a_5)", "E_8(a_6)", "E_8(a_7)", "E_8(a_8)",
                   "A_8", "A_1^8", "A_4^2", "E_6xA_2", "D_8", "D_8(a_1)", "D_8(a_2)", "D_8(a_3)", "A_2^4", "E_7xA_1"})
      e8_uni.push_back(x);
    t[ExGroup::E8] = {e8_uni, e8_deg, false, "label universe lists the degenerate classes and a subset of the rest"};
    t[ExGroup::D4_3] = {{"(A~_2)*", "(C_3)*", "(A~_2xA_1)*", "(A_2xA~_2)*", "(C_3xA_1)*", "(F_4)*", "(F_4(a_1))*"},
                        {"(A~_2)*", "(C_3)*"},
                        true,
                        "label X* names the F4 class containing rho*w"};
    t[ExGroup::B2_2] = {{"rho", "rho.w_a", "rho.w_a.w_b.w_a"}, {}, true, "classes of the coset rho*W"};
    return t;
  }();
  return tables.at(g);
}

/// Canonical label for a group, or ParameterError if it is not in the universe.
inline std::string canonical_label(ExGroup g, const std::string& raw) {
  std::string s = normalize_label(raw);
  if (g == ExGroup::B2_2) {
    std::string compact = s;
    compact.erase(std::remove_if(compact.begin(), compact.end(), [](char c) { return c == '.' || c == '*'; }),
                  compact.end());
    if (compact == "rhow_a")
      s = "rho.w_a";
    else if (compact == "rhow_aw_bw_a" || compact == "rho(w_aw_b)w_a")
      s = "rho.w_a.w_b.w_a";
  }
  const auto& u = exceptional_table(g).universe;
  if (std::find(u.begin(), u.end(), s) == u.end())
    throw ParameterError("label '" + raw + "' is not a known class of " + to_string(g) +
                         (exceptional_table(g).universe_complete ? "" : " (the shipped label list is partial)"));
  return s;
}

} // namespace tori
