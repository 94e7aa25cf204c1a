#pragma once

// The table of families, with verdict fields produced by classify.

#include <set>
#include <string>
#include <vector>

#include "cohom1/classify.hpp"
#include "cohom1/diagram.hpp"
#include "cohom1/symbolic.hpp"

namespace cohom1 {

struct CatalogRow {
  FamilyTag family;
  std::string diagram;
  std::vector<std::string> conditions;
  std::string verdict;
};

namespace detail {

inline FamilyInstance catalog_instance(FamilyTag t, long long x) {
  switch (t) {
    case FamilyTag::N6A:
      return make_family(t, {{"r", 0}, {"s", 0}, {"b_minus", 1}, {"c_minus", 0}, {"b_plus", 0}, {"c_plus", 1},
                             {"m_minus", 1}, {"m_plus", 1}});
    case FamilyTag::N6B: return make_family(t, {{"p", 1}, {"q", 0}, {"n", x}});
    case FamilyTag::N6C:
    case FamilyTag::N6F: return make_family(t, {{"n", x}});
    case FamilyTag::N6D:
    case FamilyTag::N6E: return make_family(t, {{"p", x}});
  }
  throw WrongFamily("unknown family");
}

inline bool bundle_trivial(const DiffeoVerdict& v) {
  if (v.kind == VerdictKind::CP2BundleOverS2) return *v.trivial;
  return v.kind == VerdictKind::S4xS2;
}

/// Reads off from classify which residues of the parameter give the trivial bundle.
inline std::string triviality_rule(FamilyTag t, const std::string& var) {
  std::vector<bool> triv;
  for (long long x = 1; x <= 24; ++x) triv.push_back(bundle_trivial(classify(catalog_instance(t, x))));
  if (std::all_of(triv.begin(), triv.end(), [](bool b) { return b; })) return "bundle trivial for all " + var;
  for (long long m = 2; m <= 8; ++m) {
    bool periodic = true;
    for (std::size_t i = 0; i + m < triv.size(); ++i) periodic = periodic && triv[i] == triv[i + m];
    if (!periodic) continue;
    std::set<long long> res;
    for (long long x = 1; x <= m; ++x)
      if (triv[x - 1]) res.insert(x % m);
    if (m == 2 && res == std::set<long long>{0}) return "bundle trivial if and only if " + var + " even";
    if (m == 2 && res == std::set<long long>{1}) return "bundle trivial if and only if " + var + " odd";
    if (res.size() == 1) {
      return "bundle trivial if and only if " + var + " ≡ " + std::to_string(*res.begin()) + " mod " + std::to_string(m);
    }
  }
  return "no periodic triviality rule";
}

inline std::string euler_formula(FamilyTag t) {
  using symbolic::Monomial;
  const auto p = Monomial::var("p"), q = Monomial::var("q"), n = Monomial::var("n");
  return "e_P=" + symbolic::to_string_up_to_sign(euler_closed_form<Monomial>(t, p, q, n));
}

}  // namespace detail

inline std::vector<CatalogRow> catalog() {
  std::vector<CatalogRow> rows;
  for (auto t : kAllFamilies) {
    const auto sample = detail::catalog_instance(t, 1);
    std::string verdict;
    switch (t) {
      case FamilyTag::N6A:
      case FamilyTag::N6E: verdict = classify(sample).pretty(); break;
      case FamilyTag::N6B:
      case FamilyTag::N6F: {
        const auto np = nonprimitivity_data(sample);
        verdict = np.fiber + "-bundle over " + np.base + ", " + detail::euler_formula(t);
        break;
      }
      case FamilyTag::N6C:
      case FamilyTag::N6D: {
        const auto np = nonprimitivity_data(sample);
        verdict = np.fiber + "-bundle over " + np.base + ", " + detail::triviality_rule(t, t == FamilyTag::N6C ? "n" : "p");
        break;
      }
    }
    std::string diagram;
    switch (t) {
      case FamilyTag::N6A: diagram = "S³×T² ⊃ {(z^a₋,z^b₋,z^c₋)}·H₊, {(z^a₊,z^b₊,z^c₊)}·H₋ ⊃ H₋·H₊"; break;
      case FamilyTag::N6B: diagram = "S³×S³ ⊃ T², T² ⊃ {(e^{ipθ},e^{iqθ})}·ℤn"; break;
      case FamilyTag::N6C: diagram = "S³×S³ ⊃ T², S³×ℤn ⊃ S¹×ℤn"; break;
      case FamilyTag::N6D: diagram = "S³×S³ ⊃ T², S³×S¹ ⊃ {(e^{ipθ},e^{iθ})}"; break;
      case FamilyTag::N6E: diagram = "S³×S³ ⊃ S³×S¹, S³×S¹ ⊃ {(e^{ipθ},e^{iθ})}"; break;
      case FamilyTag::N6F: diagram = "SU(3) ⊃ S(U(2)U(1)), S(U(2)U(1)) ⊃ SU(2)SU(1)·ℤn"; break;
    }
    rows.push_back({t, diagram, side_conditions(t), verdict});
  }
  return rows;
}

}  // namespace cohom1
