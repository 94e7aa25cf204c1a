#pragma once

// Integer monomials in named parameters, enough to print closed forms such as n(q,-p).

#include <map>
#include <string>
#include <vector>

#include "cohom1/intlin.hpp"

namespace cohom1::symbolic {

struct Monomial {
  BigInt coeff = 1;
  std::map<std::string, int> vars;

  Monomial() = default;
  Monomial(long long c) : coeff(c) {}  // NOLINT: integer literals in templated formulas
  static Monomial var(const std::string& name) {
    Monomial m;
    m.vars[name] = 1;
    return m;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    m.coeff = a.coeff * b.coeff;
    m.vars = a.vars;
    for (const auto& [v, e] : b.vars) m.vars[v] += e;
    return m;
  }
  Monomial operator-() const {
    Monomial m = *this;
    m.coeff = -m.coeff;
    return m;
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Unicode minus, coefficient 1 omitted.
inline std::string to_string(const Monomial& m) {
  if (m.coeff == 0) return "0";
  std::string s = m.coeff < 0 ? "−" : "";
  const BigInt a = abs(m.coeff);
  if (a != 1 || m.vars.empty()) s += cohom1::to_string(a);
  for (const auto& [v, e] : m.vars) {
    if (e == 0) continue;
    s += v;
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

/// "±n(q,−p)" for a vector, "±n" for a scalar: common variables and content factored out.
inline std::string to_string_up_to_sign(const std::vector<Monomial>& v) {
  if (v.size() == 1) return "±" + to_string(v[0]);
  Monomial common;
  common.coeff = 0;
  for (const auto& m : v) common.coeff = gcd(common.coeff, m.coeff);
  if (common.coeff == 0) return "0";
  common.vars = v[0].vars;
  for (const auto& m : v)
    for (auto& [name, e] : common.vars) {
      auto it = m.vars.find(name);
      e = std::min(e, it == m.vars.end() ? 0 : it->second);
    }
  std::string inner;
  for (std::size_t i = 0; i < v.size(); ++i) {
    Monomial r = v[i];
    r.coeff /= common.coeff;
    for (const auto& [name, e] : common.vars) r.vars[name] -= e;
    inner += (i ? "," : "") + to_string(r);
  }
  return "±" + (common.coeff == 1 && std::all_of(common.vars.begin(), common.vars.end(), [](const auto& kv) {
                  return kv.second == 0;
                }) ? std::string()
                   : to_string(common)) +
         "(" + inner + ")";
}

}  // namespace cohom1::symbolic
