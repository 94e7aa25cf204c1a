#pragma once

// Diffeomorphism verdicts for the table families via the non-primitivity bundle
// M_L -> M -> G/L.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "cohom1/diagram.hpp"
#include "cohom1/errors.hpp"
#include "cohom1/intlin.hpp"
#include "cohom1/liegroup.hpp"

namespace cohom1 {

struct NonPrimitivityData {
  SubgroupSpec L;
  std::string base;
  std::string fiber;
  /// N6B: rotation speeds (-nq, np) of L = T^2 -> SO(2); N6F: (n) for det^n;
  /// N6C/N6D/N6E: block weights of the image of the pi_1(L) generator in J.
  std::vector<BigInt> structure_hom_weights;
  std::string structure_hom;
  /// Image of the pi_1(L) generator in J (families whose bundle is decided by pi_1(P)).
  std::optional<LoopSpec> generator_loop;
};

/// Euler class in H^2(base); only defined up to a global sign.
struct EulerClass {
  std::vector<BigInt> coordinates;

  bool is_zero() const {
    return std::all_of(coordinates.begin(), coordinates.end(), [](const BigInt& x) { return x == 0; });
  }

  /// Representative whose first nonzero coordinate is positive.
  EulerClass canonical() const {
    EulerClass c = *this;
    auto it = std::find_if(c.coordinates.begin(), c.coordinates.end(), [](const BigInt& x) { return x != 0; });
    if (it != c.coordinates.end() && *it < 0)
      for (auto& x : c.coordinates) x = -x;
    return c;
  }

  friend bool operator==(const EulerClass& a, const EulerClass& b) {
    return a.canonical().coordinates == b.canonical().coordinates;
  }

  /// "±(15,−10)", "±4", "0"; the coordinates are printed as stored.
  std::string to_string() const {
    if (is_zero()) return "0";
    auto num = [](const BigInt& x) { return x < 0 ? "−" + cohom1::to_string(-x) : cohom1::to_string(x); };
    if (coordinates.size() == 1) return "±" + num(coordinates[0]);
    std::string s = "±(";
    for (std::size_t i = 0; i < coordinates.size(); ++i) s += (i ? "," : "") + num(coordinates[i]);
    return s + ")";
  }
};

enum class VerdictKind { S3xS3, S4xS2, NontrivialS4BundleOverS2, CP2BundleOverS2, S2BundleOverS2xS2, S2BundleOverCP2 };

struct DiffeoVerdict {
  VerdictKind kind = VerdictKind::S3xS3;
  std::optional<bool> trivial;     // CP2BundleOverS2 only
  std::optional<EulerClass> euler; // S2 bundles only

  friend bool operator==(const DiffeoVerdict&, const DiffeoVerdict&) = default;

  std::string kind_name() const {
    switch (kind) {
      case VerdictKind::S3xS3: return "S3xS3";
      case VerdictKind::S4xS2: return "S4xS2";
      case VerdictKind::NontrivialS4BundleOverS2: return "NontrivialS4BundleOverS2";
      case VerdictKind::CP2BundleOverS2: return "CP2BundleOverS2";
      case VerdictKind::S2BundleOverS2xS2: return "S2BundleOverS2xS2";
      case VerdictKind::S2BundleOverCP2: return "S2BundleOverCP2";
    }
    return "?";
  }

  /// Machine form, e.g. "CP2BundleOverS2(trivial=true)", "S2BundleOverS2xS2(e=±(15,−10))".
  std::string to_string() const {
    if (trivial) return kind_name() + "(trivial=" + (*trivial ? "true" : "false") + ")";
    if (euler) return kind_name() + "(e=" + euler->to_string() + ")";
    return kind_name();
  }

  /// Human form, e.g. "M ≅ S³×S³", "M ≅ ℂP²×S²".
  std::string pretty() const {
    switch (kind) {
      case VerdictKind::S3xS3: return "M ≅ S³×S³";
      case VerdictKind::S4xS2: return "M ≅ S⁴×S²";
      case VerdictKind::NontrivialS4BundleOverS2: return "M ≅ nontrivial S⁴-bundle over S²";
      case VerdictKind::CP2BundleOverS2:
        return *trivial ? "M ≅ ℂP²×S²" : "M ≅ nontrivial ℂP²-bundle over S²";
      case VerdictKind::S2BundleOverS2xS2: return "S²-bundle over S²×S², e_P=" + euler->to_string();
      case VerdictKind::S2BundleOverCP2: return "S²-bundle over ℂP², e_P=" + euler->to_string();
    }
    return "?";
  }
};

inline NonPrimitivityData nonprimitivity_data(const FamilyInstance& f) {
  const auto d = build_diagram(f);
  const auto& G = d.G;
  switch (f.tag) {
    case FamilyTag::N6A:
      return {product(identity_component(d.Kminus), identity_component(d.Kplus)), "G/L", "M_L", {}, "K⁻₀·K⁺₀ ≅ T²",
              std::nullopt};
    case FamilyTag::N6B: {
      const BigInt n = f.at("n"), p = f.at("p"), q = f.at("q");
      return {SubgroupSpec::torus(G), "S²×S²", "S²", {-n * q, n * p},
              "(e^{iα},e^{iβ}) ↦ R(n(−qα+pβ)) in SO(3)", std::nullopt};
    }
    case FamilyTag::N6C: {
      const BigInt n = f.at("n");
      return {SubgroupSpec(G, {0}, {{0, 1}}, {}), "S²", "S⁴", {n}, "(g,θ) ↦ diag(ψ(g), R(nθ)) in SO(5)",
              LoopSpec::so(5, {n})};
    }
    case FamilyTag::N6D: {
      const BigInt p = f.at("p");
      return {SubgroupSpec(G, {0}, {{0, 1}}, {}), "S²", "ℂP²", {0, p, p}, "(A,z) ↦ diag(1, z^p A) in PU(3)",
              LoopSpec::pu3({0, p, p})};
    }
    case FamilyTag::N6E: {
      const BigInt p = f.at("p");
      return {SubgroupSpec(G, {0}, {{0, 1}}, {}), "S²", "S⁴", {-p, p},
              "(g,θ) ↦ diag(1, ψ(g, e^{ipθ})) in SO(5)", LoopSpec::so(5, {-p, p})};
    }
    case FamilyTag::N6F: {
      const BigInt n = f.at("n");
      return {SubgroupSpec(SU3Block{SU3BlockKind::S_U2U1, 1}), "ℂP²", "S²", {n}, "A ↦ R(det(A)^n) in SO(3)",
              std::nullopt};
    }
  }
  throw WrongFamily("unknown family");
}

/// Closed forms: N6B e = n(q, -p), N6F e = n (both up to sign).
template <class Int>
std::vector<Int> euler_closed_form(FamilyTag tag, const Int& p, const Int& q, const Int& n) {
  if (tag == FamilyTag::N6B) return {n * q, -(n * p)};
  if (tag == FamilyTag::N6F) return {n};
  throw WrongFamily("Euler class is defined for N6B and N6F only");
}

inline EulerClass euler_class(const FamilyInstance& f) {
  if (f.tag == FamilyTag::N6B) return {euler_closed_form<BigInt>(f.tag, f.at("p"), f.at("q"), f.at("n"))};
  if (f.tag == FamilyTag::N6F) return {euler_closed_form<BigInt>(f.tag, 0, 0, f.at("n"))};
  throw WrongFamily("euler_class is defined for N6B and N6F, not " + to_string(f.tag));
}

/// pi_1(P) for P = G x_L J: the cokernel of pi_1(L) -> pi_1(G x J) = pi_1(J).
inline FGAbelianGroup principal_bundle_pi1(const FamilyInstance& f) {
  if (f.tag != FamilyTag::N6C && f.tag != FamilyTag::N6D && f.tag != FamilyTag::N6E)
    throw WrongFamily("principal_bundle_pi1 is defined for N6C, N6D and N6E, not " + to_string(f.tag));
  const auto loop = *nonprimitivity_data(f).generator_loop;
  const auto cls = loop_class(loop);
  const auto target = loop_target_pi1(loop);
  IntMatrix image(1, 1);
  image(0, 0) = cls.coords.at(0);
  if (is_surjective_onto(image, target)) return {};
  return quotient_by(image, target);
}

inline DiffeoVerdict classify(const FamilyInstance& f) {
  auto violations = validate_family(f);
  if (!violations.empty()) throw InvalidFamily(std::move(violations));
  switch (f.tag) {
    case FamilyTag::N6A: {
      const auto d = build_diagram(f);
      if (!(intersect(d.Kminus, d.Kplus) == d.H)) throw Error("N6A instance with H != K- cap K+");
      return {VerdictKind::S3xS3, std::nullopt, std::nullopt};
    }
    case FamilyTag::N6B: return {VerdictKind::S2BundleOverS2xS2, std::nullopt, euler_class(f)};
    case FamilyTag::N6F: return {VerdictKind::S2BundleOverCP2, std::nullopt, euler_class(f)};
    case FamilyTag::N6C:
      // P simply connected <=> the S4 bundle is the nontrivial one.
      return {principal_bundle_pi1(f).is_trivial() ? VerdictKind::NontrivialS4BundleOverS2 : VerdictKind::S4xS2,
              std::nullopt, std::nullopt};
    case FamilyTag::N6D: return {VerdictKind::CP2BundleOverS2, !principal_bundle_pi1(f).is_trivial(), std::nullopt};
    case FamilyTag::N6E:
      if (principal_bundle_pi1(f).is_trivial()) return {VerdictKind::NontrivialS4BundleOverS2, std::nullopt, std::nullopt};
      return {VerdictKind::S4xS2, std::nullopt, std::nullopt};
  }
  throw WrongFamily("unknown family");
}

}  // namespace cohom1
