#pragma once

// Group diagrams G > K-, K+ > H, the six table families, and the checks that
// decide whether a diagram describes a simply connected manifold.

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cohom1/errors.hpp"
#include "cohom1/intlin.hpp"
#include "cohom1/liegroup.hpp"

namespace cohom1 {

class MalformedFamily : public Error {
 public:
  using Error::Error;
};

struct GroupDiagram {
  AmbientGroup G;
  SubgroupSpec Kminus;
  SubgroupSpec Kplus;
  SubgroupSpec H;

  friend bool operator==(const GroupDiagram&, const GroupDiagram&) = default;
};

enum class FamilyTag { N6A, N6B, N6C, N6D, N6E, N6F };

inline constexpr FamilyTag kAllFamilies[] = {FamilyTag::N6A, FamilyTag::N6B, FamilyTag::N6C,
                                             FamilyTag::N6D, FamilyTag::N6E, FamilyTag::N6F};

inline std::string to_string(FamilyTag t) {
  switch (t) {
    case FamilyTag::N6A: return "N6A";
    case FamilyTag::N6B: return "N6B";
    case FamilyTag::N6C: return "N6C";
    case FamilyTag::N6D: return "N6D";
    case FamilyTag::N6E: return "N6E";
    case FamilyTag::N6F: return "N6F";
  }
  return "?";
}

inline std::optional<FamilyTag> parse_family_tag(const std::string& s) {
  for (auto t : kAllFamilies)
    if (to_string(t) == s) return t;
  return std::nullopt;
}

/// Required parameters, in canonical (sweep and print) order.
inline std::vector<std::string> required_params(FamilyTag t) {
  switch (t) {
    case FamilyTag::N6A: return {"r", "s", "b_minus", "c_minus", "b_plus", "c_plus", "m_minus", "m_plus"};
    case FamilyTag::N6B: return {"p", "q", "n"};
    case FamilyTag::N6C: return {"n"};
    case FamilyTag::N6D: return {"p"};
    case FamilyTag::N6E: return {"p"};
    case FamilyTag::N6F: return {"n"};
  }
  return {};
}

/// Optional parameters: explicit a-slopes for N6A, explicit Z_n generator
/// numerators (gen_x/n, gen_y/n) for N6B.
inline std::vector<std::string> optional_params(FamilyTag t) {
  switch (t) {
    case FamilyTag::N6A: return {"a_minus", "a_plus"};
    case FamilyTag::N6B: return {"gen_x", "gen_y"};
    default: return {};
  }
}

struct FamilyInstance {
  FamilyTag tag = FamilyTag::N6A;
  std::map<std::string, BigInt> params;
  /// Diagram the instance was recognized from; absent for instances given by parameters.
  std::optional<GroupDiagram> source;

  const BigInt& at(const std::string& name) const {
    auto it = params.find(name);
    if (it == params.end()) throw MalformedFamily(to_string(tag) + " is missing parameter '" + name + "'");
    return it->second;
  }
  bool has(const std::string& name) const { return params.count(name) != 0; }

  /// Parameters in canonical order (required first, then optional ones present).
  std::vector<std::pair<std::string, BigInt>> ordered_params() const {
    std::vector<std::pair<std::string, BigInt>> out;
    for (const auto& k : required_params(tag))
      if (has(k)) out.emplace_back(k, params.at(k));
    for (const auto& k : optional_params(tag))
      if (has(k)) out.emplace_back(k, params.at(k));
    return out;
  }

  friend bool operator==(const FamilyInstance& a, const FamilyInstance& b) {
    return a.tag == b.tag && a.params == b.params;
  }
};

/// Throws MalformedFamily on missing or unknown parameter names.
inline void check_param_names(const FamilyInstance& f) {
  auto req = required_params(f.tag), opt = optional_params(f.tag);
  for (const auto& k : req)
    if (!f.has(k)) throw MalformedFamily(to_string(f.tag) + " is missing parameter '" + k + "'");
  for (const auto& [k, v] : f.params)
    if (std::find(req.begin(), req.end(), k) == req.end() && std::find(opt.begin(), opt.end(), k) == opt.end())
      throw MalformedFamily(to_string(f.tag) + " has no parameter '" + k + "'");
  if (f.tag == FamilyTag::N6B && f.has("gen_x") != f.has("gen_y"))
    throw MalformedFamily("N6B needs both gen_x and gen_y or neither");
}

inline FamilyInstance make_family(FamilyTag tag, std::initializer_list<std::pair<const char*, long long>> kv) {
  FamilyInstance f{tag, {}, std::nullopt};
  for (const auto& [k, v] : kv) f.params[k] = v;
  check_param_names(f);
  return f;
}

namespace detail {

inline std::vector<BigInt> vec(std::initializer_list<BigInt> xs) { return xs; }

inline BigInt n6a_a(const FamilyInstance& f, const char* side) {
  const std::string s = side;
  if (f.has("a_" + s)) return f.at("a_" + s);
  return f.at("r") * f.at("b_" + s) + f.at("s") * f.at("c_" + s);
}

inline std::vector<BigInt> n6a_slope(const FamilyInstance& f, const char* side) {
  const std::string s = side;
  return {n6a_a(f, side), f.at("b_" + s), f.at("c_" + s)};
}

/// v / m reduced to its exact order.
inline FiniteGenerator point_on_circle(const std::vector<BigInt>& v, const BigInt& m) {
  return reduce(FiniteGenerator{v, m});
}

/// Generator numerators (x, y) of the N6B Z_n: explicit, or (x, y) with p*y - q*x = gcd(p, q).
inline std::vector<BigInt> n6b_generator(const FamilyInstance& f) {
  if (f.has("gen_x")) return {f.at("gen_x"), f.at("gen_y")};
  BigInt a, b;
  extended_gcd(f.at("p"), f.at("q"), a, b);  // a p + b q = g
  return {-b, a};
}

}  // namespace detail

/// The diagram of a parameter-given instance (or its recorded source diagram).
inline GroupDiagram build_diagram(const FamilyInstance& f) {
  if (f.source) return *f.source;
  check_param_names(f);
  using detail::vec;
  switch (f.tag) {
    case FamilyTag::N6A: {
      const auto G = AmbientGroup::s3xt2();
      const auto vm = detail::n6a_slope(f, "minus"), vp = detail::n6a_slope(f, "plus");
      const BigInt mm = f.at("m_minus"), mp = f.at("m_plus");
      if (mm < 1 || mp < 1) throw MalformedFamily("N6A needs m_minus, m_plus >= 1");
      if (vm[1] == 0 && vm[2] == 0) throw MalformedFamily("N6A needs (b_minus, c_minus) != 0");
      if (vp[1] == 0 && vp[2] == 0) throw MalformedFamily("N6A needs (b_plus, c_plus) != 0");
      const auto hm = SubgroupSpec(G, {}, {}, {detail::point_on_circle(vm, mm)});
      const auto hp = SubgroupSpec(G, {}, {}, {detail::point_on_circle(vp, mp)});
      const auto H = product(hm, hp);
      return {G, product(SubgroupSpec::circle(G, vm), hp), product(SubgroupSpec::circle(G, vp), hm), H};
    }
    case FamilyTag::N6B: {
      const auto G = AmbientGroup::s3xs3();
      const BigInt n = f.at("n");
      if (n < 1) throw MalformedFamily("N6B needs n >= 1");
      if (f.at("p") == 0 && f.at("q") == 0) throw MalformedFamily("N6B needs (p, q) != 0");
      const auto gen = detail::reduce(FiniteGenerator{detail::n6b_generator(f), n});
      const auto H = SubgroupSpec(G, {}, {{f.at("p"), f.at("q")}}, {gen});
      return {G, SubgroupSpec::torus(G), SubgroupSpec::torus(G), H};
    }
    case FamilyTag::N6C: {
      const auto G = AmbientGroup::s3xs3();
      const BigInt n = f.at("n");
      if (n < 1) throw MalformedFamily("N6C needs n >= 1");
      const FiniteGenerator zn{vec({0, 1}), n};
      return {G, SubgroupSpec::torus(G), SubgroupSpec(G, {0}, {}, {zn}),
              SubgroupSpec(G, {}, {vec({1, 0})}, {zn})};
    }
    case FamilyTag::N6D: {
      const auto G = AmbientGroup::s3xs3();
      return {G, SubgroupSpec::torus(G), SubgroupSpec(G, {0}, {vec({0, 1})}, {}),
              SubgroupSpec::circle(G, {f.at("p"), 1})};
    }
    case FamilyTag::N6E: {
      const auto G = AmbientGroup::s3xs3();
      const auto K = SubgroupSpec(G, {0}, {vec({0, 1})}, {});
      return {G, K, K, SubgroupSpec::circle(G, {f.at("p"), 1})};
    }
    case FamilyTag::N6F: {
      const BigInt n = f.at("n");
      if (n < 1) throw MalformedFamily("N6F needs n >= 1");
      const SubgroupSpec L(SU3Block{SU3BlockKind::S_U2U1, 1});
      return {AmbientGroup::su3(), L, L, SubgroupSpec(SU3Block{SU3BlockKind::SU2SU1_Zn, n})};
    }
  }
  throw MalformedFamily("unknown family");
}

/// Dimension l of the sphere K/H. Exact for the shapes representable here:
///  * torus part only: l = 1 iff dim K - dim H = 1 and K = K_0 . H;
///  * one extra S3 factor i in K with K = S3_i . H: K/H = S3 / (H cap T_i), which is
///    S2 when H meets T_i in the full circle and S3 when it meets it trivially;
///  * SU(3) blocks: S(U2U1) / SU2SU1.Z_n = S1.
inline int sphere_check(const SubgroupSpec& K, const SubgroupSpec& H) {
  if (!(K.ambient() == H.ambient())) throw NotASphere("K and H live in different groups");
  if (!contains(K, H)) throw NotASphere("H is not contained in K");

  if (!K.has_torus_model()) {
    if (K.su3_block()->kind == SU3BlockKind::S_U2U1 && H.su3_block()->kind == SU3BlockKind::SU2SU1_Zn) return 1;
    throw NotASphere("no sphere rule for " + K.to_string() + " / " + H.to_string());
  }

  std::vector<std::size_t> extra;
  for (auto i : K.full_s3_factors())
    if (!H.full_s3_factors().count(i)) extra.push_back(i);

  if (extra.empty()) {
    const auto dk = dimension(K), dh = dimension(H);
    if (dk == dh) throw NotASphere("K/H is finite (exceptional orbit, l = 0)");
    if (dk - dh != 1) throw NotASphere("K/H is a torus of dimension " + std::to_string(dk - dh));
    if (!(product(identity_component(K), H) == K)) throw NotASphere("K/H is disconnected");
    return 1;
  }
  if (extra.size() == 1) {
    const auto i = extra.front();
    const auto G = K.ambient();
    if (!(product(SubgroupSpec::s3_factor(G, i), H) == K)) throw NotASphere("K/H is not connected over the S3 factor");
    std::vector<BigInt> e(G.maximal_torus_rank());
    e[i] = 1;
    const auto circle_i = SubgroupSpec::circle(G, e);
    const auto meet = intersect(H, circle_i);
    if (meet == circle_i) return 2;
    if (meet == SubgroupSpec::trivial(G)) return 3;
    throw NotASphere("K/H is a lens space S3/" + component_group(meet).to_string());
  }
  throw NotASphere("no sphere rule with several extra S3 factors");
}

namespace detail {

/// Coordinates y with basis * y = cols (exact; basis square and invertible over Q).
inline IntMatrix solve_in_basis(const IntMatrix& basis, const IntMatrix& cols) {
  auto snf = smith_normal_form(basis);
  IntMatrix rhs = snf.U * cols;
  for (std::size_t i = 0; i < rhs.rows(); ++i)
    for (std::size_t j = 0; j < rhs.cols(); ++j) {
      if (rhs(i, j) % snf.D(i, i) != 0) throw DimensionMismatch("vector outside the lattice");
      rhs(i, j) /= snf.D(i, i);
    }
  return snf.V * rhs;
}

struct OrbitLattice {
  IntMatrix basis;       // basis of phi(preimage of H), scaled by M
  IntMatrix chars;       // phi: rows annihilate the Lie algebra of H
  IntMatrix s3_coords;   // images of the S3 maximal-circle lattice, in basis coordinates
  BigInt scale = 1;
};

// For H in the maximal torus model of G = S3^a x T^b (universal cover S3^a x R^b),
// pi_1(G/H) = pi_0(preimage of H) = P_H / (W_H + E), where P_H = W_H + Lambda_H is the
// preimage of H in R^n, W_H its Lie algebra and E = Z^a the S3 coordinates.
// Everything is pushed through phi : R^n -> R^r with kernel W_H.
inline OrbitLattice orbit_lattice(const AmbientGroup& G, const SubgroupSpec& H) {
  const std::size_t n = G.maximal_torus_rank();
  const auto slopes = H.effective_slopes();
  IntMatrix chars = slopes.empty() ? IntMatrix::identity(n)
                                   : kernel_basis(IntMatrix::from_columns(n, slopes).transpose()).transpose();
  BigInt m = 1;
  for (const auto& g : H.finite_gens()) m = lcm(m, g.order);
  IntMatrix gens = m * chars;
  for (const auto& g : H.finite_gens()) {
    std::vector<BigInt> num = g.numerators;
    for (auto& x : num) x *= m / g.order;
    gens = hconcat(gens, chars * IntMatrix::column(num));
  }
  IntMatrix basis = image_basis(gens);
  std::vector<std::vector<BigInt>> e;
  for (auto i : G.s3_slots()) e.push_back(unit_vector(n, i));
  IntMatrix e_img = e.empty() ? IntMatrix(chars.rows(), 0) : m * chars * IntMatrix::from_columns(n, e);
  return {basis, chars, solve_in_basis(basis, e_img), m};
}

// Generators, in basis coordinates, of phi(P_H cap (W_K + E)): the components of the
// preimage of H reached from the identity component of the preimage of K.
inline IntMatrix reachable_components(const AmbientGroup& G, const OrbitLattice& ol, const SubgroupSpec& K) {
  const std::size_t n = G.maximal_torus_rank();
  const std::size_t r = ol.basis.rows();
  const auto ks = K.effective_slopes();
  IntMatrix wk = ks.empty() ? IntMatrix(r, 0) : ol.chars * IntMatrix::from_columns(n, ks);
  IntMatrix ck = wk.cols() == 0 ? IntMatrix::identity(r) : kernel_basis(wk.transpose()).transpose();
  if (ck.rows() == 0) return IntMatrix::identity(r);
  // ck * basis * y = ck * basis * s3_coords * z  for some integer z.
  IntMatrix lhs = ck * ol.basis;
  IntMatrix sys = hconcat(lhs, -(lhs * ol.s3_coords));
  return kernel_basis(sys).row_range(0, r);
}

}  // namespace detail

/// pi_1(G/H).
inline FGAbelianGroup orbit_fundamental_group(const AmbientGroup& G, const SubgroupSpec& H) {
  if (!G.has_torus_model()) return component_group(H);  // SU(3) is simply connected
  const auto ol = detail::orbit_lattice(G, H);
  return cokernel(ol.s3_coords);
}

/// pi_1(M) = pi_1(G/H) / < images of pi_1(K-/H), pi_1(K+/H) >  (van Kampen on the
/// two disk bundles, all l >= 1).
inline FGAbelianGroup fundamental_group(const GroupDiagram& d) {
  const auto& G = d.G;
  if (!G.has_torus_model()) {
    // pi_1(G/H) = pi_0(H); a K whose identity component is all of S(U2U1) reaches
    // every component of H, the smaller blocks reach none.
    auto reaches_all = [](const SubgroupSpec& K) { return K.su3_block()->kind == SU3BlockKind::S_U2U1; };
    if (reaches_all(d.Kminus) || reaches_all(d.Kplus)) return {};
    return component_group(d.H);
  }
  if (!d.H.has_torus_model() || !d.Kminus.has_torus_model() || !d.Kplus.has_torus_model())
    throw UnsupportedSubgroupShape("fundamental_group: mixed subgroup models");
  const auto ol = detail::orbit_lattice(G, d.H);
  IntMatrix rel = hconcat(ol.s3_coords, detail::reachable_components(G, ol, d.Kminus));
  rel = hconcat(rel, detail::reachable_components(G, ol, d.Kplus));
  return cokernel(rel);
}

// ---------------------------------------------------------------------------
// Recognition.

namespace detail {

inline GroupDiagram normalized(GroupDiagram d) {
  d.Kminus = d.Kminus.canonical();
  d.Kplus = d.Kplus.canonical();
  d.H = d.H.canonical();
  return d;
}

inline std::optional<std::vector<BigInt>> single_circle(const SubgroupSpec& s) {
  if (!s.is_torus_type() || dimension(s) != 1) return std::nullopt;
  auto id = identity_component(s);
  return primitive(id.circle_slopes().front());
}

inline FamilyInstance recognized(FamilyTag tag, std::map<std::string, BigInt> params, const GroupDiagram& d) {
  return {tag, std::move(params), d};
}

/// Parameters of an N6A diagram, or nullopt if the shape does not fit.
inline std::optional<FamilyInstance> recognize_n6a(const GroupDiagram& d) {
  auto vm = single_circle(d.Kminus), vp = single_circle(d.Kplus);
  if (!vm || !vp || !d.H.is_torus_type() || dimension(d.H) != 0) return std::nullopt;
  std::map<std::string, BigInt> p;
  p["b_minus"] = (*vm)[1];
  p["c_minus"] = (*vm)[2];
  p["b_plus"] = (*vp)[1];
  p["c_plus"] = (*vp)[2];
  const BigInt am = (*vm)[0], ap = (*vp)[0];
  // Solve a = r b + s c on both sides.
  const BigInt det = (*vm)[1] * (*vp)[2] - (*vm)[2] * (*vp)[1];
  std::optional<std::pair<BigInt, BigInt>> rs;
  if (det != 0) {
    const BigInt rn = am * (*vp)[2] - (*vm)[2] * ap, sn = (*vm)[1] * ap - am * (*vp)[1];
    if (rn % det == 0 && sn % det == 0) rs = {rn / det, sn / det};
  } else {
    BigInt x, y;
    const BigInt g = extended_gcd((*vm)[1], (*vm)[2], x, y);
    if (g != 0 && am % g == 0) {
      BigInt r = x * (am / g), s = y * (am / g);
      if (r * (*vp)[1] + s * (*vp)[2] == ap) rs = {r, s};
    }
  }
  if (rs) {
    p["r"] = rs->first;
    p["s"] = rs->second;
  } else {
    p["r"] = 0;
    p["s"] = 0;
    p["a_minus"] = am;
    p["a_plus"] = ap;
  }
  auto order_on = [&](const std::vector<BigInt>& v) -> BigInt {
    auto meet = intersect(d.H, SubgroupSpec::circle(d.G, v));
    if (dimension(meet) != 0) return 0;
    return *component_group(meet).order();
  };
  p["m_minus"] = order_on(*vm);
  p["m_plus"] = order_on(*vp);
  return recognized(FamilyTag::N6A, std::move(p), d);
}

}  // namespace detail

/// Identify the table row of a diagram given in the normal form of that row.
inline FamilyInstance recognize_family(const GroupDiagram& input) {
  const auto d = detail::normalized(input);
  const auto& G = d.G;
  auto fail = [](const std::string& why) -> FamilyInstance { throw NotInTable(why); };
  auto same_as_built = [&](FamilyInstance f) -> FamilyInstance {
    auto built = build_diagram(f);
    if (!(built == d)) throw NotInTable(to_string(f.tag) + "-like diagram is not in the normal form of that row");
    f.source = input;
    return f;
  };

  if (G.tag == AmbientTag::SU3) {
    const auto& km = d.Kminus.su3_block();
    const auto& kp = d.Kplus.su3_block();
    const auto& h = d.H.su3_block();
    if (km->kind == SU3BlockKind::S_U2U1 && kp->kind == SU3BlockKind::S_U2U1 && h->kind == SU3BlockKind::SU2SU1_Zn)
      return same_as_built({FamilyTag::N6F, {{"n", h->n}}, std::nullopt});
    return fail("SU3 diagram outside the N6F row");
  }
  if (G.tag == AmbientTag::S3xT2) {
    auto f = detail::recognize_n6a(d);
    if (!f) return fail("S3xT2 diagram without circle isotropy groups over a finite H");
    f->source = input;
    return *f;
  }

  const auto T = SubgroupSpec::torus(G);
  const auto S3S1 = SubgroupSpec(G, {0}, {detail::vec({0, 1})}, {});
  const bool km_torus = d.Kminus == T, kp_torus = d.Kplus == T;

  if (km_torus && kp_torus) {
    auto v = detail::single_circle(d.H);
    if (!v) return fail("N6B needs a one-dimensional H");
    BigInt n = *component_group(d.H).order();
    return same_as_built({FamilyTag::N6B, {{"p", (*v)[0]}, {"q", (*v)[1]}, {"n", n}}, std::nullopt});
  }
  if (km_torus && d.Kplus.full_s3_factors() == std::set<std::size_t>{0} && dimension(d.Kplus) == 3) {
    BigInt n = *component_group(d.Kplus).order();
    return same_as_built({FamilyTag::N6C, {{"n", n}}, std::nullopt});
  }
  auto circle_p1 = [&]() -> BigInt {
    auto v = detail::single_circle(d.H);
    if (!v || !component_group(d.H).is_trivial() || abs((*v)[1]) != 1)
      throw NotInTable("H is not a circle {(e^{ip t}, e^{i t})}");
    return (*v)[0] * (*v)[1];
  };
  if (km_torus && d.Kplus == S3S1) return same_as_built({FamilyTag::N6D, {{"p", circle_p1()}}, std::nullopt});
  if (d.Kminus == S3S1 && d.Kplus == S3S1) return same_as_built({FamilyTag::N6E, {{"p", circle_p1()}}, std::nullopt});
  return fail("S3xS3 diagram matches no table row");
}

/// Parameters normalized the way recognition reports them (slope signs).
inline FamilyInstance normalize_family(FamilyInstance f) {
  auto flip_if_needed = [](std::vector<BigInt> v) {
    auto it = std::find_if(v.begin(), v.end(), [](const BigInt& x) { return x != 0; });
    return it != v.end() && *it < 0;
  };
  if (f.tag == FamilyTag::N6A) {
    for (const char* side : {"minus", "plus"}) {
      const std::string s = side;
      if (flip_if_needed(detail::n6a_slope(f, side))) {
        f.params["b_" + s] = -f.params["b_" + s];
        f.params["c_" + s] = -f.params["c_" + s];
        if (f.has("a_" + s)) f.params["a_" + s] = -f.params["a_" + s];
      }
    }
  } else if (f.tag == FamilyTag::N6B) {
    if (flip_if_needed({f.at("p"), f.at("q")})) {
      f.params["p"] = -f.params["p"];
      f.params["q"] = -f.params["q"];
      if (f.has("gen_x")) {
        f.params["gen_x"] = -f.params["gen_x"];
        f.params["gen_y"] = -f.params["gen_y"];
      }
    }
  }
  return f;
}

// ---------------------------------------------------------------------------
// Validation.

namespace detail {

inline void diagram_checks(const GroupDiagram& d, std::vector<std::string>& out) {
  for (const auto* side : {"K⁻", "K⁺"}) {
    const auto& K = std::string(side) == "K⁻" ? d.Kminus : d.Kplus;
    if (!contains(K, d.H)) {
      out.push_back(std::string("H ⊆ ") + side);
      continue;
    }
    try {
      sphere_check(K, d.H);
    } catch (const NotASphere& e) {
      out.push_back(std::string(side) + "/H is a sphere (" + e.what() + ")");
    }
  }
}

inline bool cyclic_group(const FGAbelianGroup& g) { return g.free_rank() == 0 && g.torsion().size() <= 1; }

inline std::string sign(const std::string& side) { return side == "minus" ? "⁻" : "⁺"; }

inline void n6a_checks(const FamilyInstance& f, std::vector<std::string>& out) {
  for (const char* side : {"minus", "plus"}) {
    const std::string s = side;
    if (gcd(f.at("b_" + s), f.at("c_" + s)) != 1) out.push_back("gcd(b" + sign(s) + ",c" + sign(s) + ")=1");
    if (f.at("m_" + s) < 1) out.push_back("m_" + s + " ≥ 1");
    if (f.has("a_" + s) && f.at("a_" + s) != f.at("r") * f.at("b_" + s) + f.at("s") * f.at("c_" + s))
      out.push_back("a" + sign(s) + " = r·b" + sign(s) + " + s·c" + sign(s));
  }
  if (!out.empty()) return;
  const auto d = build_diagram(f);
  if (d.Kminus == d.Kplus) out.push_back("K⁻≠K⁺");
  const auto k0m = identity_component(d.Kminus), k0p = identity_component(d.Kplus);
  if (!contains(d.H, intersect(k0m, k0p))) out.push_back("K⁻₀∩K⁺₀ ⊆ H");
  const auto hm = intersect(d.H, k0m), hp = intersect(d.H, k0p);
  if (dimension(hm) != 0 || !cyclic_group(component_group(hm))) out.push_back("H₋ = H∩K⁻₀ finite cyclic");
  if (dimension(hp) != 0 || !cyclic_group(component_group(hp))) out.push_back("H₊ = H∩K⁺₀ finite cyclic");
  if (!(product(hm, hp) == d.H)) out.push_back("H = H₋·H₊");
  if (!(product(k0m, d.H) == d.Kminus) || !(product(k0p, d.H) == d.Kplus)) out.push_back("K± = K±₀·H");
  if (dimension(hm) == 0 && *component_group(hm).order() != f.at("m_minus")) out.push_back("|H₋| = m_minus");
  if (dimension(hp) == 0 && *component_group(hp).order() != f.at("m_plus")) out.push_back("|H₊| = m_plus");
}

inline void n6b_checks(const FamilyInstance& f, std::vector<std::string>& out) {
  const BigInt p = f.at("p"), q = f.at("q"), n = f.at("n");
  if (n < 1) {
    out.push_back("n ≥ 1");
    return;
  }
  if (gcd(p, q) != 1) out.push_back("gcd(p,q)=1");
  if (p == 0 && q == 0) return;
  const auto G = AmbientGroup::s3xs3();
  const auto gen = detail::n6b_generator(f);
  const auto reduced = reduce(FiniteGenerator{gen, n});
  if (reduced.order != n) out.push_back("ℤn generator has order n");
  const auto zn = SubgroupSpec(G, {}, {}, {reduced});
  const auto meet = intersect(zn, SubgroupSpec::circle(G, {p, q}));
  if (!(meet == SubgroupSpec::trivial(G))) out.push_back("ℤn ∩ circle(p,q) = 1");
}

}  // namespace detail

/// Side conditions checked for a row, as reported by validate_family.
inline std::vector<std::string> side_conditions(FamilyTag t) {
  switch (t) {
    case FamilyTag::N6A: return {"K⁻≠K⁺", "gcd(b±,c±)=1", "a± = r·b± + s·c±", "K⁻₀∩K⁺₀ ⊆ H", "H = H₋·H₊"};
    case FamilyTag::N6B: return {"gcd(p,q)=1", "ℤn ∩ circle(p,q) = 1", "n ≥ 1"};
    case FamilyTag::N6C: return {"n ≥ 1"};
    case FamilyTag::N6D: return {};
    case FamilyTag::N6E: return {};
    case FamilyTag::N6F: return {"n ≥ 1", "ℤn diagonal in SU2SU1"};
  }
  return {};
}

/// Side conditions of the instance's row that fail; empty means valid.
inline std::vector<std::string> validate_family(const FamilyInstance& f) {
  std::vector<std::string> out;
  try {
    check_param_names(f);
  } catch (const MalformedFamily& e) {
    return {e.what()};
  }
  switch (f.tag) {
    case FamilyTag::N6A: detail::n6a_checks(f, out); break;
    case FamilyTag::N6B: detail::n6b_checks(f, out); break;
    case FamilyTag::N6C:
    case FamilyTag::N6F:
      if (f.at("n") < 1) out.push_back("n ≥ 1");
      break;
    case FamilyTag::N6D:
    case FamilyTag::N6E: break;
  }
  if (!out.empty()) return out;
  GroupDiagram d;
  try {
    d = build_diagram(f);
  } catch (const Error& e) {
    return {e.what()};
  }
  detail::diagram_checks(d, out);
  if (f.source && f.tag == FamilyTag::N6A) {
    // Recognized N6A diagrams: the given diagram must be the one the parameters describe.
    FamilyInstance by_params = f;
    by_params.source.reset();
    if (!(build_diagram(by_params) == detail::normalized(d))) out.push_back("diagram is in N6A normal form");
  }
  return out;
}

/// Rejection-sampled valid N6A instance with slope entries in [-bound, bound] and
/// |H±| in [1, 2 bound].
template <class Rng>
FamilyInstance random_valid_n6a(Rng& rng, int bound) {
  std::uniform_int_distribution<int> e(-bound, bound), m(1, 2 * bound);
  for (;;) {
    FamilyInstance f{FamilyTag::N6A, {}, std::nullopt};
    for (const char* k : {"r", "s", "b_minus", "c_minus", "b_plus", "c_plus"}) f.params[k] = e(rng);
    f.params["m_minus"] = m(rng);
    f.params["m_plus"] = m(rng);
    if (f.at("b_minus") == 0 && f.at("c_minus") == 0) continue;
    if (f.at("b_plus") == 0 && f.at("c_plus") == 0) continue;
    if (validate_family(f).empty()) return f;
  }
}

}  // namespace cohom1
