#pragma once

// Closed subgroups of S3xT2, S3xS3 and SU(3) in the shapes used by the
// six-dimensional family table, and loop classes in SO(k), PU(3) and tori.
//
// A torus-type subgroup S of T^n = R^n / Z^n is stored by generators (circle
// slopes and rational points) but compared through its annihilator
//   S^perp = { chi in Z^n : chi . t in Z for all t in S },
// which determines S uniquely. Intersections add annihilators, containment
// reverses their inclusion, and the character group Z^n / S^perp gives the
// dimension and component group.
//
// A full S3 factor in slot i is handled by adding the maximal circle e_i of
// that factor to the torus part: every operation below only ever meets the
// S3 through its maximal torus, and S3 is connected and simply connected.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cohom1/errors.hpp"
#include "cohom1/intlin.hpp"

namespace cohom1 {

class InvalidSubgroup : public Error {
 public:
  using Error::Error;
};

enum class AmbientTag { S3xT2, S3xS3, SU3 };

struct AmbientGroup {
  AmbientTag tag = AmbientTag::S3xS3;

  static constexpr AmbientGroup s3xt2() { return {AmbientTag::S3xT2}; }
  static constexpr AmbientGroup s3xs3() { return {AmbientTag::S3xS3}; }
  static constexpr AmbientGroup su3() { return {AmbientTag::SU3}; }

  std::size_t maximal_torus_rank() const noexcept { return tag == AmbientTag::S3xT2 ? 3 : 2; }
  std::size_t dimension() const noexcept {
    switch (tag) {
      case AmbientTag::S3xT2: return 5;
      case AmbientTag::S3xS3: return 6;
      case AmbientTag::SU3: return 8;
    }
    return 0;
  }
  /// Coordinates of the maximal torus that are maximal circles of S3 factors.
  std::vector<std::size_t> s3_slots() const {
    switch (tag) {
      case AmbientTag::S3xT2: return {0};
      case AmbientTag::S3xS3: return {0, 1};
      case AmbientTag::SU3: return {};
    }
    return {};
  }
  bool has_torus_model() const noexcept { return tag != AmbientTag::SU3; }

  std::string name() const {
    switch (tag) {
      case AmbientTag::S3xT2: return "S3xT2";
      case AmbientTag::S3xS3: return "S3xS3";
      case AmbientTag::SU3: return "SU3";
    }
    return "?";
  }

  friend bool operator==(const AmbientGroup&, const AmbientGroup&) = default;
};

/// A point of T^n = R^n/Z^n written as numerators / order; `order` is exact.
struct FiniteGenerator {
  std::vector<BigInt> numerators;
  BigInt order = 1;

  friend bool operator==(const FiniteGenerator&, const FiniteGenerator&) = default;
};

enum class SU3BlockKind { S_U2U1, SU2SU1_Zn, Zn_diagonal };

/// The three SU(3) subgroups of the table, all inside S(U(2)U(1)) = U(2):
///   S_U2U1        the full block,
///   SU2SU1_Zn(n)  { A in U(2) : det(A)^n = 1 },
///   Zn_diagonal(n) { diag(1, z, z^-1) : z^n = 1 }.
struct SU3Block {
  SU3BlockKind kind = SU3BlockKind::S_U2U1;
  BigInt n = 1;

  friend bool operator==(const SU3Block&, const SU3Block&) = default;
};

namespace detail {

inline std::vector<BigInt> unit_vector(std::size_t n, std::size_t i) {
  std::vector<BigInt> v(n);
  v[i] = 1;
  return v;
}

/// Divide by the content and make the first nonzero entry positive.
inline std::vector<BigInt> primitive(std::vector<BigInt> v) {
  BigInt g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0) return v;
  for (auto& x : v) x /= g;
  auto it = std::find_if(v.begin(), v.end(), [](const BigInt& x) { return x != 0; });
  if (it != v.end() && *it < 0)
    for (auto& x : v) x = -x;
  return v;
}

/// Reduce numerators mod order and shrink the order to the exact one.
inline FiniteGenerator reduce(FiniteGenerator g) {
  BigInt c = g.order;
  for (auto& x : g.numerators) {
    x = mod(x, g.order);
    c = gcd(c, x);
  }
  if (c > 1) {
    for (auto& x : g.numerators) x /= c;
    g.order /= c;
  }
  return g;
}

/// L1 subset of L2, both given by generating columns in Z^n. Uses that a
/// surjection between isomorphic f.g. abelian groups is an isomorphism.
inline bool lattice_contains(const IntMatrix& l2, const IntMatrix& l1) {
  if (l1.cols() == 0) return true;
  return cokernel(hconcat(l2, l1)) == cokernel(l2);
}

}  // namespace detail

class SubgroupSpec {
 public:
  SubgroupSpec() = default;

  /// Validating constructor for torus-model ambients.
  SubgroupSpec(AmbientGroup g, std::set<std::size_t> s3, std::vector<std::vector<BigInt>> slopes,
               std::vector<FiniteGenerator> gens)
      : ambient_(g), s3_(std::move(s3)) {
    if (!g.has_torus_model()) throw InvalidSubgroup("SU3 subgroups are given by block tags only");
    const auto n = g.maximal_torus_rank();
    const auto slots = g.s3_slots();
    for (auto i : s3_)
      if (std::find(slots.begin(), slots.end(), i) == slots.end())
        throw InvalidSubgroup("slot " + std::to_string(i) + " is not an S3 factor of " + g.name());
    for (auto& w : slopes) {
      if (w.size() != n) throw InvalidSubgroup("circle slope has wrong rank");
      if (std::all_of(w.begin(), w.end(), [](const BigInt& x) { return x == 0; }))
        throw InvalidSubgroup("zero circle slope");
      for (auto i : s3_)
        if (w[i] != 0) throw InvalidSubgroup("circle slope runs through a full S3 factor");
      slopes_.push_back(detail::primitive(std::move(w)));
    }
    for (auto& f : gens) {
      if (f.numerators.size() != n) throw InvalidSubgroup("finite generator has wrong rank");
      if (f.order < 1) throw InvalidSubgroup("finite generator order must be positive");
      auto r = detail::reduce(f);
      if (r.order != f.order)
        throw InvalidSubgroup("finite generator does not have exact order " + f.order.str());
      if (r.order > 1) gens_.push_back(std::move(r));
    }
  }

  explicit SubgroupSpec(SU3Block block) : ambient_(AmbientGroup::su3()), su3_(block) {
    if (block.n < 1) throw InvalidSubgroup("SU3 block order must be positive");
  }

  static SubgroupSpec trivial(AmbientGroup g) {
    if (!g.has_torus_model()) return SubgroupSpec(SU3Block{SU3BlockKind::Zn_diagonal, 1});
    return {g, {}, {}, {}};
  }
  /// Maximal torus of G.
  static SubgroupSpec torus(AmbientGroup g) {
    std::vector<std::vector<BigInt>> s;
    for (std::size_t i = 0; i < g.maximal_torus_rank(); ++i) s.push_back(detail::unit_vector(g.maximal_torus_rank(), i));
    return {g, {}, std::move(s), {}};
  }
  static SubgroupSpec circle(AmbientGroup g, std::vector<BigInt> slope) { return {g, {}, {std::move(slope)}, {}}; }
  static SubgroupSpec cyclic(AmbientGroup g, std::vector<BigInt> numerators, BigInt order) {
    return {g, {}, {}, {FiniteGenerator{std::move(numerators), std::move(order)}}};
  }
  static SubgroupSpec s3_factor(AmbientGroup g, std::size_t slot) { return {g, {slot}, {}, {}}; }
  static SubgroupSpec whole(AmbientGroup g) {
    auto slots = g.s3_slots();
    std::set<std::size_t> s3(slots.begin(), slots.end());
    std::vector<std::vector<BigInt>> s;
    for (std::size_t i = 0; i < g.maximal_torus_rank(); ++i)
      if (!s3.count(i)) s.push_back(detail::unit_vector(g.maximal_torus_rank(), i));
    return {g, s3, std::move(s), {}};
  }

  const AmbientGroup& ambient() const noexcept { return ambient_; }
  const std::set<std::size_t>& full_s3_factors() const noexcept { return s3_; }
  const std::vector<std::vector<BigInt>>& circle_slopes() const noexcept { return slopes_; }
  const std::vector<FiniteGenerator>& finite_gens() const noexcept { return gens_; }
  const std::optional<SU3Block>& su3_block() const noexcept { return su3_; }

  bool is_torus_type() const noexcept { return ambient_.has_torus_model() && s3_.empty(); }
  bool has_torus_model() const noexcept { return ambient_.has_torus_model(); }

  /// Circle slopes plus the maximal circles of full S3 factors.
  std::vector<std::vector<BigInt>> effective_slopes() const {
    auto s = slopes_;
    for (auto i : s3_) s.push_back(detail::unit_vector(ambient_.maximal_torus_rank(), i));
    return s;
  }

  /// Rows form a basis of the annihilator lattice of the torus part.
  IntMatrix annihilator() const {
    require_torus_model("annihilator");
    const std::size_t n = ambient_.maximal_torus_rank();
    const auto slopes = effective_slopes();
    const std::size_t s = slopes.size(), k = gens_.size();
    BigInt m = 1;
    for (const auto& g : gens_) m = lcm(m, g.order);
    // chi . w = 0 for slopes, chi . (M/m_k) g_k - M y_k = 0 for generators.
    IntMatrix sys(s + k, n + k);
    for (std::size_t a = 0; a < s; ++a)
      for (std::size_t i = 0; i < n; ++i) sys(a, i) = slopes[a][i];
    for (std::size_t b = 0; b < k; ++b) {
      const BigInt scale = m / gens_[b].order;
      for (std::size_t i = 0; i < n; ++i) sys(s + b, i) = gens_[b].numerators[i] * scale;
      sys(s + b, n + b) = -m;
    }
    IntMatrix ker = kernel_basis(sys).row_range(0, n);
    return image_basis(ker).transpose();
  }

  /// Membership of the torus point numerators/denominator (mod Z^n).
  bool contains_point(const std::vector<BigInt>& numerators, const BigInt& denominator) const {
    require_torus_model("contains_point");
    IntMatrix x = annihilator() * IntMatrix::column(numerators);
    for (std::size_t i = 0; i < x.rows(); ++i)
      if (mod(x(i, 0), denominator) != 0) return false;
    return true;
  }

  /// Rebuild a subgroup from an annihilator lattice (rows) and S3 flags.
  static SubgroupSpec from_annihilator(AmbientGroup g, const IntMatrix& ann, std::set<std::size_t> s3 = {}) {
    const std::size_t n = g.maximal_torus_rank();
    std::vector<std::vector<BigInt>> slopes;
    std::vector<FiniteGenerator> gens;
    if (ann.rows() == 0) {
      for (std::size_t i = 0; i < n; ++i) slopes.push_back(detail::unit_vector(n, i));
    } else {
      // X t in Z^r, t = V s  <=>  D s in Z^r.
      auto snf = smith_normal_form(ann);
      const std::size_t r = snf.rank();
      for (std::size_t j = 0; j < n; ++j) {
        auto v = snf.V.col(j);
        if (j >= r) {
          slopes.push_back(std::move(v));
        } else if (snf.D(j, j) > 1) {
          gens.push_back(detail::reduce({std::move(v), snf.D(j, j)}));
        }
      }
    }
    // Project away the coordinates owned by full S3 factors.
    for (auto& w : slopes)
      for (auto i : s3) w[i] = 0;
    for (auto& f : gens) {
      for (auto i : s3) f.numerators[i] = 0;
      f = detail::reduce(std::move(f));
    }
    std::erase_if(slopes, [](const auto& w) { return std::all_of(w.begin(), w.end(), [](const BigInt& x) { return x == 0; }); });
    std::erase_if(gens, [](const auto& f) { return f.order == 1; });
    return {g, std::move(s3), std::move(slopes), std::move(gens)};
  }

  /// Canonical generators: slopes from a kernel basis, finite part from the SNF.
  SubgroupSpec canonical() const {
    if (!has_torus_model()) return *this;
    return from_annihilator(ambient_, annihilator(), s3_);
  }

  std::string to_string() const;

  friend bool operator==(const SubgroupSpec& a, const SubgroupSpec& b);

 private:
  void require_torus_model(const char* what) const {
    if (!has_torus_model()) throw UnsupportedSubgroupShape(std::string(what) + " needs a torus-model subgroup");
  }

  AmbientGroup ambient_;
  std::set<std::size_t> s3_;
  std::vector<std::vector<BigInt>> slopes_;
  std::vector<FiniteGenerator> gens_;
  std::optional<SU3Block> su3_;
};

namespace detail {

inline void require_same_ambient(const SubgroupSpec& a, const SubgroupSpec& b) {
  if (!(a.ambient() == b.ambient()))
    throw UnsupportedSubgroupShape("subgroups of different ambient groups: " + a.ambient().name() + " vs " +
                                   b.ambient().name());
}

// SU(3) blocks as subgroups of U(2): (contains SU(2)?, det-image order, 0 = whole circle).
struct BlockModel {
  bool su2;
  BigInt det_order;
};

inline BlockModel model(const SU3Block& b) {
  switch (b.kind) {
    case SU3BlockKind::S_U2U1: return {true, 0};
    case SU3BlockKind::SU2SU1_Zn: return {true, b.n};
    case SU3BlockKind::Zn_diagonal: return {false, b.n};
  }
  return {false, 1};
}

// mu_a subset mu_b (with 0 meaning the full circle).
inline bool roots_contained(const BigInt& a, const BigInt& b) {
  if (b == 0) return true;
  if (a == 0) return false;
  return b % a == 0;
}

inline bool block_contains(const SU3Block& outer, const SU3Block& inner) {
  const auto o = model(outer), i = model(inner);
  if (i.su2 && !o.su2) return false;
  return roots_contained(i.det_order, o.det_order);
}

}  // namespace detail

/// B subset of A.
inline bool contains(const SubgroupSpec& a, const SubgroupSpec& b) {
  detail::require_same_ambient(a, b);
  if (!a.has_torus_model()) return detail::block_contains(*a.su3_block(), *b.su3_block());
  for (auto i : b.full_s3_factors())
    if (!a.full_s3_factors().count(i)) return false;
  return detail::lattice_contains(b.annihilator().transpose(), a.annihilator().transpose());
}

inline bool operator==(const SubgroupSpec& a, const SubgroupSpec& b) {
  if (!(a.ambient() == b.ambient())) return false;
  if (!a.has_torus_model()) return a.su3_block() == b.su3_block();
  return a.full_s3_factors() == b.full_s3_factors() && contains(a, b) && contains(b, a);
}

inline SubgroupSpec intersect(const SubgroupSpec& a, const SubgroupSpec& b) {
  detail::require_same_ambient(a, b);
  if (!a.has_torus_model()) throw UnsupportedSubgroupShape("intersection of SU3 block subgroups");
  std::set<std::size_t> s3;
  std::set_intersection(a.full_s3_factors().begin(), a.full_s3_factors().end(), b.full_s3_factors().begin(),
                        b.full_s3_factors().end(), std::inserter(s3, s3.begin()));
  return SubgroupSpec::from_annihilator(a.ambient(), vconcat(a.annihilator(), b.annihilator()), std::move(s3));
}

/// Subgroup generated by A and B.
inline SubgroupSpec product(const SubgroupSpec& a, const SubgroupSpec& b) {
  detail::require_same_ambient(a, b);
  if (!a.has_torus_model()) {
    const auto x = detail::model(*a.su3_block()), y = detail::model(*b.su3_block());
    const BigInt ord = (x.det_order == 0 || y.det_order == 0) ? BigInt(0) : lcm(x.det_order, y.det_order);
    if (x.su2 || y.su2) {
      if (ord == 0) return SubgroupSpec(SU3Block{SU3BlockKind::S_U2U1, 1});
      return SubgroupSpec(SU3Block{SU3BlockKind::SU2SU1_Zn, ord});
    }
    return SubgroupSpec(SU3Block{SU3BlockKind::Zn_diagonal, ord});
  }
  std::set<std::size_t> s3 = a.full_s3_factors();
  s3.insert(b.full_s3_factors().begin(), b.full_s3_factors().end());
  std::vector<std::vector<BigInt>> slopes = a.effective_slopes();
  for (auto& w : b.effective_slopes()) slopes.push_back(w);
  std::vector<FiniteGenerator> gens = a.finite_gens();
  for (auto& f : b.finite_gens()) gens.push_back(f);
  for (auto& w : slopes)
    for (auto i : s3) w[i] = 0;
  for (auto& f : gens) {
    for (auto i : s3) f.numerators[i] = 0;
    f = detail::reduce(std::move(f));
  }
  std::erase_if(slopes, [](const auto& w) { return std::all_of(w.begin(), w.end(), [](const BigInt& x) { return x == 0; }); });
  return SubgroupSpec(a.ambient(), std::move(s3), std::move(slopes), std::move(gens));
}

inline SubgroupSpec identity_component(const SubgroupSpec& a) {
  if (!a.has_torus_model()) {
    const auto& b = *a.su3_block();
    switch (b.kind) {
      case SU3BlockKind::S_U2U1: return a;
      case SU3BlockKind::SU2SU1_Zn: return SubgroupSpec(SU3Block{SU3BlockKind::SU2SU1_Zn, 1});
      case SU3BlockKind::Zn_diagonal: return SubgroupSpec::trivial(a.ambient());
    }
  }
  const IntMatrix ann = a.annihilator();
  std::vector<std::vector<BigInt>> slopes;
  if (ann.rows() == 0) {
    slopes = SubgroupSpec::torus(a.ambient()).circle_slopes();
  } else {
    slopes = kernel_basis(ann).columns();
  }
  for (auto& w : slopes)
    for (auto i : a.full_s3_factors()) w[i] = 0;
  std::erase_if(slopes, [](const auto& w) { return std::all_of(w.begin(), w.end(), [](const BigInt& x) { return x == 0; }); });
  return SubgroupSpec(a.ambient(), a.full_s3_factors(), std::move(slopes), {});
}

/// pi_0(A).
inline FGAbelianGroup component_group(const SubgroupSpec& a) {
  if (!a.has_torus_model()) {
    const auto m = detail::model(*a.su3_block());
    return m.det_order == 0 ? FGAbelianGroup{} : FGAbelianGroup::cyclic(m.det_order);
  }
  // Character group Z^n / A^perp = Z^dim + pi_0(A).
  const auto chars = cokernel(a.annihilator().transpose());
  return FGAbelianGroup::from_cyclic(0, chars.torsion());
}

inline std::size_t dimension(const SubgroupSpec& a) {
  if (!a.has_torus_model()) {
    switch (a.su3_block()->kind) {
      case SU3BlockKind::S_U2U1: return 4;
      case SU3BlockKind::SU2SU1_Zn: return 3;
      case SU3BlockKind::Zn_diagonal: return 0;
    }
  }
  const std::size_t n = a.ambient().maximal_torus_rank();
  const std::size_t torus_dim = n - a.annihilator().rows();
  // Each S3 contributes 3, of which its maximal circle is already in torus_dim.
  return torus_dim + 2 * a.full_s3_factors().size();
}

inline std::string SubgroupSpec::to_string() const {
  std::ostringstream os;
  if (su3_) {
    switch (su3_->kind) {
      case SU3BlockKind::S_U2U1: os << "S(U2U1)"; break;
      case SU3BlockKind::SU2SU1_Zn: os << "SU2SU1"; if (su3_->n > 1) os << ".Z_" << su3_->n; break;
      case SU3BlockKind::Zn_diagonal: os << "Z_" << su3_->n << "(diag)"; break;
    }
    return os.str();
  }
  bool first = true;
  auto sep = [&] {
    if (!first) os << " . ";
    first = false;
  };
  for (auto i : s3_) {
    sep();
    os << "S3[" << i << "]";
  }
  for (const auto& w : slopes_) {
    sep();
    os << "circle(";
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
    os << ")";
  }
  for (const auto& f : gens_) {
    sep();
    os << "Z_" << f.order << "<";
    for (std::size_t i = 0; i < f.numerators.size(); ++i) os << (i ? "," : "") << f.numerators[i] << "/" << f.order;
    os << ">";
  }
  if (first) os << "1";
  return os.str();
}

// ---------------------------------------------------------------------------
// Loops and their classes in pi_1.

enum class LoopTarget { SO, PU3, Torus };

/// A one-parameter loop theta -> block rotation:
///   SO(k):   diag(Id_{k-2b}, R(w1 theta), ..., R(wb theta)), blocks on the trailing coordinates;
///   PU3:     [diag(e^{i a1 theta}, e^{i a2 theta}, e^{i a3 theta})];
///   Torus:   theta -> theta * slope mod Z^rank.
struct LoopSpec {
  LoopTarget target = LoopTarget::SO;
  std::size_t dim = 3;  ///< k for SO(k), rank for a torus, 3 for PU3
  std::vector<BigInt> block_weights;

  static LoopSpec so(std::size_t k, std::vector<BigInt> w) {
    LoopSpec l{LoopTarget::SO, k, std::move(w)};
    l.validate();
    return l;
  }
  static LoopSpec pu3(std::vector<BigInt> w) {
    LoopSpec l{LoopTarget::PU3, 3, std::move(w)};
    l.validate();
    return l;
  }
  static LoopSpec torus(std::vector<BigInt> slope) {
    const auto r = slope.size();
    return {LoopTarget::Torus, r, std::move(slope)};
  }

  void validate() const {
    if (target == LoopTarget::SO) {
      if (dim < 3) throw DimensionMismatch("SO(k) loops need k >= 3");
      if (2 * block_weights.size() > dim) throw DimensionMismatch("too many 2x2 blocks for SO(" + std::to_string(dim) + ")");
    } else if (target == LoopTarget::PU3) {
      if (block_weights.size() != 3) throw DimensionMismatch("PU3 loops need exactly three weights");
    } else if (block_weights.size() != dim) {
      throw DimensionMismatch("torus loop slope has wrong rank");
    }
  }

  std::string target_name() const {
    switch (target) {
      case LoopTarget::SO: return "SO(" + std::to_string(dim) + ")";
      case LoopTarget::PU3: return "PU(3)";
      case LoopTarget::Torus: return "T^" + std::to_string(dim);
    }
    return "?";
  }

  friend bool operator==(const LoopSpec&, const LoopSpec&) = default;
};

/// pi_1 of the loop's target group.
inline FGAbelianGroup loop_target_pi1(const LoopSpec& loop) {
  switch (loop.target) {
    case LoopTarget::SO: return FGAbelianGroup::cyclic(2);
    case LoopTarget::PU3: return FGAbelianGroup::cyclic(3);
    case LoopTarget::Torus: return FGAbelianGroup::free(loop.dim);
  }
  return {};
}

/// Pointwise product of two loops with the same target (weights add).
inline LoopSpec concat(const LoopSpec& a, const LoopSpec& b) {
  if (a.target != b.target || a.dim != b.dim) throw DimensionMismatch("concatenating loops in different groups");
  LoopSpec out = a;
  const auto n = std::max(a.block_weights.size(), b.block_weights.size());
  out.block_weights.assign(n, 0);
  for (std::size_t i = 0; i < a.block_weights.size(); ++i) out.block_weights[i] += a.block_weights[i];
  for (std::size_t i = 0; i < b.block_weights.size(); ++i) out.block_weights[i] += b.block_weights[i];
  out.validate();
  return out;
}

/// Class of the loop in pi_1 of its target.
///   SO(k), k >= 3: sum of block weights mod 2.
///   PU(3): +(a1 + a2 + a3) mod 3. The sign is a convention; only whether the
///          class vanishes is convention independent.
///   Torus: the slope itself.
inline AbelianElement loop_class(const LoopSpec& loop) {
  loop.validate();
  BigInt sum = 0;
  for (const auto& w : loop.block_weights) sum += w;
  switch (loop.target) {
    case LoopTarget::SO: return {loop_target_pi1(loop), {sum}};
    case LoopTarget::PU3: return {loop_target_pi1(loop), {sum}};
    case LoopTarget::Torus: return {loop_target_pi1(loop), loop.block_weights};
  }
  return {};
}

}  // namespace cohom1
