#pragma once

// Loop classes in pi_1(SO(3)) and pi_1(SO(4)) by lifting through the spin cover.

#include <cmath>
#include <functional>
#include <numbers>
#include <string>

#include <Eigen/Dense>

#include "cohom1/errors.hpp"
#include "cohom1/liegroup.hpp"
#include "cohom1/oracle/quaternion.hpp"

namespace cohom1::oracle {

/// A loop t in [0, 1] -> SO(dim), dim 3 or 4, with path(0) = path(1).
struct SampledLoop {
  std::size_t dim = 3;
  std::function<Eigen::MatrixXd(double)> path;
};

struct LiftPolicy {
  std::size_t initial_steps = 256;
  std::size_t max_steps = std::size_t{1} << 20;
  double step_bound = 0.5;
};

namespace detail {

inline Eigen::VectorXd lift_vector(const Eigen::MatrixXd& m, std::size_t dim) {
  if (dim == 3) return so3_lift(m).vec();
  auto [p, q] = so4_lift(m);
  Eigen::VectorXd v(8);
  v << p.vec(), q.vec();
  return v;
}

// Lift with `steps` samples; returns false if a step exceeded the bound.
inline bool lift_with(const SampledLoop& loop, std::size_t steps, double bound, int& parity) {
  Eigen::VectorXd start = lift_vector(loop.path(0.0), loop.dim);
  Eigen::VectorXd prev = start;
  for (std::size_t k = 1; k <= steps; ++k) {
    Eigen::VectorXd cur = lift_vector(loop.path(static_cast<double>(k) / static_cast<double>(steps)), loop.dim);
    if ((cur + prev).norm() < (cur - prev).norm()) cur = -cur;
    if ((cur - prev).norm() >= bound) return false;
    prev = cur;
  }
  parity = (prev - start).norm() < (prev + start).norm() ? 0 : 1;
  return true;
}

}  // namespace detail

/// 0 if the lift closes up, 1 if it ends at the antipode of its start.
inline int lift_loop_parity(const SampledLoop& loop, const LiftPolicy& policy = {}) {
  if (loop.dim != 3 && loop.dim != 4) throw DimensionMismatch("lift_loop_parity handles SO(3) and SO(4)");
  for (std::size_t steps = policy.initial_steps; steps <= policy.max_steps; steps *= 2) {
    int parity = 0;
    if (detail::lift_with(loop, steps, policy.step_bound, parity)) return parity;
  }
  throw LiftAmbiguous("lift step bound not reached within " + std::to_string(policy.max_steps) + " samples");
}

/// The block loop of an SO(k) LoopSpec, restricted to the smallest SO(3) or SO(4)
/// holding its rotation blocks (the inclusion is an isomorphism on pi_1).
inline SampledLoop sampled_block_loop(const LoopSpec& spec) {
  if (spec.target != LoopTarget::SO) throw DimensionMismatch("sampled_block_loop needs an SO(k) loop");
  spec.validate();
  if (spec.block_weights.size() > 2) throw DimensionMismatch("at most two rotation blocks are supported");
  std::vector<double> w;
  for (const auto& x : spec.block_weights) w.push_back(static_cast<double>(x));
  const std::size_t dim = w.size() == 2 ? 4 : 3;
  return {dim, [w, dim](double t) {
            const double th = 2 * std::numbers::pi * t;
            Eigen::MatrixXd m = Eigen::MatrixXd::Identity(dim, dim);
            std::size_t off = dim - 2 * w.size();
            for (double wi : w) {
              const double c = std::cos(wi * th), s = std::sin(wi * th);
              m(off, off) = c;
              m(off, off + 1) = -s;
              m(off + 1, off) = s;
              m(off + 1, off + 1) = c;
              off += 2;
            }
            return m;
          }};
}

}  // namespace cohom1::oracle
