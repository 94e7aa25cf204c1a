#pragma once

// Euler class of a principal circle bundle from weight data: e generates the
// image of dbar_2 o pi^* in H^2(base).

#include <vector>

#include "cohom1/classify.hpp"
#include "cohom1/errors.hpp"
#include "cohom1/intlin.hpp"

namespace cohom1::oracle {

struct WeightPresentation {
  std::size_t torus_rank = 0;
  std::size_t base_H2_rank = 0;
  IntMatrix pullback_map;  ///< torus_rank x g: images of the H^1(T/F) generators in H^1(T)
  IntMatrix d2bar_matrix;  ///< base_H2_rank x torus_rank
};

/// T = L x S^1 with F the graph {(l, phi(l))}, phi given by integer weights w on the
/// k-torus L. The characters of T killing F span H^1(T/F); the first k torus classes
/// transgress to the base generators, the fiber class to 0.
inline WeightPresentation presentation_from_weights(const std::vector<BigInt>& w) {
  const std::size_t k = w.size();
  IntMatrix phi(k + 1, k);
  for (std::size_t i = 0; i < k; ++i) {
    phi(i, i) = -1;
    phi(k, i) = w[i];
  }
  IntMatrix d2(k, k + 1);
  for (std::size_t i = 0; i < k; ++i) d2(i, i) = 1;
  return {k + 1, k, kernel_basis(phi.transpose()), d2};
}

inline EulerClass euler_from_weights(const WeightPresentation& wp) {
  if (wp.pullback_map.rows() != wp.torus_rank || wp.d2bar_matrix.cols() != wp.torus_rank ||
      wp.d2bar_matrix.rows() != wp.base_H2_rank)
    throw MalformedPresentation("presentation matrices do not match the stated ranks");
  const IntMatrix img = wp.d2bar_matrix * wp.pullback_map;
  const IntMatrix basis = image_basis(img);
  if (basis.cols() == 0) return {std::vector<BigInt>(wp.base_H2_rank, 0)};
  if (basis.cols() > 1) throw MalformedPresentation("image of dbar_2 o pi^* has rank > 1");
  return {basis.col(0)};
}

}  // namespace cohom1::oracle
