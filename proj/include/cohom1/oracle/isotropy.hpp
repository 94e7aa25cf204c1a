#pragma once

// Numeric isotropy of the S3 x S1 x S1 action on S3 x S3
//   (g, z, w) . (x, y) = (g x zbar^r wbar^s, ((z^c- wbar^b-)^n-, (z^c+ wbar^b+)^n+) . y),
// with y = y1 + y2 j and the torus acting on (y1, y2) by multiplication.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <numbers>
#include <optional>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "cohom1/oracle/quaternion.hpp"

namespace cohom1::oracle {

struct ActionParams {
  long long r = 0, s = 0;
  long long b_minus = 1, c_minus = 0, b_plus = 0, c_plus = 1;
  long long n_minus = 1, n_plus = 1;
};

struct IsotropyReport {
  Quaternion x, y;
  int orbit_dimension = 0;
  int isotropy_dimension = 0;
  double residual = 0;  ///< smallest singular value kept above the rank cut
  double largest = 0;
  double first_dropped = 0;  ///< largest singular value cut to zero (0 if none)
  Eigen::VectorXd null_vector;  ///< isotropy direction when isotropy_dimension == 1
};

inline constexpr double kRankCut = 1e-8;
inline constexpr int kActingDimension = 5;

/// 8 x 5 matrix of the infinitesimal action at (x, y); columns i, j, k of su(2), then z, w.
inline Eigen::Matrix<double, 8, 5> infinitesimal_action(const ActionParams& a, const Quaternion& x,
                                                        const Quaternion& y) {
  Eigen::Matrix<double, 8, 5> m = Eigen::Matrix<double, 8, 5>::Zero();
  const Quaternion imag[3] = {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  for (int c = 0; c < 3; ++c) m.block<4, 1>(0, c) = (imag[c] * x).vec();
  const Quaternion xi = x * imag[0];
  // y = (y1re, y1im, y2re, y2im); multiplying y1 by i t gives d/dt = i y1.
  auto rot1 = [&](double speed) { return Eigen::Vector2d(-speed * y.x, speed * y.w); };
  auto rot2 = [&](double speed) { return Eigen::Vector2d(-speed * y.z, speed * y.y); };
  const double zm = double(a.n_minus * a.c_minus), zp = double(a.n_plus * a.c_plus);
  const double wm = -double(a.n_minus * a.b_minus), wp = -double(a.n_plus * a.b_plus);
  m.block<4, 1>(0, 3) = -double(a.r) * xi.vec();
  m.block<2, 1>(4, 3) = rot1(zm);
  m.block<2, 1>(6, 3) = rot2(zp);
  m.block<4, 1>(0, 4) = -double(a.s) * xi.vec();
  m.block<2, 1>(4, 4) = rot1(wm);
  m.block<2, 1>(6, 4) = rot2(wp);
  return m;
}

inline IsotropyReport isotropy_at(const ActionParams& a, const Quaternion& x, const Quaternion& y,
                                  double rank_cut = kRankCut) {
  const auto m = infinitesimal_action(a, x, y);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  IsotropyReport rep;
  rep.x = x;
  rep.y = y;
  rep.largest = sv(0);
  const double cut = rank_cut * sv(0);
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cut) {
      ++rank;
      rep.residual = sv(i);
    } else if (rep.first_dropped == 0) {
      rep.first_dropped = sv(i);
    }
  rep.orbit_dimension = rank;
  rep.isotropy_dimension = kActingDimension - rank;
  if (rep.isotropy_dimension == 1) rep.null_vector = svd.matrixV().col(kActingDimension - 1);
  return rep;
}

inline Quaternion random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  return Quaternion{g(rng), g(rng), g(rng), g(rng)}.normalized();
}

/// Reports at `samples` random points of S3 x S3.
inline std::vector<IsotropyReport> isotropy_scan(const ActionParams& a, std::size_t samples, std::uint64_t seed,
                                                double rank_cut = kRankCut) {
  std::mt19937_64 rng(seed);
  std::vector<IsotropyReport> out;
  out.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    const auto x = random_unit(rng);
    const auto y = random_unit(rng);
    out.push_back(isotropy_at(a, x, y, rank_cut));
  }
  return out;
}

/// Reports along the transverse arc x = 1, y(t) = cos t + sin t j, t in [0, pi/2].
inline std::vector<IsotropyReport> transverse_scan(const ActionParams& a, std::size_t steps,
                                                  double rank_cut = kRankCut) {
  std::vector<IsotropyReport> out;
  for (std::size_t k = 0; k <= steps; ++k) {
    const double t = std::numbers::pi / 2 * static_cast<double>(k) / static_cast<double>(steps);
    out.push_back(isotropy_at(a, {1, 0, 0, 0}, {std::cos(t), 0, std::sin(t), 0}, rank_cut));
  }
  return out;
}

/// Maximal runs of consecutive arc samples with orbit dimension 4.
inline std::vector<std::pair<std::size_t, std::size_t>> singular_runs(const std::vector<IsotropyReport>& arc) {
  std::vector<std::pair<std::size_t, std::size_t>> runs;
  for (std::size_t i = 0; i < arc.size(); ++i) {
    if (arc[i].orbit_dimension != 4) continue;
    if (!runs.empty() && runs.back().second + 1 == i)
      runs.back().second = i;
    else
      runs.push_back({i, i});
  }
  return runs;
}

/// Slope (a, b, c) of the isotropy circle {(e^{ia t}, e^{ib t}, e^{ic t})} read off a
/// one-dimensional isotropy algebra, or nullopt if it is not rational with small height.
inline std::optional<std::vector<long long>> isotropy_slope(const IsotropyReport& rep, long long max_height = 64) {
  if (rep.isotropy_dimension != 1) return std::nullopt;
  const auto& v = rep.null_vector;
  // At x = 1 the su(2) part of an isotropy vector is a multiple of i.
  const double comp[3] = {v(0), v(3), v(4)};
  if (std::hypot(v(1), v(2)) > 1e-6) return std::nullopt;
  double smallest = 0;
  for (double c : comp)
    if (std::abs(c) > 1e-9 && (smallest == 0 || std::abs(c) < smallest)) smallest = std::abs(c);
  if (smallest == 0) return std::nullopt;
  for (long long k = 1; k <= max_height; ++k) {
    std::vector<long long> out;
    bool ok = true;
    for (double c : comp) {
      const double s = c / smallest * static_cast<double>(k);
      const double r = std::round(s);
      if (std::abs(s - r) > 1e-6) ok = false;
      out.push_back(static_cast<long long>(r));
    }
    if (!ok) continue;
    long long g = 0;
    for (auto o : out) g = std::gcd(g, std::llabs(o));
    for (auto& o : out) o /= g;
    auto it = std::find_if(out.begin(), out.end(), [](long long o) { return o != 0; });
    if (*it < 0)
      for (auto& o : out) o = -o;
    return out;
  }
  return std::nullopt;
}

}  // namespace cohom1::oracle
