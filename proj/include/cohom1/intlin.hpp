#pragma once

// Exact integer linear algebra: dense matrices over Z, Smith normal form,
// lattice kernels/images and finitely generated abelian groups.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cohom1/errors.hpp"

namespace cohom1 {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt abs(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt x = abs(a), y = abs(b);
  while (y != 0) {
    BigInt r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a / gcd(a, b) * b);
}

/// Extended Euclid: returns g = gcd(a,b) >= 0 with x*a + y*b = g.
inline BigInt extended_gcd(const BigInt& a, const BigInt& b, BigInt& x, BigInt& y) {
  BigInt old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  x = old_s;
  y = old_t;
  return old_r;
}

/// Least non-negative residue of a modulo m (m > 0).
inline BigInt mod(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

inline std::string to_string(const BigInt& a) { return a.str(); }

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw DimensionMismatch("ragged matrix initializer");
      for (long long v : row) data_.emplace_back(v);
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix column(const std::vector<BigInt>& v) {
    IntMatrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
  }

  /// Matrix whose columns are the given vectors (all of length `rows`).
  static IntMatrix from_columns(std::size_t rows, const std::vector<std::vector<BigInt>>& cols) {
    IntMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw DimensionMismatch("column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  static IntMatrix diagonal(std::size_t rows, std::size_t cols, const std::vector<BigInt>& diag) {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < diag.size() && i < rows && i < cols; ++i) m(i, i) = diag[i];
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return data_.empty(); }

  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<BigInt> col(std::size_t j) const {
    std::vector<BigInt> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  std::vector<BigInt> row(std::size_t i) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
  }

  std::vector<std::vector<BigInt>> columns() const {
    std::vector<std::vector<BigInt>> out;
    out.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out.push_back(col(j));
    return out;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Columns [first, last).
  IntMatrix col_range(std::size_t first, std::size_t last) const {
    IntMatrix m(rows_, last - first);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = first; j < last; ++j) m(i, j - first) = (*this)(i, j);
    return m;
  }

  /// Rows [first, last).
  IntMatrix row_range(std::size_t first, std::size_t last) const {
    IntMatrix m(last - first, cols_);
    for (std::size_t i = first; i < last; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(i - first, j) = (*this)(i, j);
    return m;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const BigInt& x) { return x == 0; });
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const BigInt& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend IntMatrix operator*(const BigInt& s, IntMatrix m) {
    for (auto& x : m.data_) x *= s;
    return m;
  }

  friend IntMatrix operator-(IntMatrix m) {
    for (auto& x : m.data_) x = -x;
    return m;
  }

  /// [a | b]
  friend IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_) {
      if (a.rows_ == 0 && a.cols_ == 0) return b;
      if (b.rows_ == 0 && b.cols_ == 0) return a;
      throw DimensionMismatch("hconcat row mismatch");
    }
    IntMatrix m(a.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t j = 0; j < a.cols_; ++j) m(i, j) = a(i, j);
      for (std::size_t j = 0; j < b.cols_; ++j) m(i, a.cols_ + j) = b(i, j);
    }
    return m;
  }

  /// [a ; b]
  friend IntMatrix vconcat(const IntMatrix& a, const IntMatrix& b) {
    return hconcat(a.transpose(), b.transpose()).transpose();
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  // row[dst] += k * row[src]
  void add_row(std::size_t dst, std::size_t src, const BigInt& k) {
    if (k == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += k * (*this)(src, j);
  }
  // col[dst] += k * col[src]
  void add_col(std::size_t dst, std::size_t src, const BigInt& k) {
    if (k == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += k * (*this)(i, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
  }
  void negate_col(std::size_t c) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = -(*this)(i, c);
  }

  friend std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows_; ++i) {
      if (i) os << ", ";
      os << '[';
      for (std::size_t j = 0; j < m.cols_; ++j) {
        if (j) os << ',';
        os << m(i, j);
      }
      os << ']';
    }
    return os << ']';
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Determinant by fraction-free (Bareiss) elimination.
inline BigInt determinant(IntMatrix a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

/// U * A * V = D with U, V unimodular and D diagonal with d1 | d2 | ... , all >= 0.
/// `U_inv` is carried along so image lattices can be read off without inversion.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix V;
  IntMatrix D;
  IntMatrix U_inv;

  std::size_t rank() const {
    std::size_t r = 0;
    while (r < D.rows() && r < D.cols() && D(r, r) != 0) ++r;
    return r;
  }

  std::vector<BigInt> diagonal() const {
    std::vector<BigInt> d;
    for (std::size_t i = 0; i < D.rows() && i < D.cols(); ++i) d.push_back(D(i, i));
    return d;
  }
};

namespace detail {

struct SmithState {
  IntMatrix D, U, U_inv, V;

  void swap_rows(std::size_t a, std::size_t b) {
    D.swap_rows(a, b);
    U.swap_rows(a, b);
    U_inv.swap_cols(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    D.swap_cols(a, b);
    V.swap_cols(a, b);
  }
  // row[dst] += k row[src]; inverse gets col[src] -= k col[dst]
  void add_row(std::size_t dst, std::size_t src, const BigInt& k) {
    D.add_row(dst, src, k);
    U.add_row(dst, src, k);
    U_inv.add_col(src, dst, -k);
  }
  void add_col(std::size_t dst, std::size_t src, const BigInt& k) {
    D.add_col(dst, src, k);
    V.add_col(dst, src, k);
  }
  void negate_row(std::size_t r) {
    D.negate_row(r);
    U.negate_row(r);
    U_inv.negate_col(r);
  }
};

}  // namespace detail

inline SmithDecomposition smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  detail::SmithState s{a, IntMatrix::identity(m), IntMatrix::identity(m), IntMatrix::identity(n)};
  IntMatrix& D = s.D;

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // Pivot: smallest nonzero magnitude in the trailing block.
    std::optional<std::pair<std::size_t, std::size_t>> piv;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (D(i, j) != 0 && (!piv || abs(D(i, j)) < abs(D(piv->first, piv->second)))) piv = {i, j};
    if (!piv) break;
    s.swap_rows(t, piv->first);
    s.swap_cols(t, piv->second);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (D(i, t) == 0) continue;
        s.add_row(i, t, -(D(i, t) / D(t, t)));
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (D(t, j) == 0) continue;
        s.add_col(j, t, -(D(t, j) / D(t, t)));
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot survived; promote it.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < m; ++i)
          if (D(i, t) != 0 && abs(D(i, t)) < abs(D(bi, bj))) bi = i, bj = t;
        for (std::size_t j = t + 1; j < n; ++j)
          if (D(t, j) != 0 && abs(D(t, j)) < abs(D(bi, bj))) bi = t, bj = j;
        s.swap_rows(t, bi);
        s.swap_cols(t, bj);
        continue;
      }
      // Divisibility: pull any non-multiple into the pivot row.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (D(i, j) % D(t, t) != 0) {
            s.add_row(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (D(t, t) < 0) s.negate_row(t);
  }
  return {std::move(s.U), std::move(s.V), std::move(s.D), std::move(s.U_inv)};
}

/// Finitely generated abelian group Z^free_rank + Z_{t1} + ... + Z_{tk}, t1 | t2 | ... , ti >= 2.
class FGAbelianGroup {
 public:
  FGAbelianGroup() = default;

  /// Builds the normal form of Z^free_rank + sum Z_{c} for arbitrary cyclic orders c
  /// (orders 0 count as free summands, orders 1 vanish).
  static FGAbelianGroup from_cyclic(std::size_t free_rank, const std::vector<BigInt>& orders) {
    IntMatrix rel = IntMatrix::diagonal(orders.size(), orders.size(), orders);
    FGAbelianGroup g = from_relations(rel);
    g.free_rank_ += free_rank;
    return g;
  }

  /// Z^rows / column span of `relations`.
  static FGAbelianGroup from_relations(const IntMatrix& relations) {
    auto snf = smith_normal_form(relations);
    FGAbelianGroup g;
    std::size_t nonzero = 0;
    for (const auto& d : snf.diagonal()) {
      if (d == 0) continue;
      ++nonzero;
      if (d > 1) g.torsion_.push_back(d);
    }
    g.free_rank_ = relations.rows() - nonzero;
    return g;
  }

  static FGAbelianGroup cyclic(const BigInt& order) { return from_cyclic(0, {order}); }
  static FGAbelianGroup free(std::size_t rank) { return from_cyclic(rank, {}); }

  std::size_t free_rank() const noexcept { return free_rank_; }
  const std::vector<BigInt>& torsion() const noexcept { return torsion_; }
  bool is_trivial() const noexcept { return free_rank_ == 0 && torsion_.empty(); }
  bool is_finite() const noexcept { return free_rank_ == 0; }

  /// Number of coordinates of the standard presentation (torsion first, then free).
  std::size_t presentation_rank() const noexcept { return torsion_.size() + free_rank_; }

  /// Order of a finite group; nullopt when infinite.
  std::optional<BigInt> order() const {
    if (free_rank_ != 0) return std::nullopt;
    BigInt o = 1;
    for (const auto& t : torsion_) o *= t;
    return o;
  }

  /// Relation matrix of the standard presentation: diag(torsion..., 0...).
  IntMatrix relations() const {
    const std::size_t k = presentation_rank();
    IntMatrix r(k, torsion_.size());
    for (std::size_t i = 0; i < torsion_.size(); ++i) r(i, i) = torsion_[i];
    return r;
  }

  std::string to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank_ > 0) {
      os << 'Z';
      if (free_rank_ > 1) os << '^' << free_rank_;
      first = false;
    }
    for (const auto& t : torsion_) {
      if (!first) os << " + ";
      os << "Z_" << t;
      first = false;
    }
    return os.str();
  }

  friend bool operator==(const FGAbelianGroup&, const FGAbelianGroup&) = default;
  friend std::ostream& operator<<(std::ostream& os, const FGAbelianGroup& g) { return os << g.to_string(); }

 private:
  std::size_t free_rank_ = 0;
  std::vector<BigInt> torsion_;
};

/// An element of a group in its standard presentation; coordinates are reduced
/// modulo the torsion orders.
struct AbelianElement {
  FGAbelianGroup group;
  std::vector<BigInt> coords;

  AbelianElement() = default;
  AbelianElement(FGAbelianGroup g, std::vector<BigInt> c) : group(std::move(g)), coords(std::move(c)) {
    if (coords.size() != group.presentation_rank()) throw DimensionMismatch("element coordinate count");
    for (std::size_t i = 0; i < group.torsion().size(); ++i) coords[i] = mod(coords[i], group.torsion()[i]);
  }

  bool is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](const BigInt& x) { return x == 0; });
  }

  friend bool operator==(const AbelianElement&, const AbelianElement&) = default;
};

/// Z^rows / image(A).
inline FGAbelianGroup cokernel(const IntMatrix& a) { return FGAbelianGroup::from_relations(a); }

/// Columns form a primitive basis of {x in Z^cols : A x = 0}.
inline IntMatrix kernel_basis(const IntMatrix& a) {
  auto snf = smith_normal_form(a);
  return snf.V.col_range(snf.rank(), a.cols());
}

/// Columns form a basis of the lattice spanned by the columns of A.
inline IntMatrix image_basis(const IntMatrix& a) {
  auto snf = smith_normal_form(a);
  const std::size_t r = snf.rank();
  IntMatrix basis = snf.U_inv.col_range(0, r);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < basis.rows(); ++i) basis(i, j) *= snf.D(j, j);
  return basis;
}

/// Rank over Q.
inline std::size_t rank(const IntMatrix& a) { return smith_normal_form(a).rank(); }

/// True iff the columns of A generate `target`, where the rows of A are
/// coordinates in the standard presentation of `target`.
inline bool is_surjective_onto(const IntMatrix& a, const FGAbelianGroup& target) {
  if (a.rows() != target.presentation_rank())
    throw DimensionMismatch("generator matrix has " + std::to_string(a.rows()) + " rows, presentation needs " +
                            std::to_string(target.presentation_rank()));
  return cokernel(hconcat(a, target.relations())).is_trivial();
}

/// Quotient of `target` by the subgroup generated by the columns of A.
inline FGAbelianGroup quotient_by(const IntMatrix& a, const FGAbelianGroup& target) {
  if (a.rows() != target.presentation_rank()) throw DimensionMismatch("quotient generator shape");
  return cokernel(hconcat(a, target.relations()));
}

}  // namespace cohom1
