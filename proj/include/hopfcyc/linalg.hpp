#pragma once

#include "hopfcyc/rational.hpp"

#include <Eigen/Core>

#include <map>
#include <optional>
#include <vector>

namespace hopfcyc {

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;
using QMat = Mat<Rational>;
using QVec = Vec<Rational>;
using Index = Eigen::Index;

template <class S>
struct Echelon {
  Mat<S> R;  // reduced row echelon form
  std::vector<Index> pivots;  // pivot column of each nonzero row
};

/// Exact reduced row echelon form (Gauss-Jordan, first nonzero pivot).
template <class Derived>
Echelon<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& a) {
  using S = typename Derived::Scalar;
  Echelon<S> e;
  e.R = a;
  Mat<S>& R = e.R;
  const Index rows = R.rows(), cols = R.cols();
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = r;
    while (p < rows && R(p, c) == S(0)) ++p;
    if (p == rows) continue;
    if (p != r) R.row(p).swap(R.row(r));
    const S inv = S(1) / R(r, c);
    for (Index j = c; j < cols; ++j) R(r, j) *= inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == r || R(i, c) == S(0)) continue;
      const S f = R(i, c);
      for (Index j = c; j < cols; ++j) R(i, j) -= f * R(r, j);
    }
    e.pivots.push_back(c);
    ++r;
  }
  return e;
}

template <class Derived>
Index rank(const Eigen::MatrixBase<Derived>& a) {
  return static_cast<Index>(rref(a).pivots.size());
}

template <class Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& a) {
  using S = typename Derived::Scalar;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == S(0))) return false;
  return true;
}

template <class S>
Mat<S> identity(Index n) {
  Mat<S> m(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) m(i, j) = S(i == j ? 1 : 0);
  return m;
}

template <class S>
Mat<S> zeros(Index r, Index c) {
  Mat<S> m(r, c);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j) m(i, j) = S(0);
  return m;
}

/// Columns form a basis of the null space of a.
template <class Derived>
Mat<typename Derived::Scalar> nullspace(const Eigen::MatrixBase<Derived>& a) {
  using S = typename Derived::Scalar;
  const auto e = rref(a);
  const Index n = a.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (auto p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Index> free;
  for (Index j = 0; j < n; ++j)
    if (!is_pivot[static_cast<std::size_t>(j)]) free.push_back(j);
  Mat<S> N = zeros<S>(n, static_cast<Index>(free.size()));
  for (std::size_t k = 0; k < free.size(); ++k) {
    const Index f = free[k];
    N(f, static_cast<Index>(k)) = S(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      N(e.pivots[r], static_cast<Index>(k)) = -e.R(static_cast<Index>(r), f);
  }
  return N;
}

/// Some solution x of a x = b, if one exists.
template <class DA, class DB>
std::optional<Vec<typename DA::Scalar>> solve(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  using S = typename DA::Scalar;
  Mat<S> aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  const auto e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  Vec<S> x(a.cols());
  for (Index j = 0; j < a.cols(); ++j) x(j) = S(0);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x(e.pivots[r]) = e.R(static_cast<Index>(r), a.cols());
  return x;
}

/// Basis (as columns) of the column space of a.
template <class Derived>
Mat<typename Derived::Scalar> column_basis(const Eigen::MatrixBase<Derived>& a) {
  using S = typename Derived::Scalar;
  const auto e = rref(a);
  Mat<S> out(a.rows(), static_cast<Index>(e.pivots.size()));
  for (std::size_t k = 0; k < e.pivots.size(); ++k) out.col(static_cast<Index>(k)) = a.col(e.pivots[k]);
  return out;
}

template <class DA, class DV>
bool in_column_span(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DV>& v) {
  return solve(a, v).has_value();
}

/// Horizontal concatenation.
template <class S>
Mat<S> hcat(const Mat<S>& a, const Mat<S>& b) {
  if (a.cols() == 0) return b;
  if (b.cols() == 0) return a;
  Mat<S> m(a.rows(), a.cols() + b.cols());
  m << a, b;
  return m;
}

/// The quotient V / span(columns of relations) for V = S^n. `P` projects V
/// onto quotient coordinates, `L` is a section (P * L = I), and the kernel of
/// P is exactly the relation span.
template <class S>
struct Quotient {
  Index ambient = 0;
  Index relation_rank = 0;
  Mat<S> P;
  Mat<S> L;
  std::vector<Index> kept;  // ambient coordinates representing the quotient basis
  Index dim() const { return static_cast<Index>(kept.size()); }
};

template <class S>
Quotient<S> quotient_by(const Mat<S>& relations, Index ambient) {
  Quotient<S> q;
  q.ambient = ambient;
  Mat<S> rows = relations.transpose();
  if (relations.cols() == 0) rows = Mat<S>(0, ambient);
  const auto e = rref(rows);
  q.relation_rank = static_cast<Index>(e.pivots.size());
  std::vector<bool> is_pivot(static_cast<std::size_t>(ambient), false);
  for (auto p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  for (Index j = 0; j < ambient; ++j)
    if (!is_pivot[static_cast<std::size_t>(j)]) q.kept.push_back(j);
  const Index d = q.dim();
  q.P = zeros<S>(d, ambient);
  q.L = zeros<S>(ambient, d);
  for (Index k = 0; k < d; ++k) {
    const Index c = q.kept[static_cast<std::size_t>(k)];
    q.P(k, c) = S(1);
    q.L(c, k) = S(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) q.P(k, e.pivots[r]) = -e.R(static_cast<Index>(r), c);
  }
  return q;
}

/// Incrementally built span of sparse vectors keyed by an ordered type.
template <class Key, class S = Rational>
class SparseSpan {
 public:
  using Vector = std::map<Key, S>;

  /// Adds v; returns true if it enlarged the span.
  bool add(Vector v) {
    reduce(v);
    if (v.empty()) return false;
    auto lead = std::prev(v.end());
    const S inv = S(1) / lead->second;
    for (auto& [k, c] : v) c *= inv;
    const Key key = lead->first;
    rows_.emplace(key, std::move(v));
    return true;
  }

  bool contains(Vector v) const {
    reduce(v);
    return v.empty();
  }

  /// Reduces v by the stored rows until its leading key has no pivot.
  void reduce(Vector& v) const {
    while (!v.empty()) {
      auto lead = std::prev(v.end());
      auto it = rows_.find(lead->first);
      if (it == rows_.end()) return;
      const S f = lead->second;
      for (const auto& [k, c] : it->second) {
        auto [pos, inserted] = v.try_emplace(k, -f * c);
        if (!inserted) {
          pos->second -= f * c;
          if (pos->second == S(0)) v.erase(pos);
        }
      }
    }
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  std::map<Key, Vector> rows_;
};

}  // namespace hopfcyc
