#ifndef NCG_LINALG_HPP
#define NCG_LINALG_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ncg/scalar.hpp"

namespace ncg {

using Vec = std::vector<Scalar>;

inline Vec zero_vec(size_t n) { return Vec(n, Scalar(0)); }

inline Vec unit_vec(size_t n, size_t k) {
  Vec v(n, Scalar(0));
  v.at(k) = Scalar(1);
  return v;
}

inline bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Scalar& s) { return s.is_zero(); });
}

inline Vec& add_scaled(Vec& v, const Scalar& c, const Vec& w) {
  if (v.size() != w.size()) throw std::invalid_argument("vector size mismatch");
  if (c.is_zero()) return v;
  for (size_t k = 0; k < v.size(); ++k)
    if (!w[k].is_zero()) v[k].addmul(c, w[k]);
  return v;
}

inline Vec operator+(Vec a, const Vec& b) { return add_scaled(a, Scalar(1), b); }
inline Vec operator-(Vec a, const Vec& b) { return add_scaled(a, Scalar(-1), b); }

inline Vec operator*(const Scalar& c, Vec v) {
  for (auto& x : v) x *= c;
  return v;
}

inline Vec conj_vec(Vec v) {
  for (auto& x : v) x = x.conj();
  return v;
}

/// Dense matrix over the working field, row-major.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Scalar(0)) {}

  static Mat identity(size_t n) {
    Mat m(n, n);
    for (size_t k = 0; k < n; ++k) m(k, k) = Scalar(1);
    return m;
  }
  static Mat from_rows(const std::vector<Vec>& rows, size_t cols) {
    Mat m(rows.size(), cols);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols)
        throw std::invalid_argument("row length mismatch");
      for (size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Scalar& operator()(size_t r, size_t c) { return a_[r * cols_ + c]; }
  const Scalar& operator()(size_t r, size_t c) const { return a_[r * cols_ + c]; }

  Vec row(size_t r) const {
    return Vec(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_);
  }
  Vec col(size_t c) const {
    Vec v(rows_);
    for (size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  /// Row-major flattening; the canonical coordinates of a matrix unknown.
  Vec flatten() const { return a_; }
  static Mat unflatten(const Vec& v, size_t rows, size_t cols) {
    if (v.size() != rows * cols) throw std::invalid_argument("bad flatten size");
    Mat m(rows, cols);
    m.a_ = v;
    return m;
  }

  bool is_zero() const { return is_zero_vec(a_); }

  friend bool operator==(const Mat& x, const Mat& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }
  friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }

  friend Mat operator+(Mat x, const Mat& y) {
    x.check_same_shape(y);
    for (size_t k = 0; k < x.a_.size(); ++k) x.a_[k] += y.a_[k];
    return x;
  }
  friend Mat operator-(Mat x, const Mat& y) {
    x.check_same_shape(y);
    for (size_t k = 0; k < x.a_.size(); ++k) x.a_[k] -= y.a_[k];
    return x;
  }
  friend Mat operator*(const Scalar& c, Mat x) {
    for (auto& e : x.a_) e *= c;
    return x;
  }
  friend Mat operator*(const Mat& x, const Mat& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("matmul shape mismatch");
    Mat z(x.rows_, y.cols_);
    for (size_t r = 0; r < x.rows_; ++r)
      for (size_t k = 0; k < x.cols_; ++k) {
        const Scalar& xr = x(r, k);
        if (xr.is_zero()) continue;
        for (size_t c = 0; c < y.cols_; ++c)
          if (!y(k, c).is_zero()) z(r, c).addmul(xr, y(k, c));
      }
    return z;
  }
  friend Vec operator*(const Mat& x, const Vec& v) {
    if (x.cols_ != v.size()) throw std::invalid_argument("matvec shape mismatch");
    Vec z(x.rows_, Scalar(0));
    for (size_t r = 0; r < x.rows_; ++r)
      for (size_t c = 0; c < x.cols_; ++c)
        if (!x(r, c).is_zero() && !v[c].is_zero()) z[r].addmul(x(r, c), v[c]);
    return z;
  }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (size_t r = 0; r < rows_; ++r)
      for (size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }
  Mat conj() const {
    Mat t = *this;
    for (auto& e : t.a_) e = e.conj();
    return t;
  }

 private:
  void check_same_shape(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("matrix shape mismatch");
  }

  size_t rows_, cols_;
  std::vector<Scalar> a_;
};

inline Mat commutator(const Mat& x, const Mat& y) { return x * y - y * x; }

/// Incremental Gaussian elimination: rows are fed one at a time and kept in
/// echelon form with unit pivots; finish() back-substitutes to the unique
/// reduced echelon form.  Pivot columns are chosen left to right, so the
/// resulting basis is canonical.
class RowReducer {
 public:
  explicit RowReducer(size_t cols) : cols_(cols), pivot_of_col_(cols, -1) {}

  size_t cols() const { return cols_; }
  size_t rank() const { return rows_.size(); }

  /// Reduces r against the current rows.  Returns the column of the new
  /// pivot, or -1 if the row was dependent.
  long add_row(Vec r) {
    if (r.size() != cols_) throw std::invalid_argument("row width mismatch");
    for (size_t c = 0; c < cols_; ++c) {
      if (r[c].is_zero()) continue;
      long p = pivot_of_col_[c];
      if (p < 0) {
        Scalar inv = r[c].inverse();
        for (size_t k = c; k < cols_; ++k)
          if (!r[k].is_zero()) r[k] *= inv;
        pivot_of_col_[c] = static_cast<long>(rows_.size());
        rows_.push_back(std::move(r));
        pivots_.push_back(c);
        reduced_ = false;
        return static_cast<long>(c);
      }
      Scalar coeff = r[c];
      const Vec& prow = rows_[static_cast<size_t>(p)];
      r[c] = Scalar(0);
      for (size_t k = c + 1; k < cols_; ++k)
        if (!prow[k].is_zero()) r[k].submul(coeff, prow[k]);
    }
    return -1;
  }

  /// Back-substitute so every pivot column is zero outside its pivot row,
  /// then sort rows by pivot column.
  void finish() {
    if (reduced_) return;
    std::vector<size_t> order(rows_.size());
    for (size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(),
              [&](size_t x, size_t y) { return pivots_[x] < pivots_[y]; });
    std::vector<Vec> rows;
    std::vector<size_t> pivots;
    rows.reserve(rows_.size());
    for (size_t k : order) {
      rows.push_back(std::move(rows_[k]));
      pivots.push_back(pivots_[k]);
    }
    rows_ = std::move(rows);
    pivots_ = std::move(pivots);
    for (size_t c = 0; c < cols_; ++c) pivot_of_col_[c] = -1;
    for (size_t k = 0; k < rows_.size(); ++k)
      pivot_of_col_[pivots_[k]] = static_cast<long>(k);
    // Eliminate upwards, last pivot first.
    for (size_t k = rows_.size(); k-- > 0;) {
      for (size_t j = 0; j < k; ++j) {
        Scalar coeff = rows_[j][pivots_[k]];
        if (coeff.is_zero()) continue;
        rows_[j][pivots_[k]] = Scalar(0);
        const Vec& src = rows_[k];
        for (size_t c = pivots_[k] + 1; c < cols_; ++c)
          if (!src[c].is_zero()) rows_[j][c].submul(coeff, src[c]);
      }
    }
    reduced_ = true;
  }

  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<size_t>& pivots() const { return pivots_; }
  long pivot_of_col(size_t c) const { return pivot_of_col_[c]; }

 private:
  size_t cols_;
  std::vector<Vec> rows_;
  std::vector<size_t> pivots_;
  std::vector<long> pivot_of_col_;
  bool reduced_ = true;
};

/// A linear subspace of an ambient coordinate space, held by its unique
/// reduced-echelon basis; equality of subspaces is equality of bases.
class Subspace {
 public:
  Subspace() : ambient_(0) {}
  explicit Subspace(size_t ambient_dim) : ambient_(ambient_dim) {}
  Subspace(size_t ambient_dim, const std::vector<Vec>& vectors)
      : ambient_(ambient_dim) {
    RowReducer red(ambient_dim);
    for (const Vec& v : vectors) red.add_row(v);
    red.finish();
    basis_ = red.rows();
    pivots_ = red.pivots();
  }

  static Subspace whole(size_t ambient_dim) {
    Subspace s(ambient_dim);
    for (size_t k = 0; k < ambient_dim; ++k) {
      s.basis_.push_back(unit_vec(ambient_dim, k));
      s.pivots_.push_back(k);
    }
    return s;
  }

  size_t ambient_dim() const { return ambient_; }
  size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<size_t>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const {
    auto r = residual(v);
    if (!r) throw std::invalid_argument("ambient dimension mismatch");
    return r->second;
  }

  /// Coordinates of v in the canonical basis, if v lies in the subspace.
  std::optional<Vec> coordinates(const Vec& v) const {
    auto r = residual(v);
    if (!r) throw std::invalid_argument("ambient dimension mismatch");
    if (!r->second) return std::nullopt;
    return r->first;
  }

  bool contains_subspace(const Subspace& other) const {
    if (other.ambient_ != ambient_)
      throw std::invalid_argument("ambient dimension mismatch");
    for (const Vec& v : other.basis_)
      if (!coordinates(v)) return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) {
    return !(a == b);
  }

 private:
  // Returns (coords, in_subspace); nullopt only on dimension mismatch.
  std::optional<std::pair<Vec, bool>> residual(const Vec& v) const {
    if (v.size() != ambient_) return std::nullopt;
    Vec w = v;
    Vec coords(basis_.size(), Scalar(0));
    for (size_t k = 0; k < basis_.size(); ++k) {
      Scalar c = w[pivots_[k]];
      if (c.is_zero()) continue;
      coords[k] = c;
      add_scaled(w, -c, basis_[k]);
    }
    return std::make_pair(std::move(coords), is_zero_vec(w));
  }

  size_t ambient_;
  std::vector<Vec> basis_;
  std::vector<size_t> pivots_;
};

/// Kernel extraction from a filled reducer (finishes it).
inline Subspace kernel_from(RowReducer& red) {
  red.finish();
  std::vector<Vec> basis;
  for (size_t c = 0; c < red.cols(); ++c) {
    if (red.pivot_of_col(c) >= 0) continue;
    Vec v(red.cols(), Scalar(0));
    v[c] = Scalar(1);
    for (size_t k = 0; k < red.rank(); ++k)
      v[red.pivots()[k]] = -red.rows()[k][c];
    basis.push_back(std::move(v));
  }
  return Subspace(red.cols(), basis);
}

inline Subspace kernel(const Mat& m) {
  RowReducer red(m.cols());
  for (size_t r = 0; r < m.rows(); ++r) red.add_row(m.row(r));
  return kernel_from(red);
}

inline size_t rank(const Mat& m) {
  RowReducer red(m.cols());
  for (size_t r = 0; r < m.rows(); ++r) red.add_row(m.row(r));
  return red.rank();
}

inline Subspace column_space(const Mat& m) {
  std::vector<Vec> cols;
  for (size_t c = 0; c < m.cols(); ++c) cols.push_back(m.col(c));
  return Subspace(m.rows(), cols);
}

struct AffineSolution {
  Vec particular;
  Subspace kernel;
};

/// Outcome of an affine solve; infeasibility is a normal result carrying the
/// index of the first input row inconsistent with its predecessors.
struct AffineOutcome {
  std::optional<AffineSolution> solution;
  size_t witness_row = 0;
  bool feasible() const { return solution.has_value(); }
};

/// Solves m x = rhs.  The particular solution is the canonical one with all
/// free variables zero (the echelon least-index solution).
inline AffineOutcome solve_affine(const Mat& m, const Vec& rhs) {
  if (rhs.size() != m.rows())
    throw std::invalid_argument("rhs length must equal row count");
  RowReducer red(m.cols() + 1);
  for (size_t r = 0; r < m.rows(); ++r) {
    Vec row = m.row(r);
    row.push_back(rhs[r]);
    long piv = red.add_row(std::move(row));
    if (piv == static_cast<long>(m.cols())) return AffineOutcome{std::nullopt, r};
  }
  red.finish();
  Vec particular(m.cols(), Scalar(0));
  for (size_t k = 0; k < red.rank(); ++k)
    particular[red.pivots()[k]] = red.rows()[k][m.cols()];
  std::vector<Vec> kbasis;
  for (size_t c = 0; c < m.cols(); ++c) {
    if (red.pivot_of_col(c) >= 0) continue;
    Vec v(m.cols(), Scalar(0));
    v[c] = Scalar(1);
    for (size_t k = 0; k < red.rank(); ++k)
      v[red.pivots()[k]] = -red.rows()[k][c];
    kbasis.push_back(std::move(v));
  }
  return AffineOutcome{AffineSolution{std::move(particular),
                                      Subspace(m.cols(), kbasis)},
                       0};
}

inline Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("ambient dimension mismatch");
  std::vector<Vec> vs = a.basis();
  vs.insert(vs.end(), b.basis().begin(), b.basis().end());
  return Subspace(a.ambient_dim(), vs);
}

inline Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("ambient dimension mismatch");
  if (a.dim() == 0 || b.dim() == 0) return Subspace(a.ambient_dim());
  // v in both spans: v = sum s_k a_k = sum t_j b_j.  Solve for (s, t) in the
  // kernel of [A^T | -B^T] and read off the a-combinations.
  Mat sys(a.ambient_dim(), a.dim() + b.dim());
  for (size_t k = 0; k < a.dim(); ++k)
    for (size_t r = 0; r < a.ambient_dim(); ++r) sys(r, k) = a.basis()[k][r];
  for (size_t j = 0; j < b.dim(); ++j)
    for (size_t r = 0; r < a.ambient_dim(); ++r)
      sys(r, a.dim() + j) = -b.basis()[j][r];
  Subspace ker = kernel(sys);
  std::vector<Vec> vs;
  for (const Vec& st : ker.basis()) {
    Vec v(a.ambient_dim(), Scalar(0));
    for (size_t k = 0; k < a.dim(); ++k) add_scaled(v, st[k], a.basis()[k]);
    vs.push_back(std::move(v));
  }
  return Subspace(a.ambient_dim(), vs);
}

/// Representatives completing sub to space: the deterministic choice scans
/// the canonical basis of space and keeps vectors independent modulo sub.
inline std::vector<Vec> quotient_basis(const Subspace& space,
                                       const Subspace& sub) {
  if (space.ambient_dim() != sub.ambient_dim())
    throw std::invalid_argument("ambient dimension mismatch");
  if (!space.contains_subspace(sub))
    throw std::invalid_argument("quotient_basis: sub is not contained in space");
  RowReducer red(space.ambient_dim());
  for (const Vec& v : sub.basis()) red.add_row(v);
  std::vector<Vec> reps;
  for (const Vec& v : space.basis())
    if (red.add_row(v) >= 0) reps.push_back(v);
  return reps;
}

inline Mat inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square");
  const size_t n = m.rows();
  RowReducer red(2 * n);
  for (size_t r = 0; r < n; ++r) {
    Vec row(2 * n, Scalar(0));
    for (size_t c = 0; c < n; ++c) row[c] = m(r, c);
    row[n + r] = Scalar(1);
    red.add_row(std::move(row));
  }
  red.finish();
  if (red.rank() != n || (n > 0 && red.pivots().back() >= n))
    throw std::invalid_argument("matrix is singular");
  Mat inv(n, n);
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c) inv(r, c) = red.rows()[r][n + c];
  return inv;
}

inline bool is_invertible(const Mat& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

/// Kronecker product with block-index convention (r,s),(c,d) -> A(r,c)B(s,d).
inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (size_t r = 0; r < a.rows(); ++r)
    for (size_t c = 0; c < a.cols(); ++c) {
      if (a(r, c).is_zero()) continue;
      for (size_t s = 0; s < b.rows(); ++s)
        for (size_t d = 0; d < b.cols(); ++d)
          if (!b(s, d).is_zero())
            out(r * b.rows() + s, c * b.cols() + d).addmul(a(r, c), b(s, d));
    }
  return out;
}

/// Realification: the 2n-dimensional Q-coordinates (re_0, im_0, re_1, ...)
/// of a Qi vector.  Used to measure Q-dimensions of antilinear fixed spaces.
inline Vec realify(const Vec& v) {
  Vec r;
  r.reserve(2 * v.size());
  for (const Scalar& s : v) {
    r.push_back(Scalar(s.re()));
    r.push_back(Scalar(s.im()));
  }
  return r;
}

inline std::string to_string(const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t k = 0; k < v.size(); ++k) os << (k ? ", " : "") << v[k];
  os << ")";
  return os.str();
}

}  // namespace ncg

#endif  // NCG_LINALG_HPP
