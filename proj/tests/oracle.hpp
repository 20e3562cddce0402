// Test-only oracles, independent of the library's elimination path: rank via
// a plain column-sweep Gauss-Jordan on the realified (pure-rational) matrix.
#ifndef NCG_TESTS_ORACLE_HPP
#define NCG_TESTS_ORACLE_HPP

#include <vector>

#include "ncg/linalg.hpp"

namespace ncg_oracle {

// Rank of a matrix with mpq entries, computed by forward sweep over columns.
inline size_t rational_rank(std::vector<std::vector<mpq_class>> m) {
  if (m.empty()) return 0;
  size_t rows = m.size(), cols = m[0].size();
  size_t rank = 0;
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t sel = rank;
    while (sel < rows && sgn(m[sel][c]) == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[rank]);
    mpq_class inv = 1 / m[rank][c];
    for (size_t k = c; k < cols; ++k) m[rank][k] *= inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == rank || sgn(m[r][c]) == 0) continue;
      mpq_class f = m[r][c];
      for (size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

// Realification of an n-column Qi matrix: each entry a+bi becomes the 2x2
// block [[a,-b],[b,a]], so the rational rank is exactly twice the Qi rank.
inline size_t rank_over_field(const ncg::Mat& m) {
  std::vector<std::vector<mpq_class>> re(2 * m.rows(),
                                         std::vector<mpq_class>(2 * m.cols()));
  for (size_t r = 0; r < m.rows(); ++r)
    for (size_t c = 0; c < m.cols(); ++c) {
      const ncg::Scalar& s = m(r, c);
      re[2 * r][2 * c] = s.re();
      re[2 * r][2 * c + 1] = -s.im();
      re[2 * r + 1][2 * c] = s.im();
      re[2 * r + 1][2 * c + 1] = s.re();
    }
  size_t rr = rational_rank(std::move(re));
  if (rr % 2 != 0) throw std::logic_error("realified rank must be even");
  return rr / 2;
}

inline size_t kernel_dim(const ncg::Mat& m) {
  return m.cols() - rank_over_field(m);
}

}  // namespace ncg_oracle

#endif  // NCG_TESTS_ORACLE_HPP
