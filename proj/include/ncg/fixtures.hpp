#ifndef NCG_FIXTURES_HPP
#define NCG_FIXTURES_HPP

#include <functional>
#include <string>
#include <vector>

#include "ncg/algebra.hpp"

namespace ncg::fixtures {

/// Full 2x2 matrix algebra over Q(i), basis e11, e12, e21, e22, with the
/// conjugate-transpose involution.
inline Algebra m2() {
  Algebra a;
  a.field = Field::Qi;
  a.dim = 4;
  a.basis_names = {"e11", "e12", "e21", "e22"};
  a.unit = {Scalar(1), Scalar(0), Scalar(0), Scalar(1)};
  a.mul.assign(4, std::vector<Vec>(4, zero_vec(4)));
  // e_{pq} e_{rs} = delta_{qr} e_{ps}; basis index = 2p + q.
  auto idx = [](size_t p, size_t q) { return 2 * p + q; };
  for (size_t p = 0; p < 2; ++p)
    for (size_t q = 0; q < 2; ++q)
      for (size_t r = 0; r < 2; ++r)
        for (size_t s = 0; s < 2; ++s)
          if (q == r) a.mul[idx(p, q)][idx(r, s)][idx(p, s)] = Scalar(1);
  Mat transp(4, 4);
  transp(0, 0) = Scalar(1);
  transp(1, 2) = Scalar(1);
  transp(2, 1) = Scalar(1);
  transp(3, 3) = Scalar(1);
  a.involution = Involution{transp, true};
  return a;
}

/// M2 over Q (real form): same structure constants, transpose involution.
inline Algebra m2c2() {
  Algebra a = m2();
  a.field = Field::Q;
  a.involution->conjugate = false;
  return a;
}

/// Upper-triangular 2x2 matrices over Q, basis e11, e12, e22, with the
/// flip anti-automorphism e11 <-> e22, e12 -> e12 as involution.
inline Algebra t2() {
  Algebra a;
  a.field = Field::Q;
  a.dim = 3;
  a.basis_names = {"e11", "e12", "e22"};
  a.unit = {Scalar(1), Scalar(0), Scalar(1)};
  a.mul.assign(3, std::vector<Vec>(3, zero_vec(3)));
  // e11 e11 = e11, e11 e12 = e12, e12 e22 = e12, e22 e22 = e22.
  a.mul[0][0][0] = Scalar(1);
  a.mul[0][1][1] = Scalar(1);
  a.mul[1][2][1] = Scalar(1);
  a.mul[2][2][2] = Scalar(1);
  Mat flip(3, 3);
  flip(0, 2) = Scalar(1);
  flip(1, 1) = Scalar(1);
  flip(2, 0) = Scalar(1);
  a.involution = Involution{flip, false};
  return a;
}

/// Q^2 with componentwise product; no involution (exercises the
/// unsupported-operation paths).
inline Algebra k2() {
  Algebra a;
  a.field = Field::Q;
  a.dim = 2;
  a.basis_names = {"p1", "p2"};
  a.unit = {Scalar(1), Scalar(1)};
  a.mul.assign(2, std::vector<Vec>(2, zero_vec(2)));
  a.mul[0][0][0] = Scalar(1);
  a.mul[1][1][1] = Scalar(1);
  return a;
}

/// Dual numbers Q[eps]/(eps^2), basis {1, eps}, identity involution.
inline Algebra dual() {
  Algebra a;
  a.field = Field::Q;
  a.dim = 2;
  a.basis_names = {"one", "eps"};
  a.unit = {Scalar(1), Scalar(0)};
  a.mul.assign(2, std::vector<Vec>(2, zero_vec(2)));
  a.mul[0][0][0] = Scalar(1);
  a.mul[0][1][1] = Scalar(1);
  a.mul[1][0][1] = Scalar(1);
  // eps * eps = 0.
  a.involution = Involution{Mat::identity(2), false};
  return a;
}

struct Named {
  std::string name;
  Algebra algebra;
};

inline std::vector<Named> all() {
  return {{"m2", m2()}, {"t2", t2()}, {"k2", k2()}, {"dual", dual()},
          {"m2c2", m2c2()}};
}

}  // namespace ncg::fixtures

#endif  // NCG_FIXTURES_HPP
