#ifndef NCG_BIMODULE_HPP
#define NCG_BIMODULE_HPP

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ncg/algebra.hpp"
#include "ncg/errors.hpp"
#include "ncg/linalg.hpp"

namespace ncg {

/// A-bimodule with explicit action matrices per algebra basis element.
struct Bimodule {
  size_t dim = 0;
  std::vector<Mat> left;   // left[i]: m -> e_i m
  std::vector<Mat> right;  // right[i]: m -> m e_i
  std::optional<Involution> involution;

  bool has_involution() const { return involution.has_value(); }

  Mat left_act(const Vec& a) const {
    Mat out(dim, dim);
    for (size_t i = 0; i < a.size(); ++i)
      if (!a[i].is_zero()) out = out + a[i] * left[i];
    return out;
  }
  Mat right_act(const Vec& a) const {
    Mat out(dim, dim);
    for (size_t i = 0; i < a.size(); ++i)
      if (!a[i].is_zero()) out = out + a[i] * right[i];
    return out;
  }
  Vec act(const Vec& a, const Vec& m, const Vec& b) const {
    return left_act(a) * (right_act(b) * m);
  }
  Vec star(const Vec& m) const {
    if (!involution) throw unsupported_operation("bimodule has no involution");
    return involution->apply(m);
  }
};

/// A itself with its canonical bimodule structure.
inline Bimodule canonical_bimodule(const Algebra& a) {
  Bimodule m;
  m.dim = a.dim;
  for (size_t i = 0; i < a.dim; ++i) {
    m.left.push_back(a.left_mult(a.basis_vec(i)));
    m.right.push_back(a.right_mult(a.basis_vec(i)));
  }
  m.involution = a.involution;
  return m;
}

inline Bimodule zero_bimodule(const Algebra& a) {
  Bimodule m;
  m.dim = 0;
  m.left.assign(a.dim, Mat(0, 0));
  m.right.assign(a.dim, Mat(0, 0));
  return m;
}

inline Bimodule direct_sum(const Algebra& a, const Bimodule& x,
                           const Bimodule& y) {
  Bimodule m;
  m.dim = x.dim + y.dim;
  auto block = [&](const Mat& u, const Mat& v) {
    Mat out(m.dim, m.dim);
    for (size_t r = 0; r < x.dim; ++r)
      for (size_t c = 0; c < x.dim; ++c) out(r, c) = u(r, c);
    for (size_t r = 0; r < y.dim; ++r)
      for (size_t c = 0; c < y.dim; ++c) out(x.dim + r, x.dim + c) = v(r, c);
    return out;
  };
  for (size_t i = 0; i < a.dim; ++i) {
    m.left.push_back(block(x.left[i], y.left[i]));
    m.right.push_back(block(x.right[i], y.right[i]));
  }
  if (x.involution && y.involution &&
      x.involution->conjugate == y.involution->conjugate)
    m.involution =
        Involution{block(x.involution->matrix, y.involution->matrix),
                   x.involution->conjugate};
  return m;
}

inline ValidationReport validate_bimodule(const Algebra& a, const Bimodule& m) {
  ValidationReport rep;
  if (m.left.size() != a.dim || m.right.size() != a.dim) {
    rep.fail("action tensors must have one matrix per algebra basis element");
    return rep;
  }
  for (size_t i = 0; i < a.dim; ++i)
    if (m.left[i].rows() != m.dim || m.left[i].cols() != m.dim ||
        m.right[i].rows() != m.dim || m.right[i].cols() != m.dim) {
      rep.fail("action matrix shape mismatch at basis " + std::to_string(i));
      return rep;
    }
  if (m.left_act(a.unit) != Mat::identity(m.dim))
    rep.fail("unit does not act as identity on the left");
  if (m.right_act(a.unit) != Mat::identity(m.dim))
    rep.fail("unit does not act as identity on the right");
  for (size_t i = 0; i < a.dim; ++i)
    for (size_t j = 0; j < a.dim; ++j) {
      if (m.left_act(a.mul[i][j]) != m.left[i] * m.left[j]) {
        std::ostringstream os;
        os << "left action is not a representation at (i,j)=(" << i << "," << j
           << ")";
        rep.fail(os.str());
      }
      if (m.right_act(a.mul[i][j]) != m.right[j] * m.right[i]) {
        std::ostringstream os;
        os << "right action is not an anti-representation at (i,j)=(" << i
           << "," << j << ")";
        rep.fail(os.str());
      }
      if (m.left[i] * m.right[j] != m.right[j] * m.left[i]) {
        std::ostringstream os;
        os << "actions must commute, violated at (i,j)=(" << i << "," << j
           << ")";
        rep.fail(os.str());
      }
    }
  if (m.involution) {
    const Involution& inv = *m.involution;
    if (inv.matrix.rows() != m.dim || inv.matrix.cols() != m.dim) {
      rep.fail("involution matrix shape mismatch");
      return rep;
    }
    if (!a.has_involution()) {
      rep.fail("involutive bimodule over an algebra without involution");
      return rep;
    }
    for (size_t p = 0; p < m.dim; ++p) {
      Vec v = unit_vec(m.dim, p);
      if (inv.apply(inv.apply(v)) != v)
        rep.fail("involution not involutive at basis " + std::to_string(p));
    }
    for (size_t i = 0; i < a.dim; ++i)
      for (size_t j = 0; j < a.dim; ++j)
        for (size_t p = 0; p < m.dim; ++p) {
          Vec amb = m.act(a.basis_vec(i), unit_vec(m.dim, p), a.basis_vec(j));
          Vec lhs = inv.apply(amb);
          Vec rhs = m.act(a.star(a.basis_vec(j)),
                          inv.apply(unit_vec(m.dim, p)),
                          a.star(a.basis_vec(i)));
          if (lhs != rhs) {
            std::ostringstream os;
            os << "(amb)* != b*m*a* at (i,p,j)=(" << i << "," << p << "," << j
               << ")";
            rep.fail(os.str());
          }
        }
  }
  return rep;
}

inline bool is_central(const Bimodule& m, const Subspace& center_basis) {
  for (const Vec& z : center_basis.basis())
    if (m.left_act(z) != m.right_act(z)) return false;
  return true;
}

/// Space of bimodule homomorphisms M -> N, materialized as a subspace of
/// flattened (N.dim x M.dim) matrices.
struct HomSpace {
  size_t dom_dim = 0, cod_dim = 0;
  Subspace space;

  size_t dim() const { return space.dim(); }
  Mat matrix(size_t k) const {
    return Mat::unflatten(space.basis()[k], cod_dim, dom_dim);
  }
  std::vector<Mat> matrices() const {
    std::vector<Mat> out;
    for (size_t k = 0; k < dim(); ++k) out.push_back(matrix(k));
    return out;
  }
};

/// Rows of the matrix equation U P - Q U = 0 over a flattened m x n unknown.
inline void add_commutation_rows(RowReducer& red, const Mat& p, const Mat& q) {
  const size_t n = p.rows(), m = q.rows();
  for (size_t k = 0; k < m; ++k)
    for (size_t c = 0; c < n; ++c) {
      Vec row(m * n, Scalar(0));
      for (size_t r = 0; r < n; ++r) row[k * n + r] += p(r, c);
      for (size_t r = 0; r < m; ++r) row[r * n + c] -= q(k, r);
      red.add_row(std::move(row));
    }
}

inline HomSpace hom_AA(const Algebra& a, const Bimodule& m, const Bimodule& n) {
  RowReducer red(n.dim * m.dim);
  for (size_t i = 0; i < a.dim; ++i) {
    add_commutation_rows(red, m.left[i], n.left[i]);
    add_commutation_rows(red, m.right[i], n.right[i]);
  }
  return HomSpace{m.dim, n.dim, kernel_from(red)};
}

/// Module over the center, given by action matrices per center basis element.
struct ZModule {
  size_t dim = 0;
  std::vector<Mat> action;
  std::optional<Involution> involution;

  Mat act(const Vec& z_coords) const {
    Mat out(dim, dim);
    for (size_t k = 0; k < z_coords.size(); ++k)
      if (!z_coords[k].is_zero()) out = out + z_coords[k] * action[k];
    return out;
  }
  Vec star(const Vec& n) const {
    if (!involution) throw unsupported_operation("Z-module has no involution");
    return involution->apply(n);
  }
};

inline ValidationReport validate_zmodule(const Algebra& a,
                                         const Subspace& center_basis,
                                         const ZModule& n) {
  ValidationReport rep;
  const size_t zc = center_basis.dim();
  if (n.action.size() != zc) {
    rep.fail("one action matrix per center basis element required");
    return rep;
  }
  for (const Mat& act : n.action)
    if (act.rows() != n.dim || act.cols() != n.dim) {
      rep.fail("action matrix shape mismatch");
      return rep;
    }
  auto unit_coords = center_basis.coordinates(a.unit);
  if (!unit_coords) {
    rep.fail("unit is not in the given center basis span");
    return rep;
  }
  if (n.act(*unit_coords) != Mat::identity(n.dim))
    rep.fail("unit does not act as identity");
  for (size_t x = 0; x < zc; ++x)
    for (size_t y = 0; y < zc; ++y) {
      Vec prod = a.multiply(center_basis.basis()[x], center_basis.basis()[y]);
      auto pc = center_basis.coordinates(prod);
      if (!pc) {
        rep.fail("center is not multiplicatively closed");
        return rep;
      }
      if (n.action[x] * n.action[y] != n.act(*pc)) {
        std::ostringstream os;
        os << "z(z'n) != (zz')n at center pair (" << x << "," << y << ")";
        rep.fail(os.str());
      }
    }
  if (n.involution) {
    const Involution& inv = *n.involution;
    for (size_t p = 0; p < n.dim; ++p) {
      Vec v = unit_vec(n.dim, p);
      if (inv.apply(inv.apply(v)) != v)
        rep.fail("involution not involutive at basis " + std::to_string(p));
    }
    if (!a.has_involution()) {
      rep.fail("involutive Z-module over an algebra without involution");
      return rep;
    }
    for (size_t z = 0; z < zc; ++z) {
      Vec zs = a.star(center_basis.basis()[z]);
      auto zsc = center_basis.coordinates(zs);
      if (!zsc) {
        rep.fail("center not stable under the involution");
        return rep;
      }
      for (size_t p = 0; p < n.dim; ++p) {
        Vec v = unit_vec(n.dim, p);
        if (inv.apply(n.action[z] * v) != n.act(*zsc) * inv.apply(v)) {
          std::ostringstream os;
          os << "(zn)* != z*n* at (z,p)=(" << z << "," << p << ")";
          rep.fail(os.str());
        }
      }
    }
  }
  return rep;
}

inline ZModule zero_zmodule(const Subspace& center_basis) {
  ZModule n;
  n.dim = 0;
  n.action.assign(center_basis.dim(), Mat(0, 0));
  return n;
}

/// Der(A) as a Z(A)-module, in the canonical derivation basis.
inline ZModule der_zmodule(const Context& ctx) {
  ZModule n;
  n.dim = ctx.n_der();
  n.action = ctx.center_on_der;
  if (!ctx.star_coords.empty()) {
    Mat s(n.dim, n.dim);
    for (size_t c = 0; c < n.dim; ++c)
      for (size_t r = 0; r < n.dim; ++r) s(r, c) = ctx.star_coords[c][r];
    n.involution = Involution{std::move(s), ctx.alg.field == Field::Qi};
  }
  return n;
}

/// The dual M^{*A} = hom^A_A(M, A) of a central bimodule, as a Z(A)-module;
/// `maps` holds the basis elements as matrices M -> A.
struct DualZModule {
  ZModule zmod;
  HomSpace hom;  // maps live here as flattened (dim A x dim M) matrices
  std::vector<Mat> maps;
};

inline DualZModule dual_bimodule(const Algebra& a, const Subspace& center_basis,
                                 const Bimodule& m) {
  if (!is_central(m, center_basis))
    throw std::invalid_argument("dual_bimodule requires a central bimodule");
  DualZModule out;
  out.hom = hom_AA(a, m, canonical_bimodule(a));
  out.maps = out.hom.matrices();
  out.zmod.dim = out.hom.dim();
  for (const Vec& z : center_basis.basis()) {
    Mat lz = a.left_mult(z);
    Mat act(out.zmod.dim, out.zmod.dim);
    for (size_t p = 0; p < out.maps.size(); ++p) {
      auto coords = out.hom.space.coordinates((lz * out.maps[p]).flatten());
      if (!coords) throw std::logic_error("z*mu is not a bimodule map");
      for (size_t r = 0; r < out.zmod.dim; ++r) act(r, p) = (*coords)[r];
    }
    out.zmod.action.push_back(std::move(act));
  }
  if (m.involution && a.involution) {
    const Mat& sa = a.involution->matrix;
    const Mat& sm = m.involution->matrix;
    bool cj = a.involution->conjugate;
    Mat s(out.zmod.dim, out.zmod.dim);
    for (size_t p = 0; p < out.maps.size(); ++p) {
      Mat starred = cj ? sa * out.maps[p].conj() * sm.conj()
                       : sa * out.maps[p] * sm;
      auto coords = out.hom.space.coordinates(starred.flatten());
      if (!coords) throw std::logic_error("mu* is not a bimodule map");
      for (size_t r = 0; r < out.zmod.dim; ++r) s(r, p) = (*coords)[r];
    }
    out.zmod.involution = Involution{std::move(s), cj};
  }
  return out;
}

/// The dual N^{*A} = hom_{Z(A)}(N, A) of a Z(A)-module, as a bimodule;
/// diagonal (hence central) by construction.
struct DualBimodule {
  Bimodule bim;
  Subspace space;  // flattened (dim A x dim N) matrices
  std::vector<Mat> maps;
};

inline DualBimodule dual_zmodule(const Algebra& a, const Subspace& center_basis,
                                 const ZModule& n) {
  DualBimodule out;
  RowReducer red(a.dim * n.dim);
  for (size_t z = 0; z < center_basis.dim(); ++z)
    add_commutation_rows(red, n.action[z],
                         a.left_mult(center_basis.basis()[z]));
  out.space = kernel_from(red);
  for (size_t k = 0; k < out.space.dim(); ++k)
    out.maps.push_back(Mat::unflatten(out.space.basis()[k], a.dim, n.dim));
  out.bim.dim = out.maps.size();
  for (size_t i = 0; i < a.dim; ++i) {
    Mat li = a.left_mult(a.basis_vec(i));
    Mat ri = a.right_mult(a.basis_vec(i));
    Mat lact(out.bim.dim, out.bim.dim), ract(out.bim.dim, out.bim.dim);
    for (size_t p = 0; p < out.maps.size(); ++p) {
      auto lc = out.space.coordinates((li * out.maps[p]).flatten());
      auto rc = out.space.coordinates((ri * out.maps[p]).flatten());
      if (!lc || !rc) throw std::logic_error("a*nu*b is not Z-linear");
      for (size_t r = 0; r < out.bim.dim; ++r) {
        lact(r, p) = (*lc)[r];
        ract(r, p) = (*rc)[r];
      }
    }
    out.bim.left.push_back(std::move(lact));
    out.bim.right.push_back(std::move(ract));
  }
  if (n.involution && a.involution) {
    const Mat& sa = a.involution->matrix;
    const Mat& sn = n.involution->matrix;
    bool cj = a.involution->conjugate;
    Mat s(out.bim.dim, out.bim.dim);
    for (size_t p = 0; p < out.maps.size(); ++p) {
      Mat starred =
          cj ? sa * out.maps[p].conj() * sn.conj() : sa * out.maps[p] * sn;
      auto coords = out.space.coordinates(starred.flatten());
      if (!coords) throw std::logic_error("nu* is not Z-linear");
      for (size_t r = 0; r < out.bim.dim; ++r) s(r, p) = (*coords)[r];
    }
    out.bim.involution = Involution{std::move(s), cj};
  }
  return out;
}

/// The left dual M' = hom^A(M, A) of M as a right module, with the bimodule
/// structure (a alpha)(m) = a alpha(m), (alpha a)(m) = alpha(a m).
struct LeftDual {
  Bimodule bim;
  Subspace space;
  std::vector<Mat> maps;
};

inline LeftDual left_dual(const Algebra& a, const Bimodule& m) {
  LeftDual out;
  RowReducer red(a.dim * m.dim);
  for (size_t i = 0; i < a.dim; ++i)
    add_commutation_rows(red, m.right[i], a.right_mult(a.basis_vec(i)));
  out.space = kernel_from(red);
  for (size_t k = 0; k < out.space.dim(); ++k)
    out.maps.push_back(Mat::unflatten(out.space.basis()[k], a.dim, m.dim));
  out.bim.dim = out.maps.size();
  for (size_t i = 0; i < a.dim; ++i) {
    Mat li = a.left_mult(a.basis_vec(i));
    Mat lacti = m.left_act(a.basis_vec(i));
    Mat lact(out.bim.dim, out.bim.dim), ract(out.bim.dim, out.bim.dim);
    for (size_t p = 0; p < out.maps.size(); ++p) {
      auto lc = out.space.coordinates((li * out.maps[p]).flatten());
      auto rc = out.space.coordinates((out.maps[p] * lacti).flatten());
      if (!lc || !rc)
        throw std::logic_error("left-dual action left the hom space");
      for (size_t r = 0; r < out.bim.dim; ++r) {
        lact(r, p) = (*lc)[r];
        ract(r, p) = (*rc)[r];
      }
    }
    out.bim.left.push_back(std::move(lact));
    out.bim.right.push_back(std::move(ract));
  }
  return out;
}

/// Canonical map c_M : M -> M^{*A *A} and the separation/reflexivity flags
/// of the duality pairing <m, mu> = mu(m).
struct DualityReport {
  size_t dual_dim = 0, bidual_dim = 0;
  Mat c_matrix;  // bidual coordinates x dim M
  bool injective = false;   // <=> M diagonal <=> separated in M
  bool surjective = false;
  bool reflexive = false;
  bool separated_in_M = false;
  bool separated_in_N = false;
};

inline DualityReport canonical_map_and_flags(const Algebra& a,
                                             const Subspace& center_basis,
                                             const Bimodule& m) {
  DualZModule dual = dual_bimodule(a, center_basis, m);
  DualBimodule bidual = dual_zmodule(a, center_basis, dual.zmod);
  DualityReport rep;
  rep.dual_dim = dual.zmod.dim;
  rep.bidual_dim = bidual.bim.dim;
  rep.c_matrix = Mat(rep.bidual_dim, m.dim);
  for (size_t p = 0; p < m.dim; ++p) {
    // c_M(m_p): the Z-linear map  mu |-> mu(m_p)  on the dual.
    Mat cp(a.dim, rep.dual_dim);
    for (size_t q = 0; q < rep.dual_dim; ++q) {
      Vec val = dual.maps[q] * unit_vec(m.dim, p);
      for (size_t r = 0; r < a.dim; ++r) cp(r, q) = val[r];
    }
    auto coords = bidual.space.coordinates(cp.flatten());
    if (!coords) throw std::logic_error("c_M(m) is not Z-linear");
    for (size_t r = 0; r < rep.bidual_dim; ++r) rep.c_matrix(r, p) = (*coords)[r];
  }
  size_t rk = rank(rep.c_matrix);
  rep.injective = (rk == m.dim);
  rep.surjective = (rk == rep.bidual_dim);
  rep.reflexive = rep.injective && rep.surjective;
  rep.separated_in_M = rep.injective;
  // Separation in the dual factor: a nonzero mu must pair nontrivially with
  // some m; mu is itself a map on M, so this is a rank condition.
  Mat stacked(rep.dual_dim, a.dim * m.dim);
  for (size_t q = 0; q < rep.dual_dim; ++q) {
    Vec f = dual.maps[q].flatten();
    for (size_t c = 0; c < f.size(); ++c) stacked(q, c) = f[c];
  }
  rep.separated_in_N = (rank(stacked) == rep.dual_dim);
  return rep;
}

/// Quotient of the ambient coordinate space by a subspace, with canonical
/// representatives and the projection onto their coordinates.
struct QuotientSpace {
  size_t ambient = 0;
  std::vector<Vec> reps;
  Mat embed;    // ambient x q
  Mat project;  // q x ambient
};

inline QuotientSpace make_quotient(const Subspace& sub) {
  QuotientSpace out;
  out.ambient = sub.ambient_dim();
  out.reps = quotient_basis(Subspace::whole(out.ambient), sub);
  const size_t q = out.reps.size();
  Mat b(out.ambient, out.ambient);
  for (size_t j = 0; j < q; ++j)
    for (size_t r = 0; r < out.ambient; ++r) b(r, j) = out.reps[j][r];
  for (size_t j = 0; j < sub.dim(); ++j)
    for (size_t r = 0; r < out.ambient; ++r) b(r, q + j) = sub.basis()[j][r];
  Mat bi = inverse(b);
  out.embed = Mat(out.ambient, q);
  for (size_t j = 0; j < q; ++j)
    for (size_t r = 0; r < out.ambient; ++r) out.embed(r, j) = out.reps[j][r];
  out.project = Mat(q, out.ambient);
  for (size_t r = 0; r < q; ++r)
    for (size_t c = 0; c < out.ambient; ++c) out.project(r, c) = bi(r, c);
  return out;
}

/// Restriction of a bimodule structure to an action-stable subspace.
inline Bimodule sub_bimodule(const Algebra& a, const Bimodule& m,
                             const Subspace& sub) {
  Bimodule out;
  out.dim = sub.dim();
  auto restrict_act = [&](const Mat& act) {
    Mat r(out.dim, out.dim);
    for (size_t k = 0; k < sub.dim(); ++k) {
      auto coords = sub.coordinates(act * sub.basis()[k]);
      if (!coords)
        throw std::invalid_argument("subspace is not a subbimodule");
      for (size_t j = 0; j < out.dim; ++j) r(j, k) = (*coords)[j];
    }
    return r;
  };
  for (size_t i = 0; i < a.dim; ++i) {
    out.left.push_back(restrict_act(m.left[i]));
    out.right.push_back(restrict_act(m.right[i]));
  }
  if (m.involution) {
    bool stable = true;
    for (const Vec& v : sub.basis())
      if (!sub.contains(m.involution->apply(v))) stable = false;
    if (stable) {
      Mat s(out.dim, out.dim);
      for (size_t k = 0; k < sub.dim(); ++k) {
        auto coords = sub.coordinates(m.involution->apply(sub.basis()[k]));
        for (size_t j = 0; j < out.dim; ++j) s(j, k) = (*coords)[j];
      }
      out.involution = Involution{std::move(s), m.involution->conjugate};
    }
  }
  return out;
}

/// Quotient bimodule M / sub by an action-stable subspace.
inline Bimodule quotient_bimodule(const Algebra& a, const Bimodule& m,
                                  const Subspace& sub,
                                  QuotientSpace* info = nullptr) {
  for (size_t i = 0; i < a.dim; ++i)
    for (const Vec& v : sub.basis())
      if (!sub.contains(m.left[i] * v) || !sub.contains(m.right[i] * v))
        throw std::invalid_argument("subspace is not a subbimodule");
  QuotientSpace q = make_quotient(sub);
  Bimodule out;
  out.dim = q.reps.size();
  for (size_t i = 0; i < a.dim; ++i) {
    out.left.push_back(q.project * (m.left[i] * q.embed));
    out.right.push_back(q.project * (m.right[i] * q.embed));
  }
  if (m.involution) {
    bool stable = true;
    for (const Vec& v : sub.basis())
      if (!sub.contains(m.involution->apply(v))) stable = false;
    if (stable) {
      Mat s = m.involution->conjugate
                  ? q.project * (m.involution->matrix * q.embed.conj())
                  : q.project * (m.involution->matrix * q.embed);
      out.involution = Involution{std::move(s), m.involution->conjugate};
    }
  }
  if (info) *info = std::move(q);
  return out;
}

/// Tensor product quotient data: the bimodule together with the projection
/// from and embedding into the ambient M (x) N coordinates.
struct TensorBimodule {
  Bimodule bim;
  QuotientSpace q;
  size_t left_dim = 0, right_dim = 0;

  size_t pair_index(size_t p, size_t s) const { return p * right_dim + s; }
  /// Class of m (x) n in quotient coordinates.
  Vec pure(const Vec& m, const Vec& n) const {
    Vec amb(q.ambient, Scalar(0));
    for (size_t p = 0; p < left_dim; ++p) {
      if (m[p].is_zero()) continue;
      for (size_t s = 0; s < right_dim; ++s)
        if (!n[s].is_zero()) amb[pair_index(p, s)].addmul(m[p], n[s]);
    }
    return q.project * amb;
  }
};

namespace detail {

inline TensorBimodule tensor_quotient(const Algebra& a, const Bimodule& m,
                                      const Bimodule& n,
                                      const std::vector<Vec>& balancing) {
  const size_t amb = m.dim * n.dim;
  Subspace rel(amb, balancing);
  TensorBimodule out;
  out.left_dim = m.dim;
  out.right_dim = n.dim;
  out.q = make_quotient(rel);
  out.bim.dim = out.q.reps.size();
  for (size_t i = 0; i < a.dim; ++i) {
    Mat lamb = kron(m.left[i], Mat::identity(n.dim));
    Mat ramb = kron(Mat::identity(m.dim), n.right[i]);
    out.bim.left.push_back(out.q.project * (lamb * out.q.embed));
    out.bim.right.push_back(out.q.project * (ramb * out.q.embed));
  }
  return out;
}

}  // namespace detail

/// M (x)_A N: quotient by the subbimodule generated by ma (x) n - m (x) an.
inline TensorBimodule tensor_over_A(const Algebra& a, const Bimodule& m,
                                    const Bimodule& n) {
  std::vector<Vec> rels;
  for (size_t i = 0; i < a.dim; ++i) {
    for (size_t p = 0; p < m.dim; ++p) {
      Vec ma = m.right[i] * unit_vec(m.dim, p);
      for (size_t s = 0; s < n.dim; ++s) {
        Vec an = n.left[i] * unit_vec(n.dim, s);
        Vec rel(m.dim * n.dim, Scalar(0));
        for (size_t r = 0; r < m.dim; ++r)
          if (!ma[r].is_zero()) rel[r * n.dim + s] += ma[r];
        for (size_t r = 0; r < n.dim; ++r)
          if (!an[r].is_zero()) rel[p * n.dim + r] -= an[r];
        rels.push_back(std::move(rel));
      }
    }
  }
  return detail::tensor_quotient(a, m, n, rels);
}

/// M (x)_{Z(A)} N: quotient by mz (x) n - m (x) zn over the center.
inline TensorBimodule tensor_over_Z(const Algebra& a,
                                    const Subspace& center_basis,
                                    const Bimodule& m, const Bimodule& n) {
  std::vector<Vec> rels;
  for (const Vec& z : center_basis.basis()) {
    Mat rz = m.right_act(z);
    Mat lz = n.left_act(z);
    for (size_t p = 0; p < m.dim; ++p) {
      Vec mz = rz * unit_vec(m.dim, p);
      for (size_t s = 0; s < n.dim; ++s) {
        Vec zn = lz * unit_vec(n.dim, s);
        Vec rel(m.dim * n.dim, Scalar(0));
        for (size_t r = 0; r < m.dim; ++r)
          if (!mz[r].is_zero()) rel[r * n.dim + s] += mz[r];
        for (size_t r = 0; r < n.dim; ++r)
          if (!zn[r].is_zero()) rel[p * n.dim + r] -= zn[r];
        rels.push_back(std::move(rel));
      }
    }
  }
  return detail::tensor_quotient(a, m, n, rels);
}

/// N1 (x)_{Z(A)} N2 for Z(A)-modules, with action z(x (x) y) = zx (x) y.
struct TensorZModule {
  ZModule zmod;
  QuotientSpace q;
  size_t left_dim = 0, right_dim = 0;

  size_t pair_index(size_t p, size_t s) const { return p * right_dim + s; }
};

inline TensorZModule tensor_over_Z(const Subspace& center_basis,
                                   const ZModule& n1, const ZModule& n2) {
  const size_t amb = n1.dim * n2.dim;
  std::vector<Vec> rels;
  for (size_t z = 0; z < center_basis.dim(); ++z) {
    for (size_t p = 0; p < n1.dim; ++p) {
      Vec zx = n1.action[z] * unit_vec(n1.dim, p);
      for (size_t s = 0; s < n2.dim; ++s) {
        Vec zy = n2.action[z] * unit_vec(n2.dim, s);
        Vec rel(amb, Scalar(0));
        for (size_t r = 0; r < n1.dim; ++r)
          if (!zx[r].is_zero()) rel[r * n2.dim + s] += zx[r];
        for (size_t r = 0; r < n2.dim; ++r)
          if (!zy[r].is_zero()) rel[p * n2.dim + r] -= zy[r];
        rels.push_back(std::move(rel));
      }
    }
  }
  TensorZModule out;
  out.left_dim = n1.dim;
  out.right_dim = n2.dim;
  out.q = make_quotient(Subspace(amb, rels));
  out.zmod.dim = out.q.reps.size();
  for (size_t z = 0; z < center_basis.dim(); ++z) {
    Mat zamb = kron(n1.action[z], Mat::identity(n2.dim));
    out.zmod.action.push_back(out.q.project * (zamb * out.q.embed));
  }
  return out;
}

/// Quotient Z-module N / sub by an action-stable subspace.
inline ZModule quotient_zmodule(const ZModule& n, const Subspace& sub,
                                QuotientSpace* info = nullptr) {
  for (const Mat& act : n.action)
    for (const Vec& v : sub.basis())
      if (!sub.contains(act * v))
        throw std::invalid_argument("subspace is not a sub-Z-module");
  QuotientSpace q = make_quotient(sub);
  ZModule out;
  out.dim = q.reps.size();
  for (const Mat& act : n.action)
    out.action.push_back(q.project * (act * q.embed));
  if (info) *info = std::move(q);
  return out;
}

}  // namespace ncg

#endif  // NCG_BIMODULE_HPP
