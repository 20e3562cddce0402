#ifndef NCG_ALGEBRA_HPP
#define NCG_ALGEBRA_HPP

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ncg/errors.hpp"
#include "ncg/linalg.hpp"
#include "ncg/scalar.hpp"

namespace ncg {

/// Antilinear involution x -> S * conj(x); with conjugate == false the map is
/// linear (only meaningful over Q, where conjugation is trivial anyway).
struct Involution {
  Mat matrix;
  bool conjugate = true;

  Vec apply(const Vec& v) const { return matrix * (conjugate ? conj_vec(v) : v); }
  /// The linear matrix of f -> star . f . star conjugation pieces: for a
  /// linear map given by X, the starred map star(X(star(v))) is linear with
  /// matrix S * conj(X) * conj(S).
  Mat conjugate_map(const Mat& x) const {
    if (!conjugate) return matrix * x * matrix;
    return matrix * x.conj() * matrix.conj();
  }
};

/// Finite-dimensional unital associative algebra given by structure
/// constants: e_i * e_j = sum_k mul[i][j][k] e_k.
struct Algebra {
  Field field = Field::Q;
  size_t dim = 0;
  std::vector<std::string> basis_names;
  Vec unit;
  std::vector<std::vector<Vec>> mul;
  std::optional<Involution> involution;

  bool has_involution() const { return involution.has_value(); }

  Vec multiply(const Vec& a, const Vec& b) const {
    if (a.size() != dim || b.size() != dim)
      throw std::invalid_argument("multiply: vector length must equal dim");
    Vec out(dim, Scalar(0));
    for (size_t i = 0; i < dim; ++i) {
      if (a[i].is_zero()) continue;
      for (size_t j = 0; j < dim; ++j) {
        if (b[j].is_zero()) continue;
        Scalar c = a[i] * b[j];
        add_scaled(out, c, mul[i][j]);
      }
    }
    return out;
  }

  /// Matrix of m -> a*m.
  Mat left_mult(const Vec& a) const {
    Mat l(dim, dim);
    for (size_t i = 0; i < dim; ++i) {
      if (a[i].is_zero()) continue;
      for (size_t j = 0; j < dim; ++j)
        for (size_t k = 0; k < dim; ++k)
          if (!mul[i][j][k].is_zero()) l(k, j).addmul(a[i], mul[i][j][k]);
    }
    return l;
  }

  /// Matrix of m -> m*a.
  Mat right_mult(const Vec& a) const {
    Mat r(dim, dim);
    for (size_t j = 0; j < dim; ++j) {
      if (a[j].is_zero()) continue;
      for (size_t i = 0; i < dim; ++i)
        for (size_t k = 0; k < dim; ++k)
          if (!mul[i][j][k].is_zero()) r(k, i).addmul(a[j], mul[i][j][k]);
    }
    return r;
  }

  Vec star(const Vec& a) const {
    if (!involution) throw unsupported_operation("algebra has no involution");
    return involution->apply(a);
  }

  Vec basis_vec(size_t i) const { return unit_vec(dim, i); }

  std::string name_of(size_t i) const {
    return i < basis_names.size() ? basis_names[i] : "e" + std::to_string(i);
  }
};

inline ValidationReport validate_algebra(const Algebra& a) {
  ValidationReport rep;
  if (a.unit.size() != a.dim) {
    rep.fail("unit vector has wrong length");
    return rep;
  }
  if (a.mul.size() != a.dim) {
    rep.fail("mul tensor has wrong first extent");
    return rep;
  }
  for (size_t i = 0; i < a.dim; ++i) {
    if (a.mul[i].size() != a.dim) {
      rep.fail("mul tensor has wrong second extent");
      return rep;
    }
    for (size_t j = 0; j < a.dim; ++j)
      if (a.mul[i][j].size() != a.dim) {
        rep.fail("mul tensor has wrong third extent");
        return rep;
      }
  }
  // Associativity on all basis triples.
  for (size_t i = 0; i < a.dim; ++i)
    for (size_t j = 0; j < a.dim; ++j) {
      Vec eij = a.mul[i][j];
      for (size_t k = 0; k < a.dim; ++k) {
        Vec lhs = a.multiply(eij, a.basis_vec(k));
        Vec rhs = a.multiply(a.basis_vec(i), a.mul[j][k]);
        if (lhs != rhs) {
          std::ostringstream os;
          os << "associativity failed at (i,j,k)=(" << i << "," << j << ","
             << k << ")";
          rep.fail(os.str());
        }
      }
    }
  for (size_t i = 0; i < a.dim; ++i) {
    if (a.multiply(a.unit, a.basis_vec(i)) != a.basis_vec(i))
      rep.fail("unit fails on the left at basis " + std::to_string(i));
    if (a.multiply(a.basis_vec(i), a.unit) != a.basis_vec(i))
      rep.fail("unit fails on the right at basis " + std::to_string(i));
  }
  if (a.involution) {
    const Involution& inv = *a.involution;
    if (inv.matrix.rows() != a.dim || inv.matrix.cols() != a.dim)
      rep.fail("involution matrix has wrong shape");
    else {
      if (a.field == Field::Qi && !inv.conjugate)
        rep.fail("involution over Qi must conjugate scalars");
      for (size_t i = 0; i < a.dim; ++i) {
        Vec v = a.basis_vec(i);
        if (inv.apply(inv.apply(v)) != v)
          rep.fail("involution not involutive at basis " + std::to_string(i));
      }
      for (size_t i = 0; i < a.dim; ++i)
        for (size_t j = 0; j < a.dim; ++j) {
          Vec lhs = inv.apply(a.mul[i][j]);
          Vec rhs = a.multiply(inv.apply(a.basis_vec(j)),
                               inv.apply(a.basis_vec(i)));
          if (lhs != rhs) {
            std::ostringstream os;
            os << "(ab)* != b*a* at (i,j)=(" << i << "," << j << ")";
            rep.fail(os.str());
          }
        }
      if (inv.apply(a.unit) != a.unit) rep.fail("unit not fixed by involution");
    }
  }
  return rep;
}

/// Canonical basis of the center {z : z e_i = e_i z for all i}.
inline Subspace center(const Algebra& a) {
  Mat sys(a.dim * a.dim, a.dim);
  for (size_t i = 0; i < a.dim; ++i) {
    Mat comm = a.left_mult(a.basis_vec(i)) - a.right_mult(a.basis_vec(i));
    for (size_t r = 0; r < a.dim; ++r)
      for (size_t c = 0; c < a.dim; ++c) sys(i * a.dim + r, c) = comm(r, c);
  }
  return kernel(sys);
}

/// Inner derivation ad(x): a -> xa - ax.
inline Mat ad(const Algebra& a, const Vec& x) {
  return a.left_mult(x) - a.right_mult(x);
}

inline Mat bracket(const Mat& x, const Mat& y) { return commutator(x, y); }

struct DerivationSpace {
  Subspace all;                 // subspace of flattened dim x dim matrices
  Subspace inner;               // span of the ad(e_i)
  std::vector<Vec> outer_reps;  // quotient representatives (flattened)

  size_t dim() const { return all.dim(); }
  size_t inner_dim() const { return inner.dim(); }
  size_t outer_dim() const { return outer_reps.size(); }
  Mat matrix(size_t k, size_t n) const {
    return Mat::unflatten(all.basis()[k], n, n);
  }
};

/// All derivations: kernel of the Leibniz constraint system
/// D(e_i e_j) = D(e_i) e_j + e_i D(e_j), plus the Int/Out decomposition.
inline DerivationSpace derivations(const Algebra& a) {
  const size_t n = a.dim;
  std::vector<Mat> lm(n), rm(n);
  for (size_t i = 0; i < n; ++i) {
    lm[i] = a.left_mult(a.basis_vec(i));
    rm[i] = a.right_mult(a.basis_vec(i));
  }
  RowReducer red(n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      const Vec& m = a.mul[i][j];
      for (size_t k = 0; k < n; ++k) {
        Vec row(n * n, Scalar(0));
        for (size_t c = 0; c < n; ++c)
          if (!m[c].is_zero()) row[k * n + c] += m[c];
        for (size_t r = 0; r < n; ++r) {
          if (!rm[j](k, r).is_zero()) row[r * n + i] -= rm[j](k, r);
          if (!lm[i](k, r).is_zero()) row[r * n + j] -= lm[i](k, r);
        }
        red.add_row(std::move(row));
      }
    }
  red.finish();
  std::vector<Vec> basis;
  for (size_t c = 0; c < n * n; ++c) {
    if (red.pivot_of_col(c) >= 0) continue;
    Vec v(n * n, Scalar(0));
    v[c] = Scalar(1);
    for (size_t k = 0; k < red.rank(); ++k)
      v[red.pivots()[k]] = -red.rows()[k][c];
    basis.push_back(std::move(v));
  }
  DerivationSpace ds{Subspace(n * n, basis), Subspace(n * n), {}};
  std::vector<Vec> inner;
  for (size_t i = 0; i < n; ++i)
    inner.push_back(ad(a, a.basis_vec(i)).flatten());
  ds.inner = Subspace(n * n, inner);
  ds.outer_reps = quotient_basis(ds.all, ds.inner);
  return ds;
}

/// X* with X*(x) = (X(x*))*.
inline Mat derivation_star(const Algebra& a, const Mat& x) {
  if (!a.involution) throw unsupported_operation("algebra has no involution");
  return a.involution->conjugate_map(x);
}

/// Restriction of a derivation to the center, in center-basis coordinates.
/// The existence of the restriction is part of what is being checked.
inline Mat derivation_action_on_center(const Algebra& a, const Subspace& zc,
                                       const Mat& d) {
  Mat out(zc.dim(), zc.dim());
  for (size_t k = 0; k < zc.dim(); ++k) {
    Vec img = d * zc.basis()[k];
    auto coords = zc.coordinates(img);
    if (!coords)
      throw std::logic_error(
          "derivation does not preserve the center (upstream bug)");
    for (size_t r = 0; r < zc.dim(); ++r) out(r, k) = (*coords)[r];
  }
  return out;
}

/// True iff the joint kernel of all derivations is exactly the scalars.
inline bool is_class_cinf0(const Algebra& a, const DerivationSpace& ders) {
  if (ders.dim() == 0) return a.dim == 1;
  Mat stacked(ders.dim() * a.dim, a.dim);
  for (size_t k = 0; k < ders.dim(); ++k) {
    Mat d = ders.matrix(k, a.dim);
    for (size_t r = 0; r < a.dim; ++r)
      for (size_t c = 0; c < a.dim; ++c) stacked(k * a.dim + r, c) = d(r, c);
  }
  Subspace joint = kernel(stacked);
  return joint == Subspace(a.dim, {a.unit});
}

/// Precomputed algebra environment shared by the form/connection/metric
/// layers: center, derivation space, bracket table, star table, and the
/// center action on Der.
struct Context {
  Algebra alg;
  Subspace center_basis;
  DerivationSpace der;
  std::vector<Mat> der_mats;
  std::vector<std::vector<Vec>> bracket_coords;  // [a][b] in Der coordinates
  std::vector<Vec> star_coords;  // coords of X_a*; empty without involution
  std::vector<Mat> center_on_der;  // per center basis z: X -> zX on Der coords
  bool trivial_center = false;

  size_t dim() const { return alg.dim; }
  size_t n_der() const { return der.dim(); }
  size_t n_center() const { return center_basis.dim(); }

  /// Coordinates of z*X for arbitrary center coords and der coords.
  Vec center_mult_der(const Vec& z_coords, const Vec& x_coords) const {
    Vec out(n_der(), Scalar(0));
    for (size_t z = 0; z < z_coords.size(); ++z) {
      if (z_coords[z].is_zero()) continue;
      add_scaled(out, z_coords[z], center_on_der[z] * x_coords);
    }
    return out;
  }

  Mat der_from_coords(const Vec& coords) const {
    Mat d(dim(), dim());
    for (size_t k = 0; k < coords.size(); ++k)
      if (!coords[k].is_zero())
        d = d + coords[k] * der_mats[k];
    return d;
  }

  Vec star_der_coords(const Vec& coords) const {
    if (star_coords.empty())
      throw unsupported_operation("algebra has no involution");
    Vec out(n_der(), Scalar(0));
    for (size_t k = 0; k < coords.size(); ++k)
      if (!coords[k].is_zero()) add_scaled(out, coords[k].conj(), star_coords[k]);
    return out;
  }
};

inline Context make_context(Algebra a) {
  Context ctx;
  ctx.alg = std::move(a);
  const Algebra& alg = ctx.alg;
  ctx.center_basis = center(alg);
  ctx.der = derivations(alg);
  const size_t d = ctx.der.dim();
  for (size_t k = 0; k < d; ++k)
    ctx.der_mats.push_back(ctx.der.matrix(k, alg.dim));
  ctx.bracket_coords.assign(d, std::vector<Vec>(d));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) {
      Mat b = bracket(ctx.der_mats[i], ctx.der_mats[j]);
      auto coords = ctx.der.all.coordinates(b.flatten());
      if (!coords) throw std::logic_error("Der(A) not closed under bracket");
      ctx.bracket_coords[i][j] = *coords;
    }
  if (alg.involution) {
    for (size_t k = 0; k < d; ++k) {
      Mat s = derivation_star(alg, ctx.der_mats[k]);
      auto coords = ctx.der.all.coordinates(s.flatten());
      if (!coords) throw std::logic_error("Der(A) not closed under star");
      ctx.star_coords.push_back(*coords);
    }
  }
  for (size_t z = 0; z < ctx.center_basis.dim(); ++z) {
    Mat lz = alg.left_mult(ctx.center_basis.basis()[z]);
    Mat zx(d, d);
    for (size_t k = 0; k < d; ++k) {
      Mat m = lz * ctx.der_mats[k];
      auto coords = ctx.der.all.coordinates(m.flatten());
      if (!coords)
        throw std::logic_error("Der(A) not stable under the center action");
      for (size_t r = 0; r < d; ++r) zx(r, k) = (*coords)[r];
    }
    ctx.center_on_der.push_back(std::move(zx));
  }
  ctx.trivial_center =
      ctx.center_basis == Subspace(alg.dim, {alg.unit});
  return ctx;
}

}  // namespace ncg

#endif  // NCG_ALGEBRA_HPP
