#include <catch2/catch_amalgamated.hpp>

#include "ncg/algebra.hpp"
#include "ncg/fixtures.hpp"
#include "ncg/linalg.hpp"
#include "oracle.hpp"

using namespace ncg;

namespace {

Mat mat2(std::vector<std::vector<long>> rows) {
  Mat m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < rows[r].size(); ++c) m(r, c) = Scalar(rows[r][c]);
  return m;
}

}  // namespace

TEST_CASE("kernel basics") {
  CHECK(kernel(Mat::identity(2)).dim() == 0);

  Mat m = mat2({{1, -1}});
  Subspace k = kernel(m);
  REQUIRE(k.dim() == 1);
  CHECK(k.basis()[0] == Vec{Scalar(1), Scalar(1)});
}

TEST_CASE("kernel dimension equals cols - rank, against the oracle") {
  std::vector<Mat> samples = {
      mat2({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}),
      mat2({{0, 0}, {0, 0}}),
      mat2({{1, 2}, {2, 4}, {3, 6}}),
      Mat::identity(5),
  };
  // A Qi sample as well.
  Mat qi(2, 3);
  qi(0, 0) = Scalar::i();
  qi(0, 1) = Scalar(1);
  qi(1, 0) = Scalar(-1);
  qi(1, 1) = Scalar::i();
  samples.push_back(qi);
  for (const Mat& m : samples) {
    CHECK(kernel(m).dim() == ncg_oracle::kernel_dim(m));
    CHECK(rank(m) == ncg_oracle::rank_over_field(m));
  }
}

TEST_CASE("leibniz kernel of the m2 fixture has dimension 3") {
  Algebra a = fixtures::m2();
  DerivationSpace ds = derivations(a);
  CHECK(ds.dim() == 3);
  // Independent oracle: assemble the same constraint rows naively and count.
  const size_t n = a.dim;
  std::vector<Vec> rows;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) {
        Vec row(n * n, Scalar(0));
        for (size_t r = 0; r < n; ++r)
          for (size_t c = 0; c < n; ++c) {
            // coefficient of D(r,c) in component k of
            // D(ei ej) - D(ei) ej - ei D(ej)
            Scalar coeff(0);
            if (r == k) coeff += a.mul[i][j][c];
            if (c == i) coeff -= a.right_mult(a.basis_vec(j))(k, r);
            if (c == j) coeff -= a.left_mult(a.basis_vec(i))(k, r);
            row[r * n + c] = coeff;
          }
        rows.push_back(std::move(row));
      }
  Mat sys = Mat::from_rows(rows, n * n);
  CHECK(ncg_oracle::kernel_dim(sys) == 3);
}

TEST_CASE("solve_affine") {
  SECTION("identity system") {
    auto out = solve_affine(Mat::identity(2), {Scalar(2), Scalar(3)});
    REQUIRE(out.feasible());
    CHECK(out.solution->particular == Vec{Scalar(2), Scalar(3)});
    CHECK(out.solution->kernel.dim() == 0);
  }
  SECTION("inconsistent rows") {
    auto out = solve_affine(mat2({{1, 1}, {1, 1}}), {Scalar(1), Scalar(0)});
    CHECK_FALSE(out.feasible());
    CHECK(out.witness_row == 1);
  }
  SECTION("underdetermined") {
    auto out = solve_affine(mat2({{1, 1}}), {Scalar(2)});
    REQUIRE(out.feasible());
    CHECK(out.solution->particular == Vec{Scalar(2), Scalar(0)});
    REQUIRE(out.solution->kernel.dim() == 1);
    CHECK(out.solution->kernel.basis()[0] == Vec{Scalar(1), Scalar(-1)});
  }
  SECTION("solutions satisfy the system exactly") {
    Mat m = mat2({{2, 3, 5}, {7, 11, 13}});
    Vec rhs = {Scalar(1), Scalar(2)};
    auto out = solve_affine(m, rhs);
    REQUIRE(out.feasible());
    CHECK(m * out.solution->particular == rhs);
    for (const Vec& v : out.solution->kernel.basis())
      CHECK(is_zero_vec(m * v));
  }
}

TEST_CASE("subspace operations") {
  SECTION("intersection") {
    Subspace whole = Subspace::whole(2);
    Subspace line(2, {{Scalar(0), Scalar(1)}});
    CHECK(intersect(whole, line) == line);
    Subspace x(2, {{Scalar(1), Scalar(0)}});
    CHECK(intersect(x, line).dim() == 0);

    Subspace ab(3, {{Scalar(1), Scalar(0), Scalar(0)},
                    {Scalar(0), Scalar(1), Scalar(0)}});
    Subspace bc(3, {{Scalar(0), Scalar(1), Scalar(0)},
                    {Scalar(0), Scalar(0), Scalar(1)}});
    Subspace mid(3, {{Scalar(0), Scalar(1), Scalar(0)}});
    CHECK(intersect(ab, bc) == mid);
  }
  SECTION("quotient representatives") {
    Subspace whole = Subspace::whole(3);
    CHECK(quotient_basis(whole, whole).empty());
    CHECK(quotient_basis(whole, Subspace(3)).size() == 3);
    Subspace sub(3, {{Scalar(1), Scalar(1), Scalar(0)}});
    auto reps = quotient_basis(whole, sub);
    CHECK(reps.size() == 2);
    Subspace line(3, {{Scalar(0), Scalar(0), Scalar(1)}});
    CHECK_THROWS_AS(quotient_basis(line, sub), std::invalid_argument);
  }
  SECTION("canonicalization is idempotent and equality decidable") {
    std::vector<Vec> vs = {{Scalar(2), Scalar(4), Scalar(0)},
                           {Scalar(1), Scalar(2), Scalar(1)},
                           {Scalar(3), Scalar(6), Scalar(1)}};
    Subspace s(3, vs);
    Subspace t(3, s.basis());
    CHECK(s == t);
    CHECK(s.dim() == 2);
    std::vector<Vec> shuffled = {vs[2], vs[0], vs[1]};
    CHECK(Subspace(3, shuffled) == s);
  }
  SECTION("coordinates") {
    Subspace s(3, {{Scalar(1), Scalar(0), Scalar(2)},
                   {Scalar(0), Scalar(1), Scalar(3)}});
    Vec v = {Scalar(2), Scalar(-1), Scalar(1)};
    auto c = s.coordinates(v);
    REQUIRE(c.has_value());
    Vec rebuilt = zero_vec(3);
    for (size_t k = 0; k < s.dim(); ++k)
      add_scaled(rebuilt, (*c)[k], s.basis()[k]);
    CHECK(rebuilt == v);
    CHECK_FALSE(s.coordinates({Scalar(0), Scalar(0), Scalar(1)}).has_value());
  }
  SECTION("dimension mismatch is an input error") {
    CHECK_THROWS_AS(intersect(Subspace(2), Subspace(3)),
                    std::invalid_argument);
  }
}
