#include <catch2/catch_amalgamated.hpp>

#include "ncg/algebra.hpp"
#include "ncg/fixtures.hpp"

using namespace ncg;

namespace {
// Basis indices in the m2 fixture.
constexpr size_t E11 = 0, E12 = 1, E21 = 2, E22 = 3;
}  // namespace

TEST_CASE("fixture algebras validate") {
  for (const auto& [name, alg] : fixtures::all()) {
    INFO(name);
    CHECK(validate_algebra(alg).ok());
  }
}

TEST_CASE("corrupted structure constants are reported with the triple") {
  Algebra a = fixtures::m2();
  a.mul[0][1][2] = Scalar(1);  // e11*e12 gains a spurious e21 component
  ValidationReport rep = validate_algebra(a);
  CHECK_FALSE(rep.ok());
  bool named = false;
  for (const auto& f : rep.failures)
    if (f.find("associativity failed at") != std::string::npos) named = true;
  CHECK(named);
}

TEST_CASE("multiplication") {
  Algebra a = fixtures::m2();
  Vec b = {Scalar(1), Scalar(2), Scalar(3), Scalar(4)};
  CHECK(a.multiply(a.unit, b) == b);
  CHECK(a.multiply(b, a.unit) == b);
  CHECK(a.multiply(a.basis_vec(E12), a.basis_vec(E21)) == a.basis_vec(E11));
  Algebra t = fixtures::t2();
  CHECK(is_zero_vec(t.multiply(t.basis_vec(1), t.basis_vec(1))));
}

TEST_CASE("centers") {
  CHECK(center(fixtures::k2()).dim() == 2);
  Algebra m2 = fixtures::m2();
  Subspace zm2 = center(m2);
  CHECK(zm2.dim() == 1);
  CHECK(zm2.contains(m2.unit));
  CHECK(center(fixtures::t2()).dim() == 1);
  CHECK(center(fixtures::dual()).dim() == 2);
}

TEST_CASE("derivation spaces") {
  SECTION("k2 is rigid") {
    DerivationSpace ds = derivations(fixtures::k2());
    CHECK(ds.dim() == 0);
    CHECK(ds.inner_dim() == 0);
    CHECK(ds.outer_dim() == 0);
  }
  SECTION("m2 has three derivations, all inner") {
    Algebra a = fixtures::m2();
    DerivationSpace ds = derivations(a);
    CHECK(ds.dim() == 3);
    CHECK(ds.inner_dim() == 3);
    CHECK(ds.outer_reps.empty());
    // Int is spanned by ad(e11), ad(e12), ad(e21); ad(e22) = -ad(e11).
    Subspace span(a.dim * a.dim,
                  {ad(a, a.basis_vec(E11)).flatten(),
                   ad(a, a.basis_vec(E12)).flatten(),
                   ad(a, a.basis_vec(E21)).flatten()});
    CHECK(span == ds.inner);
    CHECK(ad(a, a.basis_vec(E22)).flatten() ==
          Vec((Scalar(-1) * ad(a, a.basis_vec(E11))).flatten()));
  }
  SECTION("t2 has two derivations, all inner") {
    DerivationSpace ds = derivations(fixtures::t2());
    CHECK(ds.dim() == 2);
    CHECK(ds.inner_dim() == 2);
    CHECK(ds.outer_dim() == 0);
  }
  SECTION("dual numbers have one outer derivation") {
    DerivationSpace ds = derivations(fixtures::dual());
    CHECK(ds.dim() == 1);
    CHECK(ds.inner_dim() == 0);
    CHECK(ds.outer_dim() == 1);
  }
}

TEST_CASE("ad has kernel exactly the center") {
  for (const auto& [name, alg] : fixtures::all()) {
    INFO(name);
    DerivationSpace ds = derivations(alg);
    Subspace z = center(alg);
    CHECK(ds.inner_dim() == alg.dim - z.dim());
    for (const Vec& zb : z.basis()) CHECK(ad(alg, zb).is_zero());
  }
}

TEST_CASE("derivation space structure invariants") {
  for (const auto& [name, alg] : fixtures::all()) {
    INFO(name);
    Context ctx = make_context(alg);
    const size_t d = ctx.n_der();
    for (size_t i = 0; i < d; ++i) {
      // every derivation kills the unit and preserves the center
      CHECK(is_zero_vec(ctx.der_mats[i] * alg.unit));
      for (const Vec& z : ctx.center_basis.basis())
        CHECK(ctx.center_basis.contains(ctx.der_mats[i] * z));
      // bracket closure
      for (size_t j = 0; j < d; ++j) {
        Mat br = bracket(ctx.der_mats[i], ctx.der_mats[j]);
        CHECK(ctx.der.all.contains(br.flatten()));
        // antisymmetry spot check
        CHECK(br == Scalar(-1) * bracket(ctx.der_mats[j], ctx.der_mats[i]));
        // Leibniz invariant of the bracket
        for (size_t p = 0; p < alg.dim; ++p)
          for (size_t q = 0; q < alg.dim; ++q) {
            Vec ab = alg.mul[p][q];
            Vec lhs = br * ab;
            Vec rhs = alg.multiply(br * alg.basis_vec(p), alg.basis_vec(q)) +
                      alg.multiply(alg.basis_vec(p), br * alg.basis_vec(q));
            CHECK(lhs == rhs);
          }
      }
      // z*X is again a derivation
      for (const Vec& z : ctx.center_basis.basis())
        CHECK(ctx.der.all.contains((alg.left_mult(z) * ctx.der_mats[i]).flatten()));
    }
  }
}

TEST_CASE("bracket values in m2") {
  Algebra a = fixtures::m2();
  Vec h = a.basis_vec(E11) - a.basis_vec(E22);
  Vec e = a.basis_vec(E12);
  Mat lhs = bracket(ad(a, h), ad(a, e));
  CHECK(lhs == ad(a, Scalar(2) * e));
  CHECK(bracket(ad(a, h), ad(a, h)).is_zero());
}

TEST_CASE("derivation star") {
  Algebra a = fixtures::m2();
  SECTION("ad(x)* = ad(-x*)") {
    for (size_t i = 0; i < a.dim; ++i) {
      Mat x = ad(a, a.basis_vec(i));
      Vec minus_star = Scalar(-1) * a.star(a.basis_vec(i));
      CHECK(derivation_star(a, x) == ad(a, minus_star));
    }
  }
  SECTION("ad(i*e11) is a real derivation") {
    Vec v = Scalar::i() * a.basis_vec(E11);
    Mat x = ad(a, v);
    CHECK(derivation_star(a, x) == x);
  }
  SECTION("star is involutive and a Lie-algebra map") {
    Context ctx = make_context(a);
    for (size_t i = 0; i < ctx.n_der(); ++i) {
      Mat xi = ctx.der_mats[i];
      CHECK(derivation_star(a, derivation_star(a, xi)) == xi);
      for (size_t j = 0; j < ctx.n_der(); ++j) {
        Mat xj = ctx.der_mats[j];
        CHECK(derivation_star(a, bracket(xi, xj)) ==
              bracket(derivation_star(a, xi), derivation_star(a, xj)));
      }
    }
  }
  SECTION("no involution is an unsupported operation") {
    Algebra k2 = fixtures::k2();
    CHECK_THROWS_AS(derivation_star(k2, Mat::identity(2)),
                    unsupported_operation);
  }
}

TEST_CASE("class Cinf0 membership") {
  auto check = [](const Algebra& a) {
    return is_class_cinf0(a, derivations(a));
  };
  CHECK(check(fixtures::m2()));
  CHECK_FALSE(check(fixtures::k2()));
  CHECK(check(fixtures::dual()));
  CHECK(check(fixtures::t2()));
  CHECK(check(fixtures::m2c2()));
}

TEST_CASE("derivation action on the center") {
  SECTION("always zero on the unit") {
    Algebra a = fixtures::m2();
    Context ctx = make_context(a);
    for (const Mat& d : ctx.der_mats)
      CHECK(derivation_action_on_center(a, ctx.center_basis, d).is_zero());
  }
  SECTION("dual numbers: eps d/deps maps eps to eps") {
    Algebra a = fixtures::dual();
    Context ctx = make_context(a);
    REQUIRE(ctx.n_der() == 1);
    Mat act = derivation_action_on_center(a, ctx.center_basis, ctx.der_mats[0]);
    // The center is all of A; the action must equal the derivation itself
    // expressed in the center basis.
    for (size_t k = 0; k < ctx.center_basis.dim(); ++k) {
      Vec img = zero_vec(a.dim);
      for (size_t r = 0; r < ctx.center_basis.dim(); ++r)
        add_scaled(img, act(r, k), ctx.center_basis.basis()[r]);
      CHECK(img == ctx.der_mats[0] * ctx.center_basis.basis()[k]);
    }
    CHECK_FALSE(act.is_zero());
    CHECK(act * act == act);  // eps d/deps is idempotent on span{1, eps}
  }
}
