#include <catch2/catch_amalgamated.hpp>

#include "ncg/scalar.hpp"

using ncg::Scalar;

TEST_CASE("scalar arithmetic is exact and canonical") {
  Scalar a(1, 3), b(1, 6);
  CHECK(a + b == Scalar(1, 2));
  CHECK(a - a == Scalar(0));
  CHECK(Scalar(2, 4) == Scalar(1, 2));
  CHECK((a * b).str() == "1/18");
  CHECK((a / b) == Scalar(2));
  CHECK_THROWS_AS(a / Scalar(0), std::domain_error);
}

TEST_CASE("gaussian rational arithmetic") {
  Scalar i = Scalar::i();
  CHECK(i * i == Scalar(-1));
  Scalar z(mpq_class(1, 2), mpq_class(-3, 4));
  CHECK(z.conj() == Scalar(mpq_class(1, 2), mpq_class(3, 4)));
  CHECK(z * z.conj() == Scalar(mpq_class(1, 4) + mpq_class(9, 16)));
  CHECK(z * z.inverse() == Scalar(1));
  CHECK((z.conj().conj()) == z);
}

TEST_CASE("a + (-a) = 0 for sampled scalars") {
  for (long p = -6; p <= 6; ++p)
    for (long q = 1; q <= 4; ++q) {
      Scalar a(p, q);
      Scalar b = a + Scalar(mpq_class(q, 7), mpq_class(p, 5)) * Scalar::i();
      CHECK((a + (-a)).is_zero());
      CHECK((b + (-b)).is_zero());
    }
}

TEST_CASE("string round-trip is bit-exact") {
  std::vector<std::string> forms = {"0",         "-3",        "7/2",
                                    "-7/2",      "0+1*i",     "1/2-3/4*i",
                                    "-1/2-3/4*i", "5+2/7*i"};
  for (const auto& s : forms) {
    Scalar v = Scalar::parse(s);
    CHECK(v.str() == s);
    CHECK(Scalar::parse(v.str()) == v);
  }
  // Non-canonical input parses to the canonical value.
  CHECK(Scalar::parse("2/4") == Scalar(1, 2));
  CHECK(Scalar::parse("2/4").str() == "1/2");
  CHECK_THROWS_AS(Scalar::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Scalar::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Scalar::parse("x"), std::invalid_argument);
}
