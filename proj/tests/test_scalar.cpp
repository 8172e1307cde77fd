#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "spbw/scalar.hpp"

using namespace spbw;

TEST_CASE("rational arithmetic is exact", "[scalar]") {
  FieldSpec q;
  Scalar a = Scalar::parse(q, "2/3");
  Scalar b = Scalar::parse(q, "-5/7");
  CHECK((a + b).to_string() == "-1/21");
  CHECK((a * b).to_string() == "-10/21");
  CHECK((a - a).is_zero());
  CHECK((a / b).to_string() == "-14/15");
  CHECK(a.inverse().to_string() == "3/2");
}

TEST_CASE("rational parsing keeps canonical form", "[scalar]") {
  FieldSpec q;
  CHECK(Scalar::parse(q, "4/6").to_string() == "2/3");
  CHECK(Scalar::parse(q, "-4/-6").to_string() == "2/3");
  CHECK(Scalar::parse(q, "0/5").is_zero());
  CHECK(Scalar::parse(q, "7/1").to_string() == "7");
  CHECK_THROWS_AS(Scalar::parse(q, "1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Scalar::parse(q, "x"), std::invalid_argument);
}

TEST_CASE("prime field arithmetic wraps and inverts", "[scalar]") {
  FieldSpec f{7};
  Scalar a = Scalar::from_long(f, 5);
  Scalar b = Scalar::from_long(f, 4);
  CHECK((a + b).to_string() == "2");
  CHECK((a * b).to_string() == "6");
  CHECK((-a).to_string() == "2");
  CHECK(a.inverse().to_string() == "3");  // 5 * 3 = 15 = 1 mod 7
  CHECK((a / b).to_string() == "3");      // 5 * 4^-1 = 5 * 2 = 10 = 3
  CHECK(Scalar::from_long(f, 7).is_zero());
  CHECK(Scalar::from_long(f, -1).to_string() == "6");
}

TEST_CASE("prime field rejects fractions with non-invertible denominator", "[scalar]") {
  FieldSpec f{7};
  CHECK(Scalar::parse(f, "3/2").to_string() == "5");  // 3 * 4 = 12 = 5 mod 7
  CHECK_THROWS_AS(Scalar::parse(f, "1/7"), std::invalid_argument);
}

TEST_CASE("field spec validation", "[scalar]") {
  CHECK_FALSE(validate_field(FieldSpec{}));
  CHECK_FALSE(validate_field(FieldSpec{2}));
  CHECK_FALSE(validate_field(FieldSpec{101}));
  CHECK(validate_field(FieldSpec{1}));
  CHECK(validate_field(FieldSpec{6}));
  CHECK(validate_field(FieldSpec{91}));  // 7 * 13
}

TEST_CASE("mixed-field operations are rejected", "[scalar]") {
  FieldSpec q;
  FieldSpec f{5};
  Scalar a = Scalar::one(q);
  Scalar b = Scalar::one(f);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(a == b, std::invalid_argument);
}

TEST_CASE("division by zero throws", "[scalar]") {
  FieldSpec q;
  CHECK_THROWS_AS(Scalar::one(q) / Scalar::zero(q), std::domain_error);
  CHECK_THROWS_AS(Scalar::zero(q).inverse(), std::domain_error);
}

TEST_CASE("field axioms hold on random samples", "[scalar][property]") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 30);
  auto rand_q = [&](const FieldSpec& f) {
    Scalar d = Scalar::from_long(f, den(rng));
    if (d.is_zero()) d = Scalar::one(f);
    return Scalar::from_long(f, num(rng)) / d;
  };
  FieldSpec fields[] = {FieldSpec{}, FieldSpec{13}};
  for (const auto& f : fields) {
    for (int i = 0; i < 200; ++i) {
      Scalar a = rand_q(f), b = rand_q(f), c = rand_q(f);
      CHECK(a + b == b + a);
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a * b) * c == a * (b * c));
      if (!a.is_zero()) CHECK(a * a.inverse() == Scalar::one(f));
    }
  }
}
