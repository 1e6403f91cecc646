#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "d2hopf/fields.hpp"

using namespace d2hopf;

TEST_CASE("rational field arithmetic and parsing") {
  RationalField f;
  auto a = f.parse("3/2");
  auto b = f.parse("-1/2");
  CHECK(f.to_string(f.add(a, b)) == "1");
  CHECK(f.to_string(f.mul(a, b)) == "-3/4");
  CHECK(f.to_string(f.sub(a, b)) == "2");
  CHECK(f.to_string(f.div(a, b)) == "-3");
  CHECK(f.to_string(f.neg(a)) == "-3/2");
  CHECK(f.to_string(f.inv(a)) == "2/3");
  CHECK(f.is_zero(f.sub(a, a)));
  CHECK(f.eq(f.parse("4/6"), f.parse("2/3")));
  CHECK(f.to_string(f.from_long(-7)) == "-7");
  CHECK(f.name() == "rational");
}

TEST_CASE("rational parse rejects malformed literals") {
  RationalField f;
  CHECK_THROWS_AS(f.parse("1/0"), ParseError);
  CHECK_THROWS_AS(f.parse("abc"), ParseError);
  CHECK_THROWS_AS(f.parse(""), ParseError);
  CHECK_THROWS_AS(f.parse("1.5"), ParseError);
  CHECK_THROWS_AS(f.div(f.one(), f.zero()), std::domain_error);
}

TEST_CASE("prime field arithmetic mod 7") {
  PrimeField f(7);
  CHECK(f.add(5, 4) == 2);
  CHECK(f.mul(3, 5) == 1);
  CHECK(f.inv(3) == 5);
  CHECK(f.neg(2) == 5);
  CHECK(f.sub(1, 3) == 5);
  // 1/2 = 4 mod 7 since 2*4 = 8 = 1.
  CHECK(f.parse("1/2") == 4);
  CHECK(f.parse("-1") == 6);
  CHECK(f.parse("100000000000000000003") == f.parse("100000000000000000003"));
  CHECK(f.to_string(4) == "4");
  CHECK(f.name() == "gfp:7");
}

TEST_CASE("prime field modulus validation") {
  CHECK_THROWS_AS(PrimeField(2), ParseError);
  CHECK_THROWS_AS(PrimeField(4), ParseError);
  CHECK_THROWS_AS(PrimeField(1), ParseError);
  CHECK_THROWS_AS(PrimeField(uint64_t(1) << 31), ParseError);
  CHECK_NOTHROW(PrimeField(3));
  CHECK_NOTHROW(PrimeField(2147483647));  // largest admissible prime
  PrimeField f5(5);
  CHECK_THROWS_AS(f5.parse("2/5"), ParseError);   // denominator vanishes mod 5
  CHECK_THROWS_AS(f5.inv(0), std::domain_error);
}

TEMPLATE_TEST_CASE("field axioms hold on random elements", "", RationalField,
                   PrimeField) {
  auto make = [] {
    if constexpr (std::is_same_v<TestType, PrimeField>)
      return PrimeField(101);
    else
      return RationalField{};
  };
  auto f = make();
  std::mt19937 rng(12345);
  std::uniform_int_distribution<long> d(-50, 50);
  for (int iter = 0; iter < 200; ++iter) {
    auto a = f.from_long(d(rng));
    auto b = f.from_long(d(rng));
    auto c = f.from_long(d(rng));
    CHECK(f.eq(f.add(a, b), f.add(b, a)));
    CHECK(f.eq(f.mul(a, b), f.mul(b, a)));
    CHECK(f.eq(f.add(f.add(a, b), c), f.add(a, f.add(b, c))));
    CHECK(f.eq(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c))));
    CHECK(f.eq(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c))));
    CHECK(f.eq(f.add(a, f.neg(a)), f.zero()));
    CHECK(f.eq(f.mul(a, f.one()), a));
    if (!f.is_zero(a)) CHECK(f.eq(f.mul(a, f.inv(a)), f.one()));
    CHECK(f.eq(f.parse(f.to_string(a)), a));
  }
}

TEST_CASE("primality helper") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(3));
  CHECK(is_prime_u64(5));
  CHECK(is_prime_u64(2147483647));
  CHECK_FALSE(is_prime_u64(1));
  CHECK_FALSE(is_prime_u64(0));
  CHECK_FALSE(is_prime_u64(9));
  CHECK_FALSE(is_prime_u64(1000000016000000063ULL));  // 1000000007^2
}
