#include <doctest.h>

#include <random>

#include "hopfdual/scalar.hpp"

using hopfdual::FieldSpec;
using hopfdual::ModP;
using hopfdual::Rational;

TEST_CASE("rational canonical form") {
  CHECK(Rational(2, 4).to_string() == "1/2");
  CHECK(Rational(3, -6).to_string() == "-1/2");
  CHECK(Rational(4, 2).to_string() == "2");
  CHECK(Rational(0, -5).to_string() == "0");
  CHECK(Rational::parse("-6/8") == Rational(-3, 4));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK_THROWS_AS(Rational::parse("1/0"), hopfdual::ScalarParseError);
  CHECK_THROWS_AS(Rational::parse("x"), hopfdual::ScalarParseError);
  CHECK_THROWS_AS(Rational::parse(""), hopfdual::ScalarParseError);
}

TEST_CASE("rational arithmetic agrees with gmp") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long long> big(-(1LL << 62), 1LL << 62);
  std::uniform_int_distribution<long long> small(-9, 9);
  for (int trial = 0; trial < 2000; ++trial) {
    auto draw = [&](bool wide) {
      long long n = wide ? big(rng) : small(rng);
      long long d = wide ? big(rng) : small(rng);
      if (d == 0) d = 1;
      return std::pair{n, d};
    };
    auto [an, ad] = draw(trial % 2 == 0);
    auto [bn, bd] = draw(trial % 3 == 0);
    const Rational a(an, ad), b(bn, bd);
    const mpq_class qa = mpq_class(mpz_class(std::to_string(an)), mpz_class(std::to_string(ad)));
    const mpq_class qb = mpq_class(mpz_class(std::to_string(bn)), mpz_class(std::to_string(bd)));
    mpq_class qa_c = qa, qb_c = qb;
    qa_c.canonicalize();
    qb_c.canonicalize();
    CHECK((a + b).to_mpq() == mpq_class(qa_c + qb_c));
    CHECK((a - b).to_mpq() == mpq_class(qa_c - qb_c));
    CHECK((a * b).to_mpq() == mpq_class(qa_c * qb_c));
    if (!b.is_zero()) CHECK((a / b).to_mpq() == mpq_class(qa_c / qb_c));
    CHECK(((a + b) - b) == a);
    CHECK((a < b) == (qa_c < qb_c));
  }
}

TEST_CASE("rational spills to big values and demotes back") {
  Rational x(1LL << 62);
  Rational y = x * x * x;
  CHECK(y.is_integer());
  CHECK(y.to_string() == mpz_class(mpz_class(1) << 186).get_str());
  Rational z = y / (x * x);
  CHECK(z == x);
  CHECK(z.to_string() == std::to_string(1LL << 62));
  CHECK(Rational::parse(y.to_string()) == y);
}

TEST_CASE("field spec parsing") {
  CHECK(FieldSpec::parse("q") == FieldSpec::rationals());
  CHECK(FieldSpec::parse("gf:7").modulus == 7);
  CHECK(FieldSpec::parse("gf:7").to_string() == "gf:7");
  CHECK_THROWS(FieldSpec::parse("gf:9"));
  CHECK_THROWS(FieldSpec::parse("gf:"));
  CHECK_THROWS(FieldSpec::parse("r"));
}

TEST_CASE("prime field residues") {
  const std::uint64_t p = 7;
  CHECK(ModP(-1, p).to_string() == "6");
  CHECK(ModP(3, p).inverse() == ModP(5, p));
  for (long long v = 1; v < 7; ++v) CHECK((ModP(v, p) * ModP(v, p).inverse()).is_one());
  CHECK(ModP(0, p) == ModP(0));
  CHECK(ModP(1, p) + ModP(6) == ModP(0, p));
  CHECK_THROWS(ModP(1, 5) + ModP(1, 7));
  CHECK_THROWS(ModP(0, p).inverse());
  CHECK(ModP::parse("4", p) == ModP(4, p));
  CHECK_THROWS_AS(ModP::parse("9", p), hopfdual::ScalarParseError);
  CHECK_THROWS_AS(ModP::parse("1/2", p), hopfdual::ScalarParseError);
}

TEST_CASE("prime field inverses agree with brute force") {
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 101ULL, 65521ULL}) {
    for (std::uint64_t v = 1; v < std::min<std::uint64_t>(p, 200); ++v) {
      const ModP x(static_cast<long long>(v), p);
      const std::uint64_t inv = x.inverse().residue();
      CHECK((v * inv) % p == 1);
    }
  }
}
