#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "burnside/errors.hpp"
#include "burnside/scalar.hpp"

using namespace burnside;

namespace {

Scalar random_scalar(const CoeffRing& ring, std::mt19937& rng) {
  std::uniform_int_distribution<long> d(-40, 40);
  switch (ring.kind) {
    case RingKind::Gaussian:
      return Scalar::gaussian(d(rng), d(rng));
    case RingKind::Rationals: {
      long den = 0;
      while (den == 0) den = d(rng);
      return Scalar::rational(mpq_class(mpz_class(d(rng)), mpz_class(den)));
    }
    default:
      return Scalar(ring, d(rng));
  }
}

}  // namespace

TEST_CASE("ring parsing round trip") {
  CHECK(CoeffRing::parse("Z") == CoeffRing::integers());
  CHECK(CoeffRing::parse("Z/6").modulus == 6);
  CHECK(CoeffRing::parse("Zi") == CoeffRing::gaussian());
  CHECK(CoeffRing::parse("Q") == CoeffRing::rationals());
  CHECK(CoeffRing::parse("Z/6").to_string() == "Z/6");
  CHECK_THROWS_AS(CoeffRing::parse("F7"), ParseError);
}

TEST_CASE("canonical forms") {
  CoeffRing z6 = CoeffRing::residues(6);
  CHECK(Scalar(z6, -1) == Scalar(z6, 5));
  CHECK(Scalar(z6, 12).is_zero());
  CHECK(Scalar::rational(mpq_class(2, 4)) == Scalar::rational(mpq_class(1, 2)));
  CHECK(Scalar::rational(mpq_class(mpz_class(-3), mpz_class(-3))).is_one());
  CHECK(Scalar::rational(mpq_class(mpz_class(3), mpz_class(-6))).to_string() == "-1/2");
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(41);
  for (const CoeffRing& ring : {CoeffRing::integers(), CoeffRing::residues(6),
                                CoeffRing::gaussian(), CoeffRing::rationals()}) {
    Scalar zero(ring);
    Scalar one(ring, 1);
    for (int trial = 0; trial < 30; ++trial) {
      Scalar a = random_scalar(ring, rng);
      Scalar b = random_scalar(ring, rng);
      Scalar c = random_scalar(ring, rng);
      CHECK(a + b == b + a);
      CHECK((a + b) + c == a + (b + c));
      CHECK(a + zero == a);
      CHECK((a + (-a)).is_zero());
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * one == a);
      CHECK(a * (b + c) == a * b + a * c);
    }
  }
}

TEST_CASE("gaussian multiplication") {
  Scalar i = Scalar::gaussian(0, 1);
  CHECK(i * i == Scalar::gaussian(-1, 0));
  CHECK((Scalar::gaussian(2, 1) * Scalar::gaussian(2, -1)) == Scalar::gaussian(5, 0));
}

TEST_CASE("exact division") {
  CHECK(Scalar(CoeffRing::integers(), 12).divide_exact(Scalar(CoeffRing::integers(), -4)) ==
        Scalar(CoeffRing::integers(), -3));
  CHECK_THROWS_AS(Scalar(CoeffRing::integers(), 5).divide_exact(Scalar(CoeffRing::integers(), 2)),
                  NotIntegral);
  CHECK(Scalar::gaussian(5, 0).divide_exact(Scalar::gaussian(2, 1)) == Scalar::gaussian(2, -1));
  CHECK_THROWS_AS(Scalar::gaussian(1, 1).divide_exact(Scalar::gaussian(2, 0)), NotIntegral);
  CHECK(Scalar::rational(mpq_class(1, 3)).divide_exact(Scalar::rational(mpq_class(2, 1))) ==
        Scalar::rational(mpq_class(1, 6)));
}

TEST_CASE("integer values and coefficient extension") {
  CHECK(Scalar(CoeffRing::integers(), -7).integer_value() == -7);
  CHECK(Scalar::gaussian(4, 0).integer_value() == 4);
  CHECK_THROWS_AS(Scalar::gaussian(0, 1).integer_value(), NotIntegral);
  CHECK_THROWS_AS(Scalar::rational(mpq_class(1, 2)).integer_value(), NotIntegral);

  Scalar five(CoeffRing::integers(), 5);
  CHECK(extend_scalar(five, CoeffRing::residues(3)) == Scalar(CoeffRing::residues(3), 2));
  CHECK(extend_scalar(five, CoeffRing::gaussian()) == Scalar::gaussian(5, 0));
  CHECK(extend_scalar(five, CoeffRing::rationals()) == Scalar::rational(5));
  CHECK(extend_scalar(Scalar(CoeffRing::residues(6), 5), CoeffRing::residues(3)) ==
        Scalar(CoeffRing::residues(3), 2));
  CHECK_THROWS_AS(extend_scalar(Scalar::gaussian(1, 1), CoeffRing::integers()), RingMismatch);
}
