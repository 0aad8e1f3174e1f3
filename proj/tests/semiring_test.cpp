#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <limits>
#include <random>

#include "doctest.h"
#include "taa/errors.hpp"
#include "taa/semiring.hpp"

using namespace taa;

namespace {

bool near(double x, double y, double tol = 1e-9) {
  return std::abs(x - y) <= tol * std::max({1.0, std::abs(x), std::abs(y)});
}

}  // namespace

TEST_CASE("real semiring laws hold on 1000 random triples") {
  const Semiring& sr = real_semiring();
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> val(-50.0, 50.0);
  for (int i = 0; i < 1000; ++i) {
    double a = val(rng), b = val(rng), c = val(rng);
    CHECK(near(sr.add(sr.add(a, b), c), sr.add(a, sr.add(b, c))));
    CHECK(near(sr.add(a, b), sr.add(b, a)));
    CHECK(near(sr.mul(sr.mul(a, b), c), sr.mul(a, sr.mul(b, c))));
    CHECK(near(sr.mul(a, sr.add(b, c)), sr.add(sr.mul(a, b), sr.mul(a, c))));
    CHECK(sr.add(a, sr.zero()) == a);
    CHECK(sr.mul(a, sr.one()) == a);
    CHECK(sr.mul(a, sr.zero()) == 0.0);
  }
}

TEST_CASE("real semiring order is monotone") {
  const Semiring& sr = real_semiring();
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> val(-50.0, 50.0);
  std::uniform_real_distribution<double> nonneg(0.0, 50.0);
  for (int i = 0; i < 1000; ++i) {
    double a = val(rng), b = val(rng), c = nonneg(rng);
    if (sr.compare(a, b) == Ordering::Greater) std::swap(a, b);
    // a <= b from here on
    CHECK(sr.compare(sr.add(a, c), sr.add(b, c)) != Ordering::Greater);
    CHECK(sr.compare(sr.mul(a, c), sr.mul(b, c)) != Ordering::Greater);
    CHECK(sr.compare(sr.mul(c, a), sr.mul(c, b)) != Ordering::Greater);
  }
}

TEST_CASE("real semiring basics") {
  const Semiring& sr = real_semiring();
  CHECK(sr.add(2.0, 3.0) == 5.0);
  CHECK(sr.mul(2.0, 3.0) == 6.0);
  CHECK(sr.compare(1.0, 2.0) == Ordering::Less);
  CHECK(sr.compare(2.0, 2.0) == Ordering::Equal);
  CHECK(sr.compare(3.0, 2.0) == Ordering::Greater);
}

TEST_CASE("real semiring rejects NaN") {
  const Semiring& sr = real_semiring();
  double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(sr.add(inf, -inf), ValueError);
  CHECK_THROWS_AS(sr.mul(inf, 0.0), ValueError);
  CHECK_THROWS_AS(sr.check_value(std::nan("")), ValueError);
  CHECK_NOTHROW(sr.check_value(1.5));
}

TEST_CASE("boolean semiring laws hold exhaustively and on random triples") {
  const Semiring& sr = boolean_semiring();
  for (double a : {0.0, 1.0})
    for (double b : {0.0, 1.0})
      for (double c : {0.0, 1.0}) {
        CHECK(sr.add(sr.add(a, b), c) == sr.add(a, sr.add(b, c)));
        CHECK(sr.add(a, b) == sr.add(b, a));
        CHECK(sr.mul(sr.mul(a, b), c) == sr.mul(a, sr.mul(b, c)));
        CHECK(sr.mul(a, sr.add(b, c)) == sr.add(sr.mul(a, b), sr.mul(a, c)));
        CHECK(sr.add(a, sr.zero()) == a);
        CHECK(sr.mul(a, sr.one()) == a);
        CHECK(sr.mul(a, sr.zero()) == 0.0);
        // monotonicity
        if (sr.compare(a, b) != Ordering::Greater) {
          CHECK(sr.compare(sr.add(a, c), sr.add(b, c)) != Ordering::Greater);
          CHECK(sr.compare(sr.mul(a, c), sr.mul(b, c)) != Ordering::Greater);
        }
      }
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    double a = static_cast<double>(rng() % 2);
    double b = static_cast<double>(rng() % 2);
    CHECK(sr.add(a, b) == ((a != 0.0 || b != 0.0) ? 1.0 : 0.0));
    CHECK(sr.mul(a, b) == ((a != 0.0 && b != 0.0) ? 1.0 : 0.0));
  }
}

TEST_CASE("boolean semiring basics and domain") {
  const Semiring& sr = boolean_semiring();
  CHECK(sr.add(1.0, 1.0) == 1.0);  // OR saturates
  CHECK(sr.mul(1.0, 0.0) == 0.0);
  CHECK(sr.compare(1.0, 0.0) == Ordering::Greater);
  CHECK_THROWS_AS(sr.check_value(0.5), ValueError);
  CHECK_THROWS_AS(sr.add(2.0, 0.0), ValueError);
}

TEST_CASE("semiring registry") {
  CHECK(find_semiring("real") == &real_semiring());
  CHECK(find_semiring("boolean") == &boolean_semiring());
  CHECK(find_semiring("no-such") == nullptr);
}
