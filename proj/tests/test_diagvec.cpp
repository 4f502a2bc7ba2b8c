#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace mdk;
using mdk::testing::Q;

namespace {

DiagVec<Q> vec(std::initializer_list<long> xs) {
  std::vector<Q> coords;
  for (long x : xs) coords.emplace_back(x);
  return DiagVec<Q>(std::move(coords));
}

DiagVec<Q> random_vec(std::mt19937_64& rng, std::size_t n) {
  auto v = DiagVec<Q>::zeros(n);
  for (std::size_t j = 0; j <= n; ++j) v[j] = mdk::testing::random_rational(rng);
  return v;
}

}  // namespace

TEST_CASE("tau shifts subscripts with zero extension") {
  CHECK(tau(vec({1, 2, 3}), 1) == vec({2, 3, 0}));
  CHECK(tau(vec({5, 6, 7}), 0) == vec({5, 6, 7}));
  CHECK(tau(vec({1, 2, 3}), -1) == vec({0, 1, 2}));
  CHECK(tau(vec({1, 2, 3}), 4) == vec({0, 0, 0}));
  CHECK(tau(vec({1, 2, 3}), -3) == vec({0, 0, 0}));
}

TEST_CASE("star product") {
  CHECK(star(vec({1, 2, 3}), vec({4, 5, 6})) == vec({4, 10, 18}));
  CHECK(star(vec({7, -1, 2}), ones<Q>(2)) == vec({7, -1, 2}));
  CHECK(star(ones<Q>(2), vec({3, 4, 5})) == vec({3, 4, 5}));
  CHECK_THROWS_AS(star(vec({1, 2}), vec({1, 2, 3})), ShapeMismatch);
}

TEST_CASE("ones") {
  CHECK(ones<Q>(2) == vec({1, 1, 1}));
  CHECK(tau(ones<Q>(2), 1) == vec({1, 1, 0}));
}

TEST_CASE("add") {
  CHECK(add(vec({1, 2}), vec({3, 4})) == vec({4, 6}));
  CHECK(add(vec({1, 2}), DiagVec<Q>::zeros(1)) == vec({1, 2}));
  CHECK(add(vec({1, -1}), vec({-1, 1})) == vec({0, 0}));
  CHECK_THROWS_AS(add(vec({1}), vec({1, 2})), ShapeMismatch);
}

TEST_CASE("zero-extended read") {
  const auto v = vec({4, 5});
  CHECK(v.at(-1) == Q{});
  CHECK(v.at(0) == Q(4));
  CHECK(v.at(2) == Q{});
}

TEST_CASE("shift calculus identities on random vectors") {
  std::mt19937_64 rng(11);
  for (std::size_t n : {1u, 2u, 5u, 9u}) {
    const auto sn = static_cast<std::ptrdiff_t>(n);
    const auto one = ones<Q>(n);
    for (int trial = 0; trial < 10; ++trial) {
      const auto v = random_vec(rng, n);
      const auto w = random_vec(rng, n);
      const auto u = random_vec(rng, n);
      for (std::ptrdiff_t i = -(sn + 1); i <= sn + 1; ++i) {
        CAPTURE(i);
        REQUIRE(tau(star(v, w), i) == star(tau(v, i), tau(w, i)));
        // The unit vector masks exactly the coordinates tau^i can reach.
        REQUIRE(star(tau(one, i), tau(v, i)) == tau(v, i));
        REQUIRE(star(tau(one, i), v) == tau(tau(v, -i), i));
        for (std::ptrdiff_t j = -(sn + 1); j <= sn + 1; ++j) {
          CAPTURE(j);
          // Exponents add outright when no coordinate is pushed out and back
          // in (same signs); in general the result is masked by tau^i 1.
          if ((i >= 0) == (j >= 0)) REQUIRE(tau(tau(v, j), i) == tau(v, i + j));
          REQUIRE(tau(tau(v, j), i) == star(tau(one, i), tau(v, i + j)));
        }
      }
      REQUIRE(star(v, w) == star(w, v));
      REQUIRE(star(star(v, w), u) == star(v, star(w, u)));
      REQUIRE(star(v, add(w, u)) == add(star(v, w), star(v, u)));
      REQUIRE(add(v, w) == add(w, v));
    }
  }
}

TEST_CASE("unit-vector remark holds for vectors with the matching zero pattern") {
  // tau^1 1 * v equals tau^1 v only when v is itself a shifted vector.
  const auto v = vec({1, 2, 3});
  CHECK(star(tau(ones<Q>(2), 1), v) == vec({1, 2, 0}));
  CHECK(tau(v, 1) == vec({2, 3, 0}));
  const auto shifted = tau(v, 1);
  CHECK(star(tau(ones<Q>(2), 1), shifted) == tau(v, 1));
  // Negative exponent: the mask zeroes the first coordinate without shifting.
  CHECK(star(tau(ones<Q>(2), -1), v) == vec({0, 2, 3}));
  CHECK(tau(tau(v, 1), -1) == vec({0, 2, 3}));
}
