#include <doctest.h>

#include <functional>
#include <random>

#include "support.hpp"

using namespace mdk;
using mdk::reference::dense_det;
using mdk::reference::dense_inv;
using mdk::reference::dense_mul;
using mdk::testing::q;
using mdk::testing::Q;

namespace {

using KT = KTridiagonal<Q>;

KT kt(std::size_t n, std::size_t k, std::vector<long> a, std::vector<long> b, std::vector<long> c) {
  const auto fill = [n](const std::vector<long>& xs) {
    auto v = DiagVec<Q>::zeros(n);
    for (std::size_t j = 0; j < xs.size(); ++j) v[j] = Q(xs[j]);
    return v;
  };
  return KT{n, k, fill(a), fill(b), fill(c)};
}

KT fixture() { return kt(2, 2, {1}, {2, 3, 4}, {1}); }

DenseMatrix<Q> dense(std::initializer_list<std::initializer_list<Q>> rows) { return DenseMatrix<Q>(rows); }

}  // namespace

TEST_CASE("k-tridiagonal view") {
  const auto m = fixture().to_matrix();
  CHECK(is_k_tridiagonal(m));
  CHECK(KT::from_matrix(m).b == fixture().b);
  const MDMatrix<Q> penta(4, 1, {{2, {Q(1), Q(0), Q(0), Q(0), Q(0)}}});
  CHECK_FALSE(is_k_tridiagonal(penta));
  CHECK_THROWS_AS(KT::from_matrix(penta), PreconditionViolated);
}

TEST_CASE("determinant examples") {
  CHECK(det_k_tridiagonal(fixture()) == Q(21));
  CHECK(det_k_tridiagonal(kt(2, 2, {}, {2, 3, 4}, {})) == Q(24));
  // f_0 = 0: the quotient form is undefined, the continuant is not.
  const auto zero_pivot = kt(2, 2, {1}, {0, 1, 0}, {1});
  CHECK(det_k_tridiagonal(zero_pivot) == Q(-1));
  CHECK(dense_det(to_dense(zero_pivot.to_matrix())) == Q(-1));
  CHECK_FALSE(det_k_tridiagonal_quotient(zero_pivot).has_value());
  CHECK(det_k_tridiagonal_quotient(fixture()) == Q(21));
}

TEST_CASE("determinant matches Bareiss, including planted zero pivots") {
  std::mt19937_64 rng(41);
  for (std::size_t n = 1; n <= 12; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      for (int trial = 0; trial < 8; ++trial) {
        const double zeros = trial < 4 ? 0.0 : 0.4;
        const auto t = mdk::testing::random_k_tridiagonal<Q>(
            n, k, [&] { return mdk::testing::sparse_rational(rng, zeros); });
        const auto want = dense_det(to_dense(t.to_matrix()));
        REQUIRE(det_k_tridiagonal(t) == want);
        if (const auto quotient = det_k_tridiagonal_quotient(t)) REQUIRE(*quotient == want);
      }
    }
  }
}

TEST_CASE("nonsingularity conditions") {
  const auto ok = is_nonsingular_thm2(fixture());
  CHECK(ok.nonsingular);
  CHECK_FALSE(ok.witness.has_value());

  const auto middle = is_nonsingular_thm2(kt(2, 2, {}, {1, 0, 1}, {}));
  CHECK_FALSE(middle.nonsingular);
  REQUIRE(middle.witness.has_value());
  CHECK(middle.witness->kind == SingularityWitness::Kind::ZeroMiddlePivot);
  CHECK(middle.witness->j == 1);
  CHECK(middle.witness->describe(2) == "b_1 = 0");

  const auto pair = kt(2, 2, {2}, {2, 1, 3}, {3});
  const auto report = is_nonsingular_thm2(pair);
  CHECK_FALSE(report.nonsingular);
  CHECK(report.witness->kind == SingularityWitness::Kind::ZeroPairMinor);
  CHECK(report.witness->j == 0);
  CHECK(report.witness->describe(2) == "b_0 b_2 - a_0 c_0 = 0");
  CHECK(dense_det(to_dense(pair.to_matrix())) == Q{});

  CHECK_THROWS_AS(is_nonsingular_thm2(kt(4, 2, {}, {1, 1, 1, 1, 1}, {})), PreconditionViolated);
}

TEST_CASE("nonsingularity test is exact for (n, k) = (2, 2)") {
  // a0, b0, b1, b2, c0 over {0, 1, 2}.
  int counted = 0;
  for (int code = 0; code < 243; ++code) {
    int x = code;
    const auto digit = [&x] {
      const long d = x % 3;
      x /= 3;
      return d;
    };
    const long a0 = digit(), b0 = digit(), b1 = digit(), b2 = digit(), c0 = digit();
    const auto t = kt(2, 2, {a0}, {b0, b1, b2}, {c0});
    const bool nonsingular = !dense_det(to_dense(t.to_matrix())).is_zero();
    REQUIRE(is_nonsingular_thm2(t).nonsingular == nonsingular);
    ++counted;
  }
  CHECK(counted == 243);
}

TEST_CASE("closed-form inverse examples") {
  const auto x = inv_thm2(fixture());
  CHECK(*x.diagonal(-1) == DiagVec<Q>{q(-1, 7), Q{}, Q{}});
  CHECK(*x.diagonal(0) == DiagVec<Q>{q(4, 7), q(1, 3), q(2, 7)});
  CHECK(*x.diagonal(1) == DiagVec<Q>{q(-1, 7), Q{}, Q{}});
  CHECK(to_dense(x) == dense({{q(4, 7), Q{}, q(-1, 7)}, {Q{}, q(1, 3), Q{}}, {q(-1, 7), Q{}, q(2, 7)}}));

  const auto diag = inv_thm2(kt(2, 2, {}, {2, 3, 4}, {}));
  CHECK(*diag.diagonal(0) == DiagVec<Q>{q(1, 2), q(1, 3), q(1, 4)});
  CHECK(diag.diagonal(-1) == nullptr);
  CHECK(diag.diagonal(1) == nullptr);

  // b_{k+j} = 0 and b_j = 0: the limit case.
  const auto limit = kt(2, 2, {1}, {0, 5, 0}, {1});
  const auto y = inv_thm2(limit);
  CHECK(*y.diagonal(-1) == DiagVec<Q>{Q(1), Q{}, Q{}});
  CHECK(*y.diagonal(0) == DiagVec<Q>{Q{}, q(1, 5), Q{}});
  CHECK(*y.diagonal(1) == DiagVec<Q>{Q(1), Q{}, Q{}});
  CHECK(to_dense(y) == dense_inv(to_dense(limit.to_matrix())));
}

TEST_CASE("closed-form inverse with an empty middle range (n + 1 = 2k)") {
  const auto t = kt(3, 2, {1, 2}, {3, 1, 4, 1}, {5, 9});
  const auto x = inv_thm2(t);
  const auto a = t.to_matrix();
  CHECK(mul(a, x) == MDMatrix<Q>::identity(3, 2));
  CHECK(mul(x, a) == MDMatrix<Q>::identity(3, 2));
  CHECK(to_dense(x) == dense_inv(to_dense(a)));
}

TEST_CASE("closed-form inverse errors") {
  try {
    (void)inv_thm2(kt(2, 2, {2}, {2, 1, 3}, {3}));
    FAIL("expected SingularMatrix");
  } catch (const SingularMatrix& e) {
    CHECK(std::string(e.what()).find("b_0 b_2 - a_0 c_0 = 0") != std::string::npos);
  }
  CHECK_THROWS_AS(inv_thm2(kt(3, 1, {1, 1, 1}, {1, 1, 1, 1}, {1, 1, 1})), PreconditionViolated);
}

TEST_CASE("closed-form inverse on random instances") {
  std::mt19937_64 rng(77);
  for (std::size_t k = 1; k <= 6; ++k) {
    for (std::size_t n = k; n + 1 <= 2 * k; ++n) {
      for (int trial = 0; trial < 10; ++trial) {
        const auto t = mdk::testing::random_k_tridiagonal<Q>(
            n, k, [&] { return mdk::testing::sparse_rational(rng, 0.2); });
        if (!is_nonsingular_thm2(t).nonsingular) continue;
        const auto a = t.to_matrix();
        const auto x = inv_thm2(t);
        REQUIRE(is_k_tridiagonal(x));
        REQUIRE(mul(a, x) == MDMatrix<Q>::identity(n, k));
        REQUIRE(mul(x, a) == MDMatrix<Q>::identity(n, k));
        REQUIRE(inv_general(a) == x);
      }
    }
  }
}

TEST_CASE("characteristic polynomial examples") {
  CHECK(char_poly(MDMatrix<Q>::identity(2, 1)).coeffs == std::vector<Q>{Q(1), Q(-3), Q(3), Q(-1)});
  CHECK(char_poly(fixture().to_matrix()).coeffs == std::vector<Q>{Q(21), Q(-25), Q(9), Q(-1)});
  CHECK(char_poly(MDMatrix<Q>::zero(1, 1)).coeffs == std::vector<Q>{Q{}, Q{}, Q(1)});
  CHECK_THROWS_AS(char_poly(MDMatrix<FloatScalar>::identity(2, 1)), ModeUnsupported);
}

TEST_CASE("characteristic polynomial invariants and Cayley-Hamilton residual") {
  std::mt19937_64 rng(55);
  for (std::size_t n = 1; n <= 7; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      const auto v = mdk::testing::random_exact_md(rng, n, k);
      const auto nu = char_poly(v).coeffs;
      REQUIRE(nu.size() == n + 2);
      REQUIRE(nu.back() == Q((n + 1) % 2 == 0 ? 1 : -1));
      REQUIRE(nu.front() == dense_det(to_dense(v)));
      auto residual = MDMatrix<Q>::zero(n, k);
      auto power = MDMatrix<Q>::identity(n, k);
      for (const auto& c : nu) {
        residual = add(residual, scale(power, c));
        power = mul(power, v);
      }
      REQUIRE(residual == MDMatrix<Q>::zero(n, k));
    }
  }
}

TEST_CASE("Cayley-Hamilton inverse") {
  const auto a = fixture().to_matrix();
  // -(1/21)(-25 E + 9 A - A^2)
  const auto expected = scale(add(add_identity(scale(a, Q(9)), Q(-25)), scale(mul(a, a), Q(-1))), q(-1, 21));
  const auto x = inv_cayley_hamilton(a);
  CHECK(x == expected);
  CHECK(to_dense(x) == dense({{q(4, 7), Q{}, q(-1, 7)}, {Q{}, q(1, 3), Q{}}, {q(-1, 7), Q{}, q(2, 7)}}));
  CHECK(inv_cayley_hamilton(MDMatrix<Q>::identity(3, 2)) == MDMatrix<Q>::identity(3, 2));
  CHECK_THROWS_AS(inv_cayley_hamilton(kt(2, 2, {2}, {2, 1, 3}, {3}).to_matrix()), SingularMatrix);

  int steps = 0;
  const std::function<void(const MDMatrix<Q>&)> observe = [&](const MDMatrix<Q>& m) {
    ++steps;
    CHECK(mdk::testing::lattice_conforming(to_dense(m), 2));
  };
  (void)inv_cayley_hamilton(a, observe);
  CHECK(steps == 3);
}

TEST_CASE("general inverse") {
  CHECK(inv_general(MDMatrix<Q>::identity(5, 2)) == MDMatrix<Q>::identity(5, 2));
  CHECK_THROWS_AS(inv_general(kt(2, 2, {2}, {2, 1, 3}, {3}).to_matrix()), SingularMatrix);
  CHECK_THROWS_AS(inv_general(MDMatrix<Q>::zero(3, 1)), SingularMatrix);

  std::mt19937_64 rng(66);
  for (std::size_t n = 1; n <= 8; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      const auto v = mdk::testing::random_exact_md(rng, n, k);
      if (dense_det(to_dense(v)).is_zero()) continue;
      const auto x = inv_general(v);
      REQUIRE(mdk::testing::lattice_conforming(to_dense(x), k));
      REQUIRE(to_dense(x) == dense_inv(to_dense(v)));
      REQUIRE(x == inv_cayley_hamilton(v));
      REQUIRE(mul(v, x) == MDMatrix<Q>::identity(n, k));
    }
  }
}

TEST_CASE("general inverse in float mode") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> off(-0.5, 0.5);
  for (std::size_t n : {5u, 20u, 40u}) {
    for (std::size_t k : {1u, 3u}) {
      auto v = mdk::testing::random_md<FloatScalar>(n, k, [&] { return FloatScalar(off(rng), off(rng)); }, 2);
      v = add_identity(v, FloatScalar(5.0));
      const auto x = inv_general(v);
      const auto residual = mdk::reference::max_abs_diff(
          dense_mul(to_dense(v), to_dense(x)), DenseMatrix<FloatScalar>::identity(n + 1));
      CHECK(residual <= 1e-12);
    }
  }
  // Singular up to the tolerance.
  const MDMatrix<FloatScalar> tiny(2, 1, {{0, {FloatScalar(1.0), FloatScalar(1.0), FloatScalar(1e-15)}}});
  CHECK_THROWS_AS(inv_general(tiny), SingularMatrix);
}

TEST_CASE("signed powers") {
  const auto a = fixture().to_matrix();
  CHECK(pow_signed(a, -1) == inv_general(a));
  CHECK(mul(pow_signed(a, -2), pow(a, 2)) == MDMatrix<Q>::identity(2, 2));
  CHECK(pow_signed(MDMatrix<Q>::identity(4, 2), -5) == MDMatrix<Q>::identity(4, 2));
  CHECK(pow_signed(a, 3) == pow(a, 3));
  CHECK_THROWS_AS(pow_signed(kt(2, 2, {2}, {2, 1, 3}, {3}).to_matrix(), -1), SingularMatrix);
}
