#include "mdk/inverse.hpp"

#include <algorithm>
#include <utility>

namespace mdk {

// ---------------------------------------------------------------------------
// k-tridiagonal view

template <Field F>
KTridiagonal<F> KTridiagonal<F>::from_matrix(const MDMatrix<F>& m) {
  if (!is_k_tridiagonal(m)) {
    throw PreconditionViolated("matrix has diagonals beyond offset +-k; it is not k-tridiagonal");
  }
  return {m.n(), m.k(), m.diagonal_or_zero(-1), m.diagonal_or_zero(0), m.diagonal_or_zero(1)};
}

template <Field F>
MDMatrix<F> KTridiagonal<F>::to_matrix() const {
  return MDMatrix<F>(n, k, {{-1, a}, {0, b}, {1, c}});
}

template <Field F>
F det_k_tridiagonal(const KTridiagonal<F>& m) {
  F det(1);
  for (std::size_t r = 0; r < m.k && r <= m.n; ++r) {
    F before(1);
    F current = m.b[r];
    for (std::size_t j = r + m.k; j <= m.n; j += m.k) {
      F next = m.b[j] * current - m.a[j - m.k] * m.c[j - m.k] * before;
      before = std::move(current);
      current = std::move(next);
    }
    det *= current;
  }
  return det;
}

template <Field F>
std::optional<F> det_k_tridiagonal_quotient(const KTridiagonal<F>& m) {
  std::vector<F> f(m.n + 1);
  F det(1);
  for (std::size_t j = 0; j <= m.n; ++j) {
    if (j < m.k) {
      f[j] = m.b[j];
    } else {
      const F& prior = f[j - m.k];
      if (prior.is_zero()) return std::nullopt;
      f[j] = m.b[j] - m.a[j - m.k] * m.c[j - m.k] / prior;
    }
    det *= f[j];
  }
  return det;
}

// ---------------------------------------------------------------------------
// Closed form for n + 1 <= 2k

std::string SingularityWitness::describe(std::size_t k) const {
  const auto idx = [](std::size_t i) { return std::to_string(i); };
  if (kind == Kind::ZeroMiddlePivot) return "b_" + idx(j) + " = 0";
  return "b_" + idx(j) + " b_" + idx(j + k) + " - a_" + idx(j) + " c_" + idx(j) + " = 0";
}

namespace {

template <Field F>
void require_thm2_regime(const KTridiagonal<F>& m) {
  if (m.n + 1 > 2 * m.k) {
    throw PreconditionViolated("closed-form k-tridiagonal inverse needs n + 1 <= 2k (n=" +
                               std::to_string(m.n) + ", k=" + std::to_string(m.k) + ")");
  }
}

template <Field F>
F pair_minor(const KTridiagonal<F>& m, std::size_t j) {
  return m.b[j] * m.b[j + m.k] - m.a[j] * m.c[j];
}

}  // namespace

template <Field F>
NonsingularityReport is_nonsingular_thm2(const KTridiagonal<F>& m) {
  require_thm2_regime(m);
  using Kind = SingularityWitness::Kind;
  for (std::size_t j = m.n + 1 - m.k; j < m.k; ++j) {
    if (m.b[j].is_zero()) return {false, SingularityWitness{Kind::ZeroMiddlePivot, j}};
  }
  for (std::size_t j = 0; j + m.k <= m.n; ++j) {
    if (pair_minor(m, j).is_zero()) return {false, SingularityWitness{Kind::ZeroPairMinor, j}};
  }
  return {true, std::nullopt};
}

template <Field F>
MDMatrix<F> inv_thm2(const KTridiagonal<F>& m) {
  const auto report = is_nonsingular_thm2(m);
  if (!report.nonsingular) {
    throw SingularMatrix("singular k-tridiagonal matrix: " + report.witness->describe(m.k));
  }
  const std::size_t n = m.n;
  const std::size_t k = m.k;
  auto x = DiagVec<F>::zeros(n);
  auto y = DiagVec<F>::zeros(n);
  auto z = DiagVec<F>::zeros(n);
  for (std::size_t j = 0; j + k <= n; ++j) {
    const F d = pair_minor(m, j);
    x[j] = -m.a[j] / d;
    z[j] = -m.c[j] / d;
    y[j] = m.b[j + k] / d;
    y[j + k] = m.b[j] / d;
  }
  for (std::size_t j = n + 1 - k; j < k; ++j) y[j] = F(1) / m.b[j];
  return MDMatrix<F>(n, k, {{-1, std::move(x)}, {0, std::move(y)}, {1, std::move(z)}});
}

// ---------------------------------------------------------------------------
// Characteristic polynomial and the Cayley-Hamilton inverse

template <Field F>
CharPoly<F> char_poly(const MDMatrix<F>& v) {
  if constexpr (!F::is_exact) {
    throw ModeUnsupported("char_poly needs exact arithmetic");
  } else {
    // det(lambda E - V) = lambda^N + c_1 lambda^{N-1} + ... + c_N with
    //   M_1 = V,  c_m = -tr(M_m) / m,  M_{m+1} = V (M_m + c_m E).
    const std::size_t order = v.dim();
    std::vector<F> c(order + 1);
    c[0] = F(1);
    MDMatrix<F> m = v;
    for (std::size_t step = 1; step <= order; ++step) {
      if (step > 1) m = mul(v, add_identity(m, c[step - 1]));
      c[step] = -trace(m) / F(static_cast<long>(step));
    }
    // Det(V - lambda E) = (-1)^N det(lambda E - V).
    CharPoly<F> poly;
    poly.coeffs.resize(order + 1);
    const bool flip = order % 2 == 1;
    for (std::size_t j = 0; j <= order; ++j) {
      poly.coeffs[j] = flip ? -c[order - j] : c[order - j];
    }
    return poly;
  }
}

template <Field F>
MDMatrix<F> inv_cayley_hamilton(const MDMatrix<F>& v,
                                const std::function<void(const MDMatrix<F>&)>& on_step) {
  if constexpr (!F::is_exact) {
    throw ModeUnsupported("the Cayley-Hamilton inverse needs exact arithmetic");
  } else {
    const auto poly = char_poly(v);
    const auto& nu = poly.coeffs;
    if (nu[0].is_zero()) throw SingularMatrix("characteristic polynomial has nu_0 = Det(V) = 0");

    // Horner: R = nu_N; R <- R V + nu_j for j = N-1 .. 1.
    const std::size_t order = v.dim();
    auto r = scale(MDMatrix<F>::identity(v.n(), v.k()), nu[order]);
    if (on_step) on_step(r);
    for (std::size_t j = order - 1; j >= 1; --j) {
      r = add_identity(mul(r, v), nu[j]);
      if (on_step) on_step(r);
    }
    return scale(r, -F(1) / nu[0]);
  }
}

// ---------------------------------------------------------------------------
// Residue-interleaved inverse

namespace {

// In-place Gauss-Jordan on a dense m x m block. Returns the column that had no
// usable pivot, or nullopt on success (the block then holds its inverse).
template <Field F>
std::optional<std::size_t> invert_block(std::vector<F>& block, std::size_t m) {
  std::vector<F> inv(m * m);
  for (std::size_t i = 0; i < m; ++i) inv[i * m + i] = F(1);
  const auto at = [m](std::vector<F>& a, std::size_t i, std::size_t j) -> F& { return a[i * m + j]; };

  double scale = 0.0;
  if constexpr (!F::is_exact) {
    for (const auto& x : block) scale = std::max(scale, x.magnitude());
  }

  for (std::size_t col = 0; col < m; ++col) {
    std::size_t pivot = col;
    if constexpr (F::is_exact) {
      while (pivot < m && at(block, pivot, col).is_zero()) ++pivot;
      if (pivot == m) return col;
    } else {
      for (std::size_t r = col + 1; r < m; ++r) {
        if (at(block, r, col).magnitude() > at(block, pivot, col).magnitude()) pivot = r;
      }
      if (scale == 0.0 || at(block, pivot, col).is_zero(scale)) return col;
    }
    if (pivot != col) {
      for (std::size_t j = 0; j < m; ++j) {
        std::swap(at(block, pivot, j), at(block, col, j));
        std::swap(at(inv, pivot, j), at(inv, col, j));
      }
    }

    F p_inv;
    if constexpr (F::is_exact) {
      p_inv = F(1) / at(block, col, col);
    } else {
      p_inv = F(1.0 / at(block, col, col).value());
    }
    for (std::size_t j = 0; j < m; ++j) {
      at(block, col, j) *= p_inv;
      at(inv, col, j) *= p_inv;
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (i == col || at(block, i, col) == F{}) continue;
      const F factor = at(block, i, col);
      for (std::size_t j = 0; j < m; ++j) {
        at(block, i, j) -= factor * at(block, col, j);
        at(inv, i, j) -= factor * at(inv, col, j);
      }
    }
  }
  block = std::move(inv);
  return std::nullopt;
}

}  // namespace

template <Field F>
MDMatrix<F> inv_general(const MDMatrix<F>& v) {
  const std::size_t n = v.n();
  const std::size_t k = v.k();
  const int s = static_cast<int>(v.s());

  // out[p + s] is the result diagonal at offset p. Within one residue class
  // every (block row, block col) pair maps to a distinct coordinate, so the
  // classes scatter without overlap.
  std::vector<DiagVec<F>> out(2 * static_cast<std::size_t>(s) + 1, DiagVec<F>::zeros(n));
  std::vector<std::optional<std::size_t>> failed(k);

#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t rr = 0; rr < static_cast<std::ptrdiff_t>(k); ++rr) {
    const auto r = static_cast<std::size_t>(rr);
    const std::size_t m = (n - r) / k + 1;
    std::vector<F> block(m * m);
    for (const auto& [p, diag] : v.diagonals()) {
      const auto shift = static_cast<std::size_t>(std::abs(p));
      for (std::size_t alpha = 0; alpha + shift < m; ++alpha) {
        const F& value = diag[r + alpha * k];
        if (p >= 0) {
          block[alpha * m + alpha + shift] = value;
        } else {
          block[(alpha + shift) * m + alpha] = value;
        }
      }
    }

    failed[r] = invert_block(block, m);
    if (failed[r]) continue;

    for (std::size_t alpha = 0; alpha < m; ++alpha) {
      for (std::size_t beta = 0; beta < m; ++beta) {
        const int p = static_cast<int>(beta) - static_cast<int>(alpha);
        const std::size_t coord = r + (p >= 0 ? alpha : beta) * k;
        out[static_cast<std::size_t>(p + s)][coord] = std::move(block[alpha * m + beta]);
      }
    }
  }

  for (std::size_t r = 0; r < k; ++r) {
    if (failed[r]) {
      throw SingularMatrix("no usable pivot in residue class " + std::to_string(r) + " mod " +
                           std::to_string(k) + " at block column " + std::to_string(*failed[r]));
    }
  }

  typename MDMatrix<F>::Diagonals diags;
  for (int p = -s; p <= s; ++p) diags.emplace(p, std::move(out[static_cast<std::size_t>(p + s)]));
  return MDMatrix<F>(n, k, std::move(diags));
}

template <Field F>
MDMatrix<F> pow_signed(const MDMatrix<F>& a, std::int64_t m) {
  if (m >= 0) return pow(a, static_cast<std::uint64_t>(m));
  const auto magnitude = static_cast<std::uint64_t>(-(m + 1)) + 1;
  return pow(inv_general(a), magnitude);
}

#define MDK_INSTANTIATE(F)                                                                    \
  template struct KTridiagonal<F>;                                                            \
  template F det_k_tridiagonal(const KTridiagonal<F>&);                                       \
  template std::optional<F> det_k_tridiagonal_quotient(const KTridiagonal<F>&);               \
  template NonsingularityReport is_nonsingular_thm2(const KTridiagonal<F>&);                  \
  template MDMatrix<F> inv_thm2(const KTridiagonal<F>&);                                      \
  template CharPoly<F> char_poly(const MDMatrix<F>&);                                         \
  template MDMatrix<F> inv_cayley_hamilton(const MDMatrix<F>&,                                \
                                           const std::function<void(const MDMatrix<F>&)>&);   \
  template MDMatrix<F> inv_general(const MDMatrix<F>&);                                       \
  template MDMatrix<F> pow_signed(const MDMatrix<F>&, std::int64_t);

MDK_INSTANTIATE(ExactScalar)
MDK_INSTANTIATE(FloatScalar)

#undef MDK_INSTANTIATE

}  // namespace mdk
