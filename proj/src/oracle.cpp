#include "mdk/oracle.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>

namespace mdk::reference {

template <Field F>
DenseMatrix<F> dense_mul(const DenseMatrix<F>& a, const DenseMatrix<F>& b) {
  if (a.dim() != b.dim()) throw ShapeMismatch("dense_mul: orders differ");
  const std::size_t dim = a.dim();
  DenseMatrix<F> c(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      F acc{};
      for (std::size_t l = 0; l < dim; ++l) acc += a(i, l) * b(l, j);
      c(i, j) = std::move(acc);
    }
  }
  return c;
}

namespace {

template <Field F>
void swap_rows(DenseMatrix<F>& m, std::size_t r1, std::size_t r2) {
  for (std::size_t j = 0; j < m.dim(); ++j) std::swap(m(r1, j), m(r2, j));
}

// Exact: first nonzero entry at or below the diagonal. Float: largest
// magnitude, rejected if below the zero tolerance relative to `scale`.
template <Field F>
std::optional<std::size_t> find_pivot(const DenseMatrix<F>& m, std::size_t col, double scale) {
  const std::size_t dim = m.dim();
  if constexpr (F::is_exact) {
    for (std::size_t r = col; r < dim; ++r) {
      if (!m(r, col).is_zero()) return r;
    }
    return std::nullopt;
  } else {
    std::size_t best = col;
    for (std::size_t r = col + 1; r < dim; ++r) {
      if (m(r, col).magnitude() > m(best, col).magnitude()) best = r;
    }
    if (m(best, col).is_zero(scale)) return std::nullopt;
    return best;
  }
}

// Pivots are vetted by find_pivot against the matrix scale, so float mode
// bypasses the absolute zero test built into FloatScalar division.
template <Field F>
F divide_by_pivot(const F& x, const F& pivot) {
  if constexpr (F::is_exact) {
    return x / pivot;
  } else {
    return F(x.value() / pivot.value());
  }
}

template <Field F>
double max_magnitude(const DenseMatrix<F>& m) {
  double scale = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) scale = std::max(scale, m(i, j).magnitude());
  }
  return scale;
}

}  // namespace

template <Field F>
F dense_det(const DenseMatrix<F>& a) {
  const std::size_t dim = a.dim();
  if (dim == 0) return F(1);
  DenseMatrix<F> m = a;
  bool negate = false;

  if constexpr (F::is_exact) {
    F prev(1);
    for (std::size_t col = 0; col + 1 < dim; ++col) {
      const auto pivot = find_pivot(m, col, 0.0);
      if (!pivot) return F{};
      if (*pivot != col) {
        swap_rows(m, *pivot, col);
        negate = !negate;
      }
      for (std::size_t i = col + 1; i < dim; ++i) {
        for (std::size_t j = col + 1; j < dim; ++j) {
          m(i, j) = (m(i, j) * m(col, col) - m(i, col) * m(col, j)) / prev;
        }
        m(i, col) = F{};
      }
      prev = m(col, col);
    }
    F det = m(dim - 1, dim - 1);
    return negate ? -det : det;
  } else {
    F det(1);
    for (std::size_t col = 0; col < dim; ++col) {
      std::size_t best = col;
      for (std::size_t r = col + 1; r < dim; ++r) {
        if (m(r, col).magnitude() > m(best, col).magnitude()) best = r;
      }
      if (m(best, col).magnitude() == 0.0) return F{};
      if (best != col) {
        swap_rows(m, best, col);
        negate = !negate;
      }
      det *= m(col, col);
      for (std::size_t i = col + 1; i < dim; ++i) {
        // Pivot magnitude was checked above; skip the scalar zero-tolerance test.
        const F factor(m(i, col).value() / m(col, col).value());
        for (std::size_t j = col + 1; j < dim; ++j) m(i, j) -= factor * m(col, j);
      }
    }
    return negate ? -det : det;
  }
}

template <Field F>
DenseMatrix<F> dense_inv(const DenseMatrix<F>& a) {
  const std::size_t dim = a.dim();
  DenseMatrix<F> m = a;
  DenseMatrix<F> inv = DenseMatrix<F>::identity(dim);
  const double scale = max_magnitude(a);
  if (dim > 0 && scale == 0.0) throw SingularMatrix("dense_inv: zero matrix");

  for (std::size_t col = 0; col < dim; ++col) {
    const auto pivot = find_pivot(m, col, scale);
    if (!pivot) throw SingularMatrix("dense_inv: no pivot in column " + std::to_string(col));
    if (*pivot != col) {
      swap_rows(m, *pivot, col);
      swap_rows(inv, *pivot, col);
    }
    const F p = m(col, col);
    for (std::size_t j = 0; j < dim; ++j) {
      m(col, j) = divide_by_pivot(m(col, j), p);
      inv(col, j) = divide_by_pivot(inv(col, j), p);
    }
    for (std::size_t i = 0; i < dim; ++i) {
      if (i == col || m(i, col) == F{}) continue;
      const F factor = m(i, col);
      for (std::size_t j = 0; j < dim; ++j) {
        m(i, j) -= factor * m(col, j);
        inv(i, j) -= factor * inv(col, j);
      }
    }
  }
  return inv;
}

template <Field F>
double max_abs_diff(const DenseMatrix<F>& a, const DenseMatrix<F>& b) {
  if (a.dim() != b.dim()) throw ShapeMismatch("max_abs_diff: orders differ");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) worst = std::max(worst, (a(i, j) - b(i, j)).magnitude());
  }
  return worst;
}

template <Field F>
double norm_inf(const DenseMatrix<F>& a) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < a.dim(); ++j) row += a(i, j).magnitude();
    worst = std::max(worst, row);
  }
  return worst;
}

#define MDK_INSTANTIATE(F)                                                        \
  template DenseMatrix<F> dense_mul(const DenseMatrix<F>&, const DenseMatrix<F>&); \
  template F dense_det(const DenseMatrix<F>&);                                    \
  template DenseMatrix<F> dense_inv(const DenseMatrix<F>&);                       \
  template double max_abs_diff(const DenseMatrix<F>&, const DenseMatrix<F>&);     \
  template double norm_inf(const DenseMatrix<F>&);

MDK_INSTANTIATE(ExactScalar)
MDK_INSTANTIATE(FloatScalar)

#undef MDK_INSTANTIATE

}  // namespace mdk::reference
