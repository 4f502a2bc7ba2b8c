#include "mdk/algebra.hpp"

#include <cstdlib>
#include <utility>
#include <vector>

namespace mdk {

namespace {

// Below this many scalar products per output diagonal the threading overhead
// dominates.
constexpr std::ptrdiff_t kParallelWork = 4096;

template <Field F>
struct Term {
  int p;
  int q;
  const DiagVec<F>* v;
  const DiagVec<F>* w;
};

}  // namespace

template <Field F>
MDMatrix<F> mul(const MDMatrix<F>& v, const MDMatrix<F>& w) {
  detail::require_same_shape(v, w, "mul");
  const auto n = static_cast<std::ptrdiff_t>(v.n());
  const auto k = static_cast<std::ptrdiff_t>(v.k());

  // Terms grouped by output offset, each group in ascending (p, q) order.
  std::map<int, std::vector<Term<F>>> groups;
  for (const auto& [p, vp] : v.diagonals()) {
    for (const auto& [q, wq] : w.diagonals()) {
      const int t = p + q;
      if (std::abs(t) * k > n) continue;
      groups[t].push_back({p, q, &vp, &wq});
    }
  }

  typename MDMatrix<F>::Diagonals out;
  for (const auto& group : groups) {
    const int t = group.first;
    const std::vector<Term<F>>& terms = group.second;
    auto z = DiagVec<F>::zeros(v.n());
    const std::ptrdiff_t len = n + 1 - std::abs(t) * k;
    const auto work = len * static_cast<std::ptrdiff_t>(terms.size());

    // For output coordinate r the product entry is (row, col) with
    //   t >= 0: row = r, col = r + t*k      t < 0: col = r, row = r + |t|*k
    // and the intermediate index mid = row + p*k = col - q*k. Row-indexed
    // diagonals (offset >= 0) are read at their row, column-indexed ones at
    // their column.
#pragma omp parallel for schedule(static) if (work >= kParallelWork)
    for (std::ptrdiff_t r = 0; r < len; ++r) {
      F acc{};
      for (const auto& term : terms) {
        const std::ptrdiff_t row = t >= 0 ? r : r - t * k;
        const std::ptrdiff_t mid = row + term.p * k;
        if (mid < 0 || mid > n) continue;
        const std::ptrdiff_t col = mid + term.q * k;
        const auto& a = term.v->at(term.p >= 0 ? row : mid);
        const auto& b = term.w->at(term.q >= 0 ? mid : col);
        acc += a * b;
      }
      z[static_cast<std::size_t>(r)] = std::move(acc);
    }
    out.emplace(t, std::move(z));
  }
  return MDMatrix<F>(v.n(), v.k(), std::move(out));
}

template <Field F>
MDMatrix<F> pow(const MDMatrix<F>& a, std::uint64_t m) {
  auto result = MDMatrix<F>::identity(a.n(), a.k());
  if (m == 0) return result;
  auto base = a;
  bool first = true;
  while (true) {
    if (m & 1U) {
      result = first ? base : mul(result, base);
      first = false;
    }
    m >>= 1U;
    if (m == 0) break;
    base = mul(base, base);
  }
  return result;
}

namespace serial {

namespace {

// One summand of V*W for the diagonal pair (p, q): returns the offset of the
// result and its diagonal vector. With i = |p|, j = |q|:
//   p<0, q<0:          offset -(i+j),  tau^{jk} v * w
//   p<0, q>=0, i<=j:   offset j-i,     tau^{-ik}(v * w)
//   p<0, q>=0, i>j:    offset -(i-j),  tau^{-jk}(v * w)
//   p>=0, q<0, i<=j:   offset -(j-i),  tau^{(j-i)k} v * w
//   p>=0, q<0, i>j:    offset i-j,     v * tau^{(i-j)k} w
//   p>=0, q>=0:        offset i+j,     v * tau^{ik} w
template <Field F>
std::pair<int, DiagVec<F>> product_term(const DiagVec<F>& v, int p, const DiagVec<F>& w, int q,
                                        std::ptrdiff_t k) {
  const int i = std::abs(p);
  const int j = std::abs(q);
  if (p < 0 && q < 0) return {-(i + j), star(tau(v, j * k), w)};
  if (p < 0) {
    if (i <= j) return {j - i, tau(star(v, w), -i * k)};
    return {-(i - j), tau(star(v, w), -j * k)};
  }
  if (q < 0) {
    if (i <= j) return {-(j - i), star(tau(v, (j - i) * k), w)};
    return {i - j, star(v, tau(w, (i - j) * k))};
  }
  return {i + j, star(v, tau(w, i * k))};
}

}  // namespace

template <Field F>
MDMatrix<F> mul(const MDMatrix<F>& v, const MDMatrix<F>& w) {
  detail::require_same_shape(v, w, "serial::mul");
  const auto n = static_cast<std::ptrdiff_t>(v.n());
  const auto k = static_cast<std::ptrdiff_t>(v.k());
  typename MDMatrix<F>::Diagonals sums;
  for (const auto& [p, vp] : v.diagonals()) {
    for (const auto& [q, wq] : w.diagonals()) {
      auto [t, z] = product_term(vp, p, wq, q, k);
      if (std::abs(t) * k > n) continue;
      auto [it, inserted] = sums.try_emplace(t, std::move(z));
      if (!inserted) it->second = add(it->second, z);
    }
  }
  return MDMatrix<F>(v.n(), v.k(), std::move(sums));
}

}  // namespace serial

#define MDK_INSTANTIATE(F)                                               \
  template MDMatrix<F> mul(const MDMatrix<F>&, const MDMatrix<F>&);      \
  template MDMatrix<F> pow(const MDMatrix<F>&, std::uint64_t);           \
  template MDMatrix<F> serial::mul(const MDMatrix<F>&, const MDMatrix<F>&);

MDK_INSTANTIATE(ExactScalar)
MDK_INSTANTIATE(FloatScalar)

#undef MDK_INSTANTIATE

}  // namespace mdk
