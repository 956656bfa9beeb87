// Built with -mavx2 -mfma; only reached after the runtime CPU check.
#include <immintrin.h>

#include <vector>

#include "vinberg/kernels.hpp"

namespace vinberg::kernels::avx2 {

namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d sh = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

}  // namespace

void dot_rows(const double* x, std::size_t n, std::size_t d, const double* w, double* out) {
  const std::size_t d4 = d & ~std::size_t{3};
  for (std::size_t r = 0; r < n; ++r) {
    const double* row = x + r * d;
    __m256d acc = _mm256_setzero_pd();
    std::size_t c = 0;
    for (; c < d4; c += 4) acc = _mm256_fmadd_pd(_mm256_loadu_pd(row + c), _mm256_loadu_pd(w + c), acc);
    double s = hsum(acc);
    for (; c < d; ++c) s += row[c] * w[c];
    out[r] = s;
  }
}

void column_sums(const double* x, std::size_t n, std::size_t d, double* sum) {
  const std::size_t d4 = d & ~std::size_t{3};
  for (std::size_t r = 0; r < n; ++r) {
    const double* row = x + r * d;
    std::size_t c = 0;
    for (; c < d4; c += 4)
      _mm256_storeu_pd(sum + c, _mm256_add_pd(_mm256_loadu_pd(sum + c), _mm256_loadu_pd(row + c)));
    for (; c < d; ++c) sum[c] += row[c];
  }
}

void centered_gram(const double* x, std::size_t n, std::size_t d, const double* mean, double* gram,
                   double* gram2) {
  const std::size_t d4 = d & ~std::size_t{3};
  std::vector<double> y(d);
  for (std::size_t r = 0; r < n; ++r) {
    const double* row = x + r * d;
    for (std::size_t c = 0; c < d; ++c) y[c] = row[c] - mean[c];
    for (std::size_t a = 0; a < d; ++a) {
      const __m256d ya = _mm256_set1_pd(y[a]);
      double* g = gram + a * d;
      double* g2 = gram2 ? gram2 + a * d : nullptr;
      std::size_t b = 0;
      for (; b < d4; b += 4) {
        const __m256d p = _mm256_mul_pd(ya, _mm256_loadu_pd(y.data() + b));
        _mm256_storeu_pd(g + b, _mm256_add_pd(_mm256_loadu_pd(g + b), p));
        if (g2) _mm256_storeu_pd(g2 + b, _mm256_fmadd_pd(p, p, _mm256_loadu_pd(g2 + b)));
      }
      for (; b < d; ++b) {
        const double p = y[a] * y[b];
        g[b] += p;
        if (g2) g2[b] += p * p;
      }
    }
  }
}

}  // namespace vinberg::kernels::avx2
