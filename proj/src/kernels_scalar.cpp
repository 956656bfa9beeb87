#include <atomic>
#include <cstdlib>
#include <cstring>
#include <vector>

#include "vinberg/kernels.hpp"

namespace vinberg::kernels {

namespace scalar {

void dot_rows(const double* x, std::size_t n, std::size_t d, const double* w, double* out) {
  for (std::size_t r = 0; r < n; ++r) {
    const double* row = x + r * d;
    double s = 0;
    for (std::size_t c = 0; c < d; ++c) s += row[c] * w[c];
    out[r] = s;
  }
}

void column_sums(const double* x, std::size_t n, std::size_t d, double* sum) {
  for (std::size_t r = 0; r < n; ++r) {
    const double* row = x + r * d;
    for (std::size_t c = 0; c < d; ++c) sum[c] += row[c];
  }
}

void centered_gram(const double* x, std::size_t n, std::size_t d, const double* mean, double* gram,
                   double* gram2) {
  std::vector<double> y(d);
  for (std::size_t r = 0; r < n; ++r) {
    const double* row = x + r * d;
    for (std::size_t c = 0; c < d; ++c) y[c] = row[c] - mean[c];
    for (std::size_t a = 0; a < d; ++a) {
      double* g = gram + a * d;
      for (std::size_t b = 0; b < d; ++b) g[b] += y[a] * y[b];
      if (gram2) {
        double* g2 = gram2 + a * d;
        for (std::size_t b = 0; b < d; ++b) {
          const double p = y[a] * y[b];
          g2[b] += p * p;
        }
      }
    }
  }
}

}  // namespace scalar

namespace {

Isa detect() {
  if (const char* env = std::getenv("VINBERG_FORCE_SCALAR"); env && std::strcmp(env, "0") != 0)
    return Isa::Scalar;
  return avx2_available() ? Isa::Avx2 : Isa::Scalar;
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

bool avx2_available() {
#if defined(__x86_64__) || defined(__i386__)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Isa active_isa() { return current().load(); }

void force_isa(Isa isa) {
  if (isa == Isa::Avx2 && !avx2_available()) isa = Isa::Scalar;
  current().store(isa);
}

const char* to_string(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

void dot_rows(const double* x, std::size_t n, std::size_t d, const double* w, double* out) {
  if (active_isa() == Isa::Avx2) avx2::dot_rows(x, n, d, w, out);
  else scalar::dot_rows(x, n, d, w, out);
}

void column_sums(const double* x, std::size_t n, std::size_t d, double* sum) {
  if (active_isa() == Isa::Avx2) avx2::column_sums(x, n, d, sum);
  else scalar::column_sums(x, n, d, sum);
}

void centered_gram(const double* x, std::size_t n, std::size_t d, const double* mean, double* gram,
                   double* gram2) {
  if (active_isa() == Isa::Avx2) avx2::centered_gram(x, n, d, mean, gram, gram2);
  else scalar::centered_gram(x, n, d, mean, gram, gram2);
}

}  // namespace vinberg::kernels
