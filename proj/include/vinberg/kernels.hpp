#pragma once

#include <cstddef>

// Row reductions over Monte Carlo draws stored row-major (n rows of d
// coordinates).  A scalar reference and an AVX2+FMA variant are built; the
// variant is picked at runtime when the CPU supports it.

namespace vinberg::kernels {

enum class Isa { Scalar, Avx2 };

// out[r] = sum_c x[r*d + c] * w[c]
void dot_rows(const double* x, std::size_t n, std::size_t d, const double* w, double* out);
// sum[c] += sum_r x[r*d + c]
void column_sums(const double* x, std::size_t n, std::size_t d, double* sum);
// With y = x_r - mean: gram[a*d + b] += y_a y_b and gram2[a*d + b] += (y_a y_b)^2
// for every row (full d x d matrices).  gram2 may be null.
void centered_gram(const double* x, std::size_t n, std::size_t d, const double* mean, double* gram,
                   double* gram2);

Isa active_isa();
// Force the scalar path (for testing and reproducibility across machines).
void force_isa(Isa isa);
bool avx2_available();
const char* to_string(Isa isa);

namespace scalar {
void dot_rows(const double* x, std::size_t n, std::size_t d, const double* w, double* out);
void column_sums(const double* x, std::size_t n, std::size_t d, double* sum);
void centered_gram(const double* x, std::size_t n, std::size_t d, const double* mean, double* gram,
                   double* gram2);
}  // namespace scalar

namespace avx2 {
void dot_rows(const double* x, std::size_t n, std::size_t d, const double* w, double* out);
void column_sums(const double* x, std::size_t n, std::size_t d, double* sum);
void centered_gram(const double* x, std::size_t n, std::size_t d, const double* mean, double* gram,
                   double* gram2);
}  // namespace avx2

}  // namespace vinberg::kernels
