#include <immintrin.h>

#include "spiderweb/qgates/kernels.hpp"

namespace spiderweb::qgates::kernels::detail {

// One __m256d holds two interleaved complex values (re0, im0, re1, im1).
void matmul_avx2(const Complex* a, const Complex* b, Complex* c, std::size_t n) {
    const auto* bd = reinterpret_cast<const double*>(b);
    auto* cd = reinterpret_cast<double*>(c);
    const std::size_t paired = n & ~std::size_t{1};

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < paired; j += 2) {
            __m256d acc = _mm256_setzero_pd();
            for (std::size_t k = 0; k < n; ++k) {
                const Complex x = a[i * n + k];
                const __m256d y = _mm256_loadu_pd(bd + 2 * (k * n + j));
                const __m256d y_swapped = _mm256_permute_pd(y, 0b0101);
                const __m256d cross = _mm256_mul_pd(_mm256_set1_pd(x.imag()), y_swapped);
                // even lanes: xr*yr - xi*yi, odd lanes: xr*yi + xi*yr
                acc = _mm256_add_pd(acc, _mm256_fmaddsub_pd(_mm256_set1_pd(x.real()), y, cross));
            }
            _mm256_storeu_pd(cd + 2 * (i * n + j), acc);
        }
        if (paired != n) {
            const std::size_t j = n - 1;
            double re = 0.0;
            double im = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                const Complex x = a[i * n + k];
                const Complex y = b[k * n + j];
                re += x.real() * y.real() - x.imag() * y.imag();
                im += x.real() * y.imag() + x.imag() * y.real();
            }
            c[i * n + j] = {re, im};
        }
    }
}

}  // namespace spiderweb::qgates::kernels::detail
