#include "spiderweb/qgates/kernels.hpp"

namespace spiderweb::qgates::kernels::detail {

void matmul_scalar(const Complex* a, const Complex* b, Complex* c, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
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
