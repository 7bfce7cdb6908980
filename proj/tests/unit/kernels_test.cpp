#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "spiderweb/qgates/kernels.hpp"

namespace spiderweb::qgates::kernels {
namespace {

std::vector<Complex> random_matrix(std::mt19937_64& g, std::size_t n) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<Complex> m(n * n);
    for (auto& z : m) z = {u(g), u(g)};
    return m;
}

std::vector<Complex> naive(const std::vector<Complex>& a, const std::vector<Complex>& b, std::size_t n) {
    std::vector<Complex> c(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            long double re = 0, im = 0;
            for (std::size_t k = 0; k < n; ++k) {
                const Complex x = a[i * n + k], y = b[k * n + j];
                re += static_cast<long double>(x.real()) * y.real() - static_cast<long double>(x.imag()) * y.imag();
                im += static_cast<long double>(x.real()) * y.imag() + static_cast<long double>(x.imag()) * y.real();
            }
            c[i * n + j] = {static_cast<double>(re), static_cast<double>(im)};
        }
    return c;
}

double max_diff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    double m = 0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

TEST(Matmul, ScalarMatchesNaive) {
    auto g = std::mt19937_64{11};
    for (std::size_t n = 1; n <= 32; ++n) {
        const auto a = random_matrix(g, n), b = random_matrix(g, n);
        std::vector<Complex> c(n * n);
        matmul(Isa::scalar, a.data(), b.data(), c.data(), n);
        EXPECT_LT(max_diff(c, naive(a, b, n)), 1e-13 * static_cast<double>(n)) << n;
    }
}

TEST(Matmul, Avx2MatchesScalar) {
    if (!available(Isa::avx2)) GTEST_SKIP() << "AVX2/FMA not available";
    auto g = std::mt19937_64{12};
    for (int trial = 0; trial < 4; ++trial) {
        for (std::size_t n = 1; n <= 32; ++n) {
            const auto a = random_matrix(g, n), b = random_matrix(g, n);
            std::vector<Complex> s(n * n), v(n * n);
            matmul(Isa::scalar, a.data(), b.data(), s.data(), n);
            matmul(Isa::avx2, a.data(), b.data(), v.data(), n);
            EXPECT_LT(max_diff(s, v), 1e-13 * static_cast<double>(n)) << n;
        }
    }
}

TEST(Matmul, OverwritesOutput) {
    const std::vector<Complex> a{1, 2, 3, 4}, b{0, 1, 1, 0};
    for (Isa isa : {Isa::scalar, Isa::avx2}) {
        if (!available(isa)) continue;
        std::vector<Complex> c(4, Complex{99, 99});
        matmul(isa, a.data(), b.data(), c.data(), 2);
        EXPECT_EQ(c, (std::vector<Complex>{2, 1, 4, 3})) << to_string(isa);
    }
}

TEST(Dispatch, OverrideAndRestore) {
    EXPECT_TRUE(available(Isa::scalar));
    const Isa automatic = active();
    set_override(Isa::scalar);
    EXPECT_EQ(active(), Isa::scalar);
    set_override(std::nullopt);
    EXPECT_EQ(active(), automatic);
    if (!available(Isa::avx2)) {
        EXPECT_THROW(set_override(Isa::avx2), std::invalid_argument);
    } else {
        EXPECT_EQ(automatic, Isa::avx2);
    }
}

}  // namespace
}  // namespace spiderweb::qgates::kernels
