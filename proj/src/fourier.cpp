#include "qhilbert/fourier.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <utility>

namespace qhilbert::fourier {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void radix2(std::span<cplx> a, Sign sign) {
    const std::size_t n = a.size();
    if (n < 2) return;

    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }

    // Twiddles are evaluated directly rather than by repeated multiplication
    // so the error stays at a few ulps regardless of N.
    const double s = static_cast<double>(static_cast<int>(sign));
    std::vector<cplx> twiddle(n / 2);
    for (std::size_t k = 0; k < n / 2; ++k) {
        twiddle[k] = std::polar(1.0, s * kTwoPi * static_cast<double>(k) / static_cast<double>(n));
    }

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t half = len / 2;
        const std::size_t stride = n / len;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t j = 0; j < half; ++j) {
                const cplx u = a[i + j];
                const cplx v = a[i + j + half] * twiddle[j * stride];
                a[i + j] = u + v;
                a[i + j + half] = u - v;
            }
        }
    }
}

std::size_t next_power_of_two(std::size_t n) {
    std::size_t m = 1;
    while (m < n) m <<= 1;
    return m;
}

void bluestein(std::span<cplx> a, Sign sign) {
    const std::size_t n = a.size();
    const std::size_t m = next_power_of_two(2 * n - 1);
    const double s = static_cast<double>(static_cast<int>(sign));

    // chirp[k] = exp(sign * i*pi*k^2/N); k^2 is reduced mod 2N to keep the angle small.
    std::vector<cplx> chirp(n);
    const std::uint64_t period = 2 * static_cast<std::uint64_t>(n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::uint64_t k2 = (static_cast<std::uint64_t>(k) * k) % period;
        chirp[k] = std::polar(1.0, s * std::numbers::pi * static_cast<double>(k2) / static_cast<double>(n));
    }

    std::vector<cplx> x(m, cplx{0.0, 0.0});
    std::vector<cplx> h(m, cplx{0.0, 0.0});
    for (std::size_t k = 0; k < n; ++k) x[k] = a[k] * chirp[k];
    h[0] = std::conj(chirp[0]);
    for (std::size_t k = 1; k < n; ++k) {
        h[k] = std::conj(chirp[k]);
        h[m - k] = std::conj(chirp[k]);
    }

    radix2(x, Sign::Negative);
    radix2(h, Sign::Negative);
    for (std::size_t k = 0; k < m; ++k) x[k] *= h[k];
    radix2(x, Sign::Positive);

    const double inv_m = 1.0 / static_cast<double>(m);
    for (std::size_t k = 0; k < n; ++k) a[k] = x[k] * inv_m * chirp[k];
}

}  // namespace

bool is_power_of_two(std::size_t n) noexcept { return n != 0 && (n & (n - 1)) == 0; }

void transform(std::span<cplx> data, Sign sign) {
    if (data.size() < 2) return;
    if (is_power_of_two(data.size())) {
        radix2(data, sign);
    } else {
        bluestein(data, sign);
    }
}

ComplexVector transformed(std::span<const cplx> data, Sign sign) {
    ComplexVector out(data.begin(), data.end());
    transform(out, sign);
    return out;
}

}  // namespace qhilbert::fourier
