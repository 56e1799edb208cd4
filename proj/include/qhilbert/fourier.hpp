#pragma once

#include <complex>
#include <span>
#include <vector>

namespace qhilbert {

using cplx = std::complex<double>;
using ComplexVector = std::vector<cplx>;

namespace fourier {

/// Sign of the exponent in the transform kernel e^{sign * 2*pi*i*k*n/N}.
enum class Sign { Negative = -1, Positive = +1 };

/// In-place unnormalized discrete Fourier sum
///
///     out[k] = sum_n in[n] * exp(sign * 2*pi*i * k*n / N)
///
/// for any N >= 1. Powers of two use an iterative radix-2 FFT; other lengths
/// go through Bluestein's chirp-z reduction onto a power-of-two convolution.
/// No scaling is applied in either direction.
void transform(std::span<cplx> data, Sign sign);

/// Out-of-place convenience wrapper around `transform`.
ComplexVector transformed(std::span<const cplx> data, Sign sign);

bool is_power_of_two(std::size_t n) noexcept;

}  // namespace fourier
}  // namespace qhilbert
