#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qhilbert/fourier.hpp"

namespace qhilbert {

/// Finite, nonempty sequence of real samples. Every sample must be finite.
class RealSignal {
public:
    explicit RealSignal(std::vector<double> samples);

    std::size_t size() const noexcept { return samples_.size(); }
    double operator[](std::size_t n) const { return samples_[n]; }
    std::span<const double> samples() const noexcept { return samples_; }

    auto begin() const noexcept { return samples_.begin(); }
    auto end() const noexcept { return samples_.end(); }

private:
    std::vector<double> samples_;
};

/// DFT bins X[k], k = 0..N-1.
class ComplexSpectrum {
public:
    explicit ComplexSpectrum(ComplexVector bins);

    std::size_t size() const noexcept { return bins_.size(); }
    const cplx& operator[](std::size_t k) const { return bins_[k]; }
    std::span<const cplx> bins() const noexcept { return bins_; }

private:
    ComplexVector bins_;
};

/// x + i*H[x]. The real part reproduces the originating signal.
class AnalyticSignal {
public:
    explicit AnalyticSignal(ComplexVector samples) : samples_(std::move(samples)) {}

    std::size_t size() const noexcept { return samples_.size(); }
    const cplx& operator[](std::size_t n) const { return samples_[n]; }
    std::span<const cplx> samples() const noexcept { return samples_; }

    RealSignal real() const;
    RealSignal imag() const;
    RealSignal magnitude() const;

private:
    ComplexVector samples_;
};

/// X[k] = sum_n x[n] e^{-2 pi i k n / N}, no normalization.
ComplexSpectrum dft(std::span<const cplx> signal);
ComplexSpectrum dft(const RealSignal& signal);

/// x[n] = (1/N) sum_k X[k] e^{+2 pi i k n / N}.
ComplexVector idft(const ComplexSpectrum& spectrum);

/// One-sided analytic-signal weights H[k]: 1 at DC, 2 on positive
/// frequencies, 1 on the Nyquist bin when N is even, 0 on negative
/// frequencies. For odd N there is no Nyquist bin, so bins 1..(N-1)/2 get 2.
std::vector<double> analytic_filter(std::size_t n);

AnalyticSignal make_analytic(const RealSignal& signal);

/// Discrete Hilbert transform: the imaginary part of the analytic signal.
RealSignal hilbert(const RealSignal& signal);

/// Instantaneous amplitude |x + i*H[x]|.
RealSignal envelope(const RealSignal& signal);

/// Sample times t_n = n * duration / N.
std::vector<double> sample_times(std::size_t n, double duration);

/// 2 cos(2 pi f1 t) + 2 sin(2 pi f2 t) sampled at t_n = n * duration / N.
RealSignal two_tone(double f1, double f2, std::size_t n, double duration);

/// (1 + depth cos(2 pi f_mod t)) cos(2 pi f_carrier t) sampled like `two_tone`.
RealSignal am_tone(double f_carrier, double f_mod, double depth, std::size_t n, double duration);

}  // namespace qhilbert
