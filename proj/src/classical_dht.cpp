#include "qhilbert/classical_dht.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qhilbert/error.hpp"

namespace qhilbert {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool finite(const cplx& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void check_sampling(std::size_t n, double duration) {
    if (n == 0) throw InvalidArgument("sample count must be at least 1");
    if (!(duration > 0.0) || !std::isfinite(duration)) {
        throw InvalidArgument("duration must be positive and finite");
    }
}

}  // namespace

RealSignal::RealSignal(std::vector<double> samples) : samples_(std::move(samples)) {
    if (samples_.empty()) throw InvalidArgument("empty signal");
    for (std::size_t n = 0; n < samples_.size(); ++n) {
        if (!std::isfinite(samples_[n])) {
            throw InvalidArgument("non-finite sample at index " + std::to_string(n));
        }
    }
}

ComplexSpectrum::ComplexSpectrum(ComplexVector bins) : bins_(std::move(bins)) {
    for (std::size_t k = 0; k < bins_.size(); ++k) {
        if (!finite(bins_[k])) throw InvalidArgument("non-finite bin at index " + std::to_string(k));
    }
}

RealSignal AnalyticSignal::real() const {
    std::vector<double> out;
    out.reserve(samples_.size());
    for (const auto& z : samples_) out.push_back(z.real());
    return RealSignal(std::move(out));
}

RealSignal AnalyticSignal::imag() const {
    std::vector<double> out;
    out.reserve(samples_.size());
    for (const auto& z : samples_) out.push_back(z.imag());
    return RealSignal(std::move(out));
}

RealSignal AnalyticSignal::magnitude() const {
    std::vector<double> out;
    out.reserve(samples_.size());
    for (const auto& z : samples_) out.push_back(std::abs(z));
    return RealSignal(std::move(out));
}

ComplexSpectrum dft(std::span<const cplx> signal) {
    if (signal.empty()) throw InvalidArgument("empty signal");
    return ComplexSpectrum(fourier::transformed(signal, fourier::Sign::Negative));
}

ComplexSpectrum dft(const RealSignal& signal) {
    ComplexVector z(signal.begin(), signal.end());
    return dft(z);
}

ComplexVector idft(const ComplexSpectrum& spectrum) {
    if (spectrum.size() == 0) throw InvalidArgument("empty spectrum");
    ComplexVector out = fourier::transformed(spectrum.bins(), fourier::Sign::Positive);
    const double scale = 1.0 / static_cast<double>(out.size());
    for (auto& z : out) z *= scale;
    return out;
}

std::vector<double> analytic_filter(std::size_t n) {
    if (n == 0) throw InvalidArgument("filter length must be at least 1");
    std::vector<double> h(n, 0.0);
    h[0] = 1.0;
    if (n % 2 == 0) {
        for (std::size_t k = 1; k < n / 2; ++k) h[k] = 2.0;
        h[n / 2] = 1.0;
    } else {
        for (std::size_t k = 1; k <= (n - 1) / 2; ++k) h[k] = 2.0;
    }
    return h;
}

AnalyticSignal make_analytic(const RealSignal& signal) {
    const ComplexSpectrum spectrum = dft(signal);
    const std::vector<double> h = analytic_filter(signal.size());
    ComplexVector filtered(spectrum.bins().begin(), spectrum.bins().end());
    for (std::size_t k = 0; k < filtered.size(); ++k) filtered[k] *= h[k];
    return AnalyticSignal(idft(ComplexSpectrum(std::move(filtered))));
}

RealSignal hilbert(const RealSignal& signal) { return make_analytic(signal).imag(); }

RealSignal envelope(const RealSignal& signal) { return make_analytic(signal).magnitude(); }

std::vector<double> sample_times(std::size_t n, double duration) {
    check_sampling(n, duration);
    std::vector<double> t(n);
    for (std::size_t i = 0; i < n; ++i) {
        t[i] = static_cast<double>(i) * duration / static_cast<double>(n);
    }
    return t;
}

RealSignal two_tone(double f1, double f2, std::size_t n, double duration) {
    std::vector<double> x = sample_times(n, duration);
    for (auto& t : x) t = 2.0 * std::cos(kTwoPi * f1 * t) + 2.0 * std::sin(kTwoPi * f2 * t);
    return RealSignal(std::move(x));
}

RealSignal am_tone(double f_carrier, double f_mod, double depth, std::size_t n, double duration) {
    std::vector<double> x = sample_times(n, duration);
    for (auto& t : x) {
        t = (1.0 + depth * std::cos(kTwoPi * f_mod * t)) * std::cos(kTwoPi * f_carrier * t);
    }
    return RealSignal(std::move(x));
}

}  // namespace qhilbert
