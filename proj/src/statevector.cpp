#include "qhilbert/statevector.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "qhilbert/error.hpp"

namespace qhilbert {

namespace {

constexpr double kPi = std::numbers::pi;

int qubits_for_length(std::size_t n) {
    if (n < 2 || !fourier::is_power_of_two(n)) {
        throw InvalidArgument("state length must be a power of two >= 2, got " + std::to_string(n));
    }
    int q = 0;
    while ((std::size_t{1} << q) < n) ++q;
    if (q > kMaxQubits) throw InvalidArgument("at most " + std::to_string(kMaxQubits) + " qubits supported");
    return q;
}

void check_qubits(int n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw InvalidArgument("n_qubits must be in [1, " + std::to_string(kMaxQubits) + "], got " +
                              std::to_string(n_qubits));
    }
}

double norm_squared(std::span<const cplx> v) {
    double s = 0.0;
    for (const auto& z : v) s += std::norm(z);
    return s;
}

ComplexVector unitary_dft(std::span<const cplx> amplitudes, fourier::Sign sign) {
    if (amplitudes.empty()) throw InvalidArgument("empty state");
    ComplexVector out = fourier::transformed(amplitudes, sign);
    const double scale = 1.0 / std::sqrt(static_cast<double>(out.size()));
    for (auto& z : out) z *= scale;
    return out;
}

}  // namespace

StateVector::StateVector(ComplexVector amplitudes)
    : amplitudes_(std::move(amplitudes)), n_qubits_(qubits_for_length(amplitudes_.size())) {
    for (std::size_t x = 0; x < amplitudes_.size(); ++x) {
        const auto& z = amplitudes_[x];
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw InvalidArgument("non-finite amplitude at index " + std::to_string(x));
        }
    }
    if (std::abs(norm_squared(amplitudes_) - 1.0) > kNormGuardTol) {
        throw InvalidArgument("state not normalized");
    }
}

StateVector StateVector::basis(int n_qubits, std::size_t index) {
    check_qubits(n_qubits);
    const std::size_t n = std::size_t{1} << n_qubits;
    if (index >= n) throw InvalidArgument("basis index out of range");
    ComplexVector a(n, cplx{0.0, 0.0});
    a[index] = 1.0;
    return StateVector(std::move(a));
}

StateVector StateVector::uniform(int n_qubits) {
    check_qubits(n_qubits);
    const std::size_t n = std::size_t{1} << n_qubits;
    return StateVector(ComplexVector(n, cplx{1.0 / std::sqrt(static_cast<double>(n)), 0.0}));
}

double StateVector::norm() const { return std::sqrt(norm_squared(amplitudes_)); }

PolarDecomposition::PolarDecomposition(std::vector<PolarEntry> entries) : entries_(std::move(entries)) {
    for (std::size_t j = 0; j < entries_.size(); ++j) {
        const auto& e = entries_[j];
        if (!(e.magnitude >= 0.0) || !std::isfinite(e.magnitude)) {
            throw InvalidArgument("negative or non-finite magnitude at index " + std::to_string(j));
        }
        if (!(e.phase > -kPi && e.phase <= kPi)) {
            throw InvalidArgument("phase outside (-pi, pi] at index " + std::to_string(j));
        }
    }
}

double wrap_phase(double theta) {
    double w = std::remainder(theta, 2.0 * kPi);
    if (w <= -kPi) w += 2.0 * kPi;
    if (w > kPi) w -= 2.0 * kPi;
    return w;
}

double principal_arg(const cplx& z) {
    if (std::abs(z) < kZeroTol) return 0.0;
    const double a = std::arg(z);
    return a <= -kPi ? kPi : a;
}

StateVector random_state(int n_qubits, std::uint64_t seed) {
    check_qubits(n_qubits);
    const std::size_t n = std::size_t{1} << n_qubits;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexVector a(n);
    for (auto& z : a) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        z = cplx{re, im};
    }
    const double scale = 1.0 / std::sqrt(norm_squared(a));
    for (auto& z : a) z *= scale;
    return StateVector(std::move(a));
}

ComplexVector qft_amplitudes(std::span<const cplx> amplitudes) {
    return unitary_dft(amplitudes, fourier::Sign::Positive);
}

ComplexVector iqft_amplitudes(std::span<const cplx> amplitudes) {
    return unitary_dft(amplitudes, fourier::Sign::Negative);
}

StateVector qft(const StateVector& state) { return StateVector(qft_amplitudes(state.amplitudes())); }

StateVector iqft(const StateVector& state) { return StateVector(iqft_amplitudes(state.amplitudes())); }

PolarDecomposition to_polar(std::span<const cplx> amplitudes) {
    std::vector<PolarEntry> entries;
    entries.reserve(amplitudes.size());
    for (const auto& z : amplitudes) {
        const double r = std::abs(z);
        entries.push_back({r, r < kZeroTol ? 0.0 : principal_arg(z)});
    }
    return PolarDecomposition(std::move(entries));
}

PolarDecomposition to_polar(const StateVector& state) { return to_polar(state.amplitudes()); }

StateVector from_polar(const PolarDecomposition& polar) {
    double s = 0.0;
    for (const auto& e : polar.entries()) s += e.magnitude * e.magnitude;
    if (std::abs(s - 1.0) > kNormGuardTol) throw InvalidArgument("polar magnitudes not normalized");
    ComplexVector a;
    a.reserve(polar.size());
    for (const auto& e : polar.entries()) a.push_back(std::polar(e.magnitude, e.phase));
    return StateVector(std::move(a));
}

}  // namespace qhilbert
