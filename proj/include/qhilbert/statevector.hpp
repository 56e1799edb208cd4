#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qhilbert/fourier.hpp"

namespace qhilbert {

/// Magnitudes below this are treated as exact zeros and carry phase 0.
inline constexpr double kZeroTol = 1e-12;

/// Tolerance on sum |a|^2 = 1 accepted at construction. Looser than the
/// internal round-off so states read back from decimal text are accepted.
inline constexpr double kNormGuardTol = 1e-6;

inline constexpr int kMaxQubits = 20;

/// Dense amplitude vector on n qubits, N = 2^n. Amplitude index x is the
/// big-endian reading of the qubit string: qubit 0 is the most significant bit.
class StateVector {
public:
    /// Throws InvalidArgument unless the length is a power of two >= 2,
    /// every amplitude is finite, and the norm is 1 within kNormGuardTol
    /// ("state not normalized").
    explicit StateVector(ComplexVector amplitudes);

    static StateVector basis(int n_qubits, std::size_t index);
    static StateVector uniform(int n_qubits);

    int n_qubits() const noexcept { return n_qubits_; }
    std::size_t size() const noexcept { return amplitudes_.size(); }
    const cplx& operator[](std::size_t x) const { return amplitudes_[x]; }
    std::span<const cplx> amplitudes() const noexcept { return amplitudes_; }

    double norm() const;

private:
    ComplexVector amplitudes_;
    int n_qubits_ = 0;
};

struct PolarEntry {
    double magnitude = 0.0;
    double phase = 0.0;
};

/// Per-index (r, theta) view with r >= 0 and theta in (-pi, pi].
class PolarDecomposition {
public:
    PolarDecomposition() = default;
    explicit PolarDecomposition(std::vector<PolarEntry> entries);

    std::size_t size() const noexcept { return entries_.size(); }
    const PolarEntry& operator[](std::size_t j) const { return entries_[j]; }
    std::span<const PolarEntry> entries() const noexcept { return entries_; }

private:
    std::vector<PolarEntry> entries_;
};

/// Map an angle into (-pi, pi].
double wrap_phase(double theta);

/// Principal argument in (-pi, pi], with -pi folded onto +pi and 0 for |z| < kZeroTol.
double principal_arg(const cplx& z);

/// Seeded Haar-like random state: i.i.d. standard complex Gaussian components, normalized.
StateVector random_state(int n_qubits, std::uint64_t seed);

/// beta_j = (1/sqrt N) sum_k alpha_k e^{+2 pi i j k / N}
StateVector qft(const StateVector& state);

/// alpha_x = (1/sqrt N) sum_j beta_j e^{-2 pi i j x / N}
StateVector iqft(const StateVector& state);

// Raw linear maps behind qft/iqft. No length or normalization checks beyond
// a nonempty input; used where unnormalized vectors are needed.
ComplexVector qft_amplitudes(std::span<const cplx> amplitudes);
ComplexVector iqft_amplitudes(std::span<const cplx> amplitudes);

PolarDecomposition to_polar(const StateVector& state);
PolarDecomposition to_polar(std::span<const cplx> amplitudes);

/// Throws InvalidArgument if sum r^2 deviates from 1 by more than kNormGuardTol.
StateVector from_polar(const PolarDecomposition& polar);

}  // namespace qhilbert
