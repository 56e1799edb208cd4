#pragma once

#include <cstddef>
#include <numbers>
#include <vector>

#include "qhilbert/statevector.hpp"

namespace qhilbert {

/// Sign-conditional phase shift applied to Fourier coefficients.
///
///   theta' = theta + positive_shift   if theta >  zero_tol
///   theta' = theta                    if |theta| <= zero_tol
///   theta' = theta + negative_shift   if theta < -zero_tol
///
/// The defaults are the quantum Hilbert rule (-pi/2 on positive phases,
/// +pi/2 on negative ones). theta = pi counts as positive.
struct PhaseShiftRule {
    double positive_shift = -std::numbers::pi / 2.0;
    double negative_shift = +std::numbers::pi / 2.0;
    double zero_tol = kZeroTol;
};

/// Every intermediate of one QHT evaluation.
struct QhtTrace {
    StateVector input_state;        // |psi>
    PolarDecomposition input_polar;   // polar form of QFT|psi>
    PolarDecomposition output_polar;  // after the phase rule
    StateVector output_state;       // IQFT of the modulated coefficients
};

/// Applies `rule` entrywise; magnitudes are untouched and shifted phases
/// are re-wrapped into (-pi, pi]. Throws InvalidArgument if rule.zero_tol < 0.
PolarDecomposition modulate_phases(const PolarDecomposition& polar, const PhaseShiftRule& rule = {});

/// QFT, polar split, phase rule, recombination, IQFT.
///
/// This is a state-dependent map: the branch taken for each coefficient
/// depends on the sign of its phase, so the transform is not linear.
QhtTrace qht(const StateVector& state, const PhaseShiftRule& rule = {});

struct FigureRow {
    std::size_t index = 0;
    double amp_before = 0.0;
    double phase_before = 0.0;
    double amp_after = 0.0;
    double phase_after = 0.0;
};

/// One row per computational basis state, before and after the transform.
std::vector<FigureRow> emit_figure_data(const QhtTrace& trace);

}  // namespace qhilbert
