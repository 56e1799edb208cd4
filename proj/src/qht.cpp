#include "qhilbert/qht.hpp"

#include <cmath>

#include "qhilbert/error.hpp"

namespace qhilbert {

PolarDecomposition modulate_phases(const PolarDecomposition& polar, const PhaseShiftRule& rule) {
    if (!(rule.zero_tol >= 0.0)) throw InvalidArgument("zero_tol must be nonnegative");
    std::vector<PolarEntry> out;
    out.reserve(polar.size());
    for (const auto& e : polar.entries()) {
        double theta = e.phase;
        if (theta > rule.zero_tol) {
            theta = wrap_phase(theta + rule.positive_shift);
        } else if (theta < -rule.zero_tol) {
            theta = wrap_phase(theta + rule.negative_shift);
        }
        out.push_back({e.magnitude, theta});
    }
    return PolarDecomposition(std::move(out));
}

QhtTrace qht(const StateVector& state, const PhaseShiftRule& rule) {
    PolarDecomposition fourier_polar = to_polar(qft(state));
    PolarDecomposition modulated = modulate_phases(fourier_polar, rule);
    StateVector output = iqft(from_polar(modulated));
    return QhtTrace{state, std::move(fourier_polar), std::move(modulated), std::move(output)};
}

std::vector<FigureRow> emit_figure_data(const QhtTrace& trace) {
    const PolarDecomposition before = to_polar(trace.input_state);
    const PolarDecomposition after = to_polar(trace.output_state);
    std::vector<FigureRow> rows;
    rows.reserve(before.size());
    for (std::size_t x = 0; x < before.size(); ++x) {
        rows.push_back({x, before[x].magnitude, before[x].phase, after[x].magnitude, after[x].phase});
    }
    return rows;
}

}  // namespace qhilbert
