#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "qhilbert/channel.hpp"
#include "qhilbert/classical_dht.hpp"
#include "qhilbert/qht.hpp"
#include "qhilbert/statevector.hpp"
#include "qhilbert/stego.hpp"

namespace qhilbert::io {

/// Column-oriented CSV table: a header row and numeric rows.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> columns;

    std::size_t rows() const noexcept { return columns.empty() ? 0 : columns.front().size(); }
    /// Throws ParseError if the column is missing.
    const std::vector<double>& column(std::string_view name) const;
};

/// Reads a numeric CSV with a header line. LF or CRLF line endings, '.' as
/// decimal separator. Throws ParseError naming the offending line.
Table read_csv(std::istream& in);
void write_csv(std::ostream& out, const Table& table);

struct TimedSignal {
    std::vector<double> t;
    RealSignal signal;
};

/// `t,value` signal file. `column` selects a different value column, which
/// lets derived tables (hilbert output) be read back as signals.
TimedSignal read_signal_csv(std::istream& in, std::string_view column = "value");
void write_signal_csv(std::ostream& out, std::span<const double> t, const RealSignal& signal);

/// `k,re,im` spectrum file.
ComplexSpectrum read_spectrum_csv(std::istream& in);
void write_spectrum_csv(std::ostream& out, const ComplexSpectrum& spectrum);

// {"n_qubits": n, "amplitudes": [[re, im], ...]}
nlohmann::json to_json(const StateVector& state);
StateVector state_from_json(const nlohmann::json& j);

// [[r, theta], ...]
nlohmann::json to_json(const PolarDecomposition& polar);
PolarDecomposition polar_from_json(const nlohmann::json& j);

// {"input_state", "output_state", "input_polar", "output_polar"}
nlohmann::json to_json(const QhtTrace& trace);
QhtTrace trace_from_json(const nlohmann::json& j);

/// index,amp_before,phase_before,amp_after,phase_after
void write_figure_csv(std::ostream& out, const std::vector<FigureRow>& rows);
std::vector<FigureRow> read_figure_csv(std::istream& in);

// {"s", "message_block": [state...], "identifier": "bits", "scheme": "10"|"01"}
// plus "qht_baseline": true when set.
nlohmann::json to_json(const stego::StegoFrame& frame);
stego::StegoFrame frame_from_json(const nlohmann::json& j);

// {"bits": "100101", "phases": [...], "seed": u64}
nlohmann::json to_json(const stego::ReferenceRegister& reference);
stego::ReferenceRegister reference_from_json(const nlohmann::json& j);

// {"n_qubits", "delta", "chi_ideal", "bound_exact", "bound_approx"}
nlohmann::json to_json(const channel::LeakageReport& report);
channel::LeakageReport leakage_from_json(const nlohmann::json& j);

/// Aligned text table with 9 significant digits.
void write_leakage_table(std::ostream& out, const std::vector<channel::LeakageReport>& reports);

/// Parses JSON text, mapping syntax errors onto ParseError.
nlohmann::json parse_json(std::istream& in);

/// 17 significant digits, the round-trip width for doubles.
std::string format_double(double v);

}  // namespace qhilbert::io
