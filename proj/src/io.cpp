#include "qhilbert/io.hpp"

#include <charconv>
#include <cstdio>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "qhilbert/error.hpp"

namespace qhilbert::io {

using nlohmann::json;

namespace {

std::vector<std::string> split_fields(std::string_view line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        std::string_view field = line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        while (!field.empty() && (field.front() == ' ' || field.front() == '\t')) field.remove_prefix(1);
        while (!field.empty() && (field.back() == ' ' || field.back() == '\t')) field.remove_suffix(1);
        out.emplace_back(field);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

double parse_number(const std::string& field, std::size_t line) {
    double v = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    if (!field.empty() && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (field.empty() || ec != std::errc{} || ptr != last) {
        throw ParseError("not a number: '" + field + "'", line);
    }
    return v;
}

void expect_header(const Table& table, std::initializer_list<std::string_view> names) {
    std::size_t i = 0;
    for (auto name : names) {
        if (i >= table.header.size() || table.header[i] != name) {
            throw ParseError("unexpected header, expected column '" + std::string(name) + "'", 1);
        }
        ++i;
    }
}

// Wraps nlohmann access errors so callers see a single error type.
template <typename F>
auto guarded(const char* what, F&& f) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid ") + what + ": " + e.what());
    }
}

json complex_pair(const cplx& z) { return json::array({z.real(), z.imag()}); }

}  // namespace

const std::vector<double>& Table::column(std::string_view name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) return columns[i];
    }
    throw ParseError("missing column '" + std::string(name) + "'", 1);
}

Table read_csv(std::istream& in) {
    Table table;
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    std::size_t pending_blank = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) {
            if (pending_blank == 0) pending_blank = line_no;
            continue;
        }
        if (pending_blank != 0) throw ParseError("blank line inside table", pending_blank);
        auto fields = split_fields(line);
        if (!have_header) {
            for (const auto& f : fields) {
                if (f.empty()) throw ParseError("empty column name in header", line_no);
            }
            table.header = std::move(fields);
            table.columns.assign(table.header.size(), {});
            have_header = true;
            continue;
        }
        if (fields.size() != table.header.size()) {
            throw ParseError("expected " + std::to_string(table.header.size()) + " fields, found " +
                                 std::to_string(fields.size()),
                             line_no);
        }
        for (std::size_t i = 0; i < fields.size(); ++i) table.columns[i].push_back(parse_number(fields[i], line_no));
    }
    if (!have_header) throw ParseError("empty input, missing header");
    return table;
}

void write_csv(std::ostream& out, const Table& table) {
    for (std::size_t i = 0; i < table.header.size(); ++i) out << (i ? "," : "") << table.header[i];
    out << '\n';
    for (std::size_t r = 0; r < table.rows(); ++r) {
        for (std::size_t c = 0; c < table.columns.size(); ++c) {
            out << (c ? "," : "") << format_double(table.columns[c][r]);
        }
        out << '\n';
    }
}

TimedSignal read_signal_csv(std::istream& in, std::string_view column) {
    Table table = read_csv(in);
    if (table.header.empty() || table.header.front() != "t") throw ParseError("first column must be 't'", 1);
    const auto& values = table.column(column);
    if (values.empty()) throw ParseError("signal has no samples");
    try {
        return TimedSignal{table.columns.front(), RealSignal(values)};
    } catch (const InvalidArgument& e) {
        throw ParseError(e.what());
    }
}

void write_signal_csv(std::ostream& out, std::span<const double> t, const RealSignal& signal) {
    if (t.size() != signal.size()) throw InvalidArgument("time axis and signal lengths differ");
    write_csv(out, Table{{"t", "value"}, {std::vector<double>(t.begin(), t.end()),
                                          std::vector<double>(signal.begin(), signal.end())}});
}

ComplexSpectrum read_spectrum_csv(std::istream& in) {
    Table table = read_csv(in);
    expect_header(table, {"k", "re", "im"});
    if (table.rows() == 0) throw ParseError("spectrum has no bins");
    const auto& k = table.columns[0];
    ComplexVector bins(table.rows());
    for (std::size_t r = 0; r < table.rows(); ++r) {
        if (k[r] != static_cast<double>(r)) throw ParseError("bins must be listed in order k = 0..N-1", r + 2);
        bins[r] = cplx{table.columns[1][r], table.columns[2][r]};
    }
    return ComplexSpectrum(std::move(bins));
}

void write_spectrum_csv(std::ostream& out, const ComplexSpectrum& spectrum) {
    Table table{{"k", "re", "im"}, {{}, {}, {}}};
    for (std::size_t k = 0; k < spectrum.size(); ++k) {
        table.columns[0].push_back(static_cast<double>(k));
        table.columns[1].push_back(spectrum[k].real());
        table.columns[2].push_back(spectrum[k].imag());
    }
    write_csv(out, table);
}

json to_json(const StateVector& state) {
    json amps = json::array();
    for (const auto& z : state.amplitudes()) amps.push_back(complex_pair(z));
    return json{{"n_qubits", state.n_qubits()}, {"amplitudes", std::move(amps)}};
}

StateVector state_from_json(const json& j) {
    return guarded("state", [&] {
        const int n = j.at("n_qubits").get<int>();
        const auto& amps = j.at("amplitudes");
        if (!amps.is_array()) throw ParseError("state amplitudes must be an array");
        ComplexVector a;
        a.reserve(amps.size());
        for (const auto& pair : amps) {
            if (!pair.is_array() || pair.size() != 2) throw ParseError("amplitude must be a [re, im] pair");
            a.emplace_back(pair[0].get<double>(), pair[1].get<double>());
        }
        StateVector s(std::move(a));
        if (s.n_qubits() != n) throw ParseError("n_qubits does not match amplitude count");
        return s;
    });
}

json to_json(const PolarDecomposition& polar) {
    json out = json::array();
    for (const auto& e : polar.entries()) out.push_back(json::array({e.magnitude, e.phase}));
    return out;
}

PolarDecomposition polar_from_json(const json& j) {
    return guarded("polar decomposition", [&] {
        if (!j.is_array()) throw ParseError("polar decomposition must be an array");
        std::vector<PolarEntry> entries;
        entries.reserve(j.size());
        for (const auto& pair : j) {
            if (!pair.is_array() || pair.size() != 2) throw ParseError("polar entry must be a [r, theta] pair");
            entries.push_back({pair[0].get<double>(), pair[1].get<double>()});
        }
        return PolarDecomposition(std::move(entries));
    });
}

json to_json(const QhtTrace& trace) {
    return json{{"input_state", to_json(trace.input_state)},
                {"output_state", to_json(trace.output_state)},
                {"input_polar", to_json(trace.input_polar)},
                {"output_polar", to_json(trace.output_polar)}};
}

QhtTrace trace_from_json(const json& j) {
    return guarded("trace", [&] {
        return QhtTrace{state_from_json(j.at("input_state")), polar_from_json(j.at("input_polar")),
                        polar_from_json(j.at("output_polar")), state_from_json(j.at("output_state"))};
    });
}

void write_figure_csv(std::ostream& out, const std::vector<FigureRow>& rows) {
    Table table{{"index", "amp_before", "phase_before", "amp_after", "phase_after"}, std::vector<std::vector<double>>(5)};
    for (const auto& r : rows) {
        table.columns[0].push_back(static_cast<double>(r.index));
        table.columns[1].push_back(r.amp_before);
        table.columns[2].push_back(r.phase_before);
        table.columns[3].push_back(r.amp_after);
        table.columns[4].push_back(r.phase_after);
    }
    write_csv(out, table);
}

std::vector<FigureRow> read_figure_csv(std::istream& in) {
    Table table = read_csv(in);
    expect_header(table, {"index", "amp_before", "phase_before", "amp_after", "phase_after"});
    std::vector<FigureRow> rows(table.rows());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const double idx = table.columns[0][r];
        if (idx < 0 || idx != static_cast<double>(static_cast<std::size_t>(idx))) {
            throw ParseError("index must be a nonnegative integer", r + 2);
        }
        rows[r] = {static_cast<std::size_t>(idx), table.columns[1][r], table.columns[2][r], table.columns[3][r],
                   table.columns[4][r]};
    }
    return rows;
}

json to_json(const stego::StegoFrame& frame) {
    json block = json::array();
    for (const auto& q : frame.message_block()) block.push_back(to_json(q));
    json j{{"s", frame.s()},
           {"message_block", std::move(block)},
           {"identifier", frame.identifier().to_string()},
           {"scheme", stego::to_string(frame.scheme())}};
    if (frame.qht_baseline()) j["qht_baseline"] = true;
    return j;
}

stego::StegoFrame frame_from_json(const json& j) {
    return guarded("frame", [&] {
        const auto s = j.at("s").get<std::size_t>();
        std::vector<StateVector> block;
        for (const auto& q : j.at("message_block")) block.push_back(state_from_json(q));
        if (block.size() != s) throw ParseError("message block length does not match s");
        const bool baseline = j.contains("qht_baseline") && j.at("qht_baseline").get<bool>();
        try {
            return stego::StegoFrame(std::move(block), stego::BitString::parse(j.at("identifier").get<std::string>()),
                                     stego::parse_scheme(j.at("scheme").get<std::string>()), baseline);
        } catch (const InvalidArgument& e) {
            throw ParseError(std::string("invalid frame: ") + e.what());
        }
    });
}

json to_json(const stego::ReferenceRegister& reference) {
    return json{{"bits", reference.bits().to_string()},
                {"phases", std::vector<double>(reference.phases().begin(), reference.phases().end())},
                {"seed", reference.seed()}};
}

stego::ReferenceRegister reference_from_json(const json& j) {
    return guarded("reference", [&] {
        try {
            return stego::ReferenceRegister(stego::BitString::parse(j.at("bits").get<std::string>()),
                                            j.at("phases").get<std::vector<double>>(),
                                            j.value("seed", std::uint64_t{0}));
        } catch (const InvalidArgument& e) {
            throw ParseError(std::string("invalid reference: ") + e.what());
        }
    });
}

json to_json(const channel::LeakageReport& r) {
    return json{{"n_qubits", r.n_qubits},
                {"delta", r.delta},
                {"chi_ideal", r.chi_ideal},
                {"bound_exact", r.bound_exact},
                {"bound_approx", r.bound_approx}};
}

channel::LeakageReport leakage_from_json(const json& j) {
    return guarded("leakage report", [&] {
        channel::LeakageReport r;
        r.n_qubits = j.at("n_qubits").get<int>();
        r.delta = j.at("delta").get<double>();
        r.chi_ideal = j.at("chi_ideal").get<double>();
        r.bound_exact = j.at("bound_exact").get<double>();
        r.bound_approx = j.at("bound_approx").get<double>();
        return r;
    });
}

void write_leakage_table(std::ostream& out, const std::vector<channel::LeakageReport>& reports) {
    constexpr int w = 17;
    auto cell = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.9g", v);
        return std::string(buf);
    };
    out << std::left << std::setw(w) << "delta" << std::setw(w) << "bound_exact" << std::setw(w) << "bound_approx"
        << "chi_ideal" << '\n';
    for (const auto& r : reports) {
        out << std::left << std::setw(w) << cell(r.delta) << std::setw(w) << cell(r.bound_exact) << std::setw(w)
            << cell(r.bound_approx) << cell(r.chi_ideal) << '\n';
    }
}

json parse_json(std::istream& in) {
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace qhilbert::io
