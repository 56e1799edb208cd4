#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "qhilbert/error.hpp"
#include "qhilbert/io.hpp"

namespace qhilbert::cli {

namespace {

struct UsageError : Error {
    using Error::Error;
};

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    return in;
}

// Writes through `emit` to `path`, or to `out` when no path was given.
void write_output(const std::string& path, std::ostream& out, const std::function<void(std::ostream&)>& emit) {
    if (path.empty()) {
        emit(out);
        return;
    }
    std::ofstream file(path);
    if (!file) throw UsageError("cannot write '" + path + "'");
    emit(file);
    if (!file) throw UsageError("write to '" + path + "' failed");
}

void require_csv(const std::string& format) {
    if (format != "csv") throw UsageError("signal commands only support --format csv");
}

struct Options {
    std::string output;
    std::string format = "csv";
    std::uint64_t seed = 0;

    // gen-signal
    std::string kind = "two-tone";
    double f1 = 0.5;
    double f2 = 1.5;
    std::size_t samples = 64;
    double duration = 4.0;
    double carrier = 20.0;
    double modulator = 2.0;
    double depth = 0.5;

    // hilbert / envelope
    std::string input;
    std::string column = "value";

    // qht
    std::optional<int> qubits;

    // stego
    std::string reference;
    std::string reference_file;
    std::string reference_output;
    std::string payload;
    std::string identifier;
    std::string scheme = "10";
    std::string frame;
    bool qht_baseline = false;

    // leakage
    std::vector<double> deltas;
};

void add_common(CLI::App* cmd, Options& o, bool with_seed) {
    cmd->add_option("--output,-o", o.output, "Output path (default: stdout)");
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json", "text"}));
    if (with_seed) cmd->add_option("--seed", o.seed, "Seed for deterministic generation");
}

int cmd_gen_signal(const Options& o, std::ostream& out) {
    require_csv(o.format);
    const std::vector<double> t = sample_times(o.samples, o.duration);
    RealSignal x = [&] {
        if (o.kind == "two-tone") return two_tone(o.f1, o.f2, o.samples, o.duration);
        if (o.kind == "am") return am_tone(o.carrier, o.modulator, o.depth, o.samples, o.duration);
        throw UsageError("unknown signal kind '" + o.kind + "'");
    }();
    write_output(o.output, out, [&](std::ostream& s) { io::write_signal_csv(s, t, x); });
    return kSuccess;
}

io::TimedSignal load_signal(const Options& o) {
    auto in = open_input(o.input);
    return io::read_signal_csv(in, o.column);
}

int cmd_hilbert(const Options& o, std::ostream& out) {
    require_csv(o.format);
    const io::TimedSignal sig = load_signal(o);
    const AnalyticSignal z = make_analytic(sig.signal);
    const RealSignal h = z.imag();
    const RealSignal env = z.magnitude();
    io::Table table{{"t", "original", "hilbert", "envelope"},
                    {sig.t,
                     {sig.signal.begin(), sig.signal.end()},
                     {h.begin(), h.end()},
                     {env.begin(), env.end()}}};
    write_output(o.output, out, [&](std::ostream& s) { io::write_csv(s, table); });
    return kSuccess;
}

int cmd_envelope(const Options& o, std::ostream& out) {
    require_csv(o.format);
    const io::TimedSignal sig = load_signal(o);
    const RealSignal env = envelope(sig.signal);
    write_output(o.output, out, [&](std::ostream& s) { io::write_signal_csv(s, sig.t, env); });
    return kSuccess;
}

StateVector load_state(const std::string& path) {
    auto in = open_input(path);
    const auto j = io::parse_json(in);
    return j.contains("input_state") ? io::state_from_json(j.at("input_state")) : io::state_from_json(j);
}

int cmd_qht(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.format == "text") throw UsageError("qht supports --format csv or json");
    if (o.input.empty() == !o.qubits.has_value()) throw UsageError("qht needs exactly one of --qubits or --input");
    const StateVector state = o.input.empty() ? random_state(*o.qubits, o.seed) : load_state(o.input);
    const QhtTrace trace = qht(state);
    write_output(o.output, out, [&](std::ostream& s) {
        if (o.format == "json") {
            s << io::to_json(trace).dump(2) << '\n';
        } else {
            io::write_figure_csv(s, emit_figure_data(trace));
        }
    });
    std::ostream& summary = o.output.empty() ? err : out;
    char buf[128];
    std::snprintf(buf, sizeof buf, "qubits=%d norm_before=%.9g norm_after=%.9g\n", state.n_qubits(),
                  trace.input_state.norm(), trace.output_state.norm());
    summary << buf;
    return kSuccess;
}

stego::ReferenceRegister reference_from(const Options& o) {
    if (o.reference.empty() == o.reference_file.empty()) {
        throw UsageError("need exactly one of --reference or --reference-file");
    }
    if (!o.reference.empty()) return stego::make_reference(stego::BitString::parse(o.reference), o.seed);
    auto in = open_input(o.reference_file);
    return io::reference_from_json(io::parse_json(in));
}

stego::StegoFrame encode_from(const Options& o, const stego::ReferenceRegister& ref) {
    if (o.payload.empty() || o.identifier.empty()) throw UsageError("--payload and --identifier are required");
    return stego::encode(ref, stego::Payload(stego::BitString::parse(o.payload)),
                         stego::BitString::parse(o.identifier), stego::parse_scheme(o.scheme),
                         stego::EncodeOptions{o.qht_baseline});
}

int cmd_stego_encode(const Options& o, std::ostream& out) {
    const auto ref = reference_from(o);
    const auto frame = encode_from(o, ref);
    write_output(o.output, out, [&](std::ostream& s) { s << io::to_json(frame).dump(2) << '\n'; });
    if (!o.reference_output.empty()) {
        write_output(o.reference_output, out, [&](std::ostream& s) { s << io::to_json(ref).dump(2) << '\n'; });
    }
    return kSuccess;
}

int cmd_stego_decode(const Options& o, std::ostream& out) {
    if (o.frame.empty()) throw UsageError("--frame is required");
    const auto ref = reference_from(o);
    auto in = open_input(o.frame);
    const auto frame = io::frame_from_json(io::parse_json(in));
    out << stego::decode(frame, ref).bits().to_string() << '\n';
    return kSuccess;
}

int cmd_stego_roundtrip(const Options& o, std::ostream& out, std::ostream& err) {
    const auto ref = reference_from(o);
    const auto frame = encode_from(o, ref);
    if (!o.output.empty()) {
        write_output(o.output, out, [&](std::ostream& s) { s << io::to_json(frame).dump(2) << '\n'; });
    }
    const std::string recovered = stego::decode(frame, ref).bits().to_string();
    out << recovered << '\n';
    if (recovered != o.payload) {
        err << "round trip mismatch: sent " << o.payload << ", recovered " << recovered << '\n';
        return kDomainFailure;
    }
    return kSuccess;
}

int cmd_leakage(const Options& o, std::ostream& out) {
    if (o.deltas.empty()) throw UsageError("at least one --delta is required");
    std::vector<channel::LeakageReport> reports;
    for (double d : o.deltas) reports.push_back(channel::leakage_bound(d, o.qubits.value_or(1)));
    write_output(o.output, out, [&](std::ostream& s) {
        if (o.format == "json") {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& r : reports) arr.push_back(io::to_json(r));
            s << arr.dump(2) << '\n';
        } else if (o.format == "csv") {
            io::Table t{{"delta", "bound_exact", "bound_approx", "chi_ideal"}, std::vector<std::vector<double>>(4)};
            for (const auto& r : reports) {
                t.columns[0].push_back(r.delta);
                t.columns[1].push_back(r.bound_exact);
                t.columns[2].push_back(r.bound_approx);
                t.columns[3].push_back(r.chi_ideal);
            }
            io::write_csv(s, t);
        } else {
            io::write_leakage_table(s, reports);
        }
    });
    return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Classical and quantum Hilbert transform toolkit", "qhilbert"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen-signal", "Generate a two-tone or AM test signal as t,value CSV");
    add_common(gen, o, false);
    gen->add_option("--kind", o.kind, "two-tone | am")->check(CLI::IsMember({"two-tone", "am"}));
    gen->add_option("--f1", o.f1, "Cosine tone frequency (Hz)");
    gen->add_option("--f2", o.f2, "Sine tone frequency (Hz)");
    gen->add_option("--samples,-n", o.samples, "Sample count N");
    gen->add_option("--duration", o.duration, "Signal duration (s)");
    gen->add_option("--carrier", o.carrier, "AM carrier frequency (Hz)");
    gen->add_option("--modulator", o.modulator, "AM modulating frequency (Hz)");
    gen->add_option("--depth", o.depth, "AM modulation depth");

    auto* hil = app.add_subcommand("hilbert", "Discrete Hilbert transform of a signal CSV");
    add_common(hil, o, false);
    hil->add_option("--input,-i", o.input, "Signal CSV")->required();
    hil->add_option("--column", o.column, "Value column to transform");

    auto* env = app.add_subcommand("envelope", "Envelope |x + iH[x]| of a signal CSV");
    add_common(env, o, false);
    env->add_option("--input,-i", o.input, "Signal CSV")->required();
    env->add_option("--column", o.column, "Value column to transform");

    auto* q = app.add_subcommand("qht", "Quantum Hilbert transform of a seeded random or given state");
    add_common(q, o, true);
    q->add_option("--qubits", o.qubits, "Qubit count for a random state");
    q->add_option("--input,-i", o.input, "State or trace JSON");

    auto* stg = app.add_subcommand("stego", "Phase steganography encode/decode");
    stg->require_subcommand(1);
    auto add_stego = [&](CLI::App* c, bool encode_side) {
        add_common(c, o, true);
        c->add_option("--reference", o.reference, "Reference bit string");
        c->add_option("--reference-file", o.reference_file, "Reference register JSON");
        if (encode_side) {
            c->add_option("--payload", o.payload, "Secret bit string");
            c->add_option("--identifier", o.identifier, "Bit mask of carrier qubits");
            c->add_option("--scheme", o.scheme, "10 (+pi/2 -> 1) or 01 (+pi/2 -> 0)");
            c->add_flag("--qht-baseline", o.qht_baseline, "Run reference phases through the QHT rule first");
        }
    };
    auto* enc = stg->add_subcommand("encode", "Write a frame JSON");
    add_stego(enc, true);
    enc->add_option("--reference-output", o.reference_output, "Also write the reference register JSON");
    auto* dec = stg->add_subcommand("decode", "Decode a frame JSON against a reference");
    add_stego(dec, false);
    dec->add_option("--frame", o.frame, "Frame JSON")->required();
    auto* rt = stg->add_subcommand("roundtrip", "Encode, decode and compare");
    add_stego(rt, true);

    auto* leak = app.add_subcommand("leakage", "Eavesdropper leakage bounds");
    add_common(leak, o, false);
    leak->add_option("--delta", o.deltas, "Noise level(s) in [0, 1]")->delimiter(',');
    leak->add_option("--qubits", o.qubits, "Intercept register size");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    if (leak->parsed() && o.format == "csv" && leak->count("--format") == 0) o.format = "text";

    try {
        if (gen->parsed()) return cmd_gen_signal(o, out);
        if (hil->parsed()) return cmd_hilbert(o, out);
        if (env->parsed()) return cmd_envelope(o, out);
        if (q->parsed()) return cmd_qht(o, out, err);
        if (enc->parsed()) return cmd_stego_encode(o, out);
        if (dec->parsed()) return cmd_stego_decode(o, out);
        if (rt->parsed()) return cmd_stego_roundtrip(o, out, err);
        if (leak->parsed()) return cmd_leakage(o, out);
    } catch (const DecodeError& e) {
        err << DecodeError::name(e.kind()) << '\n' << "error: " << e.what() << '\n';
        return kDomainFailure;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    err << "error: no command\n";
    return kUsageError;
}

}  // namespace qhilbert::cli
