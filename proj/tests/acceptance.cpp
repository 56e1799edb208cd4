// Acceptance suite: one pass/fail line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "cli_harness.hpp"
#include "oracles.hpp"
#include "qhilbert/channel.hpp"
#include "qhilbert/classical_dht.hpp"
#include "qhilbert/error.hpp"
#include "qhilbert/io.hpp"
#include "qhilbert/qht.hpp"
#include "qhilbert/stego.hpp"

using namespace qhilbert;

namespace {

constexpr double kPi = std::numbers::pi;

struct Check {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) detail = what;
        ok = ok && cond;
    }
};

struct Criterion {
    int id;
    std::string name;
    double budget_seconds;
    std::function<void(Check&)> body;
};

RealSignal tone(std::size_t n, double cycles, bool sine) {
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double a = 2 * kPi * cycles * static_cast<double>(i) / static_cast<double>(n);
        x[i] = sine ? std::sin(a) : std::cos(a);
    }
    return RealSignal(std::move(x));
}

void filter_exactness(Check& c) {
    c.expect(analytic_filter(8) == std::vector<double>{1, 2, 2, 2, 1, 0, 0, 0}, "H[k] for N=8");
}

void classical_identities(Check& c) {
    const std::size_t n = 256;
    for (double cycles : {1.0, 3.0, 17.0, 100.0, 127.0}) {
        const RealSignal cs = tone(n, cycles, false), sn = tone(n, cycles, true);
        const RealSignal hc = hilbert(cs), hs = hilbert(sn);
        for (std::size_t i = 0; i < n; ++i) {
            c.expect(std::abs(hc[i] - sn[i]) <= 1e-9, "H[cos] = sin");
            c.expect(std::abs(hs[i] + cs[i]) <= 1e-9, "H[sin] = -cos");
        }
    }
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const RealSignal x(oracle::random_zero_dc_nyquist(n, seed));
        const RealSignal hh = hilbert(hilbert(x));
        for (std::size_t i = 0; i < n; ++i) c.expect(std::abs(hh[i] + x[i]) <= 1e-9, "H[H[x]] = -x");
    }
}

void envelope_reproduction(Check& c) {
    const std::size_t n = 512;
    const RealSignal env = envelope(am_tone(20.0, 2.0, 0.5, n, 1.0));
    const auto t = sample_times(n, 1.0);
    const std::size_t margin = n / 20;
    double worst = 0.0;
    for (std::size_t i = margin; i < n - margin; ++i) {
        worst = std::max(worst, std::abs(env[i] - (1.0 + 0.5 * std::cos(2 * kPi * 2.0 * t[i]))));
    }
    c.expect(worst <= 2e-2, "interior envelope error " + std::to_string(worst));
}

void qft_correctness(Check& c) {
    for (int n : {1, 3, 5, 8}) {
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            const auto s = random_state(n, 7000 + seed);
            const auto f = qft(s);
            c.expect(oracle::max_abs_diff(f.amplitudes(), oracle::naive_qft(s.amplitudes())) <= 1e-12,
                     "qft vs oracle at N=" + std::to_string(s.size()));
            c.expect(oracle::max_abs_diff(iqft(f).amplitudes(), s.amplitudes()) <= 1e-12, "iqft(qft) identity");
        }
    }
}

void qht_invariants(Check& c) {
    for (int n : {3, 5}) {
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const auto s = random_state(n, seed);
            const auto trace = qht(s);
            c.expect(std::abs(trace.output_state.norm() - 1.0) <= 1e-10, "output norm");
            const auto before = to_polar(qft(s));
            const auto after = to_polar(qft(trace.output_state));
            bool nonzero_phase = false;
            for (std::size_t j = 0; j < before.size(); ++j) {
                c.expect(std::abs(before[j].magnitude - after[j].magnitude) <= 1e-12, "Fourier magnitude");
                nonzero_phase = nonzero_phase || std::abs(before[j].phase) > kZeroTol;
            }
            if (nonzero_phase) {
                double change = 0.0;
                for (std::size_t x = 0; x < s.size(); ++x) {
                    change = std::max(change, std::abs(trace.output_state[x] - s[x]));
                }
                c.expect(change > 1e-3, "basis amplitudes changed");
            }
        }
    }
}

void qht_fixed_points(Check& c) {
    for (int n = 1; n <= 8; ++n) {
        for (const auto& s : {StateVector::basis(n, 0), StateVector::uniform(n)}) {
            c.expect(oracle::max_abs_diff(qht(s).output_state.amplitudes(), s.amplitudes()) <= 1e-12,
                     "fixed point at n=" + std::to_string(n));
        }
    }
}

stego::BitString bits_of(std::uint64_t value, std::size_t width) {
    std::vector<std::uint8_t> b(width);
    for (std::size_t i = 0; i < width; ++i) b[i] = static_cast<std::uint8_t>((value >> (width - 1 - i)) & 1u);
    return stego::BitString(std::move(b));
}

void stego_round_trip(Check& c) {
    using namespace stego;
    const auto ref = make_reference(BitString::parse("100101"));
    const auto frame = encode(ref, Payload(BitString::parse("101")), BitString::parse("101010"), Scheme::PlusIsOne);
    c.expect(frame.total_length() == 14, "frame length 14");
    c.expect(decode(frame, ref).bits().to_string() == "101", "example payload recovered");

    std::size_t total = 0, recovered = 0;
    for (std::uint64_t id = 1; id < 64; ++id) {
        const BitString identifier = bits_of(id, 6);
        const std::size_t p = identifier.popcount();
        for (std::uint64_t m = 0; m < (1u << p); ++m) {
            const Payload payload(bits_of(m, p));
            for (Scheme scheme : {Scheme::PlusIsOne, Scheme::PlusIsZero}) {
                ++total;
                const auto f = encode(ref, payload, identifier, scheme);
                if (f.total_length() == 14 && decode(f, ref) == payload) ++recovered;
            }
        }
    }
    c.expect(total == 2 * (729 - 1), "enumerated 1456 combinations");
    c.expect(recovered == total, std::to_string(total - recovered) + " misdecodes");
}

void leakage_numbers(Check& c) {
    using namespace channel;
    for (int n = 1; n <= 5; ++n) {
        for (std::size_t m : {std::size_t{1}, std::size_t{2}, std::size_t{5}, std::size_t{1} << n}) {
            c.expect(std::abs(holevo_chi(ideal_intercept_ensemble(n, m))) <= 1e-10, "chi_ideal = 0");
        }
    }
    c.expect(std::abs(binary_entropy(0.5) - 1.0) <= 1e-12, "H2(0.5) = 1");
    c.expect(leakage_bound(0.0).bound_exact == 0.0, "bound(0) = 0");
    c.expect(std::abs(leakage_bound(1.0).bound_exact - 1.0) <= 1e-12, "bound(1) = 1");
    double prev = -1.0;
    for (int i = 0; i < 1000; ++i) {
        const double b = leakage_bound(i / 999.0).bound_exact;
        c.expect(b >= prev, "bound nondecreasing");
        prev = b;
    }
}

void cli_integration(Check& c) {
    using cli_harness::run;
    cli_harness::ScratchDir dir("acceptance");
    const auto sig = dir.file("sig.csv"), am = dir.file("am.csv"), ht = dir.file("ht.csv"), env = dir.file("env.csv");
    const auto fig = dir.file("fig.csv"), frame = dir.file("frame.json"), ref = dir.file("ref.json");

    auto expect_code = [&](const std::vector<std::string>& args, int code) {
        const auto r = run(args);
        std::string line;
        for (const auto& a : args) line += a + " ";
        c.expect(r.code == code, "'" + line + "' exited " + std::to_string(r.code));
        return r;
    };
    auto reparse_csv = [&](const std::string& path) {
        try {
            std::ifstream in(path);
            return io::read_csv(in).rows();
        } catch (const Error&) {
            c.expect(false, "re-parse " + path);
            return std::size_t{0};
        }
    };

    expect_code({"gen-signal", "--f1", "0.5", "--f2", "1.5", "--samples", "64", "--duration", "4", "-o", sig}, 0);
    expect_code({"hilbert", "--input", sig, "--output", ht}, 0);
    c.expect(reparse_csv(ht) == 64, "hilbert output rows");

    expect_code({"gen-signal", "--kind", "am", "--samples", "512", "--duration", "1", "-o", am}, 0);
    expect_code({"envelope", "--input", am, "--output", env}, 0);
    c.expect(reparse_csv(env) == 512, "envelope output rows");
    const auto empty = dir.file("empty.csv");
    cli_harness::spit(empty, "");
    expect_code({"hilbert", "--input", empty}, 2);

    expect_code({"qht", "--qubits", "5", "--seed", "7", "--output", fig}, 0);
    c.expect(reparse_csv(fig) == 32, "qht 32 rows");
    const auto q3 = expect_code({"qht", "--qubits", "3", "--seed", "42"}, 0);
    std::istringstream q3in(q3.out);
    c.expect(io::read_figure_csv(q3in).size() == 8, "qht 8 rows");
    expect_code({"qht", "--qubits", "0"}, 2);

    const auto rt = expect_code(
        {"stego", "roundtrip", "--reference", "100101", "--payload", "101", "--identifier", "101010", "--scheme", "10"}, 0);
    c.expect(rt.out == "101\n", "roundtrip prints 101");
    expect_code({"stego", "encode", "--reference", "100101", "--payload", "101", "--identifier", "101010", "--output",
                 frame, "--reference-output", ref},
                0);
    auto j = nlohmann::json::parse(cli_harness::slurp(frame));
    io::frame_from_json(j);
    j["message_block"][1]["amplitudes"][0] = {std::cos(0.5), std::sin(0.5)};
    const auto tampered = dir.file("tampered.json");
    cli_harness::spit(tampered, j.dump());
    const auto bad = expect_code({"stego", "decode", "--frame", tampered, "--reference-file", ref}, 1);
    c.expect(bad.err.find("frame corrupted") != std::string::npos, "tamper reported as frame corrupted");
    expect_code({"stego", "encode", "--reference", "100101", "--payload", "10", "--identifier", "101010"}, 2);

    const auto leak = expect_code({"leakage", "--delta", "0,0.04,0.5,1", "--format", "json"}, 0);
    const auto arr = nlohmann::json::parse(leak.out);
    c.expect(arr.size() == 4, "four leakage rows");
    for (const auto& row : arr) {
        const auto r = io::leakage_from_json(row);
        c.expect(r.chi_ideal == 0.0, "chi_ideal column zero");
        if (r.delta == 1.0) c.expect(r.bound_exact == 1.0, "bound(1) = 1");
    }
    expect_code({"leakage", "--delta", "0"}, 0);
    expect_code({"leakage", "--delta", "1.5"}, 2);
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "filter exactness", 1e-3, filter_exactness},
        {2, "classical Hilbert identities", 1.0, classical_identities},
        {3, "AM envelope reproduction", 1.0, envelope_reproduction},
        {4, "QFT correctness", 5.0, qft_correctness},
        {5, "QHT invariants", 5.0, qht_invariants},
        {6, "QHT fixed points", 1.0, qht_fixed_points},
        {7, "stego example and exhaustive round trips", 30.0, stego_round_trip},
        {8, "leakage numbers", 5.0, leakage_numbers},
        {9, "CLI integration", 60.0, cli_integration},
    };

    int failures = 0;
    for (const auto& cr : criteria) {
        Check check;
        const auto start = std::chrono::steady_clock::now();
        try {
            cr.body(check);
        } catch (const std::exception& e) {
            check.expect(false, std::string("exception: ") + e.what());
        }
        const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        check.expect(elapsed < cr.budget_seconds, "over runtime budget");
        std::printf("[%s] %d. %s (%.3f s, budget %g s)%s%s\n", check.ok ? "PASS" : "FAIL", cr.id, cr.name.c_str(),
                    elapsed, cr.budget_seconds, check.ok ? "" : ": ", check.detail.c_str());
        if (!check.ok) ++failures;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
