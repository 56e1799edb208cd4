#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstring>
#include <numbers>

#include "oracles.hpp"
#include "qhilbert/error.hpp"
#include "qhilbert/qht.hpp"

using namespace qhilbert;
using Catch::Matchers::WithinAbs;

namespace {
constexpr double kPi = std::numbers::pi;

StateVector normalized(ComplexVector v) {
    double s = 0.0;
    for (const auto& z : v) s += std::norm(z);
    for (auto& z : v) z /= std::sqrt(s);
    return StateVector(std::move(v));
}
}  // namespace

TEST_CASE("modulate_phases examples", "[qht]") {
    SECTION("shift toward zero by pi/2") {
        const auto out = modulate_phases(PolarDecomposition({{0.6, kPi / 3}, {0.8, -kPi / 3}}));
        CHECK(out[0].magnitude == 0.6);
        CHECK(out[1].magnitude == 0.8);
        CHECK_THAT(out[0].phase, WithinAbs(-kPi / 6, 1e-15));
        CHECK_THAT(out[1].phase, WithinAbs(kPi / 6, 1e-15));
    }
    SECTION("zero phase untouched") {
        const auto out = modulate_phases(PolarDecomposition({{1, 0}}));
        CHECK(out[0].phase == 0.0);
    }
    SECTION("+-pi/2 collapse onto zero") {
        const auto out = modulate_phases(PolarDecomposition({{0.5, kPi / 2}, {std::sqrt(0.75), -kPi / 2}}));
        CHECK_THAT(out[0].phase, WithinAbs(0.0, 1e-15));
        CHECK_THAT(out[1].phase, WithinAbs(0.0, 1e-15));
    }
    SECTION("theta = pi takes the positive branch") {
        const auto out = modulate_phases(PolarDecomposition({{1, kPi}}));
        CHECK_THAT(out[0].phase, WithinAbs(kPi / 2, 1e-15));
    }
    SECTION("phases inside zero_tol are left alone") {
        const auto out = modulate_phases(PolarDecomposition({{1, 5e-13}, {1, -5e-13}}));
        CHECK(out[0].phase == 5e-13);
        CHECK(out[1].phase == -5e-13);
    }
    SECTION("custom shifts are re-wrapped") {
        PhaseShiftRule rule{kPi, kPi, 0.0};
        const auto out = modulate_phases(PolarDecomposition({{1, 3 * kPi / 4}, {1, -kPi / 4}}), rule);
        CHECK_THAT(out[0].phase, WithinAbs(-kPi / 4, 1e-15));
        CHECK_THAT(out[1].phase, WithinAbs(3 * kPi / 4, 1e-15));
    }
    SECTION("negative zero_tol rejected") {
        CHECK_THROWS_AS(modulate_phases(PolarDecomposition({{1, 0}}), PhaseShiftRule{-1, 1, -1e-3}), InvalidArgument);
    }
}

TEST_CASE("qht fixed points", "[qht]") {
    for (int n = 1; n <= 8; ++n) {
        for (const auto& s : {StateVector::basis(n, 0), StateVector::uniform(n)}) {
            const auto trace = qht(s);
            CHECK(oracle::max_abs_diff(trace.output_state.amplitudes(), s.amplitudes()) < 1e-12);
        }
    }
}

TEST_CASE("states with nonnegative real Fourier coefficients are fixed", "[qht][property]") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int n = 1; n <= 6; ++n) {
        const std::size_t N = std::size_t{1} << n;
        ComplexVector beta(N);
        for (auto& b : beta) b = u(rng);
        const StateVector fourier = normalized(beta);
        const StateVector psi = iqft(fourier);
        CHECK(oracle::max_abs_diff(qht(psi).output_state.amplitudes(), psi.amplitudes()) < 1e-12);
    }
}

TEST_CASE("qht on random states", "[qht][property]") {
    for (int n : {2, 3, 5, 7}) {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const auto s = random_state(n, seed);
            const auto trace = qht(s);
            CHECK_THAT(trace.output_state.norm(), WithinAbs(1.0, 1e-10));

            const auto before = to_polar(qft(s));
            const auto after = to_polar(qft(trace.output_state));
            for (std::size_t j = 0; j < before.size(); ++j) {
                CHECK_THAT(after[j].magnitude, WithinAbs(before[j].magnitude, 1e-12));
                CHECK_THAT(trace.output_polar[j].magnitude, WithinAbs(trace.input_polar[j].magnitude, 1e-12));
            }
            CHECK(oracle::max_abs_diff(trace.output_state.amplitudes(), s.amplitudes()) > 1e-3);
        }
    }
}

TEST_CASE("seed 42 five-qubit state: Fourier magnitudes kept, basis magnitudes moved", "[qht]") {
    const auto s = random_state(5, 42);
    const auto trace = qht(s);
    const auto rows = emit_figure_data(trace);
    REQUIRE(rows.size() == 32);
    double max_amp_change = 0.0;
    for (const auto& r : rows) max_amp_change = std::max(max_amp_change, std::abs(r.amp_after - r.amp_before));
    CHECK(max_amp_change > 1e-3);
}

TEST_CASE("qht is deterministic", "[qht]") {
    const auto s = random_state(6, 77);
    const auto a = qht(s).output_state;
    const auto b = qht(s).output_state;
    CHECK(std::memcmp(a.amplitudes().data(), b.amplitudes().data(), a.size() * sizeof(cplx)) == 0);
}

TEST_CASE("qht is not linear", "[qht]") {
    // |0> is a fixed point and |1> is not; their superposition does not map
    // to the superposition of the images.
    const int n = 3;
    const auto p = StateVector::basis(n, 0);
    const auto q = StateVector::basis(n, 1);
    ComplexVector sum(p.size());
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = p[i] + q[i];
    const auto lhs = qht(normalized(sum)).output_state;

    const auto qp = qht(p).output_state;
    const auto qq = qht(q).output_state;
    ComplexVector combo(p.size());
    for (std::size_t i = 0; i < combo.size(); ++i) combo[i] = qp[i] + qq[i];
    const auto rhs = normalized(combo);

    CHECK(oracle::max_abs_diff(lhs.amplitudes(), rhs.amplitudes()) > 1e-3);
}

TEST_CASE("emit_figure_data", "[qht]") {
    SECTION("fixed point gives identical columns") {
        for (const auto& r : emit_figure_data(qht(StateVector::basis(3, 0)))) {
            CHECK_THAT(r.amp_after, WithinAbs(r.amp_before, 1e-12));
            CHECK_THAT(r.phase_after, WithinAbs(r.phase_before, 1e-12));
        }
    }
    SECTION("32 rows, both columns normalized") {
        const auto rows = emit_figure_data(qht(random_state(5, 7)));
        REQUIRE(rows.size() == 32);
        double sb = 0.0, sa = 0.0;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            CHECK(rows[i].index == i);
            sb += rows[i].amp_before * rows[i].amp_before;
            sa += rows[i].amp_after * rows[i].amp_after;
        }
        CHECK_THAT(sb, WithinAbs(1.0, 1e-10));
        CHECK_THAT(sa, WithinAbs(1.0, 1e-10));
    }
}
