#include "qhilbert/stego.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qhilbert/error.hpp"
#include "qhilbert/qht.hpp"

namespace qhilbert::stego {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

// Magnitude slack when checking that a message qubit is still the reference basis state.
constexpr double kMagnitudeTol = 1e-9;

StateVector phased_basis_qubit(std::uint8_t bit, double phase) {
    ComplexVector a(2, cplx{0.0, 0.0});
    a[bit] = std::polar(1.0, phase);
    return StateVector(std::move(a));
}

double shift_for(std::uint8_t payload_bit, Scheme scheme) {
    const bool plus = (scheme == Scheme::PlusIsOne) == (payload_bit == 1);
    return plus ? kHalfPi : -kHalfPi;
}

}  // namespace

BitString::BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto b : bits_) {
        if (b > 1) throw InvalidArgument("bit values must be 0 or 1");
    }
}

BitString BitString::parse(std::string_view text) {
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') throw InvalidArgument("invalid bit string '" + std::string(text) + "'");
        bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return BitString(std::move(bits));
}

std::size_t BitString::popcount() const noexcept {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

BitString BitString::complement() const {
    std::vector<std::uint8_t> out(bits_.size());
    std::transform(bits_.begin(), bits_.end(), out.begin(), [](std::uint8_t b) { return std::uint8_t(1 - b); });
    return BitString(std::move(out));
}

std::string BitString::to_string() const {
    std::string s;
    s.reserve(bits_.size());
    for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
    return s;
}

Scheme parse_scheme(std::string_view text) {
    if (text == "10") return Scheme::PlusIsOne;
    if (text == "01") return Scheme::PlusIsZero;
    throw InvalidArgument("invalid scheme '" + std::string(text) + "', expected 10 or 01");
}

std::string to_string(Scheme scheme) { return scheme == Scheme::PlusIsOne ? "10" : "01"; }

BitString scheme_bits(Scheme scheme) { return BitString::parse(to_string(scheme)); }

Scheme flipped(Scheme scheme) { return scheme == Scheme::PlusIsOne ? Scheme::PlusIsZero : Scheme::PlusIsOne; }

Payload::Payload(BitString bits) : bits_(std::move(bits)) {
    if (bits_.empty()) throw InvalidArgument("payload must not be empty");
}

ReferenceRegister::ReferenceRegister(BitString bits, std::vector<double> phases, std::uint64_t seed)
    : bits_(std::move(bits)), phases_(std::move(phases)), seed_(seed) {
    if (bits_.empty()) throw InvalidArgument("reference bit list must not be empty");
    if (bits_.size() > kMaxReferenceLength) throw InvalidArgument("reference longer than 64 bits");
    if (phases_.size() != bits_.size()) throw InvalidArgument("reference phase count does not match bit count");
    states_.reserve(bits_.size());
    for (std::size_t k = 0; k < bits_.size(); ++k) {
        if (!(phases_[k] > -std::numbers::pi && phases_[k] <= std::numbers::pi)) {
            throw InvalidArgument("reference phase outside (-pi, pi]");
        }
        states_.push_back(phased_basis_qubit(bits_[k], phases_[k]));
    }
}

StegoFrame::StegoFrame(std::vector<StateVector> message_block, BitString identifier, Scheme scheme,
                       bool qht_baseline)
    : message_block_(std::move(message_block)),
      identifier_(std::move(identifier)),
      scheme_(scheme),
      qht_baseline_(qht_baseline) {
    if (message_block_.empty()) throw InvalidArgument("message block must not be empty");
    for (const auto& q : message_block_) {
        if (q.n_qubits() != 1) throw InvalidArgument("message block entries must be single-qubit states");
    }
    if (identifier_.size() != message_block_.size()) {
        throw InvalidArgument("identifier length does not match message block");
    }
    if (identifier_.popcount() == 0) throw InvalidArgument("identifier flags no qubits");
}

ReferenceRegister make_reference(const BitString& bits, std::uint64_t seed) {
    return ReferenceRegister(bits, std::vector<double>(bits.size(), 0.0), seed);
}

ReferenceRegister apply_qht_baseline(const ReferenceRegister& reference) {
    std::vector<PolarEntry> entries;
    entries.reserve(reference.size());
    for (double phase : reference.phases()) entries.push_back({1.0, phase});
    const PolarDecomposition shifted = modulate_phases(PolarDecomposition(std::move(entries)));
    std::vector<double> phases;
    phases.reserve(shifted.size());
    for (const auto& e : shifted.entries()) phases.push_back(e.phase);
    return ReferenceRegister(reference.bits(), std::move(phases), reference.seed());
}

StegoFrame encode(const ReferenceRegister& reference, const Payload& payload, const BitString& identifier,
                  Scheme scheme, const EncodeOptions& options) {
    if (identifier.size() != reference.size() || identifier.popcount() != payload.size()) {
        throw InvalidArgument("identifier/payload mismatch");
    }
    const ReferenceRegister base = options.qht_baseline ? apply_qht_baseline(reference) : reference;

    std::vector<StateVector> block;
    block.reserve(base.size());
    std::size_t next_payload_bit = 0;
    for (std::size_t k = 0; k < base.size(); ++k) {
        double phase = base.phases()[k];
        if (identifier[k] == 1) {
            phase = wrap_phase(phase + shift_for(payload.bits()[next_payload_bit++], scheme));
        }
        block.push_back(phased_basis_qubit(base.bits()[k], phase));
    }
    return StegoFrame(std::move(block), identifier, scheme, options.qht_baseline);
}

Payload decode(const StegoFrame& frame, const ReferenceRegister& reference, double phase_tol) {
    using Kind = DecodeError::Kind;
    if (frame.total_length() != 2 * reference.size() + 2) {
        throw DecodeError(Kind::FrameCorrupted, "frame length " + std::to_string(frame.total_length()) +
                                                    " does not fit a reference of length " +
                                                    std::to_string(reference.size()));
    }
    const ReferenceRegister base = frame.qht_baseline() ? apply_qht_baseline(reference) : reference;

    std::vector<std::uint8_t> bits;
    bits.reserve(frame.identifier().popcount());
    for (std::size_t k = 0; k < base.size(); ++k) {
        const StateVector& q = frame.message_block()[k];
        const std::uint8_t b = base.bits()[k];
        if (std::abs(std::abs(q[b]) - 1.0) > kMagnitudeTol || std::abs(q[1 - b]) > kMagnitudeTol) {
            throw DecodeError(Kind::FrameCorrupted, "qubit " + std::to_string(k) + " amplitude differs from reference");
        }
        const double diff = wrap_phase(principal_arg(q[b]) - base.phases()[k]);

        if (frame.identifier()[k] == 0) {
            if (std::abs(diff) > phase_tol) {
                throw DecodeError(Kind::FrameCorrupted, "unflagged qubit " + std::to_string(k) + " carries a phase shift");
            }
            continue;
        }

        bool plus = false;
        if (std::abs(diff - kHalfPi) <= phase_tol) {
            plus = true;
        } else if (std::abs(diff + kHalfPi) > phase_tol) {
            throw DecodeError(Kind::UndecodablePhase, "qubit " + std::to_string(k) + " shifted by " + std::to_string(diff));
        }
        const bool one = plus == (frame.scheme() == Scheme::PlusIsOne);
        bits.push_back(one ? 1 : 0);
    }
    return Payload(BitString(std::move(bits)));
}

}  // namespace qhilbert::stego
