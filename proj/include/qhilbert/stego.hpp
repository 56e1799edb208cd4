#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qhilbert/statevector.hpp"

namespace qhilbert::stego {

/// Classical decision threshold for phase classification at decode time.
inline constexpr double kPhaseTol = 1e-6;

inline constexpr std::size_t kMaxReferenceLength = 64;

class BitString {
public:
    BitString() = default;
    explicit BitString(std::vector<std::uint8_t> bits);

    /// Parses a string of '0'/'1' characters. Throws InvalidArgument otherwise.
    static BitString parse(std::string_view text);

    std::size_t size() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }
    std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
    std::span<const std::uint8_t> bits() const noexcept { return bits_; }

    std::size_t popcount() const noexcept;
    BitString complement() const;
    std::string to_string() const;

    friend bool operator==(const BitString&, const BitString&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

/// Two-bit flag saying which shift direction carries payload bit 1.
///   "10": +pi/2 encodes 1, -pi/2 encodes 0
///   "01": +pi/2 encodes 0, -pi/2 encodes 1
enum class Scheme { PlusIsOne, PlusIsZero };

Scheme parse_scheme(std::string_view text);
std::string to_string(Scheme scheme);
BitString scheme_bits(Scheme scheme);
Scheme flipped(Scheme scheme);

/// Secret bits. Nonempty.
class Payload {
public:
    explicit Payload(BitString bits);

    std::size_t size() const noexcept { return bits_.size(); }
    const BitString& bits() const noexcept { return bits_; }

    friend bool operator==(const Payload&, const Payload&) = default;

private:
    BitString bits_;
};

/// Shared phase baseline. Bit b_k is carried by the single-qubit basis state
/// |b_k> whose one nonzero amplitude is e^{i phase_k}.
///
/// The phase lives in what is physically a global phase of each qubit. The
/// simulator reads it directly from the amplitude, standing in for repeated
/// preparation and phase estimation on real hardware.
class ReferenceRegister {
public:
    /// Throws InvalidArgument on an empty or over-long bit list, a phase
    /// count that does not match, or phases outside (-pi, pi].
    ReferenceRegister(BitString bits, std::vector<double> phases, std::uint64_t seed = 0);

    std::size_t size() const noexcept { return bits_.size(); }
    const BitString& bits() const noexcept { return bits_; }
    std::span<const double> phases() const noexcept { return phases_; }
    const std::vector<StateVector>& qubit_states() const noexcept { return states_; }
    std::uint64_t seed() const noexcept { return seed_; }

private:
    BitString bits_;
    std::vector<double> phases_;
    std::vector<StateVector> states_;
    std::uint64_t seed_;
};

/// Message register [message block][identifier][scheme] of total length 2s + 2.
class StegoFrame {
public:
    /// Throws InvalidArgument unless every block entry is a single-qubit state,
    /// the identifier has the block's length and flags at least one qubit.
    StegoFrame(std::vector<StateVector> message_block, BitString identifier, Scheme scheme,
               bool qht_baseline = false);

    std::size_t s() const noexcept { return message_block_.size(); }
    std::size_t total_length() const noexcept { return 2 * s() + 2; }
    const std::vector<StateVector>& message_block() const noexcept { return message_block_; }
    const BitString& identifier() const noexcept { return identifier_; }
    Scheme scheme() const noexcept { return scheme_; }
    BitString scheme_bits() const { return stego::scheme_bits(scheme_); }

    /// True when the reference phases went through the QHT phase rule before embedding.
    bool qht_baseline() const noexcept { return qht_baseline_; }

private:
    std::vector<StateVector> message_block_;
    BitString identifier_;
    Scheme scheme_;
    bool qht_baseline_;
};

struct EncodeOptions {
    bool qht_baseline = false;
};

/// Each bit becomes |b> with reference phase 0. The seed is recorded in the
/// register but does not influence it.
ReferenceRegister make_reference(const BitString& bits, std::uint64_t seed = 0);

/// Runs the recorded phases through the default QHT phase rule.
ReferenceRegister apply_qht_baseline(const ReferenceRegister& reference);

/// Shifts the k-th flagged qubit by +pi/2 or -pi/2 according to the k-th
/// payload bit and the scheme. Throws InvalidArgument
/// ("identifier/payload mismatch") on length or popcount disagreement.
StegoFrame encode(const ReferenceRegister& reference, const Payload& payload, const BitString& identifier,
                  Scheme scheme, const EncodeOptions& options = {});

/// Recovers the payload by comparing each qubit's phase against the reference.
/// Throws DecodeError: FrameCorrupted when an unflagged qubit moved or the
/// frame does not fit the reference, UndecodablePhase when a flagged qubit is
/// not within `phase_tol` of +-pi/2.
Payload decode(const StegoFrame& frame, const ReferenceRegister& reference, double phase_tol = kPhaseTol);

}  // namespace qhilbert::stego
