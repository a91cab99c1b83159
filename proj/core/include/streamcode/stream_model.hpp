#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "streamcode/galois_field.hpp"

namespace streamcode {

using Rational = boost::multiprecision::cpp_rational;

/// Stream parameters.
///
///   tau    worst-case decoding delay, in slots
///   b      maximum burst length, in packets
///   tau_l  decoding delay when nothing is lost
///   w      sliding-window length of the burst channel
///   m      maximum message packet size, in symbols
///   t      index of the last slot
struct CodeParams {
  int tau = 0;
  int b = 0;
  int tau_l = 0;
  int w = 0;
  int m = 0;
  int t = 0;

  friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

/// Lists every violated parameter inequality; empty means valid.
std::vector<std::string> validate_params(const CodeParams& p);

/// Throws std::invalid_argument listing all violations.
void require_valid(const CodeParams& p);

/// k_0..k_t. Reads outside [0, t] return 0.
class MessageSizeSequence {
 public:
  MessageSizeSequence() = default;
  explicit MessageSizeSequence(std::vector<int> sizes);

  int operator[](long slot) const {
    return slot < 0 || slot >= static_cast<long>(sizes_.size()) ? 0
                                                                 : sizes_[static_cast<std::size_t>(slot)];
  }
  std::size_t size() const { return sizes_.size(); }
  /// t; -1 for an empty sequence.
  int last_slot() const { return static_cast<int>(sizes_.size()) - 1; }
  const std::vector<int>& sizes() const { return sizes_; }
  long total() const;
  int max_size() const;
  /// The final `tau` entries exist and are all zero.
  bool is_terminated(int tau) const;

  friend bool operator==(const MessageSizeSequence&, const MessageSizeSequence&) = default;

 private:
  std::vector<int> sizes_;
};

/// Appends `p.tau` zero-size packets unless the tail already is `tau`
/// zeros. Each raw size must lie in [0, p.m].
MessageSizeSequence terminate_sequence(std::span<const int> raw_sizes, const CodeParams& p);

/// Copy of `p` with `t` set to the sequence's last slot.
CodeParams with_horizon(CodeParams p, const MessageSizeSequence& sizes);

/// Parses "3,2,1" (whitespace tolerated). Throws std::invalid_argument.
std::vector<int> parse_int_list(std::string_view text);

struct MessagePacket {
  int slot = 0;
  SymbolVec symbols;
};

struct ChannelPacket {
  int slot = 0;
  SymbolVec symbols;
};

/// A channel packet as seen by the receiver; nullopt is an erasure.
using ReceivedPacket = std::optional<ChannelPacket>;

/// Named integer attached to a slot in a trace (e.g. the U/V/P split).
using Annotation = std::pair<std::string, int>;

struct SlotRecord {
  int slot = 0;
  int k = 0;
  int n = 0;
  bool erased = false;
  std::optional<int> decode_time;
  std::vector<Annotation> layout;
  SymbolVec message;
  SymbolVec channel;
};

struct StreamTranscript {
  std::vector<SlotRecord> slots;

  long message_symbols() const;
  long channel_symbols() const;
};

/// Exact sum(k) / sum(n). Throws std::domain_error when sum(n) == 0.
Rational rate(const StreamTranscript& tr);

/// Reduced "p/q"; the denominator is always printed.
std::string to_fraction_string(const Rational& r);
double to_double(const Rational& r);

enum class DelayConstraint { kLossless, kWorstCase };

struct DelayViolation {
  int slot = 0;
  std::optional<int> decode_time;
  int deadline = 0;
};

/// First message packet with k > 0 decoded after its deadline (or never).
/// The deadline is slot + tau_l for kLossless and slot + tau for kWorstCase.
std::optional<DelayViolation> check_delays(const StreamTranscript& tr, const CodeParams& p,
                                           DelayConstraint constraint);

/// Uniform random message symbols for the given sizes, from a seeded
/// mt19937_64 (top `degree` bits of each draw).
std::vector<MessagePacket> random_messages(const MessageSizeSequence& sizes,
                                           const GaloisField& field, std::uint64_t seed);

/// `count` sizes drawn uniformly from [0, m].
std::vector<int> random_sizes(int count, int m, std::uint64_t seed);

}  // namespace streamcode
