#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "streamcode/cauchy.hpp"
#include "streamcode/codec.hpp"

namespace streamcode {

/// Per-packet diagonal interleaving for b | tau and tau_l = tau - b.
///
/// S[i] is zero-padded to a multiple of c = tau / b and cut into c equal
/// components sent in X[i], X[i+b], ..., X[i+tau-b]; their sum goes in
/// X[i+tau]. A channel packet concatenates everything scheduled in its
/// slot, ordered by source slot.
class DiagonalCodec : public StreamCodec {
 public:
  DiagonalCodec(const CodeParams& p, GaloisField field);

  std::string name() const override { return "diagonal"; }
  const CodeParams& params() const override { return params_; }
  const GaloisField& field() const override { return field_; }

  std::vector<ChannelPacket> encode(std::span<const MessagePacket> messages) const override;
  /// Annotations: "pad" (zero symbols added to S[i]) and "component".
  std::vector<std::vector<Annotation>> layout(const MessageSizeSequence& sizes) const override;

  int components() const { return params_.tau / params_.b; }

 private:
  CodeParams params_;
  GaloisField field_;
};

/// Systematic [tau + b, tau] code with the per-symbol delay property:
/// under any burst of <= b codeword erasures, s_j is a combination of the
/// surviving symbols among (s_0..s_{tau-1}, p_0..p_{min(b-1, j)}).
///
/// Parities are p_q = sum_l parity_coeffs(q, l) * s_l. The builder uses
/// [I_b | C] with C a b x (tau - b) Cauchy block. Dense rows cannot work:
/// after a burst over s_0..s_{b-1}, s_0 must come from p_0 alone, so p_0
/// may not involve s_1..s_{b-1}.
struct BlockCode {
  int tau = 0;
  int b = 0;
  DenseMatrix parity_coeffs;  // b x tau
  bool verified = false;
  GaloisField field;

  /// (p_0, ..., p_{b-1}) for the message (s_0, ..., s_{tau-1}).
  SymbolVec encode(std::span<const Symbol> s) const;
};

/// Draws a code from `seed` and verifies it; on failure retries with
/// seed + 1, ... up to `max_attempts`. Throws std::runtime_error when the
/// retries run out and std::invalid_argument when 2 * tau exceeds the
/// field order or b is outside [1, tau].
BlockCode build_block_code(int tau, int b, const GaloisField& field, std::uint64_t seed = 0,
                           int max_attempts = 16);

/// The exhaustive delay-property check: every burst (start 0..tau+b-1,
/// length 1..b, clipped to the codeword) and every j, by rank comparison.
bool verify_block_code(const BlockCode& code);

enum class OfflineSchemeId {
  kLemma1Seq1,
  kLemma1Seq2,
  kLemma2Seq1,
  kLemma2Seq2,
  kLemma3Seq1,
  kLemma3Seq2,
};

std::string_view to_string(OfflineSchemeId id);
/// Accepts "lemma1_seq1" ... "lemma3_seq2"; std::invalid_argument otherwise.
OfflineSchemeId parse_offline_scheme(std::string_view text);
/// 1, 2 or 3.
int lemma_of(OfflineSchemeId id);
/// 1 or 2.
int sequence_of(OfflineSchemeId id);
OfflineSchemeId scheme_for(int lemma, int sequence);

/// One of the six fixed-sequence offline schemes used in the separation
/// argument.
struct OfflineScheme {
  OfflineSchemeId id = OfflineSchemeId::kLemma1Seq1;
  int tau = 0;
  int b = 0;
  int tau_l = 0;
  int d = 0;

  int a() const { return tau_l / b; }
  int e() const { return tau_l % b; }
  /// b - tau_l; the length of the contested prefix of the lemma2_* sequences.
  int r() const { return b - tau_l; }
};

/// Lists violated preconditions of the scheme's lemma; empty means valid.
///   lemma1_*: tau_l = tau - b, tau_l >= b, b does not divide tau
///   lemma2_*: tau_l = tau - b, 1 <= tau_l < b
///   lemma3_*: 1 <= tau_l < tau - b
/// plus d >= 1. Divisibility of d is checked by offline_encode only.
std::vector<std::string> scheme_preconditions(const OfflineScheme& sch);

/// The lemma's two size sequences, each terminated with tau zero slots.
std::pair<MessageSizeSequence, MessageSizeSequence> lemma_sequences(const OfflineScheme& sch);

/// Size sequence this scheme encodes (first or second of lemma_sequences).
MessageSizeSequence scheme_sequence(const OfflineScheme& sch);

/// Exact rate the lemma states for this scheme.
Rational stated_rate(const OfflineScheme& sch);

/// StreamCodec for one offline scheme. encode() rejects messages whose
/// sizes differ from scheme_sequence(); decoding is the generic linear
/// decoder. lemma1_seq1 needs (a + 1) | d; the halving schemes of
/// lemmas 2 and 3 seq 1 need d even.
class OfflineSchemeCodec : public StreamCodec {
 public:
  OfflineSchemeCodec(const OfflineScheme& sch, GaloisField field, std::uint64_t block_seed = 0);

  std::string name() const override { return std::string(to_string(scheme_.id)); }
  const CodeParams& params() const override { return params_; }
  const GaloisField& field() const override { return field_; }

  std::vector<ChannelPacket> encode(std::span<const MessagePacket> messages) const override;

  const OfflineScheme& scheme() const { return scheme_; }
  const MessageSizeSequence& sequence() const { return sequence_; }

 private:
  std::vector<SymbolVec> encode_split(std::span<const MessagePacket> s) const;
  std::vector<SymbolVec> encode_halving(std::span<const MessagePacket> s) const;
  std::vector<SymbolVec> encode_block(std::span<const MessagePacket> s) const;
  std::vector<SymbolVec> encode_direct_sum(std::span<const MessagePacket> s) const;

  OfflineScheme scheme_;
  CodeParams params_;
  GaloisField field_;
  MessageSizeSequence sequence_;
  BlockCode block_;
};

}  // namespace streamcode
