#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "streamcode/cauchy.hpp"
#include "streamcode/codec.hpp"

namespace streamcode {

/// Sizes of one slot of the variable-size generalized MS code: the split
/// S[i] = (V[i], U[i]) and the parity P[i] sent alongside it.
struct VgmsSlotLayout {
  int k = 0;
  int u = 0;
  int v = 0;
  int p = 0;

  friend bool operator==(const VgmsSlotLayout&, const VgmsSlotLayout&) = default;
};

/// The online size rule. Consumes k_0, k_1, ... one at a time and decides
/// |V[i]|, |U[i]| and the parity budget |P[i + tau]| = |U[i]|, using only
/// sizes seen so far. Encoder and decoder both run it, which is how the
/// receiver learns the split of an erased packet.
class VgmsSizeAllocator {
 public:
  VgmsSizeAllocator(int tau, int b);

  /// Decides the split for the next slot and returns its layout.
  VgmsSlotLayout next(int k);

  /// Parity budget of the tightest burst covering slot i:
  ///   min over j in [i-b+1, i] of  sum_{l=j+b}^{i+tau-1} |P[l]| - sum_{l=j}^{i-1} k_l.
  /// Valid once slots 0..i-1 have been allocated and i >= b.
  long compute_z(int i) const;

  int next_slot() const { return static_cast<int>(k_.size()); }
  /// |P[slot]|; zero for slots whose budget has not been allocated.
  int parity_size(int slot) const;
  const std::vector<VgmsSlotLayout>& history() const { return layout_; }

 private:
  int tau_;
  int b_;
  std::vector<int> k_;
  std::vector<int> p_;
  std::vector<VgmsSlotLayout> layout_;
};

/// Layout of a whole sequence (the allocator run to completion).
std::vector<VgmsSlotLayout> vgms_layout(const MessageSizeSequence& sizes, int tau, int b);

/// Slot-by-slot encoder.
///
/// Keeps the last tau V-blocks in a tau*m ring whose block (j mod tau)
/// holds V[j] zero-padded to m symbols; at slot i that ring is exactly the
/// vector E[i], so P'[i] = E[i] * A restricted to the columns
/// (i mod tau)*m .. (i mod tau)*m + |P[i]| - 1.
class VgmsEncoder {
 public:
  /// `coefficients` is the tau*m x tau*m parity matrix (normally a Cauchy
  /// matrix; tests substitute a corrupted copy).
  VgmsEncoder(const CodeParams& p, GaloisField field, DenseMatrix coefficients);

  long compute_z(int i) const { return sizes_.compute_z(i); }

  /// Splits S[i] into (U[i], V[i]) for the next slot and books the parity
  /// budget |P[i + tau]|. V[i] is the prefix of S[i].
  std::pair<SymbolVec, SymbolVec> partition(const MessagePacket& packet);

  /// P[i] = U[i - tau] + P'[i] for the current slot i (before partition
  /// has overwritten the ring block of slot i - tau).
  SymbolVec build_parity(int i) const;

  /// X[i] = (S[i], P[i]). Slots must arrive in order 0, 1, 2, ...
  ChannelPacket encode_slot(const MessagePacket& packet);

  int next_slot() const { return sizes_.next_slot(); }
  const std::vector<VgmsSlotLayout>& layout() const { return sizes_.history(); }

 private:
  CodeParams params_;
  GaloisField field_;
  DenseMatrix a_;
  VgmsSizeAllocator sizes_;
  std::vector<Symbol> v_ring_;         // tau * m
  std::vector<SymbolVec> u_ring_;      // tau entries
};

/// Two-phase burst decoder.
///
/// Phase 1, at slot (burst start + tau - 1): cancel U[j - tau] and every
/// known V-block from the parities received after the burst, then solve
/// the square Cauchy system for the erased V-symbols. Phase 2, at slot
/// l + tau for each erased l: recompute P'[l + tau] and strip it from
/// P[l + tau] to obtain U[l].
class VgmsDecoder {
 public:
  VgmsDecoder(const CodeParams& p, GaloisField field, DenseMatrix coefficients);

  /// `received` must follow a pattern admissible under C(b, w)
  /// (std::invalid_argument otherwise). Throws DecodeFailure if a
  /// packet it must recover cannot be recovered.
  DecodeResult decode(std::span<const ReceivedPacket> received, const MessageSizeSequence& sizes) const;

 private:
  CodeParams params_;
  GaloisField field_;
  DenseMatrix a_;
};

/// StreamCodec wrapper: Cauchy matrix of dimension tau*m built from `seed`.
class VgmsCodec : public StreamCodec {
 public:
  VgmsCodec(const CodeParams& p, GaloisField field, std::uint64_t seed = 0);
  /// Encoder and decoder may be given different matrices (fault injection).
  VgmsCodec(const CodeParams& p, GaloisField field, DenseMatrix encoder_coefficients,
            DenseMatrix decoder_coefficients);

  std::string name() const override { return "vgms"; }
  const CodeParams& params() const override { return params_; }
  const GaloisField& field() const override { return field_; }

  std::vector<ChannelPacket> encode(std::span<const MessagePacket> messages) const override;
  std::vector<std::vector<Annotation>> layout(const MessageSizeSequence& sizes) const override;
  DecodeResult decode(std::span<const ReceivedPacket> received,
                      const MessageSizeSequence& sizes) const override;

  const DenseMatrix& encoder_coefficients() const { return enc_a_; }

 private:
  CodeParams params_;
  GaloisField field_;
  DenseMatrix enc_a_;
  DenseMatrix dec_a_;
};

}  // namespace streamcode
