#pragma once

#include <span>
#include <vector>

#include "streamcode/codec.hpp"

namespace streamcode {

/// The generator of a linear stream code for one size sequence, recovered
/// by encoding unit messages, plus an incremental Gaussian-elimination
/// decoder over it.
///
/// This knows nothing about how the code was built: message symbol x is
/// declared decoded at the first slot where e_x lies in the span of the
/// received channel symbols' coefficient rows. It therefore gives the
/// earliest possible decode time for every packet, which makes it the
/// reference that structured decoders are checked against.
class LinearStreamModel {
 public:
  LinearStreamModel(const StreamCodec& codec, const MessageSizeSequence& sizes);

  DecodeResult decode(std::span<const ReceivedPacket> received) const;

  std::size_t message_symbol_count() const { return symbol_count_; }
  /// Coefficient rows (one per channel symbol) of slot `slot`.
  const std::vector<SymbolVec>& slot_rows(int slot) const {
    return rows_.at(static_cast<std::size_t>(slot));
  }

 private:
  GaloisField field_;
  MessageSizeSequence sizes_;
  std::vector<std::size_t> offset_;
  std::size_t symbol_count_ = 0;
  std::vector<std::vector<SymbolVec>> rows_;
};

}  // namespace streamcode
