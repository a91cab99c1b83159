#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "streamcode/burst_channel.hpp"
#include "streamcode/galois_field.hpp"
#include "streamcode/stream_model.hpp"

namespace streamcode {

/// Raised when a decoder cannot recover a packet it is supposed to
/// recover. For a correct code over an admissible pattern this indicates
/// a bug, never an expected outcome.
class DecodeFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DecodeResult {
  /// Slot at which each message packet became known, if ever.
  std::vector<std::optional<int>> decode_time;
  /// Recovered message symbols; meaningful where decode_time is set.
  std::vector<SymbolVec> recovered;
};

/// A linear streaming code over one finite stream.
///
/// `encode` sees the whole message list, which lets offline schemes read
/// future sizes; online codecs consume it strictly slot by slot.
class StreamCodec {
 public:
  virtual ~StreamCodec() = default;

  virtual std::string name() const = 0;
  virtual const CodeParams& params() const = 0;
  virtual const GaloisField& field() const = 0;

  virtual std::vector<ChannelPacket> encode(std::span<const MessagePacket> messages) const = 0;

  /// Per-slot layout metadata for traces. Empty by default.
  virtual std::vector<std::vector<Annotation>> layout(const MessageSizeSequence& sizes) const;

  /// Default: generic linear decoding (see LinearStreamModel), which
  /// reports the earliest slot at which each packet is determined.
  virtual DecodeResult decode(std::span<const ReceivedPacket> received,
                              const MessageSizeSequence& sizes) const;
};

MessageSizeSequence sizes_of(std::span<const MessagePacket> messages);

/// Encodes, erases `pattern`, decodes, and records the run. A packet's
/// decode_time is kept only if the recovered symbols equal the originals.
StreamTranscript run_stream(const StreamCodec& codec, std::span<const MessagePacket> messages,
                            const LossPattern& pattern = {});

/// Same, reusing an already-encoded stream.
StreamTranscript run_stream(const StreamCodec& codec, std::span<const MessagePacket> messages,
                            std::span<const ChannelPacket> encoded, const LossPattern& pattern);

/// Transcript of the lossless stream without running a decoder
/// (decode_time left empty); used by `encode`-style outputs and rate
/// accounting.
StreamTranscript encode_transcript(const StreamCodec& codec, std::span<const MessagePacket> messages);

}  // namespace streamcode
