#include "streamcode/codec.hpp"

#include "streamcode/linear_decoder.hpp"

namespace streamcode {

std::vector<std::vector<Annotation>> StreamCodec::layout(const MessageSizeSequence&) const {
  return {};
}

DecodeResult StreamCodec::decode(std::span<const ReceivedPacket> received,
                                 const MessageSizeSequence& sizes) const {
  return LinearStreamModel(*this, sizes).decode(received);
}

MessageSizeSequence sizes_of(std::span<const MessagePacket> messages) {
  std::vector<int> k;
  k.reserve(messages.size());
  for (const auto& m : messages) k.push_back(static_cast<int>(m.symbols.size()));
  return MessageSizeSequence(std::move(k));
}

namespace {

StreamTranscript base_transcript(const StreamCodec& codec, std::span<const MessagePacket> messages,
                                 std::span<const ChannelPacket> encoded) {
  const auto sizes = sizes_of(messages);
  auto layout = codec.layout(sizes);
  StreamTranscript tr;
  tr.slots.resize(messages.size());
  for (std::size_t i = 0; i < messages.size(); ++i) {
    auto& rec = tr.slots[i];
    rec.slot = static_cast<int>(i);
    rec.k = static_cast<int>(messages[i].symbols.size());
    rec.n = i < encoded.size() ? static_cast<int>(encoded[i].symbols.size()) : 0;
    rec.message = messages[i].symbols;
    if (i < encoded.size()) rec.channel = encoded[i].symbols;
    if (i < layout.size()) rec.layout = std::move(layout[i]);
  }
  return tr;
}

}  // namespace

StreamTranscript encode_transcript(const StreamCodec& codec, std::span<const MessagePacket> messages) {
  const auto encoded = codec.encode(messages);
  return base_transcript(codec, messages, encoded);
}

StreamTranscript run_stream(const StreamCodec& codec, std::span<const MessagePacket> messages,
                            const LossPattern& pattern) {
  const auto encoded = codec.encode(messages);
  return run_stream(codec, messages, encoded, pattern);
}

StreamTranscript run_stream(const StreamCodec& codec, std::span<const MessagePacket> messages,
                            std::span<const ChannelPacket> encoded, const LossPattern& pattern) {
  auto tr = base_transcript(codec, messages, encoded);
  const auto received = streamcode::apply(pattern, encoded);
  const auto result = codec.decode(received, sizes_of(messages));
  for (std::size_t i = 0; i < tr.slots.size(); ++i) {
    auto& rec = tr.slots[i];
    rec.erased = pattern.contains(rec.slot);
    if (i < result.decode_time.size() && result.decode_time[i] &&
        result.recovered[i] == messages[i].symbols) {
      rec.decode_time = result.decode_time[i];
    }
  }
  return tr;
}

}  // namespace streamcode
