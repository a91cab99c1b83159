#pragma once

#include <iosfwd>
#include <optional>

#include <nlohmann/json.hpp>

#include "streamcode/oracle.hpp"

namespace streamcode {

nlohmann::json to_json(const CodeParams& p);
CodeParams params_from_json(const nlohmann::json& j);

nlohmann::json to_json(const LossPattern& pattern);
LossPattern pattern_from_json(const nlohmann::json& j);

/// {slot, k, n, erased, decode_time (null when never), layout..., and
/// optionally message / channel symbol arrays}.
nlohmann::json to_json(const SlotRecord& rec, bool with_symbols = true);
SlotRecord slot_from_json(const nlohmann::json& j);

/// One JSON object per line. When `config` is given it is written first
/// as {"config": ...} so the file can be replayed.
void write_jsonl(std::ostream& out, const StreamTranscript& tr, const std::optional<nlohmann::json>& config = {},
                 bool with_symbols = true);
/// Inverse of write_jsonl; the config line, if present, goes to `config`.
StreamTranscript read_jsonl(std::istream& in, nlohmann::json* config = nullptr);

nlohmann::json to_json(const Counterexample& c);

}  // namespace streamcode
