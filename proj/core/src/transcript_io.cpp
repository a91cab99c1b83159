#include "streamcode/transcript_io.hpp"

#include <istream>
#include <ostream>
#include <set>
#include <string>

namespace streamcode {

using nlohmann::json;

json to_json(const CodeParams& p) {
  return json{{"tau", p.tau}, {"b", p.b}, {"tau_l", p.tau_l}, {"w", p.w}, {"m", p.m}, {"t", p.t}};
}

CodeParams params_from_json(const json& j) {
  return CodeParams{j.at("tau").get<int>(), j.at("b").get<int>(), j.at("tau_l").get<int>(),
                    j.at("w").get<int>(),   j.at("m").get<int>(), j.at("t").get<int>()};
}

json to_json(const LossPattern& pattern) { return json(pattern.erased()); }

LossPattern pattern_from_json(const json& j) { return LossPattern(j.get<std::vector<int>>()); }

namespace {

const std::set<std::string> kSlotKeys = {"slot", "k", "n", "erased", "decode_time", "message", "channel"};

}  // namespace

json to_json(const SlotRecord& rec, bool with_symbols) {
  json j{{"slot", rec.slot}, {"k", rec.k}, {"n", rec.n}, {"erased", rec.erased}};
  j["decode_time"] = rec.decode_time ? json(*rec.decode_time) : json(nullptr);
  for (const auto& [key, value] : rec.layout) j[key] = value;
  if (with_symbols) {
    j["message"] = rec.message;
    j["channel"] = rec.channel;
  }
  return j;
}

SlotRecord slot_from_json(const json& j) {
  SlotRecord rec;
  rec.slot = j.at("slot").get<int>();
  rec.k = j.at("k").get<int>();
  rec.n = j.at("n").get<int>();
  rec.erased = j.at("erased").get<bool>();
  if (!j.at("decode_time").is_null()) rec.decode_time = j.at("decode_time").get<int>();
  if (j.contains("message")) rec.message = j.at("message").get<SymbolVec>();
  if (j.contains("channel")) rec.channel = j.at("channel").get<SymbolVec>();
  // nlohmann objects iterate in key order, so layout round-trips sorted.
  for (const auto& [key, value] : j.items()) {
    if (!kSlotKeys.contains(key) && value.is_number_integer()) rec.layout.emplace_back(key, value.get<int>());
  }
  return rec;
}

void write_jsonl(std::ostream& out, const StreamTranscript& tr, const std::optional<json>& config,
                 bool with_symbols) {
  if (config) out << json{{"config", *config}}.dump() << '\n';
  for (const auto& rec : tr.slots) out << to_json(rec, with_symbols).dump() << '\n';
}

StreamTranscript read_jsonl(std::istream& in, json* config) {
  StreamTranscript tr;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto j = json::parse(line);
    if (j.contains("config")) {
      if (config) *config = j.at("config");
      continue;
    }
    tr.slots.push_back(slot_from_json(j));
  }
  return tr;
}

json to_json(const Counterexample& c) {
  json slots = json::array();
  for (const auto& rec : c.transcript.slots) slots.push_back(to_json(rec));
  return json{{"pattern", to_json(c.pattern)}, {"slot", c.slot}, {"reason", c.reason}, {"transcript", slots}};
}

}  // namespace streamcode
