#include "streamcode/burst_channel.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace streamcode {

LossPattern::LossPattern(std::vector<int> erased) : erased_(std::move(erased)) {
  std::sort(erased_.begin(), erased_.end());
  if (std::adjacent_find(erased_.begin(), erased_.end()) != erased_.end()) {
    throw std::invalid_argument("loss pattern lists a slot twice");
  }
  if (!erased_.empty() && erased_.front() < 0) {
    throw std::invalid_argument("loss pattern contains a negative slot");
  }
}

bool LossPattern::contains(int slot) const {
  return std::binary_search(erased_.begin(), erased_.end(), slot);
}

std::vector<Burst> bursts(const LossPattern& pattern) {
  std::vector<Burst> out;
  for (int s : pattern.erased()) {
    if (!out.empty() && out.back().last() + 1 == s) {
      ++out.back().length;
    } else {
      out.push_back(Burst{s, 1});
    }
  }
  return out;
}

namespace {

// Admissibility of `erased` (sorted) on the slot range [0, last].
bool admissible_upto(const std::vector<int>& erased, int b, int w, int last) {
  if (!erased.empty() && erased.back() > last) return false;
  const auto runs = bursts(LossPattern(erased));
  for (const auto& r : runs) {
    if (r.length > b) return false;
  }
  // Two consecutive runs violate the window rule iff some window of w
  // slots inside [0, last] touches both, i.e. the first slot of the second
  // run is within w - 1 slots of the last slot of the first run.
  for (std::size_t i = 1; i < runs.size(); ++i) {
    if (runs[i].start - runs[i - 1].last() < w) return false;
  }
  return true;
}

void full_dfs(std::vector<int>& current, int t, int b, int w,
              const std::function<void(const LossPattern&)>& visit) {
  visit(LossPattern(current));
  const int next_min = current.empty() ? 0 : current.back() + 1;
  for (int s = next_min; s <= t; ++s) {
    current.push_back(s);
    // Violations among slots <= s are permanent: later slots can neither
    // merge two earlier runs nor shorten one.
    if (admissible_upto(current, b, w, s)) full_dfs(current, t, b, w, visit);
    current.pop_back();
  }
}

}  // namespace

bool is_admissible(const LossPattern& pattern, const CodeParams& p) {
  return admissible_upto(pattern.erased(), p.b, p.w, p.t);
}

void for_each_pattern(const CodeParams& p, EnumerationMode mode,
                      const std::function<void(const LossPattern&)>& visit) {
  if (mode == EnumerationMode::kSingleBurst) {
    visit(LossPattern{});
    for (int start = 0; start <= p.t; ++start) {
      for (int len = 1; len <= p.b && start + len - 1 <= p.t; ++len) {
        std::vector<int> e(static_cast<std::size_t>(len));
        for (int i = 0; i < len; ++i) e[static_cast<std::size_t>(i)] = start + i;
        visit(LossPattern(std::move(e)));
      }
    }
    return;
  }
  if (p.t + 1 > kMaxFullEnumerationSlots) {
    throw std::invalid_argument("full enumeration is capped at " +
                                std::to_string(kMaxFullEnumerationSlots) + " slots, got " +
                                std::to_string(p.t + 1));
  }
  std::vector<int> current;
  full_dfs(current, p.t, p.b, p.w, visit);
}

std::vector<LossPattern> enumerate_patterns(const CodeParams& p, EnumerationMode mode) {
  std::vector<LossPattern> out;
  for_each_pattern(p, mode, [&](const LossPattern& pat) { out.push_back(pat); });
  return out;
}

std::vector<ReceivedPacket> apply(const LossPattern& pattern, std::span<const ChannelPacket> packets) {
  std::vector<ReceivedPacket> out;
  out.reserve(packets.size());
  for (const auto& pkt : packets) {
    if (pattern.contains(pkt.slot)) {
      out.emplace_back(std::nullopt);
    } else {
      out.emplace_back(pkt);
    }
  }
  return out;
}

LossPattern periodic_bursts(int offset, int period, int length, int t) {
  if (period <= 0 || length <= 0 || length > period) {
    throw std::invalid_argument("periodic bursts need 0 < length <= period");
  }
  std::vector<int> erased;
  for (int s = 0; s <= t; ++s) {
    const int phase = ((s - offset) % period + period) % period;
    if (phase < length) erased.push_back(s);
  }
  return LossPattern(std::move(erased));
}

}  // namespace streamcode
