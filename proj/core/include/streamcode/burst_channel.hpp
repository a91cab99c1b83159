#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "streamcode/stream_model.hpp"

namespace streamcode {

/// Sorted set of erased slot indices.
class LossPattern {
 public:
  LossPattern() = default;
  /// Sorts and rejects duplicates or negative slots (std::invalid_argument).
  explicit LossPattern(std::vector<int> erased);

  const std::vector<int>& erased() const { return erased_; }
  bool empty() const { return erased_.empty(); }
  std::size_t size() const { return erased_.size(); }
  bool contains(int slot) const;

  friend bool operator==(const LossPattern&, const LossPattern&) = default;
  friend auto operator<=>(const LossPattern& a, const LossPattern& b) {
    return a.erased_ <=> b.erased_;
  }

 private:
  std::vector<int> erased_;
};

/// A maximal run of consecutive erased slots.
struct Burst {
  int start = 0;
  int length = 0;
  int last() const { return start + length - 1; }
};

std::vector<Burst> bursts(const LossPattern& pattern);

/// True iff, for every window of p.w consecutive slots within [0, p.t],
/// the erased slots inside form at most one run of length <= p.b.
/// Slots beyond p.t make the pattern inadmissible.
bool is_admissible(const LossPattern& pattern, const CodeParams& p);

enum class EnumerationMode { kSingleBurst, kFull };

/// Full enumeration is capped at this many slots.
inline constexpr int kMaxFullEnumerationSlots = 24;

/// Visits admissible patterns in lexicographic order of the erased set.
///
/// kSingleBurst: the empty pattern and every run of 1..b slots inside
/// [0, t] (bursts truncated at either stream end are the shorter runs).
/// kFull: every admissible pattern exactly once; requires t + 1 <= 24.
void for_each_pattern(const CodeParams& p, EnumerationMode mode,
                      const std::function<void(const LossPattern&)>& visit);

std::vector<LossPattern> enumerate_patterns(const CodeParams& p, EnumerationMode mode);

/// Replaces erased slots by nullopt; other packets pass through.
std::vector<ReceivedPacket> apply(const LossPattern& pattern, std::span<const ChannelPacket> packets);

/// Bursts of length `length` at every slot j in [0, t] with
/// (j - offset) mod period == 0, plus the tail of a burst that starts
/// before slot 0.
LossPattern periodic_bursts(int offset, int period, int length, int t);

}  // namespace streamcode
