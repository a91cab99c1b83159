#include "streamcode/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "streamcode/vgms.hpp"

namespace streamcode {

CumulativeProfile cumulative_profile(const StreamTranscript& tr) {
  CumulativeProfile out;
  long acc = 0;
  for (const auto& s : tr.slots) {
    acc += s.n;
    out.n_plus.push_back(acc);
  }
  return out;
}

LowerBoundProfile lower_bound_profile(const MessageSizeSequence& seq, const CodeParams& p) {
  if (p.tau_l != 0) throw std::invalid_argument("the lower bound applies to tau_l = 0 only");
  const int tau = p.tau;
  const int b = p.b;
  const int slots = static_cast<int>(seq.size());

  std::vector<long> prefix(static_cast<std::size_t>(slots) + 1, 0);
  for (int i = 0; i < slots; ++i) prefix[static_cast<std::size_t>(i) + 1] = prefix[static_cast<std::size_t>(i)] + seq[i];
  auto ksum = [&](int from, int to) -> long {  // sum_{l=from}^{to} k_l, empty if to < from
    from = std::max(from, 0);
    to = std::min(to, slots - 1);
    return to < from ? 0 : prefix[static_cast<std::size_t>(to) + 1] - prefix[static_cast<std::size_t>(from)];
  };

  LowerBoundProfile out;
  out.lb.resize(static_cast<std::size_t>(slots), 0);
  auto lb = [&](int i) -> long { return i < 0 ? 0 : out.lb[static_cast<std::size_t>(i)]; };
  for (int i = 0; i < slots; ++i) {
    long best = lb(i - 1) + seq[i];
    for (int j = std::max(0, i - tau - b + 1); j <= i - tau; ++j) {
      best = std::max(best, lb(j + b - 1) + ksum(j, i - tau) + ksum(j + b, i));
    }
    out.lb[static_cast<std::size_t>(i)] = best;
  }
  return out;
}

std::optional<MinimalityGap> check_minimality(const StreamTranscript& tr, const LowerBoundProfile& lb,
                                              MinimalityMode mode) {
  const auto prof = cumulative_profile(tr);
  const std::size_t n = std::max(prof.n_plus.size(), lb.lb.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (i >= prof.n_plus.size() || i >= lb.lb.size()) {
      return MinimalityGap{static_cast<int>(i), i < prof.n_plus.size() ? prof.n_plus[i] : -1,
                           i < lb.lb.size() ? lb.lb[i] : -1};
    }
    const long c = prof.n_plus[i];
    const long bound = lb.lb[i];
    const bool bad = mode == MinimalityMode::kEqual ? c != bound : c < bound;
    if (bad) return MinimalityGap{static_cast<int>(i), c, bound};
  }
  return std::nullopt;
}

DecodeCheckReport decode_check(const StreamCodec& codec, std::span<const MessagePacket> messages,
                               const CodeParams& p, std::span<const LossPattern> patterns) {
  DecodeCheckReport report;
  const auto encoded = codec.encode(messages);
  auto replay = [&](const LossPattern& pattern) {
    // Undecoded transcript of the failing run, kept for replay.
    auto tr = encode_transcript(codec, messages);
    for (auto& s : tr.slots) s.erased = pattern.contains(s.slot);
    return tr;
  };
  for (const auto& pattern : patterns) {
    ++report.patterns_checked;
    StreamTranscript tr;
    try {
      tr = run_stream(codec, messages, encoded, pattern);
    } catch (const DecodeFailure& e) {
      report.counterexample = Counterexample{pattern, -1, std::string("decode failure: ") + e.what(), replay(pattern)};
      return report;
    } catch (const std::invalid_argument& e) {
      report.counterexample = Counterexample{pattern, -1, std::string("decoder rejected pattern: ") + e.what(),
                                                replay(pattern)};
      return report;
    }
    if (const auto v = check_delays(tr, p, DelayConstraint::kWorstCase)) {
      report.counterexample = Counterexample{pattern, v->slot, "worst-case delay exceeded", std::move(tr)};
      return report;
    }
    if (pattern.empty()) {
      if (const auto v = check_delays(tr, p, DelayConstraint::kLossless)) {
        report.counterexample = Counterexample{pattern, v->slot, "lossless delay exceeded", std::move(tr)};
        return report;
      }
    }
  }
  return report;
}

DecodeCheckReport exhaustive_decode_check(const StreamCodec& codec, std::span<const MessagePacket> messages,
                                          const CodeParams& p, EnumerationMode mode) {
  CodeParams q = p;
  q.t = static_cast<int>(messages.size()) - 1;
  const auto patterns = enumerate_patterns(q, mode);
  return decode_check(codec, messages, q, patterns);
}

bool decoded_before_burst(const StreamTranscript& tr, const LossPattern& pattern, const CodeParams&) {
  const auto runs = bursts(pattern);
  if (runs.empty()) return true;
  if (runs.size() > 1) throw std::invalid_argument("decoded_before_burst expects a single burst");
  const int j = runs.front().start;
  for (const auto& s : tr.slots) {
    if (s.slot >= j) break;
    if (s.k == 0) continue;
    if (!s.decode_time || *s.decode_time > j - 1) return false;
  }
  return true;
}

std::optional<int> parity_tightness_violation(const MessageSizeSequence& seq, int tau, int b) {
  const auto layout = vgms_layout(seq, tau, b);
  const int slots = static_cast<int>(layout.size());
  auto psize = [&](int l) { return l < 0 || l >= slots ? 0L : static_cast<long>(layout[static_cast<std::size_t>(l)].p); };
  for (int i = tau; i < slots; ++i) {
    if (psize(i) == 0) continue;
    bool tight = false;
    for (int j = i - tau - b + 1; j <= i - tau && !tight; ++j) {
      long k = 0;
      for (int l = j; l <= i - tau; ++l) k += seq[l];
      long par = 0;
      for (int l = j + b; l <= i; ++l) par += psize(l);
      tight = k == par;
    }
    if (!tight) return i;
  }
  return std::nullopt;
}

std::optional<int> send_k_violation(const StreamTranscript& tr) {
  for (const auto& s : tr.slots) {
    if (s.n < s.k) return s.slot;
  }
  return std::nullopt;
}

}  // namespace streamcode
