#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "streamcode/burst_channel.hpp"
#include "streamcode/codec.hpp"

namespace streamcode {

/// n_plus[i] = n_0 + ... + n_i.
struct CumulativeProfile {
  std::vector<long> n_plus;
};

/// Minimum cumulative channel symbols through each slot for any code
/// meeting lossless delay 0 and worst-case delay tau over C(b, w > tau).
struct LowerBoundProfile {
  std::vector<long> lb;
};

CumulativeProfile cumulative_profile(const StreamTranscript& tr);

/// lb[i] = lb[i-1] + k_i for i < tau, then
///   lb[i] = max(lb[i-1] + k_i,
///               max_{j = max(0, i-tau-b+1)}^{i-tau}
///                   lb[j+b-1] + sum_{l=j}^{i-tau} k_l + sum_{l=j+b}^{i} k_l)
/// with lb[-1] = 0. Requires p.tau_l == 0 (std::invalid_argument).
LowerBoundProfile lower_bound_profile(const MessageSizeSequence& seq, const CodeParams& p);

enum class MinimalityMode {
  kEqual,     // profile must match the bound at every slot
  kDominate,  // profile must be >= the bound at every slot
};

struct MinimalityGap {
  int slot = 0;
  long cumulative = 0;
  long bound = 0;
};

/// First slot where the transcript's profile breaks `mode` against `lb`.
/// A length mismatch is reported at the first missing slot.
std::optional<MinimalityGap> check_minimality(const StreamTranscript& tr, const LowerBoundProfile& lb,
                                              MinimalityMode mode);

struct Counterexample {
  LossPattern pattern;
  int slot = 0;
  std::string reason;
  StreamTranscript transcript;
};

struct DecodeCheckReport {
  long patterns_checked = 0;
  std::optional<Counterexample> counterexample;

  bool ok() const { return !counterexample; }
};

/// Encodes once, then for each pattern decodes and checks the worst-case
/// delay (and, for the empty pattern, the lossless delay p.tau_l). Stops
/// at the first failure in visiting order. DecodeFailure and
/// std::invalid_argument thrown by the decoder become counterexamples.
/// p.t is taken from the message list.
DecodeCheckReport exhaustive_decode_check(const StreamCodec& codec, std::span<const MessagePacket> messages,
                                          const CodeParams& p, EnumerationMode mode);

/// Same, over an explicit pattern list.
DecodeCheckReport decode_check(const StreamCodec& codec, std::span<const MessagePacket> messages,
                               const CodeParams& p, std::span<const LossPattern> patterns);

/// True iff every S[0..j-1] with k > 0 has decode_time <= j - 1, where j
/// is the start of the pattern's single burst. Vacuously true for j = 0
/// or an empty pattern; std::invalid_argument for several bursts.
bool decoded_before_burst(const StreamTranscript& tr, const LossPattern& pattern, const CodeParams& p);

/// First slot i >= tau with |P[i]| > 0 for which no
/// j in [i-tau-b+1, i-tau] has sum_{l=j}^{i-tau} k_l == sum_{l=j+b}^{i} |P[l]|.
std::optional<int> parity_tightness_violation(const MessageSizeSequence& seq, int tau, int b);

/// First slot with n_i < k_i.
std::optional<int> send_k_violation(const StreamTranscript& tr);

}  // namespace streamcode
