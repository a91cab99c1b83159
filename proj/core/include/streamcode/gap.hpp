#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "streamcode/baseline.hpp"

namespace streamcode {

enum class GapLemma { kConv1 = 1, kConv2 = 2, kConv3 = 3 };

enum class Regime { kRegime1, kRegime2, kConv1, kConv2, kConv3 };

std::string_view to_string(GapLemma lemma);
std::string_view to_string(Regime regime);
/// "conv1" | "conv2" | "conv3".
GapLemma parse_gap_lemma(std::string_view text);

/// regime1 when tau_l = tau - b and b | tau (checked first, so b = tau,
/// tau_l = 0 lands here), regime2 when tau_l = 0, otherwise the gap
/// lemma that applies. std::invalid_argument unless 1 <= b <= tau and
/// 0 <= tau_l <= tau - b.
Regime regime_classifier(int tau, int b, int tau_l);

/// Separation witness for one lemma.
///
/// budget: the most symbols a scheme reaching rate1 on sequence 1 can put
/// in the contested prefix. demand: the fewest a scheme reaching rate2 on
/// sequence 2 must put there. An online scheme cannot tell the sequences
/// apart inside the prefix, so demand > budget separates the two rates.
/// prefix1 / prefix2 are what the offline schemes actually send there.
struct GapReport {
  GapLemma lemma = GapLemma::kConv1;
  int tau = 0;
  int b = 0;
  int tau_l = 0;
  int d = 0;

  Rational rate1;
  Rational rate2;
  Rational stated_rate1;
  Rational stated_rate2;
  Rational budget;
  Rational demand;
  Rational prefix1;
  Rational prefix2;

  // conv2: total symbols forced on sequence 2 against the rate2 allowance.
  std::optional<Rational> total_needed;
  std::optional<Rational> total_allowed;
  // conv3: the lossiest cyclic channel drops at least this many symbols.
  std::optional<Rational> averaging_bound;

  bool rates_match = false;
  bool witnesses_ok = false;
  bool decoding_ok = false;
  bool separated = false;
  std::string detail;  // first failed check, if any

  bool ok() const { return rates_match && witnesses_ok && decoding_ok && separated; }
};

/// Builds both sequences, runs both offline schemes (rates, prefix
/// counts, single-burst decoding; conv3 also the cyclic channels) and
/// evaluates the lemma's budget and demand. Precondition failures throw
/// std::invalid_argument.
GapReport run_gap(GapLemma lemma, int tau, int b, int tau_l, int d, const GaloisField& field,
                  std::uint64_t seed = 0);

/// conv3's channels C_0..C_{tau+b-1}: C_i erases every slot s in
/// [0, tau+b-1] with (s - i) mod (tau + b) < b.
std::vector<LossPattern> cyclic_channels(int tau, int b);

std::string gap_csv_header();
std::string gap_csv_row(const GapReport& r);

}  // namespace streamcode
