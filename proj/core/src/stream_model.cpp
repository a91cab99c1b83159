#include "streamcode/stream_model.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <random>
#include <stdexcept>

namespace streamcode {

std::vector<std::string> validate_params(const CodeParams& p) {
  std::vector<std::string> v;
  if (p.b < 1) v.emplace_back("1 <= b");
  if (p.b > p.tau) v.emplace_back("b <= tau");
  if (p.tau_l < 0) v.emplace_back("0 <= tau_l");
  if (p.tau_l > p.tau - p.b) v.emplace_back("tau_l <= tau - b");
  if (p.w <= p.tau) v.emplace_back("w > tau");
  if (p.m < 1) v.emplace_back("m >= 1");
  if (p.t < p.tau) v.emplace_back("t >= tau");
  return v;
}

void require_valid(const CodeParams& p) {
  const auto v = validate_params(p);
  if (v.empty()) return;
  std::string msg = "invalid parameters:";
  for (const auto& s : v) msg += " [" + s + "]";
  throw std::invalid_argument(msg);
}

MessageSizeSequence::MessageSizeSequence(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  for (int k : sizes_) {
    if (k < 0) throw std::invalid_argument("message sizes must be non-negative");
  }
}

long MessageSizeSequence::total() const {
  return std::accumulate(sizes_.begin(), sizes_.end(), 0L);
}

int MessageSizeSequence::max_size() const {
  return sizes_.empty() ? 0 : *std::max_element(sizes_.begin(), sizes_.end());
}

bool MessageSizeSequence::is_terminated(int tau) const {
  if (tau < 0 || static_cast<int>(sizes_.size()) < tau) return false;
  return std::all_of(sizes_.end() - tau, sizes_.end(), [](int k) { return k == 0; });
}

MessageSizeSequence terminate_sequence(std::span<const int> raw_sizes, const CodeParams& p) {
  for (int k : raw_sizes) {
    if (k < 0 || k > p.m) {
      throw std::invalid_argument("message size " + std::to_string(k) + " outside [0, " +
                                  std::to_string(p.m) + "]");
    }
  }
  MessageSizeSequence seq(std::vector<int>(raw_sizes.begin(), raw_sizes.end()));
  if (seq.size() > 0 && seq.is_terminated(p.tau)) return seq;
  std::vector<int> sizes(raw_sizes.begin(), raw_sizes.end());
  sizes.insert(sizes.end(), static_cast<std::size_t>(std::max(p.tau, 0)), 0);
  return MessageSizeSequence(std::move(sizes));
}

CodeParams with_horizon(CodeParams p, const MessageSizeSequence& sizes) {
  p.t = sizes.last_slot();
  return p;
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos == text.size()) return out;
  while (true) {
    skip_ws();
    int value = 0;
    const char* first = text.data() + pos;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr == first) {
      throw std::invalid_argument("cannot parse integer list: \"" + std::string(text) + "\"");
    }
    out.push_back(value);
    pos = static_cast<std::size_t>(ptr - text.data());
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != ',') {
      throw std::invalid_argument("cannot parse integer list: \"" + std::string(text) + "\"");
    }
    ++pos;
  }
  return out;
}

long StreamTranscript::message_symbols() const {
  long sum = 0;
  for (const auto& s : slots) sum += s.k;
  return sum;
}

long StreamTranscript::channel_symbols() const {
  long sum = 0;
  for (const auto& s : slots) sum += s.n;
  return sum;
}

Rational rate(const StreamTranscript& tr) {
  const long denominator = tr.channel_symbols();
  if (denominator == 0) throw std::domain_error("rate undefined: no channel symbols were sent");
  return Rational(tr.message_symbols()) / Rational(denominator);
}

std::string to_fraction_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::optional<DelayViolation> check_delays(const StreamTranscript& tr, const CodeParams& p,
                                           DelayConstraint constraint) {
  const int delay = constraint == DelayConstraint::kLossless ? p.tau_l : p.tau;
  for (const auto& s : tr.slots) {
    if (s.k == 0) continue;
    const int deadline = s.slot + delay;
    if (!s.decode_time || *s.decode_time > deadline) {
      return DelayViolation{s.slot, s.decode_time, deadline};
    }
  }
  return std::nullopt;
}

std::vector<MessagePacket> random_messages(const MessageSizeSequence& sizes,
                                           const GaloisField& field, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int shift = 64 - field.degree();
  std::vector<MessagePacket> out;
  out.reserve(sizes.size());
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    MessagePacket pkt{static_cast<int>(i), SymbolVec(static_cast<std::size_t>(sizes.sizes()[i]))};
    for (auto& s : pkt.symbols) s = static_cast<Symbol>(rng() >> shift);
    out.push_back(std::move(pkt));
  }
  return out;
}

std::vector<int> random_sizes(int count, int m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> out(static_cast<std::size_t>(std::max(count, 0)));
  for (auto& k : out) k = static_cast<int>(rng() % static_cast<std::uint64_t>(m + 1));
  return out;
}

}  // namespace streamcode
