#include "streamcode/baseline.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace streamcode {

namespace {

void add_into(SymbolVec& dst, std::span<const Symbol> src) {
  if (dst.size() != src.size()) throw std::logic_error("component size mismatch");
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = static_cast<Symbol>(dst[i] ^ src[i]);
}

void append(SymbolVec& dst, std::span<const Symbol> src) { dst.insert(dst.end(), src.begin(), src.end()); }

std::span<const Symbol> slice(const SymbolVec& v, std::size_t first, std::size_t count) {
  return std::span<const Symbol>(v).subspan(first, count);
}

std::vector<ChannelPacket> to_packets(std::vector<SymbolVec> x) {
  std::vector<ChannelPacket> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = ChannelPacket{static_cast<int>(i), std::move(x[i])};
  return out;
}

}  // namespace

// ---------------------------------------------------------------- diagonal

DiagonalCodec::DiagonalCodec(const CodeParams& p, GaloisField field) : params_(p), field_(std::move(field)) {
  if (p.b < 1 || p.b > p.tau || p.tau % p.b != 0) {
    throw std::invalid_argument("diagonal code needs b | tau");
  }
  if (p.tau_l != p.tau - p.b) throw std::invalid_argument("diagonal code needs tau_l = tau - b");
}

std::vector<std::vector<Annotation>> DiagonalCodec::layout(const MessageSizeSequence& sizes) const {
  const int c = components();
  std::vector<std::vector<Annotation>> out;
  for (int k : sizes.sizes()) {
    const int padded = (k + c - 1) / c * c;
    out.push_back({{"pad", padded - k}, {"component", padded / c}});
  }
  return out;
}

std::vector<ChannelPacket> DiagonalCodec::encode(std::span<const MessagePacket> messages) const {
  const int tau = params_.tau;
  const int b = params_.b;
  const int c = components();
  if (!sizes_of(messages).is_terminated(tau)) {
    throw std::invalid_argument("diagonal streams must end with tau zero-size packets");
  }
  const int slots = static_cast<int>(messages.size());

  std::vector<std::vector<SymbolVec>> parts(messages.size());
  for (std::size_t i = 0; i < messages.size(); ++i) {
    SymbolVec s = messages[i].symbols;
    const std::size_t padded = (s.size() + static_cast<std::size_t>(c) - 1) / static_cast<std::size_t>(c) *
                               static_cast<std::size_t>(c);
    s.resize(padded, 0);
    const std::size_t len = padded / static_cast<std::size_t>(c);
    SymbolVec sum(len, 0);
    for (int z = 0; z < c; ++z) {
      auto comp = slice(s, static_cast<std::size_t>(z) * len, len);
      parts[i].emplace_back(comp.begin(), comp.end());
      add_into(sum, comp);
    }
    parts[i].push_back(std::move(sum));  // index c: the sum, sent at i + tau
  }

  std::vector<SymbolVec> x(messages.size());
  for (int s = 0; s < slots; ++s) {
    for (int i = std::max(0, s - tau); i <= s; ++i) {
      const int off = s - i;
      int idx = -1;
      if (off == tau) {
        idx = c;
      } else if (off % b == 0) {
        idx = off / b;
      }
      if (idx >= 0) append(x[static_cast<std::size_t>(s)], parts[static_cast<std::size_t>(i)][static_cast<std::size_t>(idx)]);
    }
  }
  return to_packets(std::move(x));
}

// -------------------------------------------------------------- block code

SymbolVec BlockCode::encode(std::span<const Symbol> s) const {
  if (static_cast<int>(s.size()) != tau) throw std::invalid_argument("block code input must have tau symbols");
  SymbolVec p(static_cast<std::size_t>(b), 0);
  for (int q = 0; q < b; ++q) {
    Symbol acc = 0;
    for (int l = 0; l < tau; ++l) {
      acc = static_cast<Symbol>(acc ^ field.mul(parity_coeffs(static_cast<std::size_t>(q), static_cast<std::size_t>(l)),
                                                s[static_cast<std::size_t>(l)]));
    }
    p[static_cast<std::size_t>(q)] = acc;
  }
  return p;
}

bool verify_block_code(const BlockCode& code) {
  const int tau = code.tau;
  const int b = code.b;
  const int n = tau + b;
  for (int start = 0; start < n; ++start) {
    for (int len = 1; len <= b; ++len) {
      const int last = std::min(start + len, n) - 1;
      auto erased = [&](int pos) { return pos >= start && pos <= last; };
      for (int j = 0; j < tau; ++j) {
        if (!erased(j)) continue;
        std::vector<SymbolVec> rows;
        for (int l = 0; l < tau; ++l) {
          if (erased(l)) continue;
          SymbolVec e(static_cast<std::size_t>(tau), 0);
          e[static_cast<std::size_t>(l)] = 1;
          rows.push_back(std::move(e));
        }
        for (int q = 0; q <= std::min(b - 1, j); ++q) {
          if (erased(tau + q)) continue;
          auto r = code.parity_coeffs.row(static_cast<std::size_t>(q));
          rows.emplace_back(r.begin(), r.end());
        }
        auto to_matrix = [&](bool with_target) {
          DenseMatrix m(rows.size() + (with_target ? 1 : 0), static_cast<std::size_t>(tau));
          for (std::size_t r = 0; r < rows.size(); ++r) {
            for (int c = 0; c < tau; ++c) m(r, static_cast<std::size_t>(c)) = rows[r][static_cast<std::size_t>(c)];
          }
          if (with_target) m(rows.size(), static_cast<std::size_t>(j)) = 1;
          return m;
        };
        if (rank(code.field, to_matrix(false)) != rank(code.field, to_matrix(true))) return false;
      }
    }
  }
  return true;
}

BlockCode build_block_code(int tau, int b, const GaloisField& field, std::uint64_t seed, int max_attempts) {
  if (b < 1 || b > tau) throw std::invalid_argument("block code needs 1 <= b <= tau");
  if (2L * tau > static_cast<long>(field.order())) {
    throw std::invalid_argument("block code needs a field with at least 2 * tau elements");
  }
  const int free_cols = tau - b;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    BlockCode code{tau, b, DenseMatrix(static_cast<std::size_t>(b), static_cast<std::size_t>(tau)), false, field};
    for (int q = 0; q < b; ++q) code.parity_coeffs(static_cast<std::size_t>(q), static_cast<std::size_t>(q)) = 1;
    if (free_cols > 0) {
      const auto dim = static_cast<std::size_t>(std::max(b, free_cols));
      const auto c = submatrix(build_cauchy(dim, field, seed + static_cast<std::uint64_t>(attempt)),
                               IndexSet::range(0, static_cast<std::size_t>(b)),
                               IndexSet::range(0, static_cast<std::size_t>(free_cols)));
      for (int q = 0; q < b; ++q) {
        for (int l = 0; l < free_cols; ++l) {
          code.parity_coeffs(static_cast<std::size_t>(q), static_cast<std::size_t>(b + l)) =
              c(static_cast<std::size_t>(q), static_cast<std::size_t>(l));
        }
      }
    }
    if (verify_block_code(code)) {
      code.verified = true;
      return code;
    }
  }
  throw std::runtime_error("no verified block code for tau=" + std::to_string(tau) + ", b=" + std::to_string(b) +
                           " within " + std::to_string(max_attempts) + " attempts");
}

// --------------------------------------------------------- offline schemes

namespace {

constexpr std::array<std::string_view, 6> kSchemeNames = {
    "lemma1_seq1", "lemma1_seq2", "lemma2_seq1", "lemma2_seq2", "lemma3_seq1", "lemma3_seq2",
};

MessageSizeSequence terminated(std::vector<int> k, int tau) {
  k.insert(k.end(), static_cast<std::size_t>(tau), 0);
  return MessageSizeSequence(std::move(k));
}

}  // namespace

std::string_view to_string(OfflineSchemeId id) { return kSchemeNames.at(static_cast<std::size_t>(id)); }

OfflineSchemeId parse_offline_scheme(std::string_view text) {
  for (std::size_t i = 0; i < kSchemeNames.size(); ++i) {
    if (kSchemeNames[i] == text) return static_cast<OfflineSchemeId>(i);
  }
  throw std::invalid_argument("unknown offline scheme '" + std::string(text) + "'");
}

int lemma_of(OfflineSchemeId id) { return static_cast<int>(id) / 2 + 1; }
int sequence_of(OfflineSchemeId id) { return static_cast<int>(id) % 2 + 1; }

OfflineSchemeId scheme_for(int lemma, int sequence) {
  if (lemma < 1 || lemma > 3 || sequence < 1 || sequence > 2) {
    throw std::invalid_argument("lemma must be 1..3 and sequence 1..2");
  }
  return static_cast<OfflineSchemeId>((lemma - 1) * 2 + (sequence - 1));
}

std::vector<std::string> scheme_preconditions(const OfflineScheme& sch) {
  std::vector<std::string> v;
  if (sch.b < 1 || sch.b > sch.tau) v.emplace_back("1 <= b <= tau");
  if (sch.d < 1) v.emplace_back("d >= 1");
  if (!v.empty()) return v;
  switch (lemma_of(sch.id)) {
    case 1:
      if (sch.tau_l != sch.tau - sch.b) v.emplace_back("tau_l = tau - b");
      if (sch.tau_l < sch.b) v.emplace_back("tau_l >= b");
      if (sch.tau % sch.b == 0) v.emplace_back("b does not divide tau");
      break;
    case 2:
      if (sch.tau_l != sch.tau - sch.b) v.emplace_back("tau_l = tau - b");
      if (sch.tau_l < 1 || sch.tau_l >= sch.b) v.emplace_back("1 <= tau_l < b");
      break;
    default:
      if (sch.tau_l < 1 || sch.tau_l >= sch.tau - sch.b) v.emplace_back("1 <= tau_l < tau - b");
      break;
  }
  return v;
}

std::pair<MessageSizeSequence, MessageSizeSequence> lemma_sequences(const OfflineScheme& sch) {
  const auto bad = scheme_preconditions(sch);
  if (!bad.empty()) {
    std::string msg = "lemma preconditions violated:";
    for (const auto& s : bad) msg += " [" + s + "]";
    throw std::invalid_argument(msg);
  }
  const int d = sch.d;
  std::vector<int> s1;
  std::vector<int> s2;
  switch (lemma_of(sch.id)) {
    case 1:
      s1.assign(static_cast<std::size_t>(sch.e()), d);
      s2.assign(static_cast<std::size_t>(sch.b - 1), d);
      s2.push_back(d * (sch.tau_l + 1));
      break;
    case 2:
      s1.assign(static_cast<std::size_t>(sch.r() + 1), d);
      s2 = s1;
      s2.resize(static_cast<std::size_t>(sch.b), 0);
      s2.push_back(d);
      break;
    default:
      s1.assign(static_cast<std::size_t>(sch.b), d);
      s2.assign(static_cast<std::size_t>(sch.tau - sch.tau_l - 1), d);
      s2.push_back(d * (sch.tau_l + 1));
      break;
  }
  return {terminated(std::move(s1), sch.tau), terminated(std::move(s2), sch.tau)};
}

MessageSizeSequence scheme_sequence(const OfflineScheme& sch) {
  auto seqs = lemma_sequences(sch);
  return sequence_of(sch.id) == 1 ? std::move(seqs.first) : std::move(seqs.second);
}

Rational stated_rate(const OfflineScheme& sch) {
  const int tau = sch.tau;
  const int b = sch.b;
  const int r = sch.r();
  switch (sch.id) {
    case OfflineSchemeId::kLemma1Seq1:
      return Rational(sch.a() + 1, sch.a() + 2);
    case OfflineSchemeId::kLemma1Seq2:
    case OfflineSchemeId::kLemma3Seq2:
      return Rational(tau, tau + b);
    case OfflineSchemeId::kLemma2Seq1:
      // (r + 1) / (2r + 1.5), doubled to stay integral
      return Rational(2 * (r + 1), 4 * r + 3);
    case OfflineSchemeId::kLemma2Seq2:
      return Rational(r + 2, 2 * r + 3);
    case OfflineSchemeId::kLemma3Seq1:
      return Rational(2 * b, 4 * b - 1);
  }
  throw std::logic_error("unreachable");
}

OfflineSchemeCodec::OfflineSchemeCodec(const OfflineScheme& sch, GaloisField field, std::uint64_t block_seed)
    : scheme_(sch), field_(std::move(field)), sequence_(scheme_sequence(sch)) {
  const bool halving = sch.id == OfflineSchemeId::kLemma2Seq1 || sch.id == OfflineSchemeId::kLemma3Seq1;
  if (halving && sch.d % 2 != 0) throw std::invalid_argument(std::string(name()) + " needs an even d");
  if (sch.id == OfflineSchemeId::kLemma1Seq1 && sch.d % (sch.a() + 1) != 0) {
    throw std::invalid_argument("lemma1_seq1 needs d to be a multiple of a + 1");
  }
  params_ = CodeParams{sch.tau, sch.b, sch.tau_l, sch.tau + 1, sequence_.max_size(), sequence_.last_slot()};
  require_valid(params_);
  if (sch.id == OfflineSchemeId::kLemma1Seq2 || sch.id == OfflineSchemeId::kLemma3Seq2) {
    block_ = build_block_code(sch.tau, sch.b, field_, block_seed);
  }
}

std::vector<ChannelPacket> OfflineSchemeCodec::encode(std::span<const MessagePacket> messages) const {
  if (sizes_of(messages) != sequence_) {
    throw std::invalid_argument(std::string(name()) + " only encodes its lemma's size sequence");
  }
  switch (scheme_.id) {
    case OfflineSchemeId::kLemma1Seq1:
      return to_packets(encode_split(messages));
    case OfflineSchemeId::kLemma1Seq2:
    case OfflineSchemeId::kLemma3Seq2:
      return to_packets(encode_block(messages));
    case OfflineSchemeId::kLemma2Seq1:
    case OfflineSchemeId::kLemma3Seq1:
      return to_packets(encode_halving(messages));
    case OfflineSchemeId::kLemma2Seq2:
      return to_packets(encode_direct_sum(messages));
  }
  throw std::logic_error("unreachable");
}

// Each S[i], i < e, cut into a + 1 parts on the diagonal i, i+b, ..., i+ab;
// the part sum follows at i + (a+1)b.
std::vector<SymbolVec> OfflineSchemeCodec::encode_split(std::span<const MessagePacket> s) const {
  const int b = scheme_.b;
  const int parts = scheme_.a() + 1;
  const auto len = static_cast<std::size_t>(scheme_.d / parts);
  std::vector<SymbolVec> x(s.size());
  for (int i = 0; i < scheme_.e(); ++i) {
    const auto& src = s[static_cast<std::size_t>(i)].symbols;
    SymbolVec sum(len, 0);
    for (int z = 0; z < parts; ++z) {
      const auto comp = slice(src, static_cast<std::size_t>(z) * len, len);
      append(x[static_cast<std::size_t>(i + z * b)], comp);
      add_into(sum, comp);
    }
    append(x[static_cast<std::size_t>(i + parts * b)], sum);
  }
  return x;
}

// Slots 0..q-1 direct, S[q] spread evenly over q..tau-1 (q = tau - tau_l - 1),
// so every X[0..tau-1] carries d symbols; column z of those is one block
// codeword whose parity j goes to X[tau + j].
std::vector<SymbolVec> OfflineSchemeCodec::encode_block(std::span<const MessagePacket> s) const {
  const int tau = scheme_.tau;
  const int b = scheme_.b;
  const int d = scheme_.d;
  const int q = tau - scheme_.tau_l - 1;
  std::vector<SymbolVec> x(s.size());
  for (int j = 0; j < q; ++j) x[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j)].symbols;
  const auto& big = s[static_cast<std::size_t>(q)].symbols;
  for (int j = q; j < tau; ++j) {
    append(x[static_cast<std::size_t>(j)], slice(big, static_cast<std::size_t>((j - q) * d), static_cast<std::size_t>(d)));
  }
  for (int z = 0; z < d; ++z) {
    SymbolVec word(static_cast<std::size_t>(tau));
    for (int j = 0; j < tau; ++j) word[static_cast<std::size_t>(j)] = x[static_cast<std::size_t>(j)][static_cast<std::size_t>(z)];
    const auto p = block_.encode(word);
    for (int j = 0; j < b; ++j) x[static_cast<std::size_t>(tau + j)].push_back(p[static_cast<std::size_t>(j)]);
  }
  return x;
}

// Halve S[0] and S[h] (h = b - tau_l for lemma2_seq1, b - 1 for lemma3_seq1).
// X[i] = S[i] for i < h, X[h] = S0[h], X[b] = S1[h],
// X[b+1] = (S0[0], S1[0] + S1[h]), X[i+b+1] = X[i+b] + S[i] for 0 < i < h,
// X[2b] = S0[h] + S1[h].
std::vector<SymbolVec> OfflineSchemeCodec::encode_halving(std::span<const MessagePacket> s) const {
  const int b = scheme_.b;
  const int h = scheme_.id == OfflineSchemeId::kLemma2Seq1 ? scheme_.r() : b - 1;
  const auto half = static_cast<std::size_t>(scheme_.d / 2);
  std::vector<SymbolVec> x(s.size());
  auto at = [&](int slot) -> SymbolVec& { return x[static_cast<std::size_t>(slot)]; };
  auto msg = [&](int slot) -> const SymbolVec& { return s[static_cast<std::size_t>(slot)].symbols; };

  for (int i = 0; i < h; ++i) at(i) = msg(i);
  const auto h0 = slice(msg(h), 0, half);
  const auto h1 = slice(msg(h), half, half);
  append(at(h), h0);
  append(at(b), h1);
  // With h = 0 (lemma3_seq1, b = 1) S[0] is the halved packet itself and the
  // recovery chain is empty.
  if (h >= 1) {
    append(at(b + 1), slice(msg(0), 0, half));
    const auto s0_hi = slice(msg(0), half, half);
    SymbolVec tail(s0_hi.begin(), s0_hi.end());
    add_into(tail, h1);
    append(at(b + 1), tail);
    for (int i = 1; i < h; ++i) {
      SymbolVec next = at(i + b);
      add_into(next, msg(i));
      at(i + b + 1) = std::move(next);
    }
  }
  SymbolVec check(h0.begin(), h0.end());
  add_into(check, h1);
  append(at(2 * b), check);
  return x;
}

// lemma2_seq2: X[i] = S[i] for i in [0, r] and i = b,
// X[b+1] = S[0] + S[b], X[i+b+1] = X[i+b] + S[i] for 0 < i < r,
// X[2b] = S[b] + S[r].
std::vector<SymbolVec> OfflineSchemeCodec::encode_direct_sum(std::span<const MessagePacket> s) const {
  const int b = scheme_.b;
  const int r = scheme_.r();
  std::vector<SymbolVec> x(s.size());
  auto at = [&](int slot) -> SymbolVec& { return x[static_cast<std::size_t>(slot)]; };
  auto msg = [&](int slot) -> const SymbolVec& { return s[static_cast<std::size_t>(slot)].symbols; };

  for (int i = 0; i <= r; ++i) at(i) = msg(i);
  at(b) = msg(b);
  SymbolVec run = msg(0);
  add_into(run, msg(b));
  at(b + 1) = run;
  for (int i = 1; i < r; ++i) {
    add_into(run, msg(i));
    at(i + b + 1) = run;
  }
  SymbolVec check = msg(b);
  add_into(check, msg(r));
  append(at(2 * b), check);
  return x;
}

}  // namespace streamcode
