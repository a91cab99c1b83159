// Runs every acceptance criterion and prints one PASS/FAIL line each.
// Exit status is the number of failed criteria (capped at 1).

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "streamcode/baseline.hpp"
#include "streamcode/cauchy.hpp"
#include "streamcode/gap.hpp"
#include "streamcode/oracle.hpp"
#include "streamcode/vgms.hpp"

using namespace streamcode;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

// Streams encoded for the VGMS grid, reused by the property criterion.
struct GridStream {
  CodeParams params;
  MessageSizeSequence sizes;
  StreamTranscript transcript;
};

std::vector<GridStream> g_grid;
// Transcripts of codes with zero lossless delay; n_i >= k_i must hold there.
std::vector<StreamTranscript> g_zero_delay_transcripts;

std::string describe(const CodeParams& p) {
  std::ostringstream os;
  os << "tau=" << p.tau << " b=" << p.b << " tau_l=" << p.tau_l << " m=" << p.m << " t=" << p.t;
  return os.str();
}

Outcome worked_example() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const auto seq = MessageSizeSequence({3, 2, 1, 2, 1, 0, 0, 0, 0});
  const auto lay = vgms_layout(seq, 4, 2);
  const std::vector<int> u = {3, 2, 0, 0, 1};
  const std::vector<int> v = {0, 0, 1, 2, 0};
  const std::vector<int> p = {3, 2, 0, 0, 1};
  for (std::size_t i = 0; i < 5; ++i) {
    if (lay[i].u != u[i] || lay[i].v != v[i]) o.fail("U/V split differs at slot " + std::to_string(i));
    if (lay[i + 4].p != p[i]) o.fail("|P| differs at slot " + std::to_string(i + 4));
  }
  // The symbol-level encoder must agree with the size allocator.
  const GaloisField f;
  const CodeParams cp{4, 2, 0, 5, 3, 8};
  const VgmsCodec codec(cp, f, 0);
  const auto x = codec.encode(random_messages(seq, f, 0));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (static_cast<int>(x[i].symbols.size()) != lay[i].k + lay[i].p) o.fail("channel size mismatch");
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= 1.0) o.fail("took " + std::to_string(secs) + " s");
  if (o.pass) o.detail = "layout exact";
  return o;
}

Outcome vgms_optimal_delay() {
  Outcome o;
  const GaloisField f;
  long patterns = 0;
  int streams = 0;
  for (int tau = 2; tau <= 5; ++tau) {
    for (int b = 1; b <= tau; ++b) {
      for (std::uint64_t seed = 0; seed < 20; ++seed) {
        CodeParams p{tau, b, 0, tau + 1, 4, 0};
        const auto raw = random_sizes(12 - tau, p.m, seed * 1000 + static_cast<std::uint64_t>(tau * 10 + b));
        const auto seq = terminate_sequence(raw, p);
        p = with_horizon(p, seq);
        const VgmsCodec codec(p, f, seed);
        const auto msgs = random_messages(seq, f, seed);
        const auto report = exhaustive_decode_check(codec, msgs, p, EnumerationMode::kFull);
        patterns += report.patterns_checked;
        ++streams;
        if (!report.ok()) {
          o.fail(describe(p) + " seed " + std::to_string(seed) + ": " + report.counterexample->reason);
        }
        auto tr = encode_transcript(codec, msgs);
        g_zero_delay_transcripts.push_back(tr);
        g_grid.push_back(GridStream{p, seq, std::move(tr)});
      }
    }
  }
  if (o.pass) o.detail = std::to_string(streams) + " streams, " + std::to_string(patterns) + " patterns";
  return o;
}

Outcome vgms_minimal_profile() {
  Outcome o;
  const GaloisField f;
  int dominated = 0;
  for (const auto& g : g_grid) {
    const auto lb = lower_bound_profile(g.sizes, g.params);
    if (const auto gap = check_minimality(g.transcript, lb, MinimalityMode::kEqual)) {
      o.fail(describe(g.params) + " slot " + std::to_string(gap->slot));
    }
    // The diagonal code is the only other shipped codec valid at tau_l = 0
    // (it needs tau_l = tau - b, so b = tau).
    if (g.params.b == g.params.tau) {
      const DiagonalCodec diag(g.params, f);
      const auto tr = encode_transcript(diag, random_messages(g.sizes, f, 1));
      g_zero_delay_transcripts.push_back(tr);
      if (check_minimality(tr, lb, MinimalityMode::kDominate)) o.fail("diagonal below the bound, " + describe(g.params));
      ++dominated;
    }
  }
  if (g_grid.empty()) o.fail("no grid streams");
  if (o.pass) {
    o.detail = std::to_string(g_grid.size()) + " profiles equal the bound, " + std::to_string(dominated) +
               " diagonal profiles dominate it";
  }
  return o;
}

Outcome diagonal_regime() {
  Outcome o;
  const GaloisField f;
  int runs = 0;
  for (int tau = 1; tau <= 8; ++tau) {
    for (int b = 1; b <= tau; ++b) {
      if (tau % b != 0) continue;
      const int c = tau / b;
      for (int mult = 1; mult <= 2; ++mult) {
        const int k = c * mult;
        const int live = std::max(1, std::min(6, 14 - tau));
        CodeParams p{tau, b, tau - b, tau + 1, k, 0};
        const auto seq = terminate_sequence(std::vector<int>(static_cast<std::size_t>(live), k), p);
        p = with_horizon(p, seq);
        const DiagonalCodec codec(p, f);
        const auto msgs = random_messages(seq, f, static_cast<std::uint64_t>(runs));
        const auto tr = encode_transcript(codec, msgs);
        if (p.tau_l == 0) g_zero_delay_transcripts.push_back(tr);
        if (rate(tr) != Rational(tau, tau + b)) o.fail("rate " + to_fraction_string(rate(tr)) + ", " + describe(p));
        const auto report = exhaustive_decode_check(codec, msgs, p, EnumerationMode::kFull);
        if (!report.ok()) o.fail(describe(p) + ": " + report.counterexample->reason);
        ++runs;
      }
    }
  }
  if (o.pass) o.detail = std::to_string(runs) + " streams at rate tau/(tau+b)";
  return o;
}

Outcome separation() {
  Outcome o;
  const GaloisField f;
  struct Case {
    GapLemma lemma;
    int tau, b, tau_l, d;
    Rational r1, r2;
  };
  const std::vector<Case> cases = {
      {GapLemma::kConv1, 5, 2, 3, 2, Rational(2, 3), Rational(5, 7)},
      {GapLemma::kConv2, 3, 2, 1, 2, Rational(4, 7), Rational(3, 5)},
      {GapLemma::kConv3, 4, 2, 1, 2, Rational(4, 7), Rational(2, 3)},
  };
  for (const auto& c : cases) {
    const auto r = run_gap(c.lemma, c.tau, c.b, c.tau_l, c.d, f);
    if (r.rate1 != c.r1 || r.rate2 != c.r2) o.fail(gap_csv_row(r) + ": rates");
    if (!r.ok()) o.fail(gap_csv_row(r) + ": " + r.detail);
  }
  int tuples = 0;
  for (int tau = 1; tau <= 10; ++tau) {
    for (int b = 1; b <= tau; ++b) {
      for (int tau_l = 0; tau_l <= tau - b; ++tau_l) {
        const int matches = int(tau_l == tau - b && tau % b == 0) + int(tau_l == 0);
        const Regime got = regime_classifier(tau, b, tau_l);
        const bool regime = got == Regime::kRegime1 || got == Regime::kRegime2;
        if ((matches > 0) != regime) o.fail("classifier disagrees with the regime definitions");
        if (!regime) {
          const int gaps = int(tau_l == tau - b && tau_l >= b) + int(tau_l == tau - b && tau_l < b) +
                           int(tau_l < tau - b);
          if (gaps != 1) o.fail("gap branches overlap");
        }
        ++tuples;
      }
    }
  }
  if (o.pass) o.detail = "3 lemma examples separated, " + std::to_string(tuples) + " tuples classified";
  return o;
}

Outcome block_code() {
  Outcome o;
  const GaloisField f(FieldSpec::with_degree(8));
  int codes = 0;
  for (int tau = 1; tau <= 8; ++tau) {
    for (int b = 1; b <= tau; ++b) {
      const auto code = build_block_code(tau, b, f, static_cast<std::uint64_t>(codes));
      if (!code.verified || !verify_block_code(code)) o.fail("tau " + std::to_string(tau) + " b " + std::to_string(b));
      ++codes;
    }
  }
  if (o.pass) o.detail = std::to_string(codes) + " codes verified";
  return o;
}

Outcome properties() {
  Outcome o;
  std::mt19937_64 rng(2024);
  for (int deg : {8, 16}) {
    const GaloisField f(FieldSpec::with_degree(deg));
    for (int i = 0; i < 10000; ++i) {
      const auto a = static_cast<Symbol>(rng() % f.order());
      const auto b = static_cast<Symbol>(rng() % f.order());
      const auto c = static_cast<Symbol>(rng() % f.order());
      bool ok = f.add(a, b) == f.add(b, a) && f.mul(a, b) == f.mul(b, a) &&
                f.add(f.add(a, b), c) == f.add(a, f.add(b, c)) && f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)) &&
                f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)) && f.add(a, 0) == a && f.mul(a, 1) == a &&
                f.add(a, a) == 0;
      if (a != 0) ok = ok && f.mul(a, f.inv(a)) == 1;
      if (!ok) {
        o.fail("field axiom fails in GF(2^" + std::to_string(deg) + ")");
        break;
      }
    }
  }

  const GaloisField f8(FieldSpec::with_degree(8));
  long squares = 0;
  for (std::size_t dim = 1; dim <= 6; ++dim) {
    const auto a = build_cauchy(dim, f8, dim);
    for (unsigned rows = 1; rows < (1U << dim); ++rows) {
      for (unsigned cols = 1; cols < (1U << dim); ++cols) {
        if (__builtin_popcount(rows) != __builtin_popcount(cols)) continue;
        std::vector<std::size_t> r;
        std::vector<std::size_t> c;
        for (std::size_t i = 0; i < dim; ++i) {
          if ((rows >> i) & 1U) r.push_back(i);
          if ((cols >> i) & 1U) c.push_back(i);
        }
        const auto sub = submatrix(a, IndexSet(r), IndexSet(c));
        if (rank(f8, sub) != r.size()) o.fail("singular Cauchy submatrix at dim " + std::to_string(dim));
        ++squares;
      }
    }
  }

  for (const auto& g : g_grid) {
    if (const auto v = parity_tightness_violation(g.sizes, g.params.tau, g.params.b)) {
      o.fail("parity not tight at slot " + std::to_string(*v) + ", " + describe(g.params));
    }
  }
  for (const auto& tr : g_zero_delay_transcripts) {
    if (const auto v = send_k_violation(tr)) o.fail("n < k at slot " + std::to_string(*v));
  }
  if (g_grid.empty()) o.fail("no grid streams");
  if (o.pass) {
    o.detail = "axioms ok, " + std::to_string(squares) + " Cauchy submatrices, " + std::to_string(g_grid.size()) +
               " tight streams, " + std::to_string(g_zero_delay_transcripts.size()) +
               " zero-delay transcripts with n >= k";
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"worked VGMS layout (tau=4, b=2, sizes 3,2,1,2,1)", worked_example},
      {"VGMS lossless delay 0 and worst-case delay tau, full enumeration", vgms_optimal_delay},
      {"VGMS cumulative profile equals the lower bound", vgms_minimal_profile},
      {"diagonal code rate tau/(tau+b) and full-pattern decoding", diagonal_regime},
      {"offline separation examples and regime classifier sweep", separation},
      {"block code burst/delay verification, tau <= 8", block_code},
      {"field, Cauchy, parity tightness and n >= k properties", properties},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " [" << o.detail
              << "] " << timing << std::endl;
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
