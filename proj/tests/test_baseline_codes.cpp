#include <gtest/gtest.h>

#include "streamcode/baseline.hpp"
#include "streamcode/oracle.hpp"
#include "support.hpp"

using namespace streamcode;

namespace {

CodeParams diag_params(int tau, int b, int m) { return CodeParams{tau, b, tau - b, tau + 1, m, tau}; }

std::vector<MessagePacket> constant_stream(int live, int k, const CodeParams& p, const GaloisField& f,
                                           std::uint64_t seed, CodeParams& out) {
  const auto seq = terminate_sequence(std::vector<int>(static_cast<std::size_t>(live), k), p);
  out = with_horizon(p, seq);
  return random_messages(seq, f, seed);
}

}  // namespace

TEST(DiagonalCode, SinglePacketExample) {
  const GaloisField f(FieldSpec::with_degree(8));
  CodeParams p = diag_params(4, 2, 2);
  const auto msgs = constant_stream(1, 2, p, f, 1, p);
  const DiagonalCodec codec(p, f);
  const auto x = codec.encode(msgs);
  ASSERT_EQ(x.size(), 5U);
  EXPECT_EQ(x[0].symbols, (SymbolVec{msgs[0].symbols[0]}));
  EXPECT_TRUE(x[1].symbols.empty());
  EXPECT_EQ(x[2].symbols, (SymbolVec{msgs[0].symbols[1]}));
  EXPECT_TRUE(x[3].symbols.empty());
  EXPECT_EQ(x[4].symbols, (SymbolVec{f.add(msgs[0].symbols[0], msgs[0].symbols[1])}));
  EXPECT_EQ(rate(encode_transcript(codec, msgs)), Rational(2, 3));
}

TEST(DiagonalCode, PadsToComponentMultiple) {
  const GaloisField f(FieldSpec::with_degree(8));
  CodeParams p = diag_params(6, 2, 4);
  const auto seq = terminate_sequence(std::vector<int>{4, 0, 1}, p);
  p = with_horizon(p, seq);
  const DiagonalCodec codec(p, f);
  const auto lay = codec.layout(seq);
  EXPECT_EQ(lay[0], (std::vector<Annotation>{{"pad", 2}, {"component", 2}}));
  EXPECT_EQ(lay[1], (std::vector<Annotation>{{"pad", 0}, {"component", 0}}));
  EXPECT_EQ(lay[2], (std::vector<Annotation>{{"pad", 2}, {"component", 1}}));
  const auto msgs = random_messages(seq, f, 2);
  const auto tr = encode_transcript(codec, msgs);
  EXPECT_EQ(tr.channel_symbols(), 8 + 0 + 4);  // (3 + 1) components per message
  EXPECT_FALSE(check_delays(run_stream(codec, msgs), p, DelayConstraint::kLossless));
}

TEST(DiagonalCode, RejectsWrongRegime) {
  const GaloisField f;
  EXPECT_THROW(DiagonalCodec(CodeParams{5, 2, 3, 6, 2, 5}, f), std::invalid_argument);
  EXPECT_THROW(DiagonalCodec(CodeParams{4, 2, 0, 5, 2, 4}, f), std::invalid_argument);
}

TEST(DiagonalCode, FullPatternDecodingSmallGrid) {
  const GaloisField f(FieldSpec::with_degree(8));
  for (int tau = 1; tau <= 6; ++tau) {
    for (int b = 1; b <= tau; ++b) {
      if (tau % b != 0) continue;
      CodeParams p = diag_params(tau, b, 4);
      const auto seq = support::random_terminated(std::max(2, 9 - tau), p, static_cast<std::uint64_t>(tau * 11 + b));
      p = with_horizon(p, seq);
      const DiagonalCodec codec(p, f);
      const auto msgs = random_messages(seq, f, 3);
      const auto report = exhaustive_decode_check(codec, msgs, p, EnumerationMode::kFull);
      EXPECT_TRUE(report.ok()) << "tau " << tau << " b " << b << ": " << report.counterexample->reason;
    }
  }
}

TEST(BlockCode, SmallestExample) {
  const GaloisField f(FieldSpec::with_degree(8));
  const auto code = build_block_code(2, 1, f, 0);
  EXPECT_TRUE(code.verified);
  EXPECT_EQ(code.parity_coeffs.rows(), 1U);
  EXPECT_EQ(code.parity_coeffs.cols(), 2U);
  EXPECT_EQ(code.parity_coeffs(0, 0), 1);
  EXPECT_NE(code.parity_coeffs(0, 1), 0);
  EXPECT_TRUE(verify_block_code(code));
}

TEST(BlockCode, VerifiedAcrossGrid) {
  const GaloisField f(FieldSpec::with_degree(8));
  for (int tau = 1; tau <= 8; ++tau) {
    for (int b = 1; b <= tau; ++b) {
      const auto code = build_block_code(tau, b, f, static_cast<std::uint64_t>(tau * 8 + b));
      ASSERT_TRUE(code.verified);
      ASSERT_TRUE(verify_block_code(code)) << tau << "," << b;
    }
  }
}

TEST(BlockCode, DenseParitiesFailVerification) {
  // Every coefficient nonzero: after erasing s_0, s_1, p_0 alone mixes the
  // two unknowns, so s_0 is not recoverable from (..., p_0).
  const GaloisField f(FieldSpec::with_degree(8));
  BlockCode code{4, 2, DenseMatrix(2, 4), false, f};
  for (std::size_t q = 0; q < 2; ++q) {
    for (std::size_t l = 0; l < 4; ++l) code.parity_coeffs(q, l) = static_cast<Symbol>(1 + q * 4 + l);
  }
  EXPECT_FALSE(verify_block_code(code));
}

TEST(BlockCode, EncodeIsLinearCombination) {
  const GaloisField f(FieldSpec::with_degree(8));
  const auto code = build_block_code(4, 2, f, 1);
  const SymbolVec s = {5, 6, 7, 8};
  const auto p = code.encode(s);
  ASSERT_EQ(p.size(), 2U);
  for (std::size_t q = 0; q < 2; ++q) {
    Symbol acc = 0;
    for (std::size_t l = 0; l < 4; ++l) acc = f.add(acc, f.mul(code.parity_coeffs(q, l), s[l]));
    EXPECT_EQ(p[q], acc);
  }
  EXPECT_THROW(code.encode(SymbolVec{1, 2}), std::invalid_argument);
}

TEST(BlockCode, Preconditions) {
  EXPECT_THROW(build_block_code(3, 4, GaloisField(FieldSpec::with_degree(8)), 0), std::invalid_argument);
  EXPECT_THROW(build_block_code(3, 1, GaloisField(FieldSpec::with_degree(2)), 0), std::invalid_argument);
}

TEST(OfflineSchemes, NamesRoundTrip) {
  for (int lemma = 1; lemma <= 3; ++lemma) {
    for (int seq = 1; seq <= 2; ++seq) {
      const auto id = scheme_for(lemma, seq);
      EXPECT_EQ(lemma_of(id), lemma);
      EXPECT_EQ(sequence_of(id), seq);
      EXPECT_EQ(parse_offline_scheme(to_string(id)), id);
    }
  }
  EXPECT_THROW(parse_offline_scheme("lemma4_seq1"), std::invalid_argument);
}

TEST(OfflineSchemes, SequenceExamples) {
  const auto [a1, a2] = lemma_sequences(OfflineScheme{OfflineSchemeId::kLemma1Seq1, 5, 2, 3, 2});
  EXPECT_EQ(a1.sizes(), (std::vector<int>{2, 0, 0, 0, 0, 0}));
  EXPECT_EQ(a2.sizes(), (std::vector<int>{2, 8, 0, 0, 0, 0, 0}));

  const auto [c1, c2] = lemma_sequences(OfflineScheme{OfflineSchemeId::kLemma3Seq1, 4, 2, 1, 1});
  EXPECT_EQ(c1.sizes(), (std::vector<int>{1, 1, 0, 0, 0, 0}));
  EXPECT_EQ(c2.sizes(), (std::vector<int>{1, 1, 2, 0, 0, 0, 0}));

  const auto [b1, b2] = lemma_sequences(OfflineScheme{OfflineSchemeId::kLemma2Seq1, 3, 2, 1, 2});
  EXPECT_EQ(b1.sizes(), (std::vector<int>{2, 2, 0, 0, 0}));
  EXPECT_EQ(b2.sizes(), (std::vector<int>{2, 2, 2, 0, 0, 0}));

  EXPECT_THROW(lemma_sequences(OfflineScheme{OfflineSchemeId::kLemma1Seq1, 4, 2, 2, 2}), std::invalid_argument);
  EXPECT_THROW(lemma_sequences(OfflineScheme{OfflineSchemeId::kLemma2Seq1, 5, 2, 3, 2}), std::invalid_argument);
  EXPECT_THROW(lemma_sequences(OfflineScheme{OfflineSchemeId::kLemma3Seq1, 4, 2, 2, 2}), std::invalid_argument);
}

TEST(OfflineSchemes, SequencesShareTheContestedPrefix) {
  const GaloisField f;
  for (int tau = 2; tau <= 8; ++tau) {
    for (int b = 1; b <= tau; ++b) {
      for (int tau_l = 1; tau_l <= tau - b; ++tau_l) {
        for (int lemma = 1; lemma <= 3; ++lemma) {
          const OfflineScheme sch{scheme_for(lemma, 1), tau, b, tau_l, 2};
          if (!scheme_preconditions(sch).empty()) continue;
          const auto [s1, s2] = lemma_sequences(sch);
          const int prefix = lemma == 1 ? sch.e() : b;
          for (int j = 0; j < prefix; ++j) EXPECT_EQ(s1[j], s2[j]) << lemma << " " << tau << " " << b;
          EXPECT_TRUE(s1.is_terminated(tau));
          EXPECT_TRUE(s2.is_terminated(tau));
        }
      }
    }
  }
}

TEST(OfflineSchemes, RatesAndDelaysOverValidGrid) {
  // Every scheme meets its lemma's rate exactly, the lossless delay, and
  // the worst-case delay under every single burst.
  const GaloisField f;
  int checked = 0;
  for (int tau = 2; tau <= 8; ++tau) {
    for (int b = 1; b <= tau; ++b) {
      for (int tau_l = 1; tau_l <= tau - b; ++tau_l) {
        for (int lemma = 1; lemma <= 3; ++lemma) {
          for (int seq = 1; seq <= 2; ++seq) {
            OfflineScheme sch{scheme_for(lemma, seq), tau, b, tau_l, 0};
            sch.d = lemma == 1 ? 2 * (sch.a() + 1) : 2;
            if (!scheme_preconditions(sch).empty()) continue;
            const OfflineSchemeCodec codec(sch, f, 0);
            const auto msgs = random_messages(codec.sequence(), f, static_cast<std::uint64_t>(checked));
            EXPECT_EQ(rate(encode_transcript(codec, msgs)), stated_rate(sch)) << codec.name() << " tau " << tau;
            const auto report = exhaustive_decode_check(codec, msgs, codec.params(), EnumerationMode::kSingleBurst);
            EXPECT_TRUE(report.ok()) << codec.name() << " tau " << tau << " b " << b << " tau_l " << tau_l << ": "
                                     << (report.ok() ? "" : report.counterexample->reason);
            ++checked;
          }
        }
      }
    }
  }
  EXPECT_GT(checked, 50);
}

TEST(OfflineSchemes, StatedRateExamples) {
  EXPECT_EQ(stated_rate({OfflineSchemeId::kLemma1Seq1, 5, 2, 3, 2}), Rational(2, 3));
  EXPECT_EQ(stated_rate({OfflineSchemeId::kLemma1Seq2, 5, 2, 3, 2}), Rational(5, 7));
  EXPECT_EQ(stated_rate({OfflineSchemeId::kLemma2Seq1, 3, 2, 1, 2}), Rational(4, 7));
  EXPECT_EQ(stated_rate({OfflineSchemeId::kLemma2Seq2, 3, 2, 1, 2}), Rational(3, 5));
  EXPECT_EQ(stated_rate({OfflineSchemeId::kLemma3Seq1, 4, 2, 1, 2}), Rational(4, 7));
  EXPECT_EQ(stated_rate({OfflineSchemeId::kLemma3Seq2, 4, 2, 1, 2}), Rational(2, 3));
}

TEST(OfflineSchemes, DivisibilityOfD) {
  const GaloisField f;
  EXPECT_THROW(OfflineSchemeCodec({OfflineSchemeId::kLemma2Seq1, 3, 2, 1, 3}, f), std::invalid_argument);
  EXPECT_THROW(OfflineSchemeCodec({OfflineSchemeId::kLemma3Seq1, 4, 2, 1, 1}, f), std::invalid_argument);
  EXPECT_THROW(OfflineSchemeCodec({OfflineSchemeId::kLemma1Seq1, 5, 2, 3, 3}, f), std::invalid_argument);
  EXPECT_NO_THROW(OfflineSchemeCodec({OfflineSchemeId::kLemma3Seq2, 4, 2, 1, 1}, f));
}

TEST(OfflineSchemes, RejectsForeignSequences) {
  const GaloisField f;
  const OfflineSchemeCodec codec({OfflineSchemeId::kLemma2Seq2, 3, 2, 1, 2}, f);
  const auto msgs = random_messages(MessageSizeSequence({2, 2, 0, 0, 0, 0}), f, 1);
  EXPECT_THROW(codec.encode(msgs), std::invalid_argument);
}

TEST(OfflineSchemes, Lemma2ItemizedPackets) {
  // tau=3, b=2, tau_l=1, d=2: r = 1.
  const GaloisField f(FieldSpec::with_degree(8));
  const OfflineSchemeCodec codec({OfflineSchemeId::kLemma2Seq1, 3, 2, 1, 2}, f);
  const auto msgs = random_messages(codec.sequence(), f, 4);
  const auto x = codec.encode(msgs);
  const auto& s0 = msgs[0].symbols;
  const auto& s1 = msgs[1].symbols;
  EXPECT_EQ(x[0].symbols, s0);
  EXPECT_EQ(x[1].symbols, (SymbolVec{s1[0]}));
  EXPECT_EQ(x[2].symbols, (SymbolVec{s1[1]}));
  EXPECT_EQ(x[3].symbols, (SymbolVec{s0[0], f.add(s0[1], s1[1])}));
  EXPECT_EQ(x[4].symbols, (SymbolVec{f.add(s1[0], s1[1])}));
}
