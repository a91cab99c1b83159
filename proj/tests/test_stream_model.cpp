#include <gtest/gtest.h>

#include "streamcode/stream_model.hpp"
#include "support.hpp"

using namespace streamcode;

TEST(StreamModel, ParameterValidation) {
  EXPECT_TRUE(validate_params(CodeParams{4, 2, 0, 5, 3, 8}).empty());

  const auto big_b = validate_params(CodeParams{4, 5, 0, 5, 3, 8});
  ASSERT_FALSE(big_b.empty());
  EXPECT_NE(std::find(big_b.begin(), big_b.end(), "b <= tau"), big_b.end());

  const auto slow = validate_params(CodeParams{4, 2, 3, 5, 3, 8});
  ASSERT_EQ(slow.size(), 1U);
  EXPECT_EQ(slow.front(), "tau_l <= tau - b");

  EXPECT_EQ(validate_params(CodeParams{4, 2, 0, 4, 3, 8}).size(), 1U);  // w must exceed tau
  EXPECT_THROW(require_valid(CodeParams{4, 0, 0, 5, 3, 8}), std::invalid_argument);
}

TEST(StreamModel, TerminationAppendsTauZeros) {
  const auto p = support::params(4, 2, 0, 3);
  const auto seq = terminate_sequence(support::worked_sizes(), p);
  EXPECT_EQ(seq.sizes(), (std::vector<int>{3, 2, 1, 2, 1, 0, 0, 0, 0}));
  EXPECT_EQ(seq.last_slot(), 8);
  EXPECT_TRUE(seq.is_terminated(4));

  EXPECT_EQ(terminate_sequence({}, p).sizes(), (std::vector<int>{0, 0, 0, 0}));
  EXPECT_EQ(terminate_sequence(seq.sizes(), p), seq);  // already terminated
  const std::vector<int> too_big = {4};
  EXPECT_THROW(terminate_sequence(too_big, p), std::invalid_argument);
}

TEST(StreamModel, SizeSequenceReadsOutsideRangeAsZero) {
  const MessageSizeSequence seq({3, 2});
  EXPECT_EQ(seq[-1], 0);
  EXPECT_EQ(seq[1], 2);
  EXPECT_EQ(seq[5], 0);
  EXPECT_EQ(seq.total(), 5);
  EXPECT_EQ(seq.max_size(), 3);
  EXPECT_THROW(MessageSizeSequence({1, -1}), std::invalid_argument);
}

TEST(StreamModel, WithHorizonSetsLastSlot) {
  const MessageSizeSequence seq({1, 0, 0, 0, 0, 0});
  EXPECT_EQ(with_horizon(support::params(4, 2), seq).t, 5);
}

TEST(StreamModel, ParseIntList) {
  EXPECT_EQ(parse_int_list("3,2,1"), (std::vector<int>{3, 2, 1}));
  EXPECT_EQ(parse_int_list(" 3 , 2 ,1 "), (std::vector<int>{3, 2, 1}));
  EXPECT_TRUE(parse_int_list("").empty());
  EXPECT_THROW(parse_int_list("3,,1"), std::invalid_argument);
  EXPECT_THROW(parse_int_list("3;1"), std::invalid_argument);
  EXPECT_THROW(parse_int_list("x"), std::invalid_argument);
}

TEST(StreamModel, RateIsExactAndReduced) {
  StreamTranscript tr;
  const std::vector<std::pair<int, int>> kn = {{3, 3}, {2, 2}, {1, 1}, {2, 2}, {1, 4}, {0, 2}, {0, 0}, {0, 0}, {0, 1}};
  for (std::size_t i = 0; i < kn.size(); ++i) {
    SlotRecord r;
    r.slot = static_cast<int>(i);
    r.k = kn[i].first;
    r.n = kn[i].second;
    tr.slots.push_back(r);
  }
  EXPECT_EQ(tr.message_symbols(), 9);
  EXPECT_EQ(tr.channel_symbols(), 15);
  EXPECT_EQ(rate(tr), Rational(3, 5));
  EXPECT_EQ(to_fraction_string(rate(tr)), "3/5");
  EXPECT_DOUBLE_EQ(to_double(rate(tr)), 0.6);

  StreamTranscript empty;
  empty.slots.resize(3);
  EXPECT_THROW(rate(empty), std::domain_error);
  EXPECT_EQ(to_fraction_string(Rational(4)), "4/1");
}

TEST(StreamModel, DelayChecks) {
  const auto p = support::params(4, 2, 0, 3);
  StreamTranscript tr;
  for (int i = 0; i < 6; ++i) {
    SlotRecord r;
    r.slot = i;
    r.k = i == 4 ? 0 : 1;
    r.decode_time = i;
    tr.slots.push_back(r);
  }
  EXPECT_FALSE(check_delays(tr, p, DelayConstraint::kLossless));

  tr.slots[2].decode_time = 2 + 4 + 1;
  const auto v = check_delays(tr, p, DelayConstraint::kWorstCase);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->slot, 2);
  EXPECT_EQ(v->deadline, 6);

  tr.slots[2].decode_time = 6;
  EXPECT_FALSE(check_delays(tr, p, DelayConstraint::kWorstCase));
  EXPECT_TRUE(check_delays(tr, p, DelayConstraint::kLossless));

  // Zero-size packets never count, even if never "decoded".
  tr.slots[2].decode_time = 2;
  tr.slots[4].decode_time.reset();
  EXPECT_FALSE(check_delays(tr, p, DelayConstraint::kLossless));
  tr.slots[3].decode_time.reset();
  EXPECT_TRUE(check_delays(tr, p, DelayConstraint::kWorstCase));
}

TEST(StreamModel, RandomGenerationIsSeededAndInRange) {
  const GaloisField f(FieldSpec::with_degree(5));
  const MessageSizeSequence seq({3, 0, 2});
  const auto a = random_messages(seq, f, 42);
  const auto b = random_messages(seq, f, 42);
  ASSERT_EQ(a.size(), 3U);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].slot, static_cast<int>(i));
    EXPECT_EQ(a[i].symbols, b[i].symbols);
    EXPECT_EQ(static_cast<int>(a[i].symbols.size()), seq[static_cast<long>(i)]);
    for (Symbol s : a[i].symbols) EXPECT_TRUE(f.contains(s));
  }
  const auto sizes = random_sizes(200, 4, 1);
  EXPECT_EQ(sizes, random_sizes(200, 4, 1));
  EXPECT_EQ(*std::min_element(sizes.begin(), sizes.end()), 0);
  EXPECT_EQ(*std::max_element(sizes.begin(), sizes.end()), 4);
}
