#include "streamcode/linear_decoder.hpp"

#include <algorithm>
#include <string>

namespace streamcode {

LinearStreamModel::LinearStreamModel(const StreamCodec& codec, const MessageSizeSequence& sizes)
    : field_(codec.field()), sizes_(sizes) {
  offset_.resize(sizes.size() + 1, 0);
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    offset_[i + 1] = offset_[i] + static_cast<std::size_t>(sizes.sizes()[i]);
  }
  symbol_count_ = offset_.back();

  std::vector<MessagePacket> unit(sizes.size());
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    unit[i] = MessagePacket{static_cast<int>(i), SymbolVec(static_cast<std::size_t>(sizes.sizes()[i]), 0)};
  }
  const auto zero = codec.encode(unit);
  rows_.resize(zero.size());
  for (std::size_t j = 0; j < zero.size(); ++j) {
    rows_[j].assign(zero[j].symbols.size(), SymbolVec(symbol_count_, 0));
  }

  for (std::size_t i = 0; i < sizes.size(); ++i) {
    for (std::size_t r = 0; r < unit[i].symbols.size(); ++r) {
      unit[i].symbols[r] = 1;
      const auto enc = codec.encode(unit);
      unit[i].symbols[r] = 0;
      const std::size_t x = offset_[i] + r;
      for (std::size_t j = 0; j < enc.size(); ++j) {
        if (enc[j].symbols.size() != rows_[j].size()) {
          throw std::logic_error("codec packet sizes depend on symbol values");
        }
        for (std::size_t c = 0; c < enc[j].symbols.size(); ++c) rows_[j][c][x] = enc[j].symbols[c];
      }
    }
  }
}

namespace {

struct BasisRow {
  std::size_t pivot;
  SymbolVec coeffs;
  Symbol rhs;
};

}  // namespace

DecodeResult LinearStreamModel::decode(std::span<const ReceivedPacket> received) const {
  const std::size_t slots = sizes_.size();
  DecodeResult result;
  result.decode_time.assign(slots, std::nullopt);
  result.recovered.assign(slots, SymbolVec{});

  std::vector<BasisRow> basis;
  std::vector<int> pivot_row(symbol_count_, -1);

  auto add_equation = [&](SymbolVec row, Symbol rhs) {
    for (const auto& b : basis) {
      const Symbol f = row[b.pivot];
      if (f == 0) continue;
      field_.mul_add(f, b.coeffs.data(), row.data(), symbol_count_);
      rhs = static_cast<Symbol>(rhs ^ field_.mul(f, b.rhs));
    }
    auto it = std::find_if(row.begin(), row.end(), [](Symbol s) { return s != 0; });
    if (it == row.end()) {
      if (rhs != 0) throw DecodeFailure("received symbols are inconsistent with the code");
      return;
    }
    const auto p = static_cast<std::size_t>(it - row.begin());
    const Symbol scale = field_.inv(row[p]);
    for (auto& v : row) v = field_.mul(v, scale);
    rhs = field_.mul(rhs, scale);
    for (auto& b : basis) {
      const Symbol f = b.coeffs[p];
      if (f == 0) continue;
      field_.mul_add(f, row.data(), b.coeffs.data(), symbol_count_);
      b.rhs = static_cast<Symbol>(b.rhs ^ field_.mul(f, rhs));
    }
    pivot_row[p] = static_cast<int>(basis.size());
    basis.push_back(BasisRow{p, std::move(row), rhs});
  };

  auto known = [&](std::size_t x) -> std::optional<Symbol> {
    const int r = pivot_row[x];
    if (r < 0) return std::nullopt;
    const auto& b = basis[static_cast<std::size_t>(r)];
    for (std::size_t c = 0; c < symbol_count_; ++c) {
      if (c != x && b.coeffs[c] != 0) return std::nullopt;
    }
    return b.rhs;
  };

  for (std::size_t s = 0; s < slots; ++s) {
    if (s < received.size() && received[s]) {
      const auto& pkt = *received[s];
      if (s >= rows_.size() || pkt.symbols.size() != rows_[s].size()) {
        throw std::invalid_argument("received packet " + std::to_string(s) +
                                    " does not match the code's packet size");
      }
      for (std::size_t c = 0; c < pkt.symbols.size(); ++c) add_equation(rows_[s][c], pkt.symbols[c]);
    }
    for (std::size_t i = 0; i <= s; ++i) {
      if (result.decode_time[i]) continue;
      if (sizes_.sizes()[i] == 0) {
        result.decode_time[i] = static_cast<int>(i);
        continue;
      }
      SymbolVec values;
      bool all = true;
      for (std::size_t x = offset_[i]; x < offset_[i + 1]; ++x) {
        const auto v = known(x);
        if (!v) {
          all = false;
          break;
        }
        values.push_back(*v);
      }
      if (all) {
        result.decode_time[i] = static_cast<int>(s);
        result.recovered[i] = std::move(values);
      }
    }
  }
  return result;
}

}  // namespace streamcode
