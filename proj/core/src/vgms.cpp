#include "streamcode/vgms.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace streamcode {

VgmsSizeAllocator::VgmsSizeAllocator(int tau, int b) : tau_(tau), b_(b) {
  if (b < 1 || b > tau) throw std::invalid_argument("VGMS needs 1 <= b <= tau");
}

int VgmsSizeAllocator::parity_size(int slot) const {
  if (slot < 0 || slot >= static_cast<int>(p_.size())) return 0;
  return p_[static_cast<std::size_t>(slot)];
}

long VgmsSizeAllocator::compute_z(int i) const {
  if (i < b_ || i > next_slot()) {
    throw std::out_of_range("compute_z(" + std::to_string(i) + ") needs b <= i <= next slot");
  }
  auto k = [&](int l) { return l < 0 || l >= static_cast<int>(k_.size()) ? 0 : k_[static_cast<std::size_t>(l)]; };
  long z = std::numeric_limits<long>::max();
  for (int j = i - b_ + 1; j <= i; ++j) {
    long budget = 0;
    for (int l = j + b_; l <= i + tau_ - 1; ++l) budget += parity_size(l);
    long demand = 0;
    for (int l = j; l <= i - 1; ++l) demand += k(l);
    z = std::min(z, budget - demand);
  }
  return z;
}

VgmsSlotLayout VgmsSizeAllocator::next(int k) {
  if (k < 0) throw std::invalid_argument("negative message size");
  const int i = next_slot();
  VgmsSlotLayout out;
  out.k = k;
  if (i < b_) {
    out.u = k;
    out.v = 0;
  } else {
    // z_i >= 0 for every sequence; the clamp keeps the rule total anyway.
    const long z = std::max(0L, compute_z(i));
    out.v = static_cast<int>(std::min<long>(k, z));
    out.u = k - out.v;
  }
  k_.push_back(k);
  if (p_.size() < static_cast<std::size_t>(i + tau_ + 1)) p_.resize(static_cast<std::size_t>(i + tau_ + 1), 0);
  p_[static_cast<std::size_t>(i + tau_)] = out.u;
  out.p = parity_size(i);
  layout_.push_back(out);
  return out;
}

std::vector<VgmsSlotLayout> vgms_layout(const MessageSizeSequence& sizes, int tau, int b) {
  VgmsSizeAllocator alloc(tau, b);
  for (int k : sizes.sizes()) alloc.next(k);
  return alloc.history();
}

namespace {

void check_coefficients(const CodeParams& p, const DenseMatrix& a) {
  const auto dim = static_cast<std::size_t>(p.tau) * static_cast<std::size_t>(p.m);
  if (a.rows() != dim || a.cols() != dim) {
    throw std::invalid_argument("VGMS coefficient matrix must be (tau*m) x (tau*m)");
  }
}

std::size_t block(int slot, int tau, int m) {
  return static_cast<std::size_t>(slot % tau) * static_cast<std::size_t>(m);
}

}  // namespace

VgmsEncoder::VgmsEncoder(const CodeParams& p, GaloisField field, DenseMatrix coefficients)
    : params_(p),
      field_(std::move(field)),
      a_(std::move(coefficients)),
      sizes_(p.tau, p.b),
      v_ring_(static_cast<std::size_t>(p.tau) * static_cast<std::size_t>(p.m), 0),
      u_ring_(static_cast<std::size_t>(p.tau)) {
  if (p.m < 1) throw std::invalid_argument("VGMS needs m >= 1");
  check_coefficients(p, a_);
}

std::pair<SymbolVec, SymbolVec> VgmsEncoder::partition(const MessagePacket& packet) {
  const int i = next_slot();
  if (packet.slot != i) {
    throw std::invalid_argument("VGMS encoder expected slot " + std::to_string(i) + ", got " +
                                std::to_string(packet.slot));
  }
  const int k = static_cast<int>(packet.symbols.size());
  if (k > params_.m) throw std::invalid_argument("message packet larger than m");
  const auto lay = sizes_.next(k);
  SymbolVec v(packet.symbols.begin(), packet.symbols.begin() + lay.v);
  SymbolVec u(packet.symbols.begin() + lay.v, packet.symbols.end());

  const std::size_t off = block(i, params_.tau, params_.m);
  std::fill_n(v_ring_.begin() + static_cast<std::ptrdiff_t>(off), params_.m, Symbol{0});
  std::copy(v.begin(), v.end(), v_ring_.begin() + static_cast<std::ptrdiff_t>(off));
  u_ring_[static_cast<std::size_t>(i % params_.tau)] = u;
  return {std::move(u), std::move(v)};
}

SymbolVec VgmsEncoder::build_parity(int i) const {
  if (i != next_slot()) throw std::logic_error("build_parity must run for the current slot");
  const int size = sizes_.parity_size(i);
  if (size == 0) return {};
  const auto& u_old = u_ring_[static_cast<std::size_t>(i % params_.tau)];
  if (static_cast<int>(u_old.size()) != size) throw std::logic_error("parity budget does not match U[i - tau]");

  SymbolVec parity = u_old;
  const std::size_t col0 = block(i, params_.tau, params_.m);
  for (std::size_t r = 0; r < v_ring_.size(); ++r) {
    if (v_ring_[r] == 0) continue;
    field_.mul_add(v_ring_[r], a_.row(r).data() + col0, parity.data(), parity.size());
  }
  return parity;
}

ChannelPacket VgmsEncoder::encode_slot(const MessagePacket& packet) {
  const int i = next_slot();
  auto parity = build_parity(i);
  partition(packet);
  ChannelPacket out{i, packet.symbols};
  out.symbols.insert(out.symbols.end(), parity.begin(), parity.end());
  return out;
}

VgmsDecoder::VgmsDecoder(const CodeParams& p, GaloisField field, DenseMatrix coefficients)
    : params_(p), field_(std::move(field)), a_(std::move(coefficients)) {
  check_coefficients(p, a_);
}

DecodeResult VgmsDecoder::decode(std::span<const ReceivedPacket> received,
                                 const MessageSizeSequence& sizes) const {
  const int tau = params_.tau;
  const int m = params_.m;
  const int slots = static_cast<int>(sizes.size());
  if (static_cast<int>(received.size()) != slots) {
    throw std::invalid_argument("received stream and size sequence differ in length");
  }
  const auto layout = vgms_layout(sizes, tau, params_.b);

  std::vector<int> erased;
  for (int s = 0; s < slots; ++s) {
    if (!received[static_cast<std::size_t>(s)]) erased.push_back(s);
  }
  const LossPattern pattern(erased);
  CodeParams p = params_;
  p.t = slots - 1;
  if (!is_admissible(pattern, p)) {
    throw std::invalid_argument("loss pattern is not admissible under C(b, w)");
  }

  std::vector<std::optional<SymbolVec>> v(static_cast<std::size_t>(slots));
  std::vector<std::optional<SymbolVec>> u(static_cast<std::size_t>(slots));
  std::vector<SymbolVec> parity(static_cast<std::size_t>(slots));
  for (int s = 0; s < slots; ++s) {
    const auto idx = static_cast<std::size_t>(s);
    const auto& lay = layout[idx];
    if (received[idx]) {
      const auto& sym = received[idx]->symbols;
      if (static_cast<int>(sym.size()) != lay.k + lay.p) {
        throw std::invalid_argument("packet " + std::to_string(s) + " has unexpected length");
      }
      v[idx] = SymbolVec(sym.begin(), sym.begin() + lay.v);
      u[idx] = SymbolVec(sym.begin() + lay.v, sym.begin() + lay.k);
      parity[idx] = SymbolVec(sym.begin() + lay.k, sym.end());
    } else {
      if (lay.v == 0) v[idx] = SymbolVec{};
      if (lay.u == 0) u[idx] = SymbolVec{};
    }
  }

  auto v_contribution = [&](int q, std::size_t col, int skip_first, int skip_last) -> Symbol {
    // Contribution of the V-blocks of slots [q - tau, q - 1] (minus the
    // skipped range) to parity column `col`.
    Symbol acc = 0;
    for (int l = std::max(0, q - tau); l <= q - 1; ++l) {
      if (l >= skip_first && l <= skip_last) continue;
      const auto& vl = v[static_cast<std::size_t>(l)];
      if (!vl) throw DecodeFailure("V[" + std::to_string(l) + "] unknown when needed");
      const std::size_t row0 = block(l, tau, m);
      for (std::size_t r = 0; r < vl->size(); ++r) {
        acc = static_cast<Symbol>(acc ^ field_.mul((*vl)[r], a_(row0 + r, col)));
      }
    }
    return acc;
  };

  auto recover_burst_v = [&](const Burst& burst) {
    std::vector<std::size_t> rows;
    for (int l = burst.start; l <= burst.last(); ++l) {
      const auto& lay = layout[static_cast<std::size_t>(l)];
      if (v[static_cast<std::size_t>(l)]) continue;
      for (int r = 0; r < lay.v; ++r) rows.push_back(block(l, tau, m) + static_cast<std::size_t>(r));
    }
    if (rows.empty()) return;

    std::vector<std::pair<std::size_t, Symbol>> equations;
    const int last = std::min(burst.start + tau - 1, slots - 1);
    for (int j = burst.last() + 1; j <= last && equations.size() < rows.size(); ++j) {
      const auto jdx = static_cast<std::size_t>(j);
      const int size = layout[jdx].p;
      if (size == 0) continue;
      if (!received[jdx]) throw DecodeFailure("parity slot " + std::to_string(j) + " erased inside recovery window");
      const auto& u_old = j - tau >= 0 ? u[static_cast<std::size_t>(j - tau)] : std::optional<SymbolVec>{};
      if (!u_old) throw DecodeFailure("U[" + std::to_string(j - tau) + "] unknown when needed");
      const std::size_t col0 = block(j, tau, m);
      for (int c = 0; c < size && equations.size() < rows.size(); ++c) {
        const std::size_t col = col0 + static_cast<std::size_t>(c);
        Symbol value = parity[jdx][static_cast<std::size_t>(c)];
        value = static_cast<Symbol>(value ^ (*u_old)[static_cast<std::size_t>(c)]);
        value = static_cast<Symbol>(value ^ v_contribution(j, col, burst.start, burst.last()));
        equations.emplace_back(col, value);
      }
    }
    if (equations.size() < rows.size()) {
      throw DecodeFailure("burst at slot " + std::to_string(burst.start) + " needs " +
                          std::to_string(rows.size()) + " parity symbols, only " +
                          std::to_string(equations.size()) + " available");
    }

    const IndexSet row_set(rows);
    std::vector<std::size_t> cols;
    for (const auto& e : equations) cols.push_back(e.first);
    const IndexSet col_set(cols);
    SymbolVec rhs(col_set.size());
    for (const auto& [col, value] : equations) {
      const auto pos = std::lower_bound(col_set.begin(), col_set.end(), col) - col_set.begin();
      rhs[static_cast<std::size_t>(pos)] = value;
    }
    const auto x = solve_left(field_, submatrix(a_, row_set, col_set), std::move(rhs));

    for (int l = burst.start; l <= burst.last(); ++l) {
      auto& vl = v[static_cast<std::size_t>(l)];
      if (vl) continue;
      const auto& lay = layout[static_cast<std::size_t>(l)];
      SymbolVec values(static_cast<std::size_t>(lay.v));
      for (int r = 0; r < lay.v; ++r) {
        const std::size_t row = block(l, tau, m) + static_cast<std::size_t>(r);
        const auto pos = std::lower_bound(row_set.begin(), row_set.end(), row) - row_set.begin();
        values[static_cast<std::size_t>(r)] = x[static_cast<std::size_t>(pos)];
      }
      vl = std::move(values);
    }
  };

  auto recover_u = [&](int l) {
    const int s = l + tau;
    const auto sdx = static_cast<std::size_t>(s);
    const int size = layout[static_cast<std::size_t>(l)].u;
    if (s >= slots || !received[sdx]) throw DecodeFailure("parity for U[" + std::to_string(l) + "] not received");
    SymbolVec values(static_cast<std::size_t>(size));
    const std::size_t col0 = block(s, tau, m);
    for (int c = 0; c < size; ++c) {
      const std::size_t col = col0 + static_cast<std::size_t>(c);
      values[static_cast<std::size_t>(c)] =
          static_cast<Symbol>(parity[sdx][static_cast<std::size_t>(c)] ^ v_contribution(s, col, 1, 0));
    }
    u[static_cast<std::size_t>(l)] = std::move(values);
  };

  const auto runs = bursts(pattern);
  DecodeResult result;
  result.decode_time.assign(static_cast<std::size_t>(slots), std::nullopt);
  result.recovered.assign(static_cast<std::size_t>(slots), SymbolVec{});

  for (int s = 0; s < slots; ++s) {
    for (const auto& burst : runs) {
      if (std::min(burst.start + tau - 1, slots - 1) == s) recover_burst_v(burst);
    }
    const int l = s - tau;
    if (l >= 0 && !received[static_cast<std::size_t>(l)] && !u[static_cast<std::size_t>(l)]) recover_u(l);

    for (int i = 0; i <= s; ++i) {
      const auto idx = static_cast<std::size_t>(i);
      if (result.decode_time[idx]) continue;
      if (layout[idx].k == 0) {
        result.decode_time[idx] = i;
        continue;
      }
      if (v[idx] && u[idx]) {
        result.decode_time[idx] = s;
        SymbolVec sym = *v[idx];
        sym.insert(sym.end(), u[idx]->begin(), u[idx]->end());
        result.recovered[idx] = std::move(sym);
      }
    }
  }
  return result;
}

VgmsCodec::VgmsCodec(const CodeParams& p, GaloisField field, std::uint64_t seed)
    : params_(p), field_(std::move(field)) {
  const auto dim = static_cast<std::size_t>(p.tau) * static_cast<std::size_t>(p.m);
  enc_a_ = build_cauchy(dim, field_, seed).dense();
  dec_a_ = enc_a_;
}

VgmsCodec::VgmsCodec(const CodeParams& p, GaloisField field, DenseMatrix encoder_coefficients,
                     DenseMatrix decoder_coefficients)
    : params_(p),
      field_(std::move(field)),
      enc_a_(std::move(encoder_coefficients)),
      dec_a_(std::move(decoder_coefficients)) {
  check_coefficients(p, enc_a_);
  check_coefficients(p, dec_a_);
}

std::vector<ChannelPacket> VgmsCodec::encode(std::span<const MessagePacket> messages) const {
  if (!sizes_of(messages).is_terminated(params_.tau)) {
    throw std::invalid_argument("VGMS streams must end with tau zero-size packets");
  }
  VgmsEncoder enc(params_, field_, enc_a_);
  std::vector<ChannelPacket> out;
  out.reserve(messages.size());
  for (const auto& m : messages) out.push_back(enc.encode_slot(m));
  return out;
}

std::vector<std::vector<Annotation>> VgmsCodec::layout(const MessageSizeSequence& sizes) const {
  std::vector<std::vector<Annotation>> out;
  for (const auto& lay : vgms_layout(sizes, params_.tau, params_.b)) {
    out.push_back({{"u", lay.u}, {"v", lay.v}, {"p", lay.p}});
  }
  return out;
}

DecodeResult VgmsCodec::decode(std::span<const ReceivedPacket> received,
                               const MessageSizeSequence& sizes) const {
  return VgmsDecoder(params_, field_, dec_a_).decode(received, sizes);
}

}  // namespace streamcode
