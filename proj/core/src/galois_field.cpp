#include "streamcode/galois_field.hpp"

#include <array>
#include <bit>
#include <stdexcept>
#include <string>

namespace streamcode {
namespace {

int poly_degree(std::uint64_t p) { return p == 0 ? -1 : std::bit_width(p) - 1; }

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m) {
  const int dm = poly_degree(m);
  for (int da = poly_degree(a); da >= dm; da = poly_degree(a)) {
    a ^= m << (da - dm);
  }
  return a;
}

std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t poly) {
  std::uint64_t acc = 0;
  for (std::uint64_t x = a; b != 0; b >>= 1, x <<= 1) {
    if (b & 1U) acc ^= x;
  }
  return static_cast<std::uint32_t>(poly_mod(acc, poly));
}

std::uint32_t powmod(std::uint32_t a, std::uint64_t e, std::uint32_t poly) {
  std::uint32_t result = 1;
  while (e != 0) {
    if (e & 1U) result = mulmod(result, a, poly);
    a = mulmod(a, a, poly);
    e >>= 1;
  }
  return result;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> factors;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    factors.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) factors.push_back(n);
  return factors;
}

}  // namespace

bool is_irreducible(std::uint32_t poly) {
  const int d = poly_degree(poly);
  if (d < 1) return false;
  for (std::uint32_t divisor = 2; poly_degree(divisor) <= d / 2; ++divisor) {
    if (poly_mod(poly, divisor) == 0) return false;
  }
  return true;
}

std::uint32_t default_polynomial(int degree) {
  // Primitive polynomials, one per degree.
  static constexpr std::array<std::uint32_t, 17> kPolys = {
      0,      0x3,    0x7,    0xB,    0x13,   0x25,   0x43,   0x83,   0x11D,
      0x211,  0x409,  0x805,  0x1053, 0x201B, 0x4443, 0x8003, 0x1100B};
  if (degree < 1 || degree > 16) {
    throw std::invalid_argument("field degree must lie in [1, 16], got " +
                                std::to_string(degree));
  }
  return kPolys[static_cast<std::size_t>(degree)];
}

GaloisField::GaloisField(FieldSpec spec) {
  auto t = std::make_shared<Tables>();
  t->degree = spec.degree;
  t->polynomial = spec.reduction_polynomial == 0 ? default_polynomial(spec.degree)
                                                 : spec.reduction_polynomial;
  if (spec.degree < 1 || spec.degree > 16) {
    throw std::invalid_argument("field degree must lie in [1, 16]");
  }
  if (poly_degree(t->polynomial) != spec.degree) {
    throw std::invalid_argument("reduction polynomial degree does not match field degree");
  }
  if (!is_irreducible(t->polynomial)) {
    throw std::invalid_argument("reduction polynomial is reducible");
  }
  t->order = 1U << spec.degree;

  const std::uint32_t group = t->order - 1;
  const auto factors = prime_factors(group);
  std::uint32_t g = 1;
  for (std::uint32_t candidate = (group == 1 ? 1 : 2); candidate < t->order; ++candidate) {
    bool primitive = true;
    for (auto p : factors) {
      if (powmod(candidate, group / p, t->polynomial) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      g = candidate;
      break;
    }
  }
  t->generator = static_cast<Symbol>(g);

  t->log.assign(t->order, 0);
  t->exp.assign(2 * static_cast<std::size_t>(group), 0);
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i < group; ++i) {
    t->exp[i] = static_cast<Symbol>(x);
    t->exp[i + group] = static_cast<Symbol>(x);
    t->log[x] = i;
    x = mulmod(x, g, t->polynomial);
  }
  tables_ = std::move(t);
}

void GaloisField::check(Symbol a) const {
  if (a >= order()) {
    throw std::domain_error("symbol " + std::to_string(a) + " is not an element of GF(2^" +
                            std::to_string(degree()) + ")");
  }
}

Symbol GaloisField::add(Symbol a, Symbol b) const {
  check(a);
  check(b);
  return static_cast<Symbol>(a ^ b);
}

Symbol GaloisField::mul(Symbol a, Symbol b) const {
  check(a);
  check(b);
  return mul_unchecked(a, b);
}

Symbol GaloisField::inv(Symbol a) const {
  check(a);
  if (a == 0) throw std::domain_error("zero has no multiplicative inverse");
  const std::uint32_t group = order() - 1;
  return tables_->exp[(group - tables_->log[a]) % group];
}

Symbol GaloisField::div(Symbol a, Symbol b) const { return mul(a, inv(b)); }

Symbol GaloisField::pow(Symbol a, std::uint64_t exponent) const {
  check(a);
  if (exponent == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t group = order() - 1;
  return tables_->exp[(tables_->log[a] * (exponent % group)) % group];
}

void GaloisField::mul_add(Symbol c, const Symbol* src, Symbol* dst, std::size_t n) const {
  check(c);
  if (c == 0) return;
  const auto& t = *tables_;
  const std::uint32_t lc = t.log[c];
  for (std::size_t i = 0; i < n; ++i) {
    if (src[i] == 0) continue;
    check(src[i]);
    dst[i] ^= t.exp[lc + t.log[src[i]]];
  }
}

}  // namespace streamcode
