#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace streamcode {

/// A field element of GF(2^degree), stored in its polynomial-basis bit
/// representation. Degrees above 16 are not supported.
using Symbol = std::uint16_t;
using SymbolVec = std::vector<Symbol>;

/// Degree and reduction polynomial of a binary extension field.
///
/// A zero `reduction_polynomial` selects the built-in polynomial for the
/// degree (see `default_polynomial`).
struct FieldSpec {
  int degree = 16;
  std::uint32_t reduction_polynomial = 0;

  static FieldSpec with_degree(int degree) { return FieldSpec{degree, 0}; }
};

/// True iff `poly` (bit i = coefficient of x^i) is irreducible over GF(2).
/// Checked by trial division against every polynomial of degree
/// 1..deg(poly)/2.
bool is_irreducible(std::uint32_t poly);

/// Built-in irreducible polynomial for degree in [1, 16].
std::uint32_t default_polynomial(int degree);

/// Arithmetic in GF(2^degree) through log/antilog tables.
///
/// Copies share the (immutable) tables, so passing a field by value is
/// cheap and safe across threads. Every operation rejects values outside
/// [0, 2^degree) with std::domain_error; that is the only way two fields
/// can be "mixed up" given the shared symbol representation.
class GaloisField {
 public:
  explicit GaloisField(FieldSpec spec = {});

  int degree() const { return tables_->degree; }
  std::uint32_t polynomial() const { return tables_->polynomial; }
  /// Number of field elements, 2^degree.
  std::uint32_t order() const { return tables_->order; }
  /// A primitive element; its powers enumerate the multiplicative group.
  Symbol generator() const { return tables_->generator; }

  bool contains(std::uint32_t value) const { return value < order(); }

  Symbol add(Symbol a, Symbol b) const;
  Symbol sub(Symbol a, Symbol b) const { return add(a, b); }
  Symbol mul(Symbol a, Symbol b) const;
  Symbol div(Symbol a, Symbol b) const;
  Symbol inv(Symbol a) const;
  Symbol pow(Symbol a, std::uint64_t exponent) const;

  /// dst[i] += c * src[i]; the hot loop of every encoder and solver.
  void mul_add(Symbol c, const Symbol* src, Symbol* dst, std::size_t n) const;

  friend bool operator==(const GaloisField& a, const GaloisField& b) {
    return a.degree() == b.degree() && a.polynomial() == b.polynomial();
  }

 private:
  struct Tables {
    int degree = 0;
    std::uint32_t polynomial = 0;
    std::uint32_t order = 0;
    Symbol generator = 0;
    std::vector<std::uint32_t> log;  // log[0] unused
    std::vector<Symbol> exp;         // length 2*(order-1), avoids a modulo
  };

  void check(Symbol a) const;
  Symbol mul_unchecked(Symbol a, Symbol b) const {
    if (a == 0 || b == 0) return 0;
    return tables_->exp[tables_->log[a] + tables_->log[b]];
  }

  std::shared_ptr<const Tables> tables_;
};

}  // namespace streamcode
