#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gablab {

/// An element of F_{q^m}, stored by its canonical integer code
/// sum(coeffs[i] * p^i) over the polynomial basis 1, x, x^2, ...
///
/// An Elem carries no reference to its field; every operation goes through
/// the Field that produced it.
struct Elem {
  std::uint32_t code = 0;

  friend constexpr auto operator<=>(const Elem&, const Elem&) = default;
};

/// F_q-coordinates are themselves elements of the subfield F_q inside F_{q^m}.
using Coords = std::vector<Elem>;

namespace detail {
struct FieldData;
}

/// Result of an F_q-span computation.
struct SpanInfo {
  std::size_t dim = 0;
  /// First maximal F_q-independent sublist of the input, in input order.
  std::vector<Elem> independent;
};

struct FieldOptions {
  /// Largest admissible field order p^{s*m}.
  std::uint64_t size_cap = std::uint64_t{1} << 24;
  /// Log/antilog tables are built up to this order; larger fields use
  /// schoolbook multiplication.
  std::uint64_t table_limit = std::uint64_t{1} << 20;
};

/// The tower F_p < F_q = F_{p^s} < F_{q^m}, realized once as
/// F_p[x]/(modulus) with deg(modulus) = s*m. F_q is the fixed field of the
/// p^s-power map.
///
/// Field is a cheap, immutable handle; copies share the same tables and
/// compare equal.
class Field {
 public:
  using Options = FieldOptions;

  /// Builds the field. When `modulus` is omitted the lexicographically
  /// smallest monic irreducible of degree s*m is used, where candidates are
  /// ordered by the base-p integer of their coefficients (degree 0 least
  /// significant).
  static Field create(unsigned p, unsigned s, unsigned m,
                      std::optional<std::vector<unsigned>> modulus = std::nullopt,
                      Options options = {});
  static Field create(unsigned p, unsigned s, unsigned m, Options options) {
    return create(p, s, m, std::nullopt, options);
  }

  unsigned p() const;
  unsigned s() const;
  unsigned m() const;
  /// Extension degree over the prime field, s*m.
  unsigned degree() const;
  /// q = p^s.
  std::uint32_t q() const;
  /// |F_{q^m}| = p^{s*m}.
  std::uint32_t order() const;
  /// Monic modulus, F_p digits, degree 0 first.
  const std::vector<unsigned>& modulus() const;
  bool uses_tables() const;

  Elem zero() const { return Elem{0}; }
  Elem one() const { return Elem{1}; }
  /// Validated conversion from a canonical code.
  Elem element(std::uint64_t code) const;
  bool contains(Elem a) const { return a.code < order(); }
  Elem from_digits(std::span<const unsigned> digits) const;
  std::vector<unsigned> digits(Elem a) const;
  unsigned digit(Elem a, unsigned i) const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  /// Throws Error on division by zero.
  Elem div(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const;
  /// Multiplication by the prime-field scalar c (0 <= c < p).
  Elem scale(Elem a, unsigned c) const;

  /// u^{q^i}.
  Elem frobenius(Elem u, unsigned i = 1) const;
  /// Tr_{F_{q^m}/F_q}(u).
  Elem trace(Elem u) const;
  /// Tr_{F_{q^m}/F_p}(u).
  Elem absolute_trace(Elem u) const;
  bool in_subfield(Elem u) const { return frobenius(u, 1) == u; }
  /// The q elements of F_q, ascending by code.
  const std::vector<Elem>& subfield() const;
  /// An F_p-basis (s elements) of F_q.
  const std::vector<Elem>& subfield_fp_basis() const;

  /// dim_{F_q} of the span, with the greedy independent sublist.
  SpanInfo span(std::span<const Elem> elems) const;
  std::size_t span_dim(std::span<const Elem> elems) const { return span(elems).dim; }
  bool independent(std::span<const Elem> elems) const {
    return span_dim(elems) == elems.size();
  }

  /// F_q-coordinates of u in the F_q-basis `basis` (m elements).
  Coords coords(Elem u, std::span<const Elem> basis) const;

  /// Comma-separated F_p digits of the modulus, degree 0 first.
  std::string modulus_string() const;

  friend bool operator==(const Field& a, const Field& b) { return a.d_ == b.d_; }

 private:
  explicit Field(std::shared_ptr<const detail::FieldData> d) : d_(std::move(d)) {}
  std::shared_ptr<const detail::FieldData> d_;
};

/// Trial-division irreducibility test over F_p (desk-scale degrees only).
bool is_irreducible(std::span<const unsigned> poly, unsigned p);

/// F_p-linear algebra on elements of F_{p^N} viewed as digit vectors.
namespace fp {

/// Solves sum_j x_j * columns[j] = target over F_p; returns the x_j.
std::optional<std::vector<unsigned>> solve(const Field& f, std::span<const Elem> columns,
                                           Elem target);

/// F_p-basis of {x : sum_j x_j * images[j] = 0}, each kernel vector
/// returned as an F_p digit vector of length images.size().
std::vector<std::vector<unsigned>> kernel(const Field& f, std::span<const Elem> images);

}  // namespace fp

}  // namespace gablab
