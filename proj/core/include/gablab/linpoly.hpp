#pragma once

#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "gablab/field.hpp"
#include "gablab/matrix.hpp"

namespace gablab {

/// q-degree of the zero polynomial. Compares below every real degree, so
/// `deg(r) < deg(g)` needs no special casing.
inline constexpr int kNegInf = std::numeric_limits<int>::min();

/// A q-linearized polynomial sum_i a_i x^{q^i} over F_{q^m}, stored as its
/// coefficients a_0, a_1, ... with no trailing zeros. The zero polynomial
/// is the empty sequence.
class LinPoly {
 public:
  LinPoly() = default;
  explicit LinPoly(std::vector<Elem> coeffs) : c_(std::move(coeffs)) { normalize(); }

  /// a * x^{q^i}.
  static LinPoly monomial(Elem a, unsigned i);
  /// The identity map x.
  static LinPoly x() { return monomial(Elem{1}, 0); }

  int qdeg() const { return c_.empty() ? kNegInf : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  /// Coefficient of x^{q^i}; zero beyond the degree.
  Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Elem{0}; }
  Elem leading() const { return c_.empty() ? Elem{0} : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back().code == 1; }
  const std::vector<Elem>& coeffs() const { return c_; }

  friend bool operator==(const LinPoly&, const LinPoly&) = default;

 private:
  void normalize() {
    while (!c_.empty() && c_.back().code == 0) c_.pop_back();
  }
  std::vector<Elem> c_;
};

Elem eval(const Field& f, const LinPoly& p, Elem u);
LinPoly add(const Field& f, const LinPoly& a, const LinPoly& b);
LinPoly sub(const Field& f, const LinPoly& a, const LinPoly& b);
/// c * p for a constant c in F_{q^m}.
LinPoly scale(const Field& f, const LinPoly& p, Elem c);
/// p divided by its leading coefficient. Throws Error on the zero polynomial.
LinPoly monic(const Field& f, const LinPoly& p);
/// Truncation to the terms of q-degree < k.
LinPoly truncate(const LinPoly& p, std::size_t k);

/// Composition a(b(x)). Not commutative.
LinPoly compose(const Field& f, const LinPoly& a, const LinPoly& b);

struct DivResult {
  LinPoly quotient;
  LinPoly remainder;
};

/// Right division: num = quotient o den + remainder, deg remainder < deg den.
/// Throws Error when den is zero.
DivResult right_divide(const Field& f, const LinPoly& num, const LinPoly& den);

/// An F_q-linearly independent list of elements of F_{q^m}.
class SubspaceBasis {
 public:
  SubspaceBasis() = default;
  /// Throws Error if `gens` are F_q-dependent.
  SubspaceBasis(const Field& f, std::vector<Elem> gens);

  std::size_t dim() const { return gens_.size(); }
  const std::vector<Elem>& gens() const { return gens_; }
  Elem operator[](std::size_t i) const { return gens_[i]; }

  friend bool operator==(const SubspaceBasis&, const SubspaceBasis&) = default;

 private:
  std::vector<Elem> gens_;
};

/// Monic annihilator prod_{u in span(gens)} (x - u), built by the recurrence
/// A_{V+<w>} = (x^q - A_V(w)^{q-1} x) o A_V. Throws Error if gens are
/// dependent.
LinPoly annihilator(const Field& f, std::span<const Elem> gens);
inline LinPoly annihilator(const Field& f, const SubspaceBasis& v) {
  return annihilator(f, v.gens());
}

/// Moore matrix with entry (i, j) = elems[j]^{q^{rows[i]}}.
Matrix moore_matrix(const Field& f, std::span<const Elem> elems, std::span<const unsigned> rows);

/// det M_t(elems) for t = elems.size(), or, with `deleted_row` = d, the
/// determinant of M_{t+1}(elems) without the row of exponent d (0 <= d <= t).
Elem moore_det(const Field& f, std::span<const Elem> elems,
               std::optional<unsigned> deleted_row = std::nullopt);

/// Unique q-polynomial of q-degree < n with p(g_i) = r_i, by solving the
/// Moore system. Throws Error on dependent points or size mismatch.
LinPoly q_lagrange(const Field& f, std::span<const Elem> g, std::span<const Elem> r);
inline LinPoly q_lagrange(const Field& f, const SubspaceBasis& g, std::span<const Elem> r) {
  return q_lagrange(f, g.gens(), r);
}

/// The same interpolant assembled from the alternating sum of
/// (-1)^{n-i} r_i det D_i(g, x) / det M_n(g), where D_i is M_n(g_1..g_n, x)
/// without column i. Verification path only.
LinPoly q_lagrange_determinantal(const Field& f, std::span<const Elem> g, std::span<const Elem> r);

/// F_q-basis of the root space {u : p(u) = 0}. Throws Error for p = 0.
SubspaceBasis root_space(const Field& f, const LinPoly& p);

/// h_i = det R_{t-i}(B) / det M_t(B) for a t-dimensional basis B and
/// 1 <= i <= t, where R_j is M_{t+1}(B) without the row of exponent j.
/// The annihilator of span(B) is x^{q^t} - h_1 x^{q^{t-1}} + h_2 x^{q^{t-2}} - ...
Elem minor_coeff(const Field& f, std::span<const Elem> basis, unsigned i);

}  // namespace gablab
