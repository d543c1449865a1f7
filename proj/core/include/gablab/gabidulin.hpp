#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "gablab/field.hpp"
#include "gablab/linpoly.hpp"
#include "gablab/matrix.hpp"

namespace gablab {

using Word = std::vector<Elem>;

enum class Metric { rank, hamming };

std::string_view to_string(Metric m);
/// Accepts "rank" or "hamming"; throws Error otherwise.
Metric parse_metric(std::string_view s);

/// Gabidulin code: evaluations of q-polynomials of q-degree < k at the
/// F_q-independent points g_1..g_n.
class GabidulinCode {
 public:
  /// Throws Error unless the points are independent and 1 <= k <= n.
  GabidulinCode(Field field, std::vector<Elem> points, unsigned k);

  const Field& field() const { return field_; }
  const SubspaceBasis& points() const { return points_; }
  unsigned n() const { return static_cast<unsigned>(points_.dim()); }
  unsigned k() const { return k_; }
  /// Moore matrix M_k(g_1..g_n).
  Matrix generator_matrix() const;
  /// Number of codewords q^{mk}, saturating at UINT64_MAX.
  std::uint64_t size() const;

 private:
  Field field_;
  SubspaceBasis points_;
  unsigned k_;
};

/// (msg(g_1), ..., msg(g_n)). Throws Error if q-degree of msg is >= k.
Word encode(const GabidulinCode& code, const LinPoly& msg);

/// sigma: evaluation of any q-polynomial at the code points.
Word evaluate(const GabidulinCode& code, const LinPoly& f);

/// The unique f of q-degree < n with evaluate(code, f) = w.
LinPoly sigma_inverse(const GabidulinCode& code, std::span<const Elem> w);

std::size_t weight(const Field& f, std::span<const Elem> w, Metric metric);
std::size_t distance(const Field& f, std::span<const Elem> a, std::span<const Elem> b,
                     Metric metric);

/// The message with enumeration index `index`: coefficients a_0..a_{k-1}
/// as base-|F| digits of index, a_0 least significant.
LinPoly message_at(const Field& f, std::uint64_t index, unsigned k);

struct OracleOptions {
  std::uint64_t cap = std::uint64_t{1} << 20;
  unsigned jobs = 1;
};

struct OracleResult {
  std::size_t distance = 0;
  /// First minimizing message in enumeration order (a_0 fastest).
  LinPoly witness;
};

/// Exact distance from w to the code by enumerating every codeword.
/// Throws CapExceeded when the code has more than opts.cap codewords.
OracleResult dist_to_code_exhaustive(const GabidulinCode& code, std::span<const Elem> w,
                                     Metric metric, OracleOptions opts = {});

/// Minimum weight over the nonzero codewords, by enumeration.
std::size_t min_distance(const GabidulinCode& code, Metric metric, OracleOptions opts = {});

/// All codewords materialized once, in message enumeration order, for
/// repeated exhaustive queries.
class Codebook {
 public:
  explicit Codebook(const GabidulinCode& code, std::uint64_t cap = std::uint64_t{1} << 20);

  const GabidulinCode& code() const { return code_; }
  std::size_t size() const { return words_.size() / code_.n(); }
  std::span<const Elem> codeword(std::size_t index) const {
    return {words_.data() + index * code_.n(), code_.n()};
  }
  /// Exhaustive distance; the witness is the first minimizing index.
  std::pair<std::size_t, std::size_t> nearest(std::span<const Elem> w, Metric metric) const;

 private:
  GabidulinCode code_;
  std::vector<Elem> words_;
};

}  // namespace gablab
