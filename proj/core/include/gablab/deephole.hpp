#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gablab/gabidulin.hpp"

namespace gablab {

/// The subspace (rank metric) or index subset (Hamming metric) on which a
/// word agrees with a codeword.
struct Witness {
  /// Basis of the subspace; for Hamming, the selected points g_i.
  std::vector<Elem> basis;
  /// Hamming only: 0-based positions of the selected points.
  std::vector<std::size_t> indices;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct SearchOptions {
  /// Upper bound on the number of candidate subspaces/subsets per level.
  std::uint64_t cap = 1'000'000;
};

struct ClassifyResult {
  Metric metric = Metric::rank;
  std::size_t distance = 0;
  /// n - deg_q f when k <= deg_q f < n, otherwise 0.
  std::size_t bound = 0;
  bool is_deep_hole = false;
  /// Absent for codewords.
  std::optional<Witness> witness;
  /// A nearest codeword's message (q-degree < k).
  LinPoly nearest;
};

/// Searches for a deg_q(f)-dimensional subspace H of <g> (rank) or a
/// deg_q(f)-subset E of g (Hamming) with deg_q(f - A_H) <= k - 1, where
/// A_H is the annihilator. f is normalized to monic first. A witness
/// certifies distance n - deg_q f; none certifies distance > n - deg_q f.
/// Throws Error unless k <= deg_q f < n.
std::optional<Witness> equality_witness(const GabidulinCode& code, const LinPoly& f, Metric metric,
                                        SearchOptions opts = {});

/// Distance to the code via the largest subspace (or point subset) on which
/// the word agrees with some codeword. Validated against the exhaustive
/// oracle.
ClassifyResult distance_by_search(const GabidulinCode& code, std::span<const Elem> w,
                                  Metric metric, SearchOptions opts = {});

/// distance_by_search plus the deep-hole verdict (distance == n - k).
ClassifyResult classify(const GabidulinCode& code, std::span<const Elem> w, Metric metric,
                        SearchOptions opts = {});

struct ScanOptions {
  /// Upper bound on the number of translation classes |F|^{n-k}.
  std::uint64_t cap = std::uint64_t{1} << 20;
  unsigned jobs = 1;
  /// Keep one row per class (for CSV output).
  bool keep_rows = false;
  SearchOptions search = {};
};

struct ScanRow {
  std::uint64_t class_id = 0;
  /// Class representative f = sum_{i=k}^{n-1} a_i x^{q^i}.
  LinPoly rep;
  ClassifyResult result;
};

struct CoveringScan {
  std::size_t radius = 0;
  /// distance -> number of classes at that distance.
  std::map<std::size_t, std::uint64_t> histogram;
  /// Words per class, |F|^k.
  std::uint64_t class_size = 0;
  std::vector<ScanRow> rows;
};

/// Class representative with index `class_id` (a_k fastest).
LinPoly class_representative(const GabidulinCode& code, std::uint64_t class_id);

/// Distance of every translation class of F^n modulo the code.
CoveringScan covering_radius_scan(const GabidulinCode& code, Metric metric, ScanOptions opts = {});

/// For deg_q f = k + 1 (after normalizing to monic) with
/// f = x^{q^{k+1}} - a_1 x^{q^k} + ..., searches for k+1 independent
/// b_1..b_{k+1} in <g> (rank) or distinct points of g (Hamming) with
/// a_1 = det R_k(b) / det M_{k+1}(b). A witness means the word is not a deep
/// hole. Throws Error on the wrong degree.
std::optional<Witness> ratio_lemma_check(const GabidulinCode& code, const LinPoly& f,
                                         Metric metric, SearchOptions opts = {});

enum class Family { frobenius_shift, k_eq_n_minus_2, k1_odd_m, binary_quartic };

std::string_view to_string(Family f);
Family parse_family(std::string_view s);

struct FamilyParams {
  /// frobenius_shift: f_{<=k-1}; k_eq_n_minus_2: f_{<=n-3}.
  LinPoly low{};
  Elem a{0};  // k_eq_n_minus_2
  Elem b{0};  // binary_quartic
  Elem c{0};  // k1_odd_m, binary_quartic
};

enum class Prediction { deep_hole, not_deep_hole, not_guaranteed };

std::string_view to_string(Prediction p);

struct FamilyVerdict {
  Family family;
  LinPoly f;
  Prediction predicted;
  ClassifyResult observed;
  bool agree = false;
};

/// Builds the family's word, classifies it, and compares against the
/// predicted verdict:
///   frobenius_shift  f = x^{q^{n-1}} + low             (n = m, k < n)
///   k_eq_n_minus_2   f = x^{q^{n-1}} - a x^{q^{n-2}} + low (n = m, k = n-2):
///                    deep hole when a is outside {(-1)^{n-1} b^{1-q}}
///   k1_odd_m         f = x^{q^2} + c x                 (m odd, k = 1, n >= 3)
///   binary_quartic   f = x^4 + b x^2 + c x             (q = 2, k = 1, n >= 3):
///                    deep hole iff no pair of <g> (Hamming: of g) lies in S(h = b)
/// Throws Error when the code violates the family's hypotheses.
FamilyVerdict family_check(const GabidulinCode& code, Family family, const FamilyParams& params,
                           Metric metric, SearchOptions opts = {});

/// {sign * b^{1-q} : b != 0} with sign = (-1)^{sign_exponent}, ascending.
std::vector<Elem> power_ratio_set(const Field& f, unsigned sign_exponent);

/// The set excluded by the k = n - 2 family condition, {(-1)^{n-1} b^{1-q}}.
inline std::vector<Elem> k_eq_n_minus_2_excluded(const Field& f, unsigned n) {
  return power_ratio_set(f, n - 1);
}

/// Census of h(x1, x2) = x1^2 + x1 x2 + x2^2 = b over F_{2^m}.
struct QuadricCensus {
  Elem b;
  /// |S(h = b)|: solutions with c1 != c2 and both nonzero.
  std::uint64_t count = 0;
  /// All solutions of h = b, unrestricted.
  std::uint64_t total_solutions = 0;
  std::vector<std::pair<Elem, Elem>> solutions;
};

/// Exhaustive enumeration over F_{2^m}^2. Throws Error unless p = 2, s = 1.
QuadricCensus quadric_census(const Field& f, Elem b, bool materialize = false);

/// v(b): -1 for b != 0, q - 1 for b = 0, over the field of order q.
std::int64_t quadric_v(std::uint64_t q, bool b_is_zero);

/// The closed form asserted for |S(h = b)|: odd m gives 0 (b = 0) and
/// 2^m - 1 (b != 0); even m gives 2^{m+1} - 2 (b = 0) and 2^m - 3 (b != 0).
std::uint64_t quadric_stated_count(unsigned m, bool b_is_zero);

/// Whether some pair drawn from `pool` lies in S(h = b).
bool quadric_pair_exists(const Field& f, std::span<const Elem> pool, Elem b);

}  // namespace gablab
