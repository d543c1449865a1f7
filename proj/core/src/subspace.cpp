#include "gablab/subspace.hpp"

#include <limits>

namespace gablab {

namespace {

constexpr std::uint64_t kSat = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSat / a) return kSat;
  return a * b;
}

// Advances a t-combination of {0..n-1} in lexicographic order.
bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t t = c.size();
  for (std::size_t i = t; i-- > 0;) {
    if (c[i] < n - t + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < t; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Odometer step, last position fastest; false once it wraps around.
bool advance(std::vector<std::size_t>& digit, std::size_t radix) {
  for (std::size_t s = digit.size(); s-- > 0;) {
    if (++digit[s] < radix) return true;
    digit[s] = 0;
  }
  return false;
}

}  // namespace

std::uint64_t gaussian_binomial(unsigned n, unsigned t, std::uint64_t q) {
  if (t > n) return 0;
  // Count pivot-set/free-entry configurations directly: sum over pivot sets
  // of q^{#free}. Exact and avoids division.
  std::uint64_t total = 0;
  std::vector<std::size_t> piv(t);
  for (std::size_t i = 0; i < t; ++i) piv[i] = i;
  do {
    std::uint64_t free = 0;
    for (std::size_t i = 0; i < t; ++i) free += n - 1 - piv[i] - (t - 1 - i);
    std::uint64_t term = 1;
    for (std::uint64_t e = 0; e < free; ++e) term = sat_mul(term, q);
    total = (term > kSat - total) ? kSat : total + term;
  } while (t > 0 && next_combination(piv, n));
  return total;
}

std::uint64_t binomial(unsigned n, unsigned t) {
  if (t > n) return 0;
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= t; ++i) {
    const std::uint64_t num = n - t + i;
    if (r > kSat / num) return kSat;
    r = r * num / i;
  }
  return r;
}

void for_each_subspace(const Field& f, std::span<const Elem> ambient, unsigned t,
                       const std::function<bool(const SubspaceView&)>& visit) {
  const std::size_t n = ambient.size();
  if (t > n) return;
  const auto& fq = f.subfield();
  std::vector<std::vector<Elem>> rows(t, std::vector<Elem>(n));
  std::vector<Elem> basis(t);
  const SubspaceView view{rows, basis};

  std::vector<std::size_t> piv(t);
  for (std::size_t i = 0; i < t; ++i) piv[i] = i;
  do {
    std::vector<bool> is_piv(n, false);
    for (auto c : piv) is_piv[c] = true;
    // Free slots (row, col) in row-major order.
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t c = piv[i] + 1; c < n; ++c)
        if (!is_piv[c]) slots.emplace_back(i, c);
    std::vector<std::size_t> digit(slots.size(), 0);

    for (;;) {
      for (std::size_t i = 0; i < t; ++i) {
        std::fill(rows[i].begin(), rows[i].end(), f.zero());
        rows[i][piv[i]] = f.one();
      }
      for (std::size_t s = 0; s < slots.size(); ++s)
        rows[slots[s].first][slots[s].second] = fq[digit[s]];
      for (std::size_t i = 0; i < t; ++i) {
        Elem acc = f.zero();
        for (std::size_t c = 0; c < n; ++c)
          if (rows[i][c].code != 0) acc = f.add(acc, f.mul(rows[i][c], ambient[c]));
        basis[i] = acc;
      }
      if (visit(view)) return;

      if (!advance(digit, fq.size())) break;
    }
  } while (t > 0 && next_combination(piv, n));
}

void for_each_subset(std::size_t n, std::size_t t,
                     const std::function<bool(std::span<const std::size_t>)>& visit) {
  if (t > n) return;
  std::vector<std::size_t> c(t);
  for (std::size_t i = 0; i < t; ++i) c[i] = i;
  do {
    if (visit(c)) return;
  } while (t > 0 && next_combination(c, n));
}

}  // namespace gablab
