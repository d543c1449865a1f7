#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "gablab/field.hpp"

namespace gablab {

/// Number of t-dimensional subspaces of F_q^n, saturating at UINT64_MAX.
std::uint64_t gaussian_binomial(unsigned n, unsigned t, std::uint64_t q);
/// n choose t, saturating at UINT64_MAX.
std::uint64_t binomial(unsigned n, unsigned t);

/// One t-dimensional subspace of span(ambient), presented by the rows of its
/// reduced row echelon matrix over F_q (`rows[i][j]` multiplies ambient[j])
/// and the resulting basis elements.
struct SubspaceView {
  const std::vector<std::vector<Elem>>& rows;
  const std::vector<Elem>& basis;
};

/// Visits every t-dimensional F_q-subspace of span(ambient) exactly once.
/// `ambient` must be F_q-independent. Order: pivot-column sets in
/// lexicographic order; within one pivot set the free entries run as an
/// odometer over F_q (ascending codes, last entry fastest). Stops early when
/// `visit` returns true.
void for_each_subspace(const Field& f, std::span<const Elem> ambient, unsigned t,
                       const std::function<bool(const SubspaceView&)>& visit);

/// Visits every t-subset of {0..n-1} in lexicographic order; stops early
/// when `visit` returns true.
void for_each_subset(std::size_t n, std::size_t t,
                     const std::function<bool(std::span<const std::size_t>)>& visit);

}  // namespace gablab
