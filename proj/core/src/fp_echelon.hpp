#pragma once

#include <vector>

#include "field_data.hpp"

namespace gablab::detail {

// Incremental F_p row echelon over elements of F_{p^N} viewed as digit
// vectors. Each stored row has a distinct pivot digit (its highest nonzero
// digit, normalized to 1) and is already reduced against earlier rows, so a
// single pass in insertion order fully reduces a candidate.
class FpEchelon {
 public:
  explicit FpEchelon(const Field& f) : f_(f) {}

  Elem reduce(Elem v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const unsigned d = f_.digit(v, pivots_[r]);
      if (d != 0) v = f_.sub(v, f_.scale(rows_[r], d));
    }
    return v;
  }

  bool insert(Elem v) {
    v = reduce(v);
    if (v.code == 0) return false;
    unsigned piv = f_.degree();
    while (f_.digit(v, piv - 1) == 0) --piv;
    --piv;
    const unsigned lead = f_.digit(v, piv);
    if (lead != 1) {
      // lead^{p-2} is the F_p inverse.
      unsigned inv = 1;
      for (unsigned i = 0; i + 2 < f_.p(); ++i) inv = (inv * lead) % f_.p();
      v = f_.scale(v, inv);
    }
    rows_.push_back(v);
    pivots_.push_back(piv);
    return true;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  const Field& f_;
  std::vector<Elem> rows_;
  std::vector<unsigned> pivots_;
};

}  // namespace gablab::detail
