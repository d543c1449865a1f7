#pragma once

#include <cstdint>
#include <vector>

#include "gablab/field.hpp"

namespace gablab::detail {

struct FieldData {
  unsigned p = 2, s = 1, m = 1, n = 1;
  std::uint32_t q = 2;
  std::uint32_t order = 2;
  std::vector<unsigned> modulus;
  // p = 2 only: the modulus as a bit mask.
  std::uint64_t modulus_bits = 0;
  std::vector<std::uint32_t> pow_p;
  Elem generator{1};

  bool tables = false;
  std::vector<std::uint32_t> exp;  // doubled, so log a + log b needs no reduction
  std::vector<std::uint32_t> log;

  std::vector<Elem> subfield;
  std::vector<Elem> subfield_basis;

  unsigned digit(std::uint32_t code, unsigned i) const {
    if (p == 2) return (code >> i) & 1u;
    return (code / pow_p[i]) % p;
  }
};

}  // namespace gablab::detail
