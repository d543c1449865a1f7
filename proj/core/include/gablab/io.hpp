#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gablab/gabidulin.hpp"

namespace gablab {

/// Parsed code-spec file: one `key=value` per line with keys p, s, m,
/// modulus, n, k, g. Blank lines and `#` comments are ignored.
struct CodeSpec {
  unsigned p = 0, s = 1, m = 0;
  std::optional<std::vector<unsigned>> modulus;
  unsigned n = 0, k = 0;
  /// Evaluation point codes; when absent the first n F_q-independent codes
  /// 1, 2, 3, ... are taken greedily.
  std::optional<std::vector<std::uint64_t>> g;
};

/// Throws Error on unknown keys, missing keys or malformed values.
CodeSpec parse_code_spec(std::istream& in);
CodeSpec read_code_spec(const std::string& path);
std::string format_code_spec(const CodeSpec& spec);

/// Builds the field and code a spec describes.
GabidulinCode build_code(const CodeSpec& spec, Field::Options options = {});

/// Comma-separated unsigned integers; whitespace around entries is allowed.
std::vector<std::uint64_t> parse_uint_list(std::string_view text);
/// Element codes, validated against the field.
std::vector<Elem> parse_elements(const Field& f, std::string_view text);
std::string format_elements(std::span<const Elem> elems);
/// Coefficient codes, degree 0 first. The zero polynomial formats as "0".
LinPoly parse_linpoly(const Field& f, std::string_view text);
std::string format_linpoly(const LinPoly& p);

/// RFC 4180 quoting: fields containing a comma or quote are wrapped.
std::string csv_field(std::string_view s);

}  // namespace gablab
