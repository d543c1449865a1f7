#include "gablab/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>

#include "gablab/error.hpp"

namespace gablab {

namespace {

std::string_view strip(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::uint64_t parse_uint(std::string_view s, std::string_view what) {
  s = strip(s);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw Error("malformed " + std::string(what) + ": '" + std::string(s) + "'");
  return v;
}

unsigned parse_small(std::string_view s, std::string_view what) {
  const auto v = parse_uint(s, what);
  if (v > 1'000'000) throw Error(std::string(what) + " out of range");
  return static_cast<unsigned>(v);
}

}  // namespace

std::vector<std::uint64_t> parse_uint_list(std::string_view text) {
  std::vector<std::uint64_t> out;
  text = strip(text);
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    out.push_back(parse_uint(text.substr(pos, comma - pos), "integer list entry"));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

CodeSpec parse_code_spec(std::istream& in) {
  CodeSpec spec;
  std::map<std::string, bool> seen;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view l = line;
    if (auto hash = l.find('#'); hash != std::string_view::npos) l = l.substr(0, hash);
    l = strip(l);
    if (l.empty()) continue;
    const auto eq = l.find('=');
    if (eq == std::string_view::npos)
      throw Error("spec line " + std::to_string(lineno) + ": expected key=value");
    const std::string key(strip(l.substr(0, eq)));
    const std::string_view val = strip(l.substr(eq + 1));
    if (seen[key]) throw Error("spec: duplicate key '" + key + "'");
    seen[key] = true;
    if (key == "p") {
      spec.p = parse_small(val, "p");
    } else if (key == "s") {
      spec.s = parse_small(val, "s");
    } else if (key == "m") {
      spec.m = parse_small(val, "m");
    } else if (key == "n") {
      spec.n = parse_small(val, "n");
    } else if (key == "k") {
      spec.k = parse_small(val, "k");
    } else if (key == "modulus") {
      std::vector<unsigned> mod;
      for (auto v : parse_uint_list(val)) mod.push_back(static_cast<unsigned>(v));
      spec.modulus = std::move(mod);
    } else if (key == "g") {
      spec.g = parse_uint_list(val);
    } else {
      throw Error("spec: unknown key '" + key + "'");
    }
  }
  for (const char* key : {"p", "m", "n", "k"})
    if (!seen[key]) throw Error(std::string("spec: missing key '") + key + "'");
  if (spec.g && spec.g->size() != spec.n)
    throw Error("spec: g lists " + std::to_string(spec.g->size()) + " points but n=" +
                std::to_string(spec.n));
  return spec;
}

CodeSpec read_code_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open spec file '" + path + "'");
  return parse_code_spec(in);
}

std::string format_code_spec(const CodeSpec& spec) {
  std::ostringstream os;
  os << "p=" << spec.p << "\ns=" << spec.s << "\nm=" << spec.m << "\n";
  if (spec.modulus) {
    os << "modulus=";
    for (std::size_t i = 0; i < spec.modulus->size(); ++i) os << (i ? "," : "") << (*spec.modulus)[i];
    os << "\n";
  }
  os << "n=" << spec.n << "\nk=" << spec.k << "\n";
  if (spec.g) {
    os << "g=";
    for (std::size_t i = 0; i < spec.g->size(); ++i) os << (i ? "," : "") << (*spec.g)[i];
    os << "\n";
  }
  return os.str();
}

GabidulinCode build_code(const CodeSpec& spec, Field::Options options) {
  Field f = Field::create(spec.p, spec.s, spec.m, spec.modulus, options);
  std::vector<Elem> g;
  if (spec.g) {
    for (auto c : *spec.g) g.push_back(f.element(c));
  } else {
    for (std::uint32_t c = 1; c < f.order() && g.size() < spec.n; ++c) {
      g.push_back(Elem{c});
      if (!f.independent(g)) g.pop_back();
    }
    if (g.size() < spec.n)
      throw Error("spec: n=" + std::to_string(spec.n) + " exceeds m=" + std::to_string(spec.m));
  }
  return GabidulinCode(std::move(f), std::move(g), spec.k);
}

std::vector<Elem> parse_elements(const Field& f, std::string_view text) {
  std::vector<Elem> out;
  for (auto v : parse_uint_list(text)) out.push_back(f.element(v));
  return out;
}

std::string format_elements(std::span<const Elem> elems) {
  std::string out;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(elems[i].code);
  }
  return out;
}

LinPoly parse_linpoly(const Field& f, std::string_view text) {
  return LinPoly(parse_elements(f, text));
}

std::string format_linpoly(const LinPoly& p) {
  return p.is_zero() ? std::string("0") : format_elements(p.coeffs());
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace gablab
