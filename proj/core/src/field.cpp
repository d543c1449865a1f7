#include "gablab/field.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "fp_echelon.hpp"
#include "gablab/error.hpp"

namespace gablab {

namespace {

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

void trim(std::vector<unsigned>& poly) {
  while (!poly.empty() && poly.back() == 0) poly.pop_back();
}

unsigned inv_mod(unsigned a, unsigned p) {
  // p is prime and small: Fermat.
  unsigned r = 1;
  unsigned e = p - 2;
  std::uint64_t b = a % p;
  while (e) {
    if (e & 1) r = static_cast<unsigned>((r * b) % p);
    b = (b * b) % p;
    e >>= 1;
  }
  return r;
}

// Remainder of num modulo a monic divisor over F_p.
std::vector<unsigned> poly_mod_monic(std::vector<unsigned> num, std::span<const unsigned> div,
                                     unsigned p) {
  const std::size_t dd = div.size() - 1;
  for (std::size_t top = num.size(); top-- > dd;) {
    const unsigned c = num[top];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= dd; ++i) {
      const std::size_t pos = top - dd + i;
      num[pos] = (num[pos] + (p - c) * div[i]) % p;
    }
  }
  num.resize(std::min(num.size(), dd));
  trim(num);
  return num;
}

}  // namespace

bool is_irreducible(std::span<const unsigned> poly, unsigned p) {
  std::vector<unsigned> f(poly.begin(), poly.end());
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  // Normalize to monic so remainders are well defined.
  const unsigned lead_inv = inv_mod(f.back(), p);
  for (auto& c : f) c = (c * lead_inv) % p;

  std::vector<unsigned> div;
  for (std::size_t t = 1; t <= deg / 2; ++t) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < t; ++i) count *= p;
    div.assign(t + 1, 0);
    div[t] = 1;
    for (std::uint64_t low = 0; low < count; ++low) {
      std::uint64_t v = low;
      for (std::size_t i = 0; i < t; ++i) {
        div[i] = static_cast<unsigned>(v % p);
        v /= p;
      }
      if (poly_mod_monic(f, div, p).empty()) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Construction

Field Field::create(unsigned p, unsigned s, unsigned m, std::optional<std::vector<unsigned>> modulus,
                    Options options) {
  if (!is_prime(p)) throw Error("field: p=" + std::to_string(p) + " is not prime");
  if (s == 0 || m == 0) throw Error("field: s and m must be positive");
  const unsigned n = s * m;
  const std::uint64_t cap = std::min<std::uint64_t>(options.size_cap, std::uint64_t{1} << 31);
  std::uint64_t order = 1;
  for (unsigned i = 0; i < n; ++i) {
    order *= p;
    if (order > cap)
      throw CapExceeded("field: p^(s*m) exceeds the size cap " + std::to_string(cap));
  }

  auto d = std::make_shared<detail::FieldData>();
  d->p = p;
  d->s = s;
  d->m = m;
  d->n = n;
  d->order = static_cast<std::uint32_t>(order);
  d->q = 1;
  for (unsigned i = 0; i < s; ++i) d->q *= p;
  d->pow_p.resize(n + 1);
  d->pow_p[0] = 1;
  for (unsigned i = 1; i <= n; ++i) d->pow_p[i] = d->pow_p[i - 1] * p;

  if (modulus) {
    auto& mod = *modulus;
    if (mod.size() != n + 1 || mod.back() != 1)
      throw Error("field: modulus must be monic of degree " + std::to_string(n));
    if (std::any_of(mod.begin(), mod.end(), [p](unsigned c) { return c >= p; }))
      throw Error("field: modulus digits must lie in [0, p)");
    if (!is_irreducible(mod, p)) throw Error("field: modulus is reducible over F_p");
    d->modulus = mod;
  } else {
    std::vector<unsigned> cand(n + 1, 0);
    cand[n] = 1;
    bool found = false;
    for (std::uint64_t low = 0; low < order && !found; ++low) {
      std::uint64_t v = low;
      for (unsigned i = 0; i < n; ++i) {
        cand[i] = static_cast<unsigned>(v % p);
        v /= p;
      }
      found = is_irreducible(cand, p);
    }
    if (!found) throw Error("field: no irreducible modulus found");
    d->modulus = cand;
  }

  if (p == 2)
    for (unsigned i = 0; i <= n; ++i) d->modulus_bits |= std::uint64_t{d->modulus[i]} << i;

  // Primitive element, searched with schoolbook arithmetic.
  Field tmp(d);
  const std::uint64_t group = order - 1;
  const auto factors = prime_factors(group);
  for (std::uint32_t c = 1; c < order; ++c) {
    const Elem g{c};
    bool primitive = true;
    for (auto r : factors) {
      if (tmp.pow(g, group / r) == tmp.one()) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      d->generator = g;
      break;
    }
  }

  if (order <= options.table_limit) {
    d->exp.resize(2 * group + 1);
    d->log.assign(order, 0);
    Elem x = tmp.one();
    for (std::uint64_t i = 0; i < group; ++i) {
      d->exp[i] = x.code;
      d->log[x.code] = static_cast<std::uint32_t>(i);
      x = tmp.mul(x, d->generator);
    }
    for (std::uint64_t i = group; i < d->exp.size(); ++i) d->exp[i] = d->exp[i - group];
    d->tables = true;
  }

  // F_q = {0} u <g^{(order-1)/(q-1)}>.
  {
    const Elem h = tmp.pow(d->generator, group / (d->q - 1));
    d->subfield.push_back(tmp.zero());
    Elem x = tmp.one();
    for (std::uint32_t i = 0; i + 1 < d->q; ++i) {
      d->subfield.push_back(x);
      x = tmp.mul(x, h);
    }
    std::sort(d->subfield.begin(), d->subfield.end());
  }
  {
    detail::FpEchelon ech(tmp);
    for (Elem u : d->subfield)
      if (ech.insert(u)) d->subfield_basis.push_back(u);
  }
  return Field(std::move(d));
}

// ---------------------------------------------------------------------------
// Accessors

unsigned Field::p() const { return d_->p; }
unsigned Field::s() const { return d_->s; }
unsigned Field::m() const { return d_->m; }
unsigned Field::degree() const { return d_->n; }
std::uint32_t Field::q() const { return d_->q; }
std::uint32_t Field::order() const { return d_->order; }
const std::vector<unsigned>& Field::modulus() const { return d_->modulus; }
bool Field::uses_tables() const { return d_->tables; }
const std::vector<Elem>& Field::subfield() const { return d_->subfield; }
const std::vector<Elem>& Field::subfield_fp_basis() const { return d_->subfield_basis; }

Elem Field::element(std::uint64_t code) const {
  if (code >= d_->order)
    throw Error("element code " + std::to_string(code) + " out of range for field of order " +
                std::to_string(d_->order));
  return Elem{static_cast<std::uint32_t>(code)};
}

Elem Field::from_digits(std::span<const unsigned> digits) const {
  if (digits.size() > d_->n) throw Error("from_digits: too many digits");
  std::uint32_t code = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] >= d_->p) throw Error("from_digits: digit out of range");
    code += digits[i] * d_->pow_p[i];
  }
  return Elem{code};
}

std::vector<unsigned> Field::digits(Elem a) const {
  std::vector<unsigned> out(d_->n);
  std::uint32_t v = a.code;
  for (unsigned i = 0; i < d_->n; ++i) {
    out[i] = v % d_->p;
    v /= d_->p;
  }
  return out;
}

unsigned Field::digit(Elem a, unsigned i) const { return d_->digit(a.code, i); }

std::string Field::modulus_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < d_->modulus.size(); ++i) os << (i ? "," : "") << d_->modulus[i];
  return os.str();
}

// ---------------------------------------------------------------------------
// Arithmetic

Elem Field::add(Elem a, Elem b) const {
  const unsigned p = d_->p;
  if (p == 2) return Elem{a.code ^ b.code};
  std::uint32_t x = a.code, y = b.code, out = 0;
  for (unsigned i = 0; i < d_->n; ++i) {
    out += ((x % p + y % p) % p) * d_->pow_p[i];
    x /= p;
    y /= p;
  }
  return Elem{out};
}

Elem Field::neg(Elem a) const {
  const unsigned p = d_->p;
  if (p == 2) return a;
  std::uint32_t x = a.code, out = 0;
  for (unsigned i = 0; i < d_->n; ++i) {
    out += ((p - x % p) % p) * d_->pow_p[i];
    x /= p;
  }
  return Elem{out};
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::scale(Elem a, unsigned c) const {
  const unsigned p = d_->p;
  c %= p;
  if (c == 0) return zero();
  if (c == 1) return a;
  std::uint32_t x = a.code, out = 0;
  for (unsigned i = 0; i < d_->n; ++i) {
    out += ((x % p) * c % p) * d_->pow_p[i];
    x /= p;
  }
  return Elem{out};
}

Elem Field::mul(Elem a, Elem b) const {
  if (a.code == 0 || b.code == 0) return zero();
  if (d_->tables) return Elem{d_->exp[d_->log[a.code] + d_->log[b.code]]};

  const unsigned p = d_->p, n = d_->n;
  if (p == 2) {
    std::uint64_t x = a.code, r = 0;
    for (std::uint32_t y = b.code; y; y >>= 1) {
      if (y & 1) r ^= x;
      x <<= 1;
      if (x >> n & 1) x ^= d_->modulus_bits;
    }
    return Elem{static_cast<std::uint32_t>(r)};
  }
  auto da = digits(a), db = digits(b);
  std::vector<unsigned> prod(2 * n - 1, 0);
  for (unsigned i = 0; i < n; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  }
  auto rem = poly_mod_monic(std::move(prod), d_->modulus, p);
  return from_digits(rem);
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return one();
  if (a.code == 0) return zero();
  const std::uint64_t group = d_->order - 1;
  if (d_->tables) {
    const std::uint64_t l = (static_cast<std::uint64_t>(d_->log[a.code]) * (e % group)) % group;
    return Elem{d_->exp[l]};
  }
  Elem r = one(), b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

Elem Field::inv(Elem a) const {
  if (a.code == 0) throw Error("division by zero");
  if (d_->tables) {
    const std::uint32_t group = d_->order - 1;
    return Elem{d_->exp[(group - d_->log[a.code]) % group]};
  }
  return pow(a, d_->order - 2);
}

Elem Field::div(Elem a, Elem b) const { return mul(a, inv(b)); }

Elem Field::frobenius(Elem u, unsigned i) const {
  i %= d_->m;
  if (i == 0 || u.code == 0) return u;
  if (d_->tables) {
    const std::uint64_t group = d_->order - 1;
    std::uint64_t e = 1;
    for (unsigned j = 0; j < i; ++j) e = (e * d_->q) % group;
    return Elem{d_->exp[(static_cast<std::uint64_t>(d_->log[u.code]) * e) % group]};
  }
  for (unsigned j = 0; j < i; ++j) u = pow(u, d_->q);
  return u;
}

Elem Field::trace(Elem u) const {
  Elem acc = zero(), x = u;
  for (unsigned i = 0; i < d_->m; ++i) {
    acc = add(acc, x);
    x = frobenius(x, 1);
  }
  return acc;
}

Elem Field::absolute_trace(Elem u) const {
  Elem acc = zero(), x = u;
  for (unsigned i = 0; i < d_->n; ++i) {
    acc = add(acc, x);
    x = pow(x, d_->p);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// F_q-span and coordinates

SpanInfo Field::span(std::span<const Elem> elems) const {
  SpanInfo out;
  detail::FpEchelon ech(*this);
  const auto& gamma = d_->subfield_basis;
  for (Elem u : elems) {
    if (ech.reduce(u).code == 0) continue;
    for (Elem g : gamma) ech.insert(mul(g, u));
    out.independent.push_back(u);
  }
  out.dim = out.independent.size();
  return out;
}

Coords Field::coords(Elem u, std::span<const Elem> basis) const {
  if (basis.size() != d_->m || span_dim(basis) != d_->m)
    throw Error("coords: basis must consist of m F_q-independent elements");
  const auto& gamma = d_->subfield_basis;
  std::vector<Elem> columns;
  columns.reserve(d_->n);
  for (Elem b : basis)
    for (Elem g : gamma) columns.push_back(mul(g, b));
  auto x = fp::solve(*this, columns, u);
  if (!x) throw Error("coords: element not in span of basis");
  Coords out(d_->m, zero());
  for (unsigned i = 0; i < d_->m; ++i)
    for (unsigned j = 0; j < d_->s; ++j)
      out[i] = add(out[i], scale(gamma[j], (*x)[i * d_->s + j]));
  return out;
}

// ---------------------------------------------------------------------------
// Dense F_p elimination

namespace fp {

namespace {

// Reduced row echelon form of a rows x cols matrix over F_p, in place.
// Returns the pivot column of each nonzero row.
std::vector<std::size_t> rref(std::vector<std::vector<unsigned>>& a, std::size_t cols, unsigned p,
                              std::size_t pivot_limit) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < pivot_limit && row < a.size(); ++col) {
    std::size_t sel = row;
    while (sel < a.size() && a[sel][col] == 0) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[row], a[sel]);
    const unsigned iv = inv_mod(a[row][col], p);
    for (std::size_t c = 0; c < cols; ++c) a[row][c] = (a[row][c] * iv) % p;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][col] == 0) continue;
      const unsigned f = a[r][col];
      for (std::size_t c = 0; c < cols; ++c) a[r][c] = (a[r][c] + (p - f) * a[row][c]) % p;
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::optional<std::vector<unsigned>> solve(const Field& f, std::span<const Elem> columns,
                                           Elem target) {
  const unsigned n = f.degree(), p = f.p();
  const std::size_t c = columns.size();
  std::vector<std::vector<unsigned>> a(n, std::vector<unsigned>(c + 1, 0));
  for (std::size_t j = 0; j < c; ++j)
    for (unsigned i = 0; i < n; ++i) a[i][j] = f.digit(columns[j], i);
  for (unsigned i = 0; i < n; ++i) a[i][c] = f.digit(target, i);
  const auto pivots = rref(a, c + 1, p, c);
  for (std::size_t r = pivots.size(); r < a.size(); ++r)
    if (a[r][c] != 0) return std::nullopt;
  std::vector<unsigned> x(c, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][c];
  return x;
}

std::vector<std::vector<unsigned>> kernel(const Field& f, std::span<const Elem> images) {
  const unsigned n = f.degree(), p = f.p();
  const std::size_t c = images.size();
  std::vector<std::vector<unsigned>> a(n, std::vector<unsigned>(c, 0));
  for (std::size_t j = 0; j < c; ++j)
    for (unsigned i = 0; i < n; ++i) a[i][j] = f.digit(images[j], i);
  const auto pivots = rref(a, c, p, c);
  std::vector<bool> is_pivot(c, false);
  for (auto pc : pivots) is_pivot[pc] = true;
  std::vector<std::vector<unsigned>> out;
  for (std::size_t free = 0; free < c; ++free) {
    if (is_pivot[free]) continue;
    std::vector<unsigned> v(c, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = (p - a[r][free]) % p;
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace fp

}  // namespace gablab
