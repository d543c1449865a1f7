#include "gablab/linpoly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "gablab/error.hpp"

namespace gablab {

namespace {

Elem sign(const Field& f, std::size_t e) { return e % 2 == 0 ? f.one() : f.neg(f.one()); }

}  // namespace

LinPoly LinPoly::monomial(Elem a, unsigned i) {
  std::vector<Elem> c(i + 1, Elem{0});
  c[i] = a;
  return LinPoly(std::move(c));
}

Elem eval(const Field& f, const LinPoly& p, Elem u) {
  Elem acc = f.zero(), pw = u;
  const auto& c = p.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].code != 0) acc = f.add(acc, f.mul(c[i], pw));
    pw = f.frobenius(pw, 1);
  }
  return acc;
}

LinPoly add(const Field& f, const LinPoly& a, const LinPoly& b) {
  std::vector<Elem> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.add(a.coeff(i), b.coeff(i));
  return LinPoly(std::move(c));
}

LinPoly sub(const Field& f, const LinPoly& a, const LinPoly& b) {
  std::vector<Elem> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.sub(a.coeff(i), b.coeff(i));
  return LinPoly(std::move(c));
}

LinPoly scale(const Field& f, const LinPoly& p, Elem c) {
  std::vector<Elem> out(p.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.mul(c, p.coeff(i));
  return LinPoly(std::move(out));
}

LinPoly monic(const Field& f, const LinPoly& p) {
  if (p.is_zero()) throw Error("monic: zero polynomial has no leading coefficient");
  return scale(f, p, f.inv(p.leading()));
}

LinPoly truncate(const LinPoly& p, std::size_t k) {
  const auto& c = p.coeffs();
  return LinPoly(std::vector<Elem>(c.begin(), c.begin() + std::min(k, c.size())));
}

LinPoly compose(const Field& f, const LinPoly& a, const LinPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  std::vector<Elem> out(ac.size() + bc.size() - 1, f.zero());
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i].code == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) {
      const Elem t = f.mul(ac[i], f.frobenius(bc[j], static_cast<unsigned>(i)));
      out[i + j] = f.add(out[i + j], t);
    }
  }
  return LinPoly(std::move(out));
}

DivResult right_divide(const Field& f, const LinPoly& num, const LinPoly& den) {
  if (den.is_zero()) throw Error("right_divide: division by the zero polynomial");
  LinPoly quot, rem = num;
  const int dd = den.qdeg();
  const Elem lead = den.leading();
  while (rem.qdeg() >= dd) {
    const auto t = static_cast<unsigned>(rem.qdeg() - dd);
    const Elem c = f.div(rem.leading(), f.frobenius(lead, t));
    const LinPoly term = LinPoly::monomial(c, t);
    quot = add(f, quot, term);
    rem = sub(f, rem, compose(f, term, den));
  }
  if (add(f, compose(f, quot, den), rem) != num)
    throw std::logic_error("right_divide: reconstruction check failed");
  return {std::move(quot), std::move(rem)};
}

SubspaceBasis::SubspaceBasis(const Field& f, std::vector<Elem> gens) : gens_(std::move(gens)) {
  if (!f.independent(gens_)) throw Error("subspace basis: generators are F_q-dependent");
}

LinPoly annihilator(const Field& f, std::span<const Elem> gens) {
  LinPoly acc = LinPoly::x();
  for (Elem w : gens) {
    const Elem a = eval(f, acc, w);
    if (a.code == 0) throw Error("annihilator: generators are F_q-dependent");
    const Elem factor = f.pow(a, f.q() - 1);
    acc = compose(f, LinPoly({f.neg(factor), f.one()}), acc);
  }
  return acc;
}

Matrix moore_matrix(const Field& f, std::span<const Elem> elems, std::span<const unsigned> rows) {
  Matrix m(rows.size(), elems.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j) m(i, j) = f.frobenius(elems[j], rows[i]);
  return m;
}

Elem moore_det(const Field& f, std::span<const Elem> elems, std::optional<unsigned> deleted_row) {
  const auto t = static_cast<unsigned>(elems.size());
  std::vector<unsigned> rows;
  if (!deleted_row) {
    rows.resize(t);
    std::iota(rows.begin(), rows.end(), 0u);
  } else {
    if (*deleted_row > t)
      throw Error("moore_det: deleted row " + std::to_string(*deleted_row) + " outside 0.." +
                  std::to_string(t));
    for (unsigned r = 0; r <= t; ++r)
      if (r != *deleted_row) rows.push_back(r);
  }
  return determinant(f, moore_matrix(f, elems, rows));
}

LinPoly q_lagrange(const Field& f, std::span<const Elem> g, std::span<const Elem> r) {
  if (g.size() != r.size()) throw Error("q_lagrange: point and value counts differ");
  const std::size_t n = g.size();
  Matrix a(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) a(j, i) = f.frobenius(g[j], static_cast<unsigned>(i));
  auto sol = solve(f, std::move(a), std::vector<Elem>(r.begin(), r.end()));
  if (!sol) throw Error("q_lagrange: interpolation points are F_q-dependent");
  return LinPoly(std::move(*sol));
}

LinPoly q_lagrange_determinantal(const Field& f, std::span<const Elem> g, std::span<const Elem> r) {
  if (g.size() != r.size()) throw Error("q_lagrange: point and value counts differ");
  const std::size_t n = g.size();
  const Elem det_m = moore_det(f, g);
  if (det_m.code == 0) throw Error("q_lagrange: interpolation points are F_q-dependent");
  LinPoly out;
  for (std::size_t i = 0; i < n; ++i) {
    if (r[i].code == 0) continue;
    std::vector<Elem> rest;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) rest.push_back(g[j]);
    // det D_i(g, x) expanded along its last column (x, x^q, ..., x^{q^{n-1}}).
    std::vector<Elem> dcoef(n);
    for (std::size_t row = 0; row < n; ++row) {
      const Elem minor = moore_det(f, rest, static_cast<unsigned>(row));
      dcoef[row] = f.mul(sign(f, row + n - 1), minor);
    }
    // 1-indexed position i+1 carries sign (-1)^{n-(i+1)}.
    const Elem w = f.div(f.mul(sign(f, n - (i + 1)), r[i]), det_m);
    out = add(f, out, scale(f, LinPoly(std::move(dcoef)), w));
  }
  return out;
}

SubspaceBasis root_space(const Field& f, const LinPoly& p) {
  if (p.is_zero()) throw Error("root_space: the zero polynomial vanishes everywhere");
  std::vector<Elem> images(f.degree());
  std::uint32_t unit = 1;
  for (unsigned j = 0; j < f.degree(); ++j, unit *= f.p()) images[j] = eval(f, p, Elem{unit});
  std::vector<Elem> roots;
  for (const auto& v : fp::kernel(f, images)) roots.push_back(f.from_digits(v));
  return SubspaceBasis(f, f.span(roots).independent);
}

Elem minor_coeff(const Field& f, std::span<const Elem> basis, unsigned i) {
  const auto t = static_cast<unsigned>(basis.size());
  if (i < 1 || i > t)
    throw Error("minor_coeff: index " + std::to_string(i) + " outside 1.." + std::to_string(t));
  const Elem den = moore_det(f, basis);
  if (den.code == 0) throw Error("minor_coeff: basis is F_q-dependent");
  return f.div(moore_det(f, basis, t - i), den);
}

}  // namespace gablab
