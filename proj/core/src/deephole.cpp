#include "gablab/deephole.hpp"

#include <algorithm>
#include <string>

#include "gablab/error.hpp"
#include "gablab/parallel.hpp"
#include "gablab/subspace.hpp"

namespace gablab {

namespace {

void check_candidates(std::uint64_t count, const SearchOptions& opts, unsigned t) {
  if (count > opts.cap)
    throw CapExceeded("search: " + std::to_string(count) + " candidates of dimension " +
                      std::to_string(t) + " exceed the cap " + std::to_string(opts.cap));
}

std::uint64_t candidate_count(const GabidulinCode& code, Metric metric, unsigned t) {
  return metric == Metric::rank ? gaussian_binomial(code.n(), t, code.field().q())
                                : binomial(code.n(), t);
}

// All elements of the F_q-span of gens.
std::vector<Elem> span_elements(const Field& f, std::span<const Elem> gens) {
  std::vector<Elem> out{f.zero()};
  for (Elem g : gens) {
    std::vector<Elem> next;
    next.reserve(out.size() * f.q());
    for (Elem lambda : f.subfield())
      for (Elem u : out) next.push_back(f.add(u, f.mul(lambda, g)));
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Visits candidate agreement sets of size t: subspaces of <g> for the rank
// metric, point subsets for Hamming. `values[i]` is the word's value at
// basis[i], obtained by F_q-linearity from the word entries.
template <class Visit>
void for_each_candidate(const GabidulinCode& code, std::span<const Elem> w, Metric metric,
                        unsigned t, Visit&& visit) {
  const Field& f = code.field();
  const auto& g = code.points().gens();
  std::vector<Elem> values(t);
  if (metric == Metric::rank) {
    for_each_subspace(f, g, t, [&](const SubspaceView& v) {
      for (unsigned i = 0; i < t; ++i) {
        Elem acc = f.zero();
        for (std::size_t j = 0; j < g.size(); ++j)
          if (v.rows[i][j].code != 0) acc = f.add(acc, f.mul(v.rows[i][j], w[j]));
        values[i] = acc;
      }
      return visit(v.basis, std::span<const std::size_t>{}, values);
    });
  } else {
    std::vector<Elem> basis(t);
    for_each_subset(g.size(), t, [&](std::span<const std::size_t> idx) {
      for (unsigned i = 0; i < t; ++i) {
        basis[i] = g[idx[i]];
        values[i] = w[idx[i]];
      }
      return visit(basis, idx, values);
    });
  }
}

Witness make_witness(std::span<const Elem> basis, std::span<const std::size_t> idx) {
  return Witness{{basis.begin(), basis.end()}, {idx.begin(), idx.end()}};
}

}  // namespace

std::optional<Witness> equality_witness(const GabidulinCode& code, const LinPoly& f, Metric metric,
                                        SearchOptions opts) {
  const int d = f.qdeg();
  if (d < static_cast<int>(code.k()) || d >= static_cast<int>(code.n()))
    throw Error("equality_witness: need k <= deg_q f < n, got deg_q f = " +
                (f.is_zero() ? std::string("-inf") : std::to_string(d)));
  const Field& fld = code.field();
  const LinPoly fm = monic(fld, f);
  const auto t = static_cast<unsigned>(d);
  check_candidates(candidate_count(code, metric, t), opts, t);

  const Word w = evaluate(code, fm);
  std::optional<Witness> found;
  for_each_candidate(code, w, metric, t,
                     [&](std::span<const Elem> basis, std::span<const std::size_t> idx,
                         std::span<const Elem>) {
                       const LinPoly diff = sub(fld, fm, annihilator(fld, basis));
                       if (diff.qdeg() <= static_cast<int>(code.k()) - 1) {
                         found = make_witness(basis, idx);
                         return true;
                       }
                       return false;
                     });
  return found;
}

ClassifyResult distance_by_search(const GabidulinCode& code, std::span<const Elem> w,
                                  Metric metric, SearchOptions opts) {
  const Field& fld = code.field();
  const LinPoly f = sigma_inverse(code, w);
  const unsigned n = code.n(), k = code.k();
  ClassifyResult out;
  out.metric = metric;
  if (f.qdeg() < static_cast<int>(k)) {
    out.nearest = f;
    out.is_deep_hole = (n == k);
    return out;
  }
  const auto d = static_cast<unsigned>(f.qdeg());
  out.bound = n - d;
  for (unsigned t = d; t >= k; --t) {
    check_candidates(candidate_count(code, metric, t), opts, t);
    bool accepted = false;
    for_each_candidate(
        code, w, metric, t,
        [&](std::span<const Elem> basis, std::span<const std::size_t> idx,
            std::span<const Elem> values) {
          // The interpolant of q-degree < k through k independent points is
          // unique, so agreement on the whole candidate reduces to checking
          // the remaining basis members.
          const LinPoly v = q_lagrange(fld, basis.first(k), values.first(k));
          for (unsigned i = k; i < t; ++i)
            if (eval(fld, v, basis[i]) != values[i]) return false;
          out.distance = n - t;
          out.witness = make_witness(basis, idx);
          out.nearest = v;
          accepted = true;
          return true;
        });
    if (accepted) break;
    if (t == k) {
      // Unreachable: every k-dimensional candidate admits an interpolant.
      out.distance = n - k;
      break;
    }
  }
  out.is_deep_hole = out.distance == n - k;
  return out;
}

ClassifyResult classify(const GabidulinCode& code, std::span<const Elem> w, Metric metric,
                        SearchOptions opts) {
  return distance_by_search(code, w, metric, opts);
}

LinPoly class_representative(const GabidulinCode& code, std::uint64_t class_id) {
  std::vector<Elem> c(code.n(), Elem{0});
  const std::uint32_t order = code.field().order();
  for (unsigned i = code.k(); i < code.n(); ++i) {
    c[i] = Elem{static_cast<std::uint32_t>(class_id % order)};
    class_id /= order;
  }
  return LinPoly(std::move(c));
}

CoveringScan covering_radius_scan(const GabidulinCode& code, Metric metric, ScanOptions opts) {
  const std::uint64_t order = code.field().order();
  std::uint64_t classes = 1;
  for (unsigned i = code.k(); i < code.n(); ++i) {
    classes *= order;
    if (classes > opts.cap)
      throw CapExceeded("scan: more than " + std::to_string(opts.cap) + " translation classes");
  }
  CoveringScan out;
  out.class_size = code.size();
  if (opts.keep_rows) out.rows.resize(classes);

  const unsigned jobs = std::max(1u, opts.jobs);
  std::vector<std::map<std::size_t, std::uint64_t>> partial(jobs);
  parallel_chunks(classes, jobs, [&](std::uint64_t begin, std::uint64_t end, unsigned job) {
    for (std::uint64_t id = begin; id < end; ++id) {
      LinPoly rep = class_representative(code, id);
      ClassifyResult r = distance_by_search(code, evaluate(code, rep), metric, opts.search);
      ++partial[job][r.distance];
      if (opts.keep_rows) out.rows[id] = ScanRow{id, std::move(rep), std::move(r)};
    }
  });
  for (const auto& h : partial)
    for (const auto& [dist, count] : h) out.histogram[dist] += count;
  out.radius = out.histogram.empty() ? 0 : out.histogram.rbegin()->first;
  return out;
}

std::optional<Witness> ratio_lemma_check(const GabidulinCode& code, const LinPoly& f,
                                         Metric metric, SearchOptions opts) {
  const unsigned k = code.k();
  if (f.qdeg() != static_cast<int>(k) + 1)
    throw Error("ratio_lemma_check: need deg_q f = k + 1 = " + std::to_string(k + 1));
  if (k + 1 > code.n()) throw Error("ratio_lemma_check: k + 1 exceeds n");
  const Field& fld = code.field();
  const LinPoly fm = monic(fld, f);
  const Elem a1 = fld.neg(fm.coeff(k));
  check_candidates(candidate_count(code, metric, k + 1), opts, k + 1);

  const Word w = evaluate(code, fm);
  std::optional<Witness> found;
  for_each_candidate(code, w, metric, k + 1,
                     [&](std::span<const Elem> basis, std::span<const std::size_t> idx,
                         std::span<const Elem>) {
                       const Elem ratio =
                           fld.div(moore_det(fld, basis, k), moore_det(fld, basis));
                       if (ratio == a1) {
                         found = make_witness(basis, idx);
                         return true;
                       }
                       return false;
                     });
  return found;
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::frobenius_shift: return "frobenius_shift";
    case Family::k_eq_n_minus_2: return "k_eq_n_minus_2";
    case Family::k1_odd_m: return "k1_odd_m";
    case Family::binary_quartic: return "binary_quartic";
  }
  return "?";
}

Family parse_family(std::string_view s) {
  for (Family f : {Family::frobenius_shift, Family::k_eq_n_minus_2, Family::k1_odd_m,
                   Family::binary_quartic})
    if (to_string(f) == s) return f;
  throw Error("unknown family '" + std::string(s) + "'");
}

std::string_view to_string(Prediction p) {
  switch (p) {
    case Prediction::deep_hole: return "deep_hole";
    case Prediction::not_deep_hole: return "not_deep_hole";
    case Prediction::not_guaranteed: return "not_guaranteed";
  }
  return "?";
}

std::vector<Elem> power_ratio_set(const Field& f, unsigned sign_exponent) {
  const Elem sign = sign_exponent % 2 == 0 ? f.one() : f.neg(f.one());
  std::vector<Elem> out;
  for (std::uint32_t c = 1; c < f.order(); ++c)
    out.push_back(f.mul(sign, f.pow(f.inv(Elem{c}), f.q() - 1)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

FamilyVerdict family_check(const GabidulinCode& code, Family family, const FamilyParams& params,
                           Metric metric, SearchOptions opts) {
  const Field& fld = code.field();
  const unsigned n = code.n(), k = code.k(), m = fld.m();
  auto require = [&](bool ok, const char* what) {
    if (!ok) throw Error(std::string(to_string(family)) + ": hypothesis violated: " + what);
  };
  FamilyVerdict v{family, {}, Prediction::deep_hole, {}, false};

  switch (family) {
    case Family::frobenius_shift:
      require(n == m, "n = m");
      require(k < n, "k < n");
      require(params.low.qdeg() <= static_cast<int>(k) - 1, "deg_q f_low <= k - 1");
      v.f = add(fld, LinPoly::monomial(fld.one(), n - 1), params.low);
      break;
    case Family::k_eq_n_minus_2: {
      require(n == m, "n = m");
      require(n >= 3 && k == n - 2, "k = n - 2");
      require(params.low.qdeg() <= static_cast<int>(n) - 3, "deg_q f_low <= n - 3");
      v.f = add(fld, LinPoly::monomial(fld.one(), n - 1),
                add(fld, LinPoly::monomial(fld.neg(params.a), n - 2), params.low));
      const auto excluded = k_eq_n_minus_2_excluded(fld, n);
      const bool inside = std::binary_search(excluded.begin(), excluded.end(), params.a);
      v.predicted = inside ? Prediction::not_guaranteed : Prediction::deep_hole;
      break;
    }
    case Family::k1_odd_m:
      require(m % 2 == 1, "m odd");
      require(k == 1, "k = 1");
      require(n >= 3 && n <= m, "3 <= n <= m");
      v.f = LinPoly({params.c, fld.zero(), fld.one()});
      break;
    case Family::binary_quartic: {
      require(fld.p() == 2 && fld.s() == 1, "q = 2");
      require(k == 1, "k = 1");
      require(n >= 3 && n <= m, "3 <= n <= m");
      v.f = LinPoly({params.c, params.b, fld.one()});
      const auto& g = code.points().gens();
      const bool pair = metric == Metric::rank
                            ? quadric_pair_exists(fld, span_elements(fld, g), params.b)
                            : quadric_pair_exists(fld, g, params.b);
      v.predicted = pair ? Prediction::not_deep_hole : Prediction::deep_hole;
      break;
    }
  }
  v.observed = classify(code, evaluate(code, v.f), metric, opts);
  v.agree = v.predicted == Prediction::not_guaranteed ||
            (v.predicted == Prediction::deep_hole) == v.observed.is_deep_hole;
  return v;
}

QuadricCensus quadric_census(const Field& f, Elem b, bool materialize) {
  if (f.p() != 2 || f.s() != 1) throw Error("quadric_census: requires a binary field (q = 2)");
  f.element(b.code);
  QuadricCensus out{b, 0, 0, {}};
  for (std::uint32_t x = 0; x < f.order(); ++x) {
    const Elem c1{x};
    const Elem c1sq = f.mul(c1, c1);
    for (std::uint32_t y = 0; y < f.order(); ++y) {
      const Elem c2{y};
      const Elem h = f.add(f.add(c1sq, f.mul(c1, c2)), f.mul(c2, c2));
      if (h != b) continue;
      ++out.total_solutions;
      if (x == y || x == 0 || y == 0) continue;
      ++out.count;
      if (materialize) out.solutions.emplace_back(c1, c2);
    }
  }
  return out;
}

std::int64_t quadric_v(std::uint64_t q, bool b_is_zero) {
  return b_is_zero ? static_cast<std::int64_t>(q) - 1 : -1;
}

std::uint64_t quadric_stated_count(unsigned m, bool b_is_zero) {
  const std::uint64_t two_m = std::uint64_t{1} << m;
  if (m % 2 == 1) return b_is_zero ? 0 : two_m - 1;
  return b_is_zero ? 2 * two_m - 2 : two_m - 3;
}

bool quadric_pair_exists(const Field& f, std::span<const Elem> pool, Elem b) {
  for (Elem x : pool) {
    if (x.code == 0) continue;
    const Elem xx = f.mul(x, x);
    for (Elem y : pool) {
      if (y.code == 0 || y == x) continue;
      if (f.add(f.add(xx, f.mul(x, y)), f.mul(y, y)) == b) return true;
    }
  }
  return false;
}

}  // namespace gablab
