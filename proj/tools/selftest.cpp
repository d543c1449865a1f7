#include "selftest.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include "gablab/deephole.hpp"
#include "gablab/parallel.hpp"
#include "gablab/subspace.hpp"

namespace gablab::selftest {

namespace {

std::vector<Elem> power_points(const Field& f, unsigned n) {
  std::vector<Elem> g;
  std::uint32_t c = 1;
  for (unsigned i = 0; i < n; ++i, c *= f.p()) g.push_back(Elem{c});
  return g;
}

GabidulinCode make_code(unsigned p, unsigned m, unsigned n, unsigned k) {
  Field f = Field::create(p, 1, m);
  auto g = power_points(f, n);
  return GabidulinCode(std::move(f), std::move(g), k);
}

Elem random_elem(const Field& f, std::mt19937_64& rng) {
  return Elem{static_cast<std::uint32_t>(rng() % f.order())};
}

Elem random_nonzero(const Field& f, std::mt19937_64& rng) {
  return Elem{static_cast<std::uint32_t>(1 + rng() % (f.order() - 1))};
}

LinPoly random_poly(const Field& f, std::mt19937_64& rng, int max_deg) {
  std::vector<Elem> c(max_deg < 0 ? 0 : max_deg + 1);
  for (auto& e : c) e = random_elem(f, rng);
  return LinPoly(std::move(c));
}

std::vector<Elem> random_basis(const Field& f, std::mt19937_64& rng, unsigned dim) {
  std::vector<Elem> b;
  while (b.size() < dim) {
    b.push_back(random_nonzero(f, rng));
    if (!f.independent(b)) b.pop_back();
  }
  return b;
}

// Every element of the F_q-span of gens, sorted.
std::vector<Elem> span_set(const Field& f, std::span<const Elem> gens) {
  std::vector<Elem> out{f.zero()};
  for (Elem g : gens) {
    std::vector<Elem> next;
    for (Elem l : f.subfield())
      for (Elem u : out) next.push_back(f.add(u, f.mul(l, g)));
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string histogram_string(const std::map<std::size_t, std::uint64_t>& h) {
  std::ostringstream s;
  bool first = true;
  for (const auto& [d, c] : h) {
    s << (first ? "" : " ") << d << ':' << c;
    first = false;
  }
  return s.str();
}

Outcome mrd_mds(const Options& opts) {
  const GabidulinCode c = make_code(2, 4, 4, 2);
  const std::size_t r = min_distance(c, Metric::rank, {.jobs = opts.jobs});
  const std::size_t h = min_distance(c, Metric::hamming, {.jobs = opts.jobs});
  return {1, "mrd_mds", r == 3 && h == 3,
          "GF(2^4) n=4 k=2: d_rank=" + std::to_string(r) + " d_hamming=" + std::to_string(h) +
              " expected 3/3",
          {}};
}

Outcome covering_radius(const Options& opts) {
  const GabidulinCode c = make_code(2, 4, 4, 2);
  const CoveringScan scan = covering_radius_scan(c, Metric::rank, {.jobs = opts.jobs});

  // Raw oracle over all of F^4.
  const Codebook book(c);
  const std::uint64_t words = std::uint64_t{1} << 16;
  const unsigned jobs = std::max(1u, opts.jobs);
  std::vector<std::map<std::size_t, std::uint64_t>> partial(jobs);
  parallel_chunks(words, jobs, [&](std::uint64_t begin, std::uint64_t end, unsigned job) {
    Word w(4);
    for (std::uint64_t x = begin; x < end; ++x) {
      for (unsigned j = 0; j < 4; ++j) w[j] = Elem{static_cast<std::uint32_t>(x >> (4 * j) & 15)};
      ++partial[job][book.nearest(w, Metric::rank).first];
    }
  });
  std::map<std::size_t, std::uint64_t> raw;
  for (const auto& h : partial)
    for (const auto& [d, n] : h) raw[d] += n;
  const std::size_t raw_radius = raw.rbegin()->first;

  std::uint64_t classes = 0;
  bool consistent = true;
  for (const auto& [d, n] : scan.histogram) {
    classes += n;
    consistent = consistent && raw.count(d) && raw.at(d) == n * scan.class_size;
  }
  consistent = consistent && raw.size() == scan.histogram.size();
  return {2, "covering_radius",
          scan.radius == 2 && raw_radius == 2 && classes == 256 && consistent,
          "scan radius=" + std::to_string(scan.radius) + " over " + std::to_string(classes) +
              " classes; raw oracle radius=" + std::to_string(raw_radius) + " over " +
              std::to_string(words) + " words; histograms " +
              (consistent ? "consistent" : "inconsistent") + " (" +
              histogram_string(scan.histogram) + ")",
          {}};
}

Outcome bound_equality(const Options&) {
  const GabidulinCode c = make_code(2, 4, 4, 2);
  const Codebook book(c);
  std::size_t checked = 0, bound_ok = 0, witness_ok = 0;
  for (Metric metric : {Metric::rank, Metric::hamming}) {
    for (std::uint64_t id = 0; id < 256; ++id) {
      const LinPoly f = class_representative(c, id);
      if (f.qdeg() < 2) continue;
      ++checked;
      const std::size_t oracle = book.nearest(evaluate(c, f), metric).first;
      const std::size_t bound = 4 - static_cast<std::size_t>(f.qdeg());
      bound_ok += oracle >= bound;
      witness_ok += equality_witness(c, f, metric).has_value() == (oracle == bound);
    }
  }
  return {3, "bound_equality", bound_ok == checked && witness_ok == checked,
          "GF(2^4) n=4 k=2, both metrics: bound holds " + std::to_string(bound_ok) + "/" +
              std::to_string(checked) + ", witness iff equality " + std::to_string(witness_ok) +
              "/" + std::to_string(checked),
          {}};
}

Outcome degree_k_family(const Options& opts) {
  const GabidulinCode c = make_code(2, 3, 3, 1);
  const Field& f = c.field();
  const Codebook book(c);
  std::uint64_t words = 0, deep = 0, oracle_deep = 0;
  for (std::uint32_t a1 = 1; a1 < f.order(); ++a1)
    for (std::uint32_t a0 = 0; a0 < f.order(); ++a0) {
      const Word w = evaluate(c, LinPoly({Elem{a0}, Elem{a1}}));
      ++words;
      deep += classify(c, w, Metric::rank).is_deep_hole;
      oracle_deep += book.nearest(w, Metric::rank).first == 2;
    }
  const CoveringScan scan = covering_radius_scan(c, Metric::rank, {.jobs = opts.jobs});
  const std::uint64_t all_deep = scan.histogram.count(2) ? scan.histogram.at(2) * scan.class_size : 0;
  return {4, "degree_k_family",
          deep >= 56 && deep == words && oracle_deep == words,
          "GF(2^3) n=3 k=1: deg_q f = k words at distance n-k: " + std::to_string(deep) + "/" +
              std::to_string(words) + " (oracle " + std::to_string(oracle_deep) +
              "), lower bound 56; all deep holes in census: " + std::to_string(all_deep),
          {}};
}

Outcome frobenius_shift(const Options& opts) {
  std::mt19937_64 rng(opts.seed ^ 0x5f);
  std::size_t total = 0, deep = 0;
  for (unsigned k : {1u, 2u, 3u}) {
    const GabidulinCode c = make_code(2, 4, 4, k);
    for (int i = 0; i < 10; ++i) {
      const FamilyParams params{.low = random_poly(c.field(), rng, static_cast<int>(k) - 1)};
      const auto v = family_check(c, Family::frobenius_shift, params, Metric::rank);
      ++total;
      deep += v.observed.is_deep_hole && v.agree;
    }
  }
  return {5, "frobenius_shift", deep == total,
          "GF(2^4) n=m=4, k=1..3, 10 draws each: deep holes " + std::to_string(deep) + "/" +
              std::to_string(total),
          {}};
}

Outcome k_eq_n_minus_2(const Options& opts) {
  const GabidulinCode c = make_code(3, 3, 3, 1);
  const Field& f = c.field();
  std::mt19937_64 rng(opts.seed ^ 0x3a);
  const auto excluded = k_eq_n_minus_2_excluded(f, c.n());
  const auto corrected = power_ratio_set(f, c.n());
  std::size_t outside = 0, outside_deep = 0, inside = 0, inside_witnessed = 0;
  std::size_t corrected_agree = 0, corrected_total = 0;
  for (std::uint32_t code = 1; code < f.order(); ++code) {
    const Elem a{code};
    const bool in = std::binary_search(excluded.begin(), excluded.end(), a);
    const bool in_corrected = std::binary_search(corrected.begin(), corrected.end(), a);
    if (!in) {
      ++outside;
      bool all_deep = true;
      for (int i = 0; i < 5; ++i) {
        const FamilyParams params{.low = random_poly(f, rng, static_cast<int>(c.n()) - 3), .a = a};
        const auto v = family_check(c, Family::k_eq_n_minus_2, params, Metric::rank);
        all_deep = all_deep && v.observed.is_deep_hole;
        ++corrected_total;
        corrected_agree += v.observed.is_deep_hole == !in_corrected;
      }
      outside_deep += all_deep;
    } else {
      ++inside;
      const auto v = family_check(c, Family::k_eq_n_minus_2, {.a = a}, Metric::rank);
      inside_witnessed += v.predicted == Prediction::not_guaranteed &&
                          !v.observed.is_deep_hole && v.observed.witness.has_value();
      ++corrected_total;
      corrected_agree += v.observed.is_deep_hole == !in_corrected;
    }
  }
  Outcome o{6, "k_eq_n_minus_2",
            outside_deep == outside && inside_witnessed == inside && inside > 0,
            "GF(3^3) n=m=3 k=1: excluded set {(-1)^(n-1) b^(1-q)} has " +
                std::to_string(excluded.size()) + " elements; a outside: deep hole for " +
                std::to_string(outside_deep) + "/" + std::to_string(outside) +
                "; a inside: non-deep-hole witness for " + std::to_string(inside_witnessed) + "/" +
                std::to_string(inside),
            {}};
  o.notes.push_back("with the set {(-1)^n b^(1-q)} instead, deep-hole status matches " +
                    std::to_string(corrected_agree) + "/" + std::to_string(corrected_total) +
                    " instances");
  return o;
}

Outcome k1_odd_m(const Options&) {
  std::size_t total = 0, deep = 0;
  for (unsigned n : {3u, 5u}) {
    const GabidulinCode c = make_code(2, 5, n, 1);
    for (std::uint32_t cc = 0; cc < 32; ++cc) {
      const auto v = family_check(c, Family::k1_odd_m, {.c = Elem{cc}}, Metric::rank);
      ++total;
      deep += v.observed.is_deep_hole;
    }
  }
  return {7, "k1_odd_m", deep == total,
          "GF(2^5) n in {3,5} k=1, all c: deep holes " + std::to_string(deep) + "/" +
              std::to_string(total),
          {}};
}

Outcome binary_quartic(const Options& opts) {
  const GabidulinCode c = make_code(2, 5, 5, 1);
  std::mt19937_64 rng(opts.seed ^ 0x77);
  std::size_t total = 0, ok = 0;
  for (std::uint32_t b = 0; b < 32; ++b)
    for (int i = 0; i < 8; ++i) {
      const FamilyParams params{.b = Elem{b}, .c = random_elem(c.field(), rng)};
      const auto v = family_check(c, Family::binary_quartic, params, Metric::rank);
      ++total;
      ok += v.observed.is_deep_hole == (b == 0);
    }
  return {8, "binary_quartic", ok == total,
          "GF(2^5) n=m=5 k=1, all b x 8 c: deep hole iff b=0 on " + std::to_string(ok) + "/" +
              std::to_string(total),
          {}};
}

Outcome quadric(const Options&) {
  std::size_t total = 0, ok = 0;
  Outcome o{9, "quadric_census", false, "", {}};
  std::ostringstream detail;
  for (unsigned m : {3u, 4u, 5u}) {
    const Field f = Field::create(2, 1, m);
    std::map<std::uint64_t, std::size_t> nonzero_counts;
    std::uint64_t zero_count = 0;
    for (std::uint32_t b = 0; b < f.order(); ++b) {
      const auto census = quadric_census(f, Elem{b});
      ++total;
      ok += census.count == quadric_stated_count(m, b == 0);
      if (b == 0)
        zero_count = census.count;
      else
        ++nonzero_counts[census.count];
    }
    std::ostringstream note;
    note << "m=" << m << ": N(b=0)=" << zero_count << " (closed form "
         << quadric_stated_count(m, true) << "), N(b!=0)=";
    bool first = true;
    for (const auto& [n, times] : nonzero_counts) {
      note << (first ? "" : "|") << n << " for " << times << " values";
      first = false;
    }
    note << " (closed form " << quadric_stated_count(m, false) << ")";
    o.notes.push_back(note.str());
  }
  detail << "m in {3,4,5}, all b: census matches closed forms for " << ok << "/" << total;
  o.pass = ok == total;
  o.detail = detail.str();
  return o;
}

Outcome algebra(const Options& opts) {
  const Field f = Field::create(2, 1, 4);
  std::mt19937_64 rng(opts.seed ^ 0xa1);
  std::size_t checks = 0, failures = 0;
  auto check = [&](bool ok) {
    ++checks;
    failures += !ok;
  };

  for (int i = 0; i < 1000; ++i) {
    const LinPoly num = random_poly(f, rng, 5);
    LinPoly den = random_poly(f, rng, 3);
    if (den.is_zero()) den = LinPoly::x();
    const auto [h, r] = right_divide(f, num, den);
    check(add(f, compose(f, h, den), r) == num && r.qdeg() < den.qdeg());
  }

  const auto basis = power_points(f, 4);
  for (unsigned t = 0; t <= 3; ++t)
    for_each_subspace(f, basis, t, [&](const SubspaceView& v) {
      const LinPoly a = annihilator(f, v.basis);
      std::vector<Elem> roots;
      for (std::uint32_t x = 0; x < f.order(); ++x)
        if (eval(f, a, Elem{x}).code == 0) roots.push_back(Elem{x});
      check(a.is_monic() && roots == span_set(f, v.basis));
      return false;
    });

  for (int i = 0; i < 1000; ++i) {
    const unsigned n = 1 + static_cast<unsigned>(rng() % 4);
    const auto g = random_basis(f, rng, n);
    std::vector<Elem> w(n);
    for (auto& e : w) e = random_elem(f, rng);
    const LinPoly lam = q_lagrange(f, g, w);
    bool ok = lam.qdeg() < static_cast<int>(n);
    for (unsigned j = 0; j < n; ++j) ok = ok && eval(f, lam, g[j]) == w[j];
    check(ok);
  }

  for (unsigned mask = 1; mask < 16; ++mask) {
    std::vector<Elem> sub;
    for (unsigned j = 0; j < 4; ++j)
      if (mask >> j & 1) sub.push_back(basis[j]);
    check(moore_det(f, sub).code != 0);
  }
  // Dependent inputs too: every ordered pair and triple of field elements.
  for (std::uint32_t a = 0; a < 16; ++a)
    for (std::uint32_t b = 0; b < 16; ++b) {
      const std::vector<Elem> two{Elem{a}, Elem{b}};
      check((moore_det(f, two).code != 0) == f.independent(two));
      for (std::uint32_t c = 0; c < 16; ++c) {
        const std::vector<Elem> three{Elem{a}, Elem{b}, Elem{c}};
        check((moore_det(f, three).code != 0) == f.independent(three));
      }
    }

  for (unsigned t : {2u, 3u})
    for_each_subspace(f, basis, t, [&](const SubspaceView& v) {
      const LinPoly a = annihilator(f, v.basis);
      bool ok = true;
      for (unsigned i = 1; i <= t; ++i) {
        const Elem h = minor_coeff(f, v.basis, i);
        ok = ok && a.coeff(t - i) == (i % 2 ? f.neg(h) : h);
      }
      check(ok);
      return false;
    });

  return {10, "algebra_suite", failures == 0,
          "GF(2^4): " + std::to_string(checks) + " checks, " + std::to_string(failures) +
              " failures",
          {}};
}

Outcome metric_cross_check(const Options& opts) {
  const Field f = Field::create(2, 1, 4);
  std::mt19937_64 rng(opts.seed ^ 0xc3);
  std::vector<std::vector<Elem>> bases{power_points(f, 4)};
  while (bases.size() < 3) {
    auto b = random_basis(f, rng, 4);
    if (std::find(bases.begin(), bases.end(), b) == bases.end()) bases.push_back(std::move(b));
  }
  std::size_t checks = 0, failures = 0;
  for (int i = 0; i < 500; ++i) {
    Word w(4);
    for (auto& e : w) e = random_elem(f, rng);
    const std::size_t r = weight(f, w, Metric::rank);
    for (const auto& beta : bases) {
      Matrix a(f.m(), w.size());
      for (std::size_t j = 0; j < w.size(); ++j) {
        const Coords c = f.coords(w[j], beta);
        for (unsigned i2 = 0; i2 < f.m(); ++i2) a(i2, j) = c[i2];
      }
      ++checks;
      failures += rank(f, a) != r;
    }
  }
  return {11, "metric_cross_check", failures == 0,
          "GF(2^4), 3 bases x 500 words: " + std::to_string(checks) + " checks, " +
              std::to_string(failures) + " failures",
          {}};
}

}  // namespace

std::vector<Outcome> run(const Options& opts, const std::function<void(const Outcome&)>& on_outcome) {
  using Criterion = Outcome (*)(const Options&);
  const Criterion criteria[] = {mrd_mds,        covering_radius, bound_equality, degree_k_family,
                                frobenius_shift, k_eq_n_minus_2, k1_odd_m,       binary_quartic,
                                quadric,        algebra,         metric_cross_check};
  std::vector<Outcome> out;
  for (Criterion c : criteria) {
    Outcome o;
    try {
      o = c(opts);
    } catch (const std::exception& e) {
      o = {static_cast<int>(out.size()) + 1, "criterion", false,
           std::string("exception: ") + e.what(), {}};
    }
    if (on_outcome) on_outcome(o);
    out.push_back(std::move(o));
  }
  return out;
}

void print(std::ostream& out, const Outcome& o) {
  out << (o.pass ? "PASS" : "FAIL") << ' ' << (o.id < 10 ? " " : "") << o.id << ' ' << o.name
      << ": " << o.detail << '\n';
  for (const auto& n : o.notes) out << "        note: " << n << '\n';
}

}  // namespace gablab::selftest
