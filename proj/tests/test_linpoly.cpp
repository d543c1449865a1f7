#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <tuple>

#include "gablab/error.hpp"
#include "gablab/linpoly.hpp"
#include "gablab/subspace.hpp"
#include "test_util.hpp"

using namespace gablab;
using gablab::testing::random_elem;
using gablab::testing::random_nonzero;
using gablab::testing::random_poly;

namespace {

const Elem kOmega{2};
const Elem kOmega1{3};

LinPoly poly(std::initializer_list<std::uint32_t> codes) {
  std::vector<Elem> c;
  for (auto x : codes) c.push_back(Elem{x});
  return LinPoly(std::move(c));
}

// Every element of the F_q-span of gens.
std::vector<Elem> span_set(const Field& f, std::span<const Elem> gens) {
  std::vector<Elem> out{f.zero()};
  for (Elem g : gens) {
    std::vector<Elem> next;
    for (Elem l : f.subfield())
      for (Elem u : out) next.push_back(f.add(u, f.mul(l, g)));
    out = std::move(next);
  }
  return out;
}

// prod_{u in roots} (x - u) as an ordinary polynomial (coefficient of x^i at i),
// then read back as a linearized polynomial; returns nullopt if some
// non-q-power exponent carries a nonzero coefficient.
std::optional<LinPoly> brute_product(const Field& f, std::span<const Elem> roots) {
  std::vector<Elem> c{f.one()};
  for (Elem u : roots) {
    std::vector<Elem> next(c.size() + 1, f.zero());
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] = f.add(next[i + 1], c[i]);
      next[i] = f.sub(next[i], f.mul(u, c[i]));
    }
    c = std::move(next);
  }
  std::vector<Elem> lin;
  std::size_t qi = 1;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i == qi) {
      lin.push_back(c[i]);
      qi *= f.q();
    } else if (c[i].code != 0) {
      return std::nullopt;
    }
  }
  return LinPoly(std::move(lin));
}

// Leibniz expansion over all permutations.
Elem leibniz_det(const Field& f, const Matrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Elem det = f.zero();
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Elem term = inversions % 2 ? f.neg(f.one()) : f.one();
    for (std::size_t i = 0; i < n; ++i) term = f.mul(term, a(i, perm[i]));
    det = f.add(det, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

}  // namespace

TEST(LinPoly, NormalizationAndDegree) {
  EXPECT_EQ(LinPoly().qdeg(), kNegInf);
  EXPECT_EQ(poly({0, 0}).qdeg(), kNegInf);
  EXPECT_TRUE(poly({0, 0}).is_zero());
  EXPECT_EQ(poly({1, 2, 0}).qdeg(), 1);
  EXPECT_EQ(LinPoly::monomial(Elem{3}, 4).qdeg(), 4);
  EXPECT_LT(kNegInf, 0);
}

TEST(LinPolyEval, Gf4Examples) {
  const Field f = Field::create(2, 1, 2);
  EXPECT_EQ(eval(f, LinPoly::x(), kOmega), kOmega);
  EXPECT_EQ(eval(f, poly({0, 1}), kOmega), kOmega1);
  EXPECT_EQ(eval(f, poly({1, 1}), kOmega), f.one());
  EXPECT_EQ(eval(f, LinPoly(), kOmega), f.zero());
}

TEST(LinPolyEval, InducedMapIsFqLinear) {
  for (auto [p, s, m] : {std::tuple{2u, 1u, 4u}, {3u, 1u, 3u}, {2u, 2u, 2u}}) {
    const Field f = Field::create(p, s, m);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
      const LinPoly g = random_poly(f, rng, 4);
      const Elem u = random_elem(f, rng), v = random_elem(f, rng);
      const Elem l = f.subfield()[rng() % f.q()];
      ASSERT_EQ(eval(f, g, f.add(u, v)), f.add(eval(f, g, u), eval(f, g, v)));
      ASSERT_EQ(eval(f, g, f.mul(l, u)), f.mul(l, eval(f, g, u)));
    }
  }
}

TEST(Compose, Examples) {
  const Field f = Field::create(2, 1, 2);
  EXPECT_EQ(compose(f, poly({0, 1}), poly({0, 1})), poly({0, 0, 1}));
  // (omega x^q) o (omega x) = omega * omega^q x^q = 1 * x^q.
  EXPECT_EQ(compose(f, LinPoly::monomial(kOmega, 1), LinPoly::monomial(kOmega, 0)), poly({0, 1}));
  const LinPoly g = poly({3, 2, 1});
  EXPECT_EQ(compose(f, g, LinPoly::x()), g);
  EXPECT_EQ(compose(f, LinPoly::x(), g), g);
}

TEST(Compose, NotCommutativeWitness) {
  const Field f = Field::create(2, 1, 2);
  const LinPoly a = LinPoly::monomial(kOmega, 0), b = poly({0, 1});
  EXPECT_EQ(compose(f, a, b), LinPoly::monomial(kOmega, 1));
  EXPECT_EQ(compose(f, b, a), LinPoly::monomial(kOmega1, 1));
  EXPECT_NE(compose(f, a, b), compose(f, b, a));
}

TEST(Compose, RingLaws) {
  const Field f = Field::create(2, 1, 4);
  std::mt19937_64 rng(9);
  for (int i = 0; i < 200; ++i) {
    const LinPoly a = random_poly(f, rng, 3), b = random_poly(f, rng, 3), c = random_poly(f, rng, 3);
    ASSERT_EQ(compose(f, compose(f, a, b), c), compose(f, a, compose(f, b, c)));
    ASSERT_EQ(compose(f, add(f, a, b), c), add(f, compose(f, a, c), compose(f, b, c)));
    ASSERT_EQ(compose(f, a, add(f, b, c)), add(f, compose(f, a, b), compose(f, a, c)));
    if (!a.is_zero() && !b.is_zero()) {
      ASSERT_EQ(compose(f, a, b).qdeg(), a.qdeg() + b.qdeg());
    }
    const Elem u = random_elem(f, rng);
    ASSERT_EQ(eval(f, compose(f, a, b), u), eval(f, a, eval(f, b, u)));
  }
}

TEST(RightDivide, Examples) {
  const Field f = Field::create(2, 1, 2);
  const LinPoly g = poly({1, 1});
  auto self = right_divide(f, g, g);
  EXPECT_EQ(self.quotient, LinPoly::x());
  EXPECT_TRUE(self.remainder.is_zero());

  auto small = right_divide(f, LinPoly::x(), g);
  EXPECT_TRUE(small.quotient.is_zero());
  EXPECT_EQ(small.remainder, LinPoly::x());

  // x^{q^2} = (x^q + x) o (x^q + x) + x in GF(4).
  auto r = right_divide(f, poly({0, 0, 1}), g);
  EXPECT_EQ(r.quotient, poly({1, 1}));
  EXPECT_EQ(r.remainder, LinPoly::x());
  EXPECT_EQ(r.remainder.qdeg(), 0);

  EXPECT_THROW(right_divide(f, g, LinPoly()), Error);
}

TEST(RightDivide, RandomReconstruction) {
  for (auto [p, s, m] : {std::tuple{2u, 1u, 4u}, {3u, 1u, 3u}}) {
    const Field f = Field::create(p, s, m);
    std::mt19937_64 rng(13);
    for (int i = 0; i < 1000; ++i) {
      const LinPoly num = random_poly(f, rng, 4);
      LinPoly den = random_poly(f, rng, 4);
      if (den.is_zero()) den = LinPoly::x();
      const auto [h, r] = right_divide(f, num, den);
      ASSERT_EQ(add(f, compose(f, h, den), r), num);
      ASSERT_LT(r.qdeg(), den.qdeg());
    }
  }
}

TEST(Annihilator, Examples) {
  const Field f = Field::create(2, 1, 2);
  EXPECT_EQ(annihilator(f, std::vector<Elem>{}), LinPoly::x());
  EXPECT_EQ(annihilator(f, std::vector<Elem>{f.one()}), poly({1, 1}));
  EXPECT_EQ(annihilator(f, std::vector<Elem>{f.one(), kOmega}), poly({1, 0, 1}));
  EXPECT_THROW(annihilator(f, std::vector<Elem>{kOmega, kOmega}), Error);
}

TEST(Annihilator, MatchesBruteProductOfLinearFactors) {
  for (auto [p, s, m] : {std::tuple{2u, 1u, 4u}, {3u, 1u, 3u}, {2u, 2u, 2u}}) {
    const Field f = Field::create(p, s, m);
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Elem> gens;
      const unsigned dim = 1 + rng() % std::min(m, 2u);
      while (gens.size() < dim) {
        gens.push_back(random_nonzero(f, rng));
        if (!f.independent(gens)) gens.pop_back();
      }
      const auto brute = brute_product(f, span_set(f, gens));
      ASSERT_TRUE(brute.has_value());
      ASSERT_EQ(annihilator(f, gens), *brute);
    }
  }
}

TEST(Annihilator, RootSetExactForAllSmallSubspacesOfGf16) {
  const Field f = Field::create(2, 1, 4);
  const auto basis = gablab::testing::power_points(f, 4);
  for (unsigned t = 0; t <= 3; ++t) {
    std::size_t seen = 0;
    for_each_subspace(f, basis, t, [&](const SubspaceView& v) {
      ++seen;
      const LinPoly a = annihilator(f, v.basis);
      EXPECT_TRUE(a.is_monic());
      EXPECT_EQ(a.qdeg(), static_cast<int>(t));
      auto span = span_set(f, v.basis);
      std::sort(span.begin(), span.end());
      std::vector<Elem> roots;
      for (std::uint32_t c = 0; c < f.order(); ++c)
        if (eval(f, a, Elem{c}).code == 0) roots.push_back(Elem{c});
      EXPECT_EQ(roots, span);
      return false;
    });
    EXPECT_EQ(seen, gaussian_binomial(4, t, 2));
  }
}

TEST(MooreDet, Examples) {
  const Field f = Field::create(2, 1, 2);
  const std::vector<Elem> a{f.one(), kOmega}, b{f.one(), f.one()};
  EXPECT_EQ(moore_det(f, a), f.one());
  EXPECT_EQ(moore_det(f, b), f.zero());
  EXPECT_EQ(moore_det(f, a, 1u), f.zero());
  EXPECT_THROW(moore_det(f, a, 3u), Error);
}

TEST(MooreDet, MatchesLeibnizExpansion) {
  for (auto [p, s, m] : {std::tuple{2u, 1u, 4u}, {3u, 1u, 3u}}) {
    const Field f = Field::create(p, s, m);
    std::mt19937_64 rng(19);
    for (int i = 0; i < 100; ++i) {
      std::vector<Elem> e(1 + rng() % 3);
      for (auto& x : e) x = random_elem(f, rng);
      std::vector<unsigned> rows(e.size());
      std::iota(rows.begin(), rows.end(), 0u);
      ASSERT_EQ(moore_det(f, e), leibniz_det(f, moore_matrix(f, e, rows)));
      const unsigned del = static_cast<unsigned>(rng() % (e.size() + 1));
      std::vector<unsigned> rows_del;
      for (unsigned r = 0; r <= e.size(); ++r)
        if (r != del) rows_del.push_back(r);
      ASSERT_EQ(moore_det(f, e, del), leibniz_det(f, moore_matrix(f, e, rows_del)));
    }
  }
}

TEST(MooreDet, NonzeroIffIndependent) {
  const Field f = Field::create(2, 1, 4);
  const auto basis = gablab::testing::power_points(f, 4);
  for (unsigned mask = 0; mask < 16; ++mask) {
    std::vector<Elem> sub;
    for (unsigned i = 0; i < 4; ++i)
      if (mask >> i & 1) sub.push_back(basis[i]);
    EXPECT_NE(moore_det(f, sub).code, 0u);
  }
  // Every ordered pair and triple of GF(16) elements.
  for (std::uint32_t a = 0; a < 16; ++a)
    for (std::uint32_t b = 0; b < 16; ++b) {
      const std::vector<Elem> two{Elem{a}, Elem{b}};
      ASSERT_EQ(moore_det(f, two).code != 0, f.independent(two));
      for (std::uint32_t c = 0; c < 16; ++c) {
        const std::vector<Elem> three{Elem{a}, Elem{b}, Elem{c}};
        ASSERT_EQ(moore_det(f, three).code != 0, f.independent(three));
      }
    }
}

TEST(QLagrange, Examples) {
  const Field f = Field::create(2, 1, 2);
  const SubspaceBasis g(f, {f.one(), kOmega});
  EXPECT_EQ(q_lagrange(f, g, std::vector<Elem>{f.one(), kOmega}), LinPoly::x());
  EXPECT_TRUE(q_lagrange(f, g, std::vector<Elem>{f.zero(), f.zero()}).is_zero());
  EXPECT_EQ(q_lagrange(f, g, std::vector<Elem>{f.one(), kOmega1}), poly({0, 1}));
  EXPECT_THROW(q_lagrange(f, std::vector<Elem>{f.one(), f.one()}, std::vector<Elem>{f.one(), kOmega}),
               Error);
  EXPECT_THROW(q_lagrange(f, g, std::vector<Elem>{f.one()}), Error);
}

TEST(QLagrange, RoundTripAndDeterminantalAgreement) {
  for (auto [p, s, m] : {std::tuple{2u, 1u, 4u}, {3u, 1u, 3u}, {2u, 2u, 2u}}) {
    const Field f = Field::create(p, s, m);
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 1000; ++trial) {
      const unsigned n = 1 + rng() % m;
      std::vector<Elem> g;
      while (g.size() < n) {
        g.push_back(random_nonzero(f, rng));
        if (!f.independent(g)) g.pop_back();
      }
      std::vector<Elem> r(n);
      for (auto& x : r) x = random_elem(f, rng);
      const LinPoly lam = q_lagrange(f, g, r);
      ASSERT_LT(lam.qdeg(), static_cast<int>(n));
      for (unsigned i = 0; i < n; ++i) ASSERT_EQ(eval(f, lam, g[i]), r[i]);
      if (trial % 10 == 0) {
        ASSERT_EQ(q_lagrange_determinantal(f, g, r), lam);
      }
    }
  }
}

TEST(QLagrange, EqualsRemainderModuloAnnihilator) {
  const Field f = Field::create(2, 1, 4);
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 300; ++trial) {
    const unsigned n = 1 + rng() % 4;
    std::vector<Elem> g;
    while (g.size() < n) {
      g.push_back(random_nonzero(f, rng));
      if (!f.independent(g)) g.pop_back();
    }
    const LinPoly fpoly = random_poly(f, rng, 2 * n - 1);
    std::vector<Elem> vals;
    for (Elem x : g) vals.push_back(eval(f, fpoly, x));
    ASSERT_EQ(q_lagrange(f, g, vals), right_divide(f, fpoly, annihilator(f, g)).remainder);
  }
}

TEST(RootSpace, Examples) {
  const Field f = Field::create(2, 1, 2);
  EXPECT_EQ(root_space(f, LinPoly::x()).dim(), 0u);
  const auto r = root_space(f, poly({1, 1}));
  EXPECT_EQ(r.gens(), (std::vector<Elem>{f.one()}));
  EXPECT_THROW(root_space(f, LinPoly()), Error);
}

TEST(RootSpace, RecoversAnnihilatedSpace) {
  for (auto [p, s, m] : {std::tuple{2u, 1u, 4u}, {3u, 1u, 3u}, {2u, 2u, 2u}}) {
    const Field f = Field::create(p, s, m);
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<Elem> gens;
      const unsigned dim = rng() % (m + 1);
      while (gens.size() < dim) {
        gens.push_back(random_nonzero(f, rng));
        if (!f.independent(gens)) gens.pop_back();
      }
      const auto roots = root_space(f, annihilator(f, gens));
      ASSERT_EQ(roots.dim(), dim);
      std::vector<Elem> joined = gens;
      joined.insert(joined.end(), roots.gens().begin(), roots.gens().end());
      ASSERT_EQ(f.span_dim(joined), dim);
    }
    // Root space dimension never exceeds the q-degree.
    for (int trial = 0; trial < 100; ++trial) {
      const LinPoly g = random_poly(f, rng, 3);
      if (g.is_zero()) continue;
      ASSERT_LE(static_cast<int>(root_space(f, g).dim()), g.qdeg());
    }
  }
}

TEST(MinorCoeff, Examples) {
  const Field f = Field::create(2, 1, 2);
  const std::vector<Elem> b{f.one()};
  EXPECT_EQ(minor_coeff(f, b, 1), f.one());
  EXPECT_THROW(minor_coeff(f, b, 0), Error);
  EXPECT_THROW(minor_coeff(f, b, 2), Error);
  EXPECT_THROW(minor_coeff(f, std::vector<Elem>{f.one(), f.one()}, 1), Error);
}

TEST(MinorCoeff, ReproducesAnnihilatorWithAlternatingSigns) {
  for (auto [p, s, m] : {std::tuple{2u, 1u, 4u}, {3u, 1u, 3u}}) {
    const Field f = Field::create(p, s, m);
    const auto ambient = gablab::testing::power_points(f, m);
    for (unsigned t : {2u, 3u}) {
      std::size_t count = 0;
      for_each_subspace(f, ambient, t, [&](const SubspaceView& v) {
        ++count;
        const LinPoly a = annihilator(f, v.basis);
        for (unsigned i = 1; i <= t; ++i) {
          const Elem h = minor_coeff(f, v.basis, i);
          const Elem expected = i % 2 ? f.neg(h) : h;
          EXPECT_EQ(a.coeff(t - i), expected) << "t=" << t << " i=" << i;
        }
        // Rescaling a basis vector by an F_q scalar leaves the ratio unchanged.
        std::vector<Elem> scaled = v.basis;
        scaled[0] = f.mul(f.subfield().back(), scaled[0]);
        EXPECT_EQ(minor_coeff(f, scaled, 1), minor_coeff(f, v.basis, 1));
        return false;
      });
      EXPECT_EQ(count, gaussian_binomial(m, t, f.q()));
    }
  }
}

TEST(Subspaces, GaussianBinomialCounts) {
  EXPECT_EQ(gaussian_binomial(4, 2, 2), 35u);
  EXPECT_EQ(gaussian_binomial(4, 3, 2), 15u);
  EXPECT_EQ(gaussian_binomial(5, 2, 2), 155u);
  EXPECT_EQ(gaussian_binomial(3, 1, 3), 13u);
  EXPECT_EQ(gaussian_binomial(3, 0, 3), 1u);
  EXPECT_EQ(binomial(5, 2), 10u);
  // Distinct subspaces: the sorted span sets are pairwise different.
  const Field f = Field::create(3, 1, 3);
  std::set<std::vector<Elem>> spans;
  for_each_subspace(f, gablab::testing::power_points(f, 3), 2, [&](const SubspaceView& v) {
    auto s = span_set(f, v.basis);
    std::sort(s.begin(), s.end());
    spans.insert(s);
    return false;
  });
  EXPECT_EQ(spans.size(), 13u);
}
