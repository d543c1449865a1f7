#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "gablab/error.hpp"
#include "gablab/field.hpp"
#include "gablab/matrix.hpp"
#include "test_util.hpp"

using namespace gablab;
using gablab::testing::random_elem;
using gablab::testing::random_nonzero;

namespace {

// Smallest monic irreducible of degree n over F_p by sieving out every
// product of two monic polynomials of positive degree. Codes are the
// base-p integers of the lower coefficients.
std::vector<unsigned> sieve_smallest_irreducible(unsigned p, unsigned n) {
  auto poly_of = [p](std::uint64_t low, unsigned deg) {
    std::vector<unsigned> c(deg + 1, 0);
    c[deg] = 1;
    for (unsigned i = 0; i < deg; ++i, low /= p) c[i] = static_cast<unsigned>(low % p);
    return c;
  };
  auto code_of = [p](const std::vector<unsigned>& c) {
    std::uint64_t v = 0, w = 1;
    for (std::size_t i = 0; i + 1 < c.size(); ++i, w *= p) v += c[i] * w;
    return v;
  };
  auto count = [p](unsigned deg) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < deg; ++i) r *= p;
    return r;
  };
  std::set<std::uint64_t> reducible;
  for (unsigned d = 1; d <= n / 2; ++d) {
    for (std::uint64_t a = 0; a < count(d); ++a) {
      for (std::uint64_t b = 0; b < count(n - d); ++b) {
        auto x = poly_of(a, d), y = poly_of(b, n - d);
        std::vector<unsigned> prod(n + 1, 0);
        for (std::size_t i = 0; i < x.size(); ++i)
          for (std::size_t j = 0; j < y.size(); ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
        reducible.insert(code_of(prod));
      }
    }
  }
  for (std::uint64_t c = 0;; ++c)
    if (!reducible.count(c)) return poly_of(c, n);
}

// Schoolbook product in F_p[x]/(modulus), written independently of Field.
Elem naive_mul(const Field& f, Elem a, Elem b) {
  const unsigned p = f.p(), n = f.degree();
  auto da = f.digits(a), db = f.digits(b);
  std::vector<unsigned> prod(2 * n, 0);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  const auto& mod = f.modulus();
  for (unsigned top = 2 * n - 1; top >= n; --top) {
    const unsigned c = prod[top];
    for (unsigned i = 0; i <= n; ++i)
      prod[top - n + i] = (prod[top - n + i] + (p - c) * mod[i]) % p;
  }
  prod.resize(n);
  return f.from_digits(prod);
}

const Elem kOmega{2};
const Elem kOmega1{3};  // omega + 1

}  // namespace

TEST(FieldCreate, DefaultModulusIsSmallestIrreducible) {
  EXPECT_EQ(Field::create(2, 1, 2).modulus(), (std::vector<unsigned>{1, 1, 1}));
  for (auto [p, n] : {std::pair{2u, 3u}, {2u, 4u}, {2u, 5u}, {3u, 3u}, {3u, 4u}, {5u, 2u}}) {
    const Field f = Field::create(p, 1, n);
    EXPECT_EQ(f.modulus(), sieve_smallest_irreducible(p, n)) << "p=" << p << " n=" << n;
  }
  // Tower q = 4, m = 2 uses the same degree-4 modulus over F_2.
  EXPECT_EQ(Field::create(2, 2, 2).modulus(), sieve_smallest_irreducible(2, 4));
}

TEST(FieldCreate, ExplicitModulus) {
  EXPECT_NO_THROW(Field::create(2, 1, 4, std::vector<unsigned>{1, 1, 0, 0, 1}));
  // (x^2 + x + 1)^2 = x^4 + x^2 + 1 over F_2.
  EXPECT_THROW(Field::create(2, 1, 4, std::vector<unsigned>{1, 0, 1, 0, 1}), Error);
  EXPECT_THROW(Field::create(2, 1, 4, std::vector<unsigned>{1, 1, 1}), Error);
  EXPECT_THROW(Field::create(2, 1, 2, std::vector<unsigned>{1, 1, 2}), Error);
  EXPECT_THROW(Field::create(3, 1, 2, std::vector<unsigned>{1, 0, 2}), Error);  // not monic
}

TEST(FieldCreate, Errors) {
  EXPECT_THROW(Field::create(4, 1, 2), Error);
  EXPECT_THROW(Field::create(1, 1, 2), Error);
  EXPECT_THROW(Field::create(2, 0, 2), Error);
  EXPECT_THROW(Field::create(2, 1, 0), Error);
  EXPECT_THROW(Field::create(2, 1, 25), CapExceeded);
  FieldOptions small;
  small.size_cap = 64;
  EXPECT_THROW(Field::create(2, 1, 7, small), CapExceeded);
  EXPECT_NO_THROW(Field::create(2, 1, 6, small));
}

TEST(FieldCreate, ElementValidation) {
  const Field f = Field::create(2, 1, 2);
  EXPECT_EQ(f.element(3), kOmega1);
  EXPECT_THROW(f.element(4), Error);
}

TEST(FieldArith, Gf4Examples) {
  const Field f = Field::create(2, 1, 2);
  EXPECT_EQ(f.mul(kOmega, kOmega), kOmega1);
  EXPECT_EQ(f.add(kOmega, kOmega), f.zero());
  EXPECT_EQ(f.div(f.one(), kOmega), kOmega1);
  EXPECT_EQ(f.mul(kOmega, kOmega1), f.one());
  EXPECT_THROW(f.div(f.one(), f.zero()), Error);
}

TEST(FieldArith, MatchesNaiveProduct) {
  for (auto [p, s, m] : {std::tuple{2u, 1u, 4u}, {3u, 1u, 3u}, {2u, 2u, 2u}, {5u, 1u, 2u}}) {
    const Field f = Field::create(p, s, m);
    for (std::uint32_t a = 0; a < f.order(); ++a)
      for (std::uint32_t b = 0; b < f.order(); ++b)
        ASSERT_EQ(f.mul(Elem{a}, Elem{b}), naive_mul(f, Elem{a}, Elem{b}));
  }
}

TEST(FieldArith, TablesAgreeWithSchoolbook) {
  FieldOptions no_tables;
  no_tables.table_limit = 0;
  for (auto [p, m] : {std::pair{2u, 6u}, {3u, 5u}}) {
    const Field t = Field::create(p, 1, m);
    const Field s = Field::create(p, 1, m, no_tables);
    ASSERT_TRUE(t.uses_tables());
    ASSERT_FALSE(s.uses_tables());
    std::mt19937_64 rng(1);
    for (int i = 0; i < 2000; ++i) {
      const Elem a = random_elem(t, rng), b = random_nonzero(t, rng);
      ASSERT_EQ(t.mul(a, b), s.mul(a, b));
      ASSERT_EQ(t.div(a, b), s.div(a, b));
      ASSERT_EQ(t.frobenius(a, 2), s.frobenius(a, 2));
      ASSERT_EQ(t.pow(a, 1000 + i), s.pow(a, 1000 + i));
    }
  }
}

TEST(FieldArith, FieldAxiomsOnRandomTriples) {
  for (auto [p, s, m] : {std::tuple{2u, 1u, 4u}, {3u, 1u, 3u}, {2u, 2u, 3u}, {7u, 1u, 2u}}) {
    const Field f = Field::create(p, s, m);
    std::mt19937_64 rng(p * 100 + m);
    for (int i = 0; i < 500; ++i) {
      const Elem a = random_elem(f, rng), b = random_elem(f, rng), c = random_elem(f, rng);
      ASSERT_EQ(f.add(a, b), f.add(b, a));
      ASSERT_EQ(f.mul(a, b), f.mul(b, a));
      ASSERT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
      ASSERT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
      ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
      ASSERT_EQ(f.sub(f.add(a, b), b), a);
      if (a.code != 0) {
        ASSERT_EQ(f.mul(a, f.inv(a)), f.one());
      }
    }
  }
}

TEST(Frobenius, Gf4Examples) {
  const Field f = Field::create(2, 1, 2);
  EXPECT_EQ(f.frobenius(kOmega, 1), kOmega1);
  EXPECT_EQ(f.frobenius(kOmega, 2), kOmega);
  EXPECT_EQ(f.frobenius(f.zero(), 7), f.zero());
}

TEST(Frobenius, AutomorphismProperties) {
  for (auto [p, s, m] : {std::tuple{2u, 1u, 4u}, {3u, 1u, 3u}, {2u, 2u, 2u}}) {
    const Field f = Field::create(p, s, m);
    std::size_t fixed = 0;
    for (std::uint32_t a = 0; a < f.order(); ++a) {
      const Elem u{a};
      ASSERT_EQ(f.frobenius(u, m), u);
      ASSERT_EQ(f.frobenius(u, 1), f.pow(u, f.q()));
      if (f.frobenius(u, 1) == u) {
        ++fixed;
        ASSERT_TRUE(std::binary_search(f.subfield().begin(), f.subfield().end(), u));
      }
    }
    EXPECT_EQ(fixed, f.q());
    std::mt19937_64 rng(3);
    for (int i = 0; i < 300; ++i) {
      const Elem a = random_elem(f, rng), b = random_elem(f, rng);
      ASSERT_EQ(f.frobenius(f.add(a, b)), f.add(f.frobenius(a), f.frobenius(b)));
      ASSERT_EQ(f.frobenius(f.mul(a, b)), f.mul(f.frobenius(a), f.frobenius(b)));
    }
  }
}

TEST(Trace, Examples) {
  const Field gf4 = Field::create(2, 1, 2);
  EXPECT_EQ(gf4.trace(kOmega), gf4.one());
  EXPECT_EQ(gf4.trace(gf4.zero()), gf4.zero());
  const Field gf16 = Field::create(2, 1, 4);
  EXPECT_EQ(gf16.trace(gf16.one()), gf16.zero());
  const Field gf32 = Field::create(2, 1, 5);
  EXPECT_EQ(gf32.trace(gf32.one()), gf32.one());
}

TEST(Trace, LandsInSubfieldAndIsBalanced) {
  for (auto [p, s, m] : {std::tuple{2u, 1u, 4u}, {3u, 1u, 3u}, {2u, 2u, 2u}}) {
    const Field f = Field::create(p, s, m);
    std::map<std::uint32_t, std::size_t> hist;
    for (std::uint32_t a = 0; a < f.order(); ++a) {
      const Elem t = f.trace(Elem{a});
      ASSERT_TRUE(f.in_subfield(t));
      ++hist[t.code];
      ASSERT_LT(f.absolute_trace(Elem{a}).code, p);
    }
    // The trace is onto F_q with fibers of equal size.
    EXPECT_EQ(hist.size(), f.q());
    for (auto [code, n] : hist) EXPECT_EQ(n, f.order() / f.q());
  }
}

TEST(Subfield, Enumeration) {
  EXPECT_EQ(Field::create(2, 1, 2).subfield(), (std::vector<Elem>{Elem{0}, Elem{1}}));
  EXPECT_EQ(Field::create(2, 2, 1).subfield(),
            (std::vector<Elem>{Elem{0}, Elem{1}, Elem{2}, Elem{3}}));
  EXPECT_EQ(Field::create(2, 1, 4).subfield(), (std::vector<Elem>{Elem{0}, Elem{1}}));
  const Field f = Field::create(2, 2, 2);
  ASSERT_EQ(f.subfield().size(), 4u);
  for (Elem u : f.subfield()) EXPECT_EQ(f.pow(u, 4), u);
  EXPECT_EQ(f.subfield_fp_basis().size(), 2u);
}

TEST(SpanDim, Examples) {
  const Field f = Field::create(2, 1, 2);
  const std::vector<Elem> a{f.one(), kOmega}, b{f.one(), f.one()}, z{f.zero()}, e{};
  EXPECT_EQ(f.span_dim(a), 2u);
  EXPECT_EQ(f.span_dim(b), 1u);
  EXPECT_EQ(f.span_dim(z), 0u);
  EXPECT_EQ(f.span_dim(e), 0u);
  EXPECT_EQ(f.span(b).independent, (std::vector<Elem>{f.one()}));
}

TEST(SpanDim, GreedySublistIsFirstMaximal) {
  const Field f = Field::create(2, 1, 4);
  const std::vector<Elem> v{Elem{0}, Elem{3}, Elem{1}, Elem{2}, Elem{4}, Elem{7}};
  // 3 = 1 + 2, so 2 is dependent on {3, 1}.
  EXPECT_EQ(f.span(v).independent, (std::vector<Elem>{Elem{3}, Elem{1}, Elem{4}}));
}

TEST(SpanDim, InvariantUnderPermutationAndScalars) {
  for (auto [p, s, m] : {std::tuple{2u, 1u, 4u}, {3u, 1u, 3u}, {2u, 2u, 2u}}) {
    const Field f = Field::create(p, s, m);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 300; ++i) {
      std::vector<Elem> v(1 + rng() % 5);
      for (auto& e : v) e = random_elem(f, rng);
      const std::size_t d = f.span_dim(v);
      auto perm = v;
      std::shuffle(perm.begin(), perm.end(), rng);
      ASSERT_EQ(f.span_dim(perm), d);
      const Elem lambda = f.subfield()[1 + rng() % (f.q() - 1)];
      auto scaled = v;
      const std::size_t idx = rng() % v.size();
      scaled[idx] = f.mul(lambda, scaled[idx]);
      ASSERT_EQ(f.span_dim(scaled), d);
    }
  }
}

TEST(Coords, Gf4Examples) {
  const Field f = Field::create(2, 1, 2);
  const std::vector<Elem> basis{f.one(), kOmega};
  EXPECT_EQ(f.coords(kOmega1, basis), (Coords{Elem{1}, Elem{1}}));
  EXPECT_EQ(f.coords(f.zero(), basis), (Coords{Elem{0}, Elem{0}}));
  EXPECT_EQ(f.coords(kOmega, basis), (Coords{Elem{0}, Elem{1}}));
  const std::vector<Elem> bad{f.one(), f.one()};
  EXPECT_THROW(f.coords(kOmega, bad), Error);
}

TEST(Coords, ReconstructionAndRankEquivalence) {
  for (auto [p, s, m] : {std::tuple{2u, 1u, 4u}, {3u, 1u, 3u}, {2u, 2u, 2u}}) {
    const Field f = Field::create(p, s, m);
    std::mt19937_64 rng(11);
    std::vector<Elem> basis;
    while (basis.size() < m) {
      basis.push_back(random_nonzero(f, rng));
      if (!f.independent(basis)) basis.pop_back();
    }
    for (std::uint32_t a = 0; a < f.order(); ++a) {
      const Coords c = f.coords(Elem{a}, basis);
      Elem back = f.zero();
      for (unsigned i = 0; i < m; ++i) {
        ASSERT_TRUE(f.in_subfield(c[i]));
        back = f.add(back, f.mul(c[i], basis[i]));
      }
      ASSERT_EQ(back, Elem{a});
    }
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<Elem> v(1 + rng() % 4);
      for (auto& e : v) e = random_elem(f, rng);
      Matrix mat(m, v.size());
      for (std::size_t j = 0; j < v.size(); ++j) {
        const Coords c = f.coords(v[j], basis);
        for (unsigned i = 0; i < m; ++i) mat(i, j) = c[i];
      }
      ASSERT_EQ(rank(f, mat), f.span_dim(v));
    }
  }
}

TEST(FpAlgebra, SolveAndKernel) {
  const Field f = Field::create(3, 1, 3);
  const std::vector<Elem> cols{Elem{1}, Elem{3}, Elem{4}};  // 4 = 1 + 3
  auto x = fp::solve(f, cols, Elem{7});                      // 7 = 1 + 2*3
  ASSERT_TRUE(x);
  Elem acc = f.zero();
  for (std::size_t j = 0; j < cols.size(); ++j) acc = f.add(acc, f.scale(cols[j], (*x)[j]));
  EXPECT_EQ(acc, Elem{7});
  EXPECT_FALSE(fp::solve(f, cols, Elem{9}));
  const auto ker = fp::kernel(f, cols);
  ASSERT_EQ(ker.size(), 1u);
  Elem z = f.zero();
  for (std::size_t j = 0; j < cols.size(); ++j) z = f.add(z, f.scale(cols[j], ker[0][j]));
  EXPECT_EQ(z, f.zero());
}
