#include "gablab/gabidulin.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "gablab/error.hpp"
#include "gablab/parallel.hpp"

namespace gablab {

std::string_view to_string(Metric m) { return m == Metric::rank ? "rank" : "hamming"; }

Metric parse_metric(std::string_view s) {
  if (s == "rank") return Metric::rank;
  if (s == "hamming") return Metric::hamming;
  throw Error("unknown metric '" + std::string(s) + "' (expected rank or hamming)");
}

GabidulinCode::GabidulinCode(Field field, std::vector<Elem> points, unsigned k)
    : field_(std::move(field)), k_(k) {
  for (Elem g : points) field_.element(g.code);
  points_ = SubspaceBasis(field_, std::move(points));
  if (points_.dim() == 0) throw Error("code: at least one evaluation point is required");
  if (k_ < 1 || k_ > points_.dim())
    throw Error("code: dimension k=" + std::to_string(k_) + " must satisfy 1 <= k <= n=" +
                std::to_string(points_.dim()));
}

Matrix GabidulinCode::generator_matrix() const {
  std::vector<unsigned> rows(k_);
  for (unsigned i = 0; i < k_; ++i) rows[i] = i;
  return moore_matrix(field_, points_.gens(), rows);
}

std::uint64_t GabidulinCode::size() const {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < k_; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / field_.order())
      return std::numeric_limits<std::uint64_t>::max();
    r *= field_.order();
  }
  return r;
}

Word evaluate(const GabidulinCode& code, const LinPoly& f) {
  Word w(code.n());
  for (unsigned j = 0; j < code.n(); ++j) w[j] = eval(code.field(), f, code.points()[j]);
  return w;
}

Word encode(const GabidulinCode& code, const LinPoly& msg) {
  if (msg.qdeg() >= static_cast<int>(code.k()))
    throw Error("encode: message q-degree " + std::to_string(msg.qdeg()) + " is not below k=" +
                std::to_string(code.k()));
  return evaluate(code, msg);
}

LinPoly sigma_inverse(const GabidulinCode& code, std::span<const Elem> w) {
  if (w.size() != code.n())
    throw Error("word length " + std::to_string(w.size()) + " does not match n=" +
                std::to_string(code.n()));
  for (Elem e : w) code.field().element(e.code);
  return q_lagrange(code.field(), code.points(), w);
}

std::size_t weight(const Field& f, std::span<const Elem> w, Metric metric) {
  if (metric == Metric::rank) return f.span_dim(w);
  return static_cast<std::size_t>(
      std::count_if(w.begin(), w.end(), [](Elem e) { return e.code != 0; }));
}

std::size_t distance(const Field& f, std::span<const Elem> a, std::span<const Elem> b,
                     Metric metric) {
  if (a.size() != b.size()) throw Error("distance: length mismatch");
  Word d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = f.sub(a[i], b[i]);
  return weight(f, d, metric);
}

LinPoly message_at(const Field& f, std::uint64_t index, unsigned k) {
  std::vector<Elem> c(k);
  for (unsigned i = 0; i < k; ++i) {
    c[i] = Elem{static_cast<std::uint32_t>(index % f.order())};
    index /= f.order();
  }
  return LinPoly(std::move(c));
}

namespace {

void check_cap(const GabidulinCode& code, std::uint64_t cap) {
  if (code.size() > cap)
    throw CapExceeded("code has " + std::to_string(code.size()) +
                      " codewords, above the oracle cap " + std::to_string(cap));
}

struct Best {
  std::size_t dist = std::numeric_limits<std::size_t>::max();
  std::uint64_t index = 0;
};

}  // namespace

OracleResult dist_to_code_exhaustive(const GabidulinCode& code, std::span<const Elem> w,
                                     Metric metric, OracleOptions opts) {
  if (w.size() != code.n()) throw Error("word length does not match n");
  check_cap(code, opts.cap);
  const std::uint64_t total = code.size();
  std::vector<Best> partial(std::max(1u, opts.jobs));
  parallel_chunks(total, opts.jobs, [&](std::uint64_t begin, std::uint64_t end, unsigned job) {
    Best best;
    for (std::uint64_t i = begin; i < end; ++i) {
      const Word c = encode(code, message_at(code.field(), i, code.k()));
      const std::size_t d = distance(code.field(), w, c, metric);
      if (d < best.dist) best = {d, i};
    }
    partial[job] = best;
  });
  Best best;
  for (const auto& b : partial)
    if (b.dist < best.dist || (b.dist == best.dist && b.index < best.index)) best = b;
  return {best.dist, message_at(code.field(), best.index, code.k())};
}

std::size_t min_distance(const GabidulinCode& code, Metric metric, OracleOptions opts) {
  check_cap(code, opts.cap);
  const std::uint64_t total = code.size();
  std::vector<std::size_t> partial(std::max(1u, opts.jobs), std::numeric_limits<std::size_t>::max());
  parallel_chunks(total - 1, opts.jobs, [&](std::uint64_t begin, std::uint64_t end, unsigned job) {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::uint64_t i = begin + 1; i < end + 1; ++i)
      best = std::min(best, weight(code.field(), encode(code, message_at(code.field(), i, code.k())),
                                   metric));
    partial[job] = best;
  });
  return *std::min_element(partial.begin(), partial.end());
}

Codebook::Codebook(const GabidulinCode& code, std::uint64_t cap) : code_(code) {
  check_cap(code, cap);
  const std::uint64_t total = code.size();
  words_.reserve(total * code.n());
  for (std::uint64_t i = 0; i < total; ++i) {
    const Word c = encode(code, message_at(code.field(), i, code.k()));
    words_.insert(words_.end(), c.begin(), c.end());
  }
}

std::pair<std::size_t, std::size_t> Codebook::nearest(std::span<const Elem> w, Metric metric) const {
  std::size_t best = std::numeric_limits<std::size_t>::max(), arg = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    const std::size_t d = distance(code_.field(), w, codeword(i), metric);
    if (d < best) {
      best = d;
      arg = i;
      if (d == 0) break;
    }
  }
  return {best, arg};
}

}  // namespace gablab
