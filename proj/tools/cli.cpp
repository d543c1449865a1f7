#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "gablab/deephole.hpp"
#include "gablab/error.hpp"
#include "gablab/io.hpp"
#include "selftest.hpp"

namespace gablab::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string spec;
  std::string metric = "rank";
  std::string out;
  std::string word;
  std::string poly;
  std::optional<std::uint64_t> cap;
  unsigned jobs = 1;
  std::uint64_t seed = 0;

  unsigned p = 0, s = 1, m = 0;
  std::string modulus;

  std::string kind;
  std::string a, b, c, low;
  bool sweep = false;
  unsigned draws = 10;
};

const char* boolstr(bool v) { return v ? "true" : "false"; }

GabidulinCode load_code(const Config& cfg) {
  if (cfg.spec.empty()) throw UsageError("--spec is required");
  return build_code(read_code_spec(cfg.spec));
}

Metric metric_of(const Config& cfg) { return parse_metric(cfg.metric); }

OracleOptions oracle_options(const Config& cfg) {
  OracleOptions o;
  if (cfg.cap) o.cap = *cfg.cap;
  o.jobs = cfg.jobs;
  return o;
}

SearchOptions search_options(const Config& cfg) {
  SearchOptions o;
  if (cfg.cap) o.cap = *cfg.cap;
  return o;
}

ScanOptions scan_options(const Config& cfg) {
  ScanOptions o;
  if (cfg.cap) o.cap = *cfg.cap;
  o.jobs = cfg.jobs;
  o.search = search_options(cfg);
  return o;
}

// The word named by --word, or sigma_f for --poly.
Word input_word(const GabidulinCode& code, const Config& cfg) {
  if (cfg.word.empty() == cfg.poly.empty()) throw UsageError("give exactly one of --word or --poly");
  if (!cfg.poly.empty()) return evaluate(code, parse_linpoly(code.field(), cfg.poly));
  Word w = parse_elements(code.field(), cfg.word);
  if (w.size() != code.n())
    throw Error("word has " + std::to_string(w.size()) + " entries but n=" +
                std::to_string(code.n()));
  return w;
}

Elem element_flag(const Field& f, const std::string& text) {
  if (text.empty()) return f.zero();
  return parse_elements(f, text).at(0);
}

std::string witness_codes(const std::optional<Witness>& w) {
  return w ? format_elements(w->basis) : std::string();
}

void cmd_field(const Config& cfg, std::ostream& out) {
  Field f = [&] {
    if (!cfg.spec.empty()) return load_code(cfg).field();
    if (cfg.p == 0 || cfg.m == 0) throw UsageError("field needs --spec or both --p and --m");
    std::optional<std::vector<unsigned>> mod;
    if (!cfg.modulus.empty()) {
      mod.emplace();
      for (auto v : parse_uint_list(cfg.modulus)) mod->push_back(static_cast<unsigned>(v));
    }
    return Field::create(cfg.p, cfg.s, cfg.m, mod);
  }();
  out << "p=" << f.p() << "\ns=" << f.s() << "\nm=" << f.m() << "\nq=" << f.q()
      << "\norder=" << f.order() << "\nmodulus=" << f.modulus_string()
      << "\ntables=" << boolstr(f.uses_tables()) << '\n';
}

void cmd_encode(const Config& cfg, std::ostream& out) {
  const GabidulinCode code = load_code(cfg);
  if (cfg.poly.empty()) throw UsageError("--poly is required");
  out << format_elements(encode(code, parse_linpoly(code.field(), cfg.poly))) << '\n';
}

void cmd_dist(const Config& cfg, std::ostream& out) {
  const GabidulinCode code = load_code(cfg);
  const Word w = input_word(code, cfg);
  const auto r = dist_to_code_exhaustive(code, w, metric_of(cfg), oracle_options(cfg));
  out << "distance=" << r.distance << " message=" << format_linpoly(r.witness) << '\n';
}

void cmd_search(const Config& cfg, std::ostream& out) {
  const GabidulinCode code = load_code(cfg);
  const Word w = input_word(code, cfg);
  const auto r = distance_by_search(code, w, metric_of(cfg), search_options(cfg));
  out << "distance=" << r.distance << " bound=" << r.bound
      << " deep_hole=" << boolstr(r.is_deep_hole) << " message=" << format_linpoly(r.nearest)
      << " witness=" << (r.witness ? witness_codes(r.witness) : "none") << '\n';
}

void cmd_classify(const Config& cfg, std::ostream& out) {
  const GabidulinCode code = load_code(cfg);
  const Word w = input_word(code, cfg);
  const auto r = classify(code, w, metric_of(cfg), search_options(cfg));
  out << "distance=" << r.distance << " deep_hole=" << boolstr(r.is_deep_hole) << '\n';
}

void cmd_mindist(const Config& cfg, std::ostream& out) {
  out << min_distance(load_code(cfg), metric_of(cfg), oracle_options(cfg)) << '\n';
}

void cmd_radius(const Config& cfg, std::ostream& out) {
  out << covering_radius_scan(load_code(cfg), metric_of(cfg), scan_options(cfg)).radius << '\n';
}

void cmd_census(const Config& cfg, std::ostream& out) {
  const GabidulinCode code = load_code(cfg);
  const Metric metric = metric_of(cfg);
  ScanOptions opts = scan_options(cfg);
  opts.keep_rows = true;
  const CoveringScan scan = covering_radius_scan(code, metric, opts);
  out << "class_id,coeffs,metric,distance,is_deep_hole,witness\n";
  for (const auto& row : scan.rows)
    out << row.class_id << ',' << csv_field(format_linpoly(row.rep)) << ',' << to_string(metric)
        << ',' << row.result.distance << ',' << boolstr(row.result.is_deep_hole) << ','
        << csv_field(witness_codes(row.result.witness)) << '\n';
}

std::string params_string(Family family, const FamilyParams& p) {
  std::ostringstream s;
  switch (family) {
    case Family::frobenius_shift: s << "low=" << format_linpoly(p.low); break;
    case Family::k_eq_n_minus_2: s << "a=" << p.a.code << ";low=" << format_linpoly(p.low); break;
    case Family::k1_odd_m: s << "c=" << p.c.code; break;
    case Family::binary_quartic: s << "b=" << p.b.code << ";c=" << p.c.code; break;
  }
  return s.str();
}

void cmd_family(const Config& cfg, std::ostream& out) {
  const GabidulinCode code = load_code(cfg);
  const Field& f = code.field();
  if (cfg.kind.empty()) throw UsageError("--kind is required");
  const Family family = parse_family(cfg.kind);
  const Metric metric = metric_of(cfg);

  FamilyParams base;
  base.low = cfg.low.empty() ? LinPoly() : parse_linpoly(f, cfg.low);
  base.a = element_flag(f, cfg.a);
  base.b = element_flag(f, cfg.b);
  base.c = element_flag(f, cfg.c);

  std::vector<FamilyParams> instances;
  if (!cfg.sweep) {
    instances.push_back(base);
  } else {
    switch (family) {
      case Family::frobenius_shift: {
        std::mt19937_64 rng(cfg.seed);
        for (unsigned i = 0; i < cfg.draws; ++i) {
          FamilyParams p = base;
          std::vector<Elem> low(code.k());
          for (auto& e : low) e = Elem{static_cast<std::uint32_t>(rng() % f.order())};
          p.low = LinPoly(std::move(low));
          instances.push_back(p);
        }
        break;
      }
      case Family::k_eq_n_minus_2:
        for (std::uint32_t a = 1; a < f.order(); ++a) {
          FamilyParams p = base;
          p.a = Elem{a};
          instances.push_back(p);
        }
        break;
      case Family::k1_odd_m:
        for (std::uint32_t c = 0; c < f.order(); ++c) {
          FamilyParams p = base;
          p.c = Elem{c};
          instances.push_back(p);
        }
        break;
      case Family::binary_quartic:
        for (std::uint32_t b = 0; b < f.order(); ++b) {
          FamilyParams p = base;
          p.b = Elem{b};
          instances.push_back(p);
        }
        break;
    }
  }

  out << "family,params,predicted,observed,agree\n";
  for (const auto& p : instances) {
    const FamilyVerdict v = family_check(code, family, p, metric, search_options(cfg));
    out << to_string(family) << ',' << csv_field(params_string(family, p)) << ','
        << to_string(v.predicted) << ','
        << (v.observed.is_deep_hole ? "deep_hole" : "not_deep_hole") << ','
        << boolstr(v.agree) << '\n';
  }
}

void cmd_quadric(const Config& cfg, std::ostream& out) {
  if (!cfg.spec.empty()) {
    // Which b admit a pair of distinct evaluation points in S(h = b).
    const GabidulinCode code = load_code(cfg);
    const Field& f = code.field();
    if (f.p() != 2 || f.s() != 1) throw Error("quadric: requires a binary field (q = 2)");
    for (std::uint32_t b = 0; b < f.order(); ++b)
      out << "b=" << b << " pair_in_points="
          << boolstr(quadric_pair_exists(f, code.points().gens(), Elem{b})) << '\n';
    return;
  }
  if (cfg.m == 0) throw UsageError("quadric needs --m or --spec");
  const Field f = Field::create(2, 1, cfg.m);
  auto report = [&](Elem b) {
    const auto census = quadric_census(f, b);
    out << "b=" << b.code << " count=" << census.count << " total=" << census.total_solutions
        << " closed_form=" << quadric_stated_count(cfg.m, b.code == 0) << '\n';
  };
  if (!cfg.b.empty()) {
    report(element_flag(f, cfg.b));
  } else {
    for (std::uint32_t b = 0; b < f.order(); ++b) report(Elem{b});
  }
}

int cmd_selftest(const Config& cfg, std::ostream& out) {
  const auto outcomes = selftest::run({cfg.seed, cfg.jobs}, [&](const selftest::Outcome& o) {
    selftest::print(out, o);
    out.flush();
  });
  std::size_t passed = 0;
  for (const auto& o : outcomes) passed += o.pass;
  out << passed << '/' << outcomes.size() << " criteria passed\n";
  return passed == outcomes.size() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Gabidulin codes, rank-metric distances and deep holes", "gab"};
  app.require_subcommand(1);

  auto add_spec = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--spec", cfg.spec, "Code spec file");
    if (required) o->required();
  };
  auto add_metric = [&](CLI::App* sub) {
    sub->add_option("--metric", cfg.metric, "rank or hamming")
        ->check(CLI::IsMember({"rank", "hamming"}))
        ->capture_default_str();
  };
  auto add_word = [&](CLI::App* sub) {
    sub->add_option("--word", cfg.word, "Word as comma-separated element codes");
    sub->add_option("--poly", cfg.poly, "Use sigma of this polynomial (coefficient codes)");
  };
  auto add_cap = [&](CLI::App* sub) {
    sub->add_option("--cap", cfg.cap, "Override the enumeration cap")
        ->check(CLI::PositiveNumber);
  };
  auto add_jobs = [&](CLI::App* sub) {
    sub->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  };
  auto add_seed = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", cfg.out, "Write output here"); };

  auto* field = app.add_subcommand("field", "Describe a field");
  add_spec(field, false);
  field->add_option("--p", cfg.p, "Characteristic");
  field->add_option("--s", cfg.s, "q = p^s")->capture_default_str();
  field->add_option("--m", cfg.m, "Extension degree over F_q");
  field->add_option("--modulus", cfg.modulus, "Modulus digits, degree 0 first");
  add_out(field);

  auto* enc = app.add_subcommand("encode", "Encode a message polynomial");
  add_spec(enc, true);
  enc->add_option("--poly", cfg.poly, "Message coefficient codes")->required();
  add_out(enc);

  auto* dist = app.add_subcommand("dist", "Distance to the code by exhaustive search");
  auto* search = app.add_subcommand("search", "Distance to the code by subspace search");
  auto* cls = app.add_subcommand("classify", "Distance and deep-hole verdict");
  for (CLI::App* sub : {dist, search, cls}) {
    add_spec(sub, true);
    add_word(sub);
    add_metric(sub);
    add_cap(sub);
    add_out(sub);
  }
  add_jobs(dist);

  auto* mind = app.add_subcommand("mindist", "Minimum distance by enumeration");
  auto* rad = app.add_subcommand("radius", "Covering radius over all translation classes");
  auto* census = app.add_subcommand("census", "CSV of every translation class");
  for (CLI::App* sub : {mind, rad, census}) {
    add_spec(sub, true);
    add_metric(sub);
    add_cap(sub);
    add_jobs(sub);
    add_out(sub);
  }

  auto* fam = app.add_subcommand("family", "Check a deep-hole family");
  add_spec(fam, true);
  fam->add_option("--kind", cfg.kind, "frobenius_shift, k_eq_n_minus_2, k1_odd_m, binary_quartic")
      ->required();
  fam->add_option("--a", cfg.a, "Element code a");
  fam->add_option("--b", cfg.b, "Element code b");
  fam->add_option("--c", cfg.c, "Element code c");
  fam->add_option("--low", cfg.low, "Low-degree part, coefficient codes");
  fam->add_flag("--sweep", cfg.sweep, "Enumerate the family parameter");
  fam->add_option("--draws", cfg.draws, "Random draws for frobenius_shift sweeps")
      ->capture_default_str();
  add_metric(fam);
  add_cap(fam);
  add_seed(fam);
  add_out(fam);

  auto* quad = app.add_subcommand("quadric", "Solutions of x1^2 + x1 x2 + x2^2 = b");
  quad->add_option("--m", cfg.m, "Extension degree of F_{2^m}");
  quad->add_option("--b", cfg.b, "Element code b (default: every b)");
  add_spec(quad, false);
  add_out(quad);

  auto* self = app.add_subcommand("selftest", "Run the acceptance criteria");
  add_seed(self);
  add_jobs(self);
  add_out(self);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    std::ofstream file;
    if (!cfg.out.empty()) {
      file.open(cfg.out);
      if (!file) throw Error("cannot open output file '" + cfg.out + "'");
    }
    std::ostream& dest = cfg.out.empty() ? out : file;
    int status = 0;
    if (field->parsed()) cmd_field(cfg, dest);
    else if (enc->parsed()) cmd_encode(cfg, dest);
    else if (dist->parsed()) cmd_dist(cfg, dest);
    else if (search->parsed()) cmd_search(cfg, dest);
    else if (cls->parsed()) cmd_classify(cfg, dest);
    else if (mind->parsed()) cmd_mindist(cfg, dest);
    else if (rad->parsed()) cmd_radius(cfg, dest);
    else if (census->parsed()) cmd_census(cfg, dest);
    else if (fam->parsed()) cmd_family(cfg, dest);
    else if (quad->parsed()) cmd_quadric(cfg, dest);
    else if (self->parsed()) status = cmd_selftest(cfg, dest);
    dest.flush();
    return status;
  } catch (const UsageError& e) {
    err << "gab: " << e.what() << '\n';
    return 2;
  } catch (const CapExceeded& e) {
    err << "gab: " << e.what() << " (raise it with --cap)\n";
    return 1;
  } catch (const std::exception& e) {
    err << "gab: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace gablab::cli
