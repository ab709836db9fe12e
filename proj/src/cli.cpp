#include "tropcomm/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "tropcomm/commuting.hpp"
#include "tropcomm/errors.hpp"
#include "tropcomm/fan.hpp"
#include "tropcomm/matrix_io.hpp"
#include "tropcomm/polytrope.hpp"
#include "tropcomm/series.hpp"

namespace tropcomm::cli {

namespace {

using nlohmann::json;

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string entry(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

json entry_json(std::size_t i, std::size_t j) { return json::array({i + 1, j + 1}); }

std::string show(const TropScalar& s) { return s.to_display_string(); }

MatrixPair read_pair(const std::string& path) { return pair_from_json(read_json_file(path)); }

json witness_json(const EntryWitness& w) {
  return {{"entry", entry_json(w.row, w.col)}, {"lhs", w.lhs.to_fraction_string()}, {"rhs", w.rhs.to_fraction_string()}};
}

json poly_json(const SparsePoly& p, const VariableLayout& layout) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back({{"coefficient", c}, {"monomial", format_monomial(m, layout)}});
  return terms;
}

json certificate_json(const NonMembershipCertificate& c, const VariableLayout& layout) {
  json cof = json::array();
  for (const auto& f : c.element.cofactors)
    cof.push_back({{"entry", entry_json(f.row, f.col)}, {"multiplier", format_poly(f.multiplier, layout)}});
  return {{"family", c.family},
          {"polynomial", poly_json(c.element.poly, layout)},
          {"cofactors", cof},
          {"min_term", format_monomial(c.unique_min_monomial, layout)},
          {"min_value", to_fraction_string(c.min_value)},
          {"runner_up_value", to_fraction_string(c.runner_up_value)}};
}

std::string condition(bool ok, const std::optional<EntryWitness>& w) {
  if (ok || !w) return yes_no(ok);
  return "no " + entry(w->row, w->col);
}

// --- check -------------------------------------------------------------------

struct PairReport {
  json data;
  std::string text;
};

PairReport pair_report(const TropMatrix& a, const TropMatrix& b, unsigned slice_degree) {
  if (a.size() != b.size()) throw SizeMismatch("A and B differ in size");
  const std::size_t n = a.size();
  const auto layout = VariableLayout::full(n);
  std::ostringstream t;
  json j;
  j["n"] = n;
  t << "n: " << n << "\n";

  const auto cw = commutator_witness(a, b);
  if (n == 2 || n == 3) {
    RegionLabel label = classify_pair(a, b);
    if (n == 3 && !label.certificate && slice_degree > 0) {
      label.certificate = certify_by_slices(a, b, slice_degree);
      if (label.certificate) label.tc = TCStatus::CertifiedOut;
    }
    j["TS"] = label.in_ts;
    j["Tpre"] = label.in_tpre;
    t << "TS: " << yes_no(label.in_ts) << ", Tpre: " << yes_no(label.in_tpre) << ", ";
    if (n == 2) {
      const bool member = label.tc == TCStatus::Member;
      j["TC2"] = member;
      t << "TC2: " << yes_no(member) << "\n";
    } else {
      j["TC3"] = to_string(label.tc);
      t << "TC3: " << to_string(label.tc);
      if (label.certificate) t << " (" << format_monomial(label.certificate->unique_min_monomial, layout) << ")";
      t << "\n";
    }
    json failures = json::array();
    if (!label.tpre_report.failures.empty()) {
      t << "Tpre failures:";
      for (const auto& [r, c] : label.tpre_report.failures) {
        t << " " << entry(r, c);
        failures.push_back(entry_json(r, c));
      }
      t << "\n";
    }
    j["tpre_failures"] = failures;
    if (label.certificate) {
      const auto& c = *label.certificate;
      t << "certificate: " << c.family << ", min " << to_display_string(c.min_value) << ", runner-up "
        << to_display_string(c.runner_up_value) << "\n";
      j["certificate"] = certificate_json(c, layout);
    }
  } else {
    j["TS"] = !cw;
    t << "TS: " << yes_no(!cw) << "\n";
  }
  if (cw) {
    t << "commute failure " << entry(cw->row, cw->col) << ": " << show(cw->lhs) << " vs " << show(cw->rhs) << "\n";
    j["commute_failure"] = witness_json(*cw);
  }

  const bool polytropes = is_polytrope(a) && is_polytrope(b);
  t << "polytropes: " << yes_no(polytropes) << "\n";
  j["polytropes"] = polytropes;
  if (polytropes) {
    const CommutClassification c = classify_polytrope_pair(a, b);
    t << "commutes: " << condition(c.commutes, c.commute_failure)
      << ", star-condition: " << condition(c.star_condition, c.star_failure)
      << ", square-condition: " << condition(c.square_condition, c.square_failure)
      << ", product-condition: " << condition(c.product_condition, c.product_failure) << "\n";
    json cj = {{"commutes", c.commutes},
               {"star_condition", c.star_condition},
               {"square_condition", c.square_condition},
               {"product_condition", c.product_condition}};
    auto detail = [&](const char* name, const std::optional<EntryWitness>& w) {
      if (!w) return;
      t << name << " witness " << entry(w->row, w->col) << ": " << show(w->lhs) << " vs " << show(w->rhs) << "\n";
      cj[std::string(name) + "_failure"] = witness_json(*w);
    };
    detail("commute", c.commute_failure);
    detail("star", c.star_failure);
    detail("square", c.square_failure);
    detail("product", c.product_failure);
    if (c.witness_entry) cj["witness_entry"] = entry_json(c.witness_entry->row, c.witness_entry->col);
    j["polytrope"] = cj;
  }
  return {j, t.str()};
}

// --- fan ---------------------------------------------------------------------

struct FanInput {
  std::string name;
  std::vector<SparsePoly> gens;
  std::size_t dim = 0;
  std::optional<VariableLayout> layout;
};

FanInput fan_input(const std::string& spec) {
  auto named = [&](const std::string& prefix) -> std::optional<std::size_t> {
    if (spec.rfind(prefix, 0) != 0) return std::nullopt;
    const std::string rest = spec.substr(prefix.size());
    if (rest.empty() || !std::all_of(rest.begin(), rest.end(), ::isdigit)) throw ParseError("bad size in '" + spec + "'");
    return std::stoul(rest);
  };
  FanInput in;
  in.name = spec;
  std::optional<VariableLayout> layout;
  if (auto n = named("commuting:n=")) {
    if (*n < 2 || *n > 6) throw UnsupportedSize("commuting configurations need 2 <= n <= 6");
    layout = VariableLayout::full(*n);
  } else if (auto n2 = named("symmetric:n=")) {
    if (*n2 < 2 || *n2 > 6) throw UnsupportedSize("symmetric configurations need 2 <= n <= 6");
    layout = VariableLayout::symmetric(*n2);
  }
  if (layout) {
    for (auto& g : distinct_generators(*layout)) in.gens.push_back(std::move(g.poly));
    in.dim = layout->dimension();
    in.layout = layout;
    return in;
  }
  // polynomial file: {"dimension": D, "polynomials": [[{"coefficient": c, "exponents": [...]}, ...], ...]}
  const json j = read_json_file(spec);
  try {
    in.dim = j.at("dimension").get<std::size_t>();
    for (const auto& p : j.at("polynomials")) {
      SparsePoly poly;
      for (const auto& term : p) {
        const auto e = term.at("exponents").get<std::vector<unsigned>>();
        if (e.size() != in.dim) throw ParseError("exponent vector length differs from dimension");
        std::vector<std::pair<VarId, unsigned>> factors;
        for (std::size_t v = 0; v < e.size(); ++v) factors.emplace_back(static_cast<VarId>(v), e[v]);
        poly.add_term(Monomial::from_factors(std::move(factors)), term.at("coefficient").get<long long>());
      }
      if (poly.is_zero()) throw EmptyPolynomial("zero polynomial in '" + spec + "'");
      in.gens.push_back(std::move(poly));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed polynomial file: ") + e.what());
  }
  return in;
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv(kBudgetEnv)) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ParseError(std::string(kBudgetEnv) + " is not a number");
    }
  }
  return 1000000;
}

std::string join_counts(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + ")";
}

std::string join_counts64(const std::vector<std::uint64_t>& v) {
  std::vector<std::size_t> w(v.begin(), v.end());
  return join_counts(w);
}

std::string pattern_string(const ArgminPattern& p) {
  std::string s;
  for (const auto& subset : p.subsets) {
    s += s.empty() ? "[" : " [";
    for (std::size_t i = 0; i < subset.size(); ++i) s += (i ? "," : "") + std::to_string(subset[i] + 1);
    s += "]";
  }
  return s;
}

// --- sample ------------------------------------------------------------------

enum class Region { CertifiedOut, TsMinusTpre, TpreMinusTs, TsAndTpre, Unknown };

Region parse_region(const std::string& s) {
  if (s == "certified-out") return Region::CertifiedOut;
  if (s == "ts-minus-tpre") return Region::TsMinusTpre;
  if (s == "tpre-minus-ts") return Region::TpreMinusTs;
  if (s == "ts-and-tpre") return Region::TsAndTpre;
  if (s == "unknown") return Region::Unknown;
  throw ParseError("unknown region '" + s + "'");
}

bool in_region(Region r, const RegionLabel& l) {
  switch (r) {
    case Region::CertifiedOut: return l.in_ts && l.in_tpre && l.tc == TCStatus::CertifiedOut;
    case Region::TsMinusTpre: return l.in_ts && !l.in_tpre;
    case Region::TpreMinusTs: return l.in_tpre && !l.in_ts;
    case Region::TsAndTpre: return l.in_ts && l.in_tpre;
    case Region::Unknown: return l.in_ts && l.in_tpre && l.tc == TCStatus::Unknown;
  }
  return false;
}

TropMatrix draw_premetric(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> k(1, 1000);
  TropMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = i == j ? TropScalar(0) : TropScalar(Rational(k(rng), 100));
  return m;
}

TropMatrix draw_integer(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> k(0, 4);
  TropMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = TropScalar(k(rng));
  return m;
}

// --- lift files ----------------------------------------------------------------

SeriesMatrix series_matrix_from_json(const json& j) {
  std::vector<std::vector<SeriesPoly>> rows;
  for (const auto& row : j) {
    std::vector<SeriesPoly> r;
    for (const auto& e : row) {
      if (e.is_string()) {
        r.push_back(SeriesPoly::parse(e.get<std::string>()));
      } else if (e.is_number_integer()) {
        r.emplace_back(Rational(e.get<long>()));
      } else {
        throw ParseError("series entries must be strings or integers");
      }
    }
    rows.push_back(std::move(r));
  }
  return SeriesMatrix::from_rows(rows);
}

json series_matrix_json(const SeriesMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(format_series(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

std::string series_matrix_text(const SeriesMatrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < m.size(); ++j) s += (j ? ", " : "") + format_series(m(i, j));
    s += "]";
  }
  return s + "]";
}

std::vector<TropMatrix> svg_inputs(const std::vector<std::string>& paths) {
  std::vector<TropMatrix> out;
  for (const auto& p : paths) {
    const json j = read_json_file(p);
    if (j.is_object() && j.contains("A")) {
      const MatrixPair pair = pair_from_json(j);
      out.push_back(pair.a);
      out.push_back(pair.b);
    } else {
      out.push_back(matrix_from_json(j));
    }
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact tropical commuting-matrix toolkit", "tropcomm"};
  app.require_subcommand(1);

  bool as_json = false;
  std::string path;
  unsigned slice_degree = 0;

  auto* check = app.add_subcommand("check", "Classify a matrix pair");
  check->add_option("pair", path, "Pair file {n, A, B}")->required();
  check->add_option("--slice-degree", slice_degree, "Also search ideal slices up to this total degree (n = 3)");
  check->add_flag("--json", as_json, "JSON output");

  std::string fan_spec;
  std::optional<std::uint64_t> budget;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  bool emit_cells = false;
  bool orbits = false;
  auto* fan = app.add_subcommand("fan", "Prevariety complex of a generator set");
  fan->add_option("config", fan_spec, "commuting:n=2, commuting:n=3, symmetric:n=3, or a polynomial file")->required();
  fan->add_option("--budget", budget, std::string("Candidate pattern budget (default $") + kBudgetEnv + " or 1000000)");
  fan->add_option("--threads", threads, "Worker threads");
  fan->add_flag("--cells", emit_cells, "List every cell");
  fan->add_flag("--orbits", orbits, "Orbits of top-dimensional cells");
  fan->add_flag("--json", as_json, "JSON output");

  std::string region_name;
  std::size_t sample_n = 3;
  std::uint64_t seed = 1;
  std::uint64_t max_draws = 100000;
  std::string dist = "auto";
  auto* sample = app.add_subcommand("sample", "Random search for a pair in a region");
  sample->add_option("--region", region_name, "certified-out | ts-minus-tpre | tpre-minus-ts | ts-and-tpre | unknown")
      ->required();
  sample->add_option("--n", sample_n, "Matrix size (2 or 3)");
  sample->add_option("--seed", seed, "RNG seed");
  sample->add_option("--max-draws", max_draws, "Draw limit");
  sample->add_option("--dist", dist, "auto | premetric | integer");
  sample->add_flag("--json", as_json, "JSON output");

  auto* star = app.add_subcommand("star", "Kleene star of a matrix");
  star->add_option("matrix", path, "Matrix file {n, entries}")->required();

  std::size_t gens_n = 2;
  bool symmetric = false;
  auto* gens = app.add_subcommand("gens", "Entries of XY - YX");
  gens->add_option("--n", gens_n, "Matrix size");
  gens->add_flag("--symmetric", symmetric, "Symmetric matrices");

  auto* certify = app.add_subcommand("certify", "Non-membership certificate for a 3x3 pair");
  certify->add_option("pair", path, "Pair file")->required();
  certify->add_option("--slice-degree", slice_degree, "Fall back to ideal slices up to this total degree");
  certify->add_flag("--json", as_json, "JSON output");

  auto* lift = app.add_subcommand("lift", "Search a commuting Puiseux lift of a 2x2 pair");
  lift->add_option("pair", path, "Pair file")->required();
  lift->add_flag("--json", as_json, "JSON output");

  auto* lift_verify = app.add_subcommand("lift-verify", "Check a lift file {A, B, X, Y}");
  lift_verify->add_option("lift", path, "Lift file")->required();

  std::vector<std::string> svg_paths;
  std::string output;
  auto* svg = app.add_subcommand("svg", "Draw images of 3x3 polytropes");
  svg->add_option("inputs", svg_paths, "Matrix or pair files")->required();
  svg->add_option("-o,--output", output, "Output path (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kParseError;
  }

  try {
    if (check->parsed()) {
      const MatrixPair pair = read_pair(path);
      const PairReport r = pair_report(pair.a, pair.b, slice_degree);
      if (as_json) {
        out << r.data.dump(2) << "\n";
      } else {
        out << r.text;
      }
      return kOk;
    }

    if (fan->parsed()) {
      const FanInput in = fan_input(fan_spec);
      EnumerationOptions opt;
      opt.budget = budget ? *budget : default_budget();
      opt.threads = threads;
      std::vector<Cell> cells;
      try {
        cells = enumerate_cells(in.gens, in.dim, opt);
      } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        for (const auto& ref : reference_f_vectors()) {
          if (ref.name == in.name) {
            err << "reference f-vector (not recomputed): lineality " << ref.lineality_dim << ", "
                << join_counts64(ref.counts) << "\n";
          }
        }
        err << "rerun with --budget " << e.candidates() << " to enumerate anyway\n";
        return kBudget;
      }
      const LinealitySpace lin = lineality_space(in.gens, in.dim);
      const FVector f = f_vector(cells, lin.dim);
      std::vector<CellOrbit> orbit_list;
      if (orbits) {
        if (!in.layout) throw UnsupportedSize("--orbits needs a named configuration");
        orbit_list = maximal_cell_orbits(cells, in.gens, *in.layout);
      }
      auto monomial_name = [&](const Monomial& m) {
        if (in.layout) return format_monomial(m, *in.layout);
        std::string s;
        for (const auto& [v, e] : m.factors())
          s += (s.empty() ? "w" : "*w") + std::to_string(v + 1) + (e > 1 ? "^" + std::to_string(e) : "");
        return s;
      };
      if (as_json) {
        json j = {{"configuration", in.name},
                  {"dimension", in.dim},
                  {"generators", in.gens.size()},
                  {"lineality_dim", f.lineality_dim},
                  {"f_vector", f.counts}};
        if (emit_cells) {
          json cj = json::array();
          for (const auto& c : cells) {
            json w = json::array();
            for (const auto& x : c.witness) w.push_back(to_fraction_string(x));
            cj.push_back({{"dim", c.dim}, {"pattern", c.pattern.subsets}, {"witness", w}});
          }
          j["cells"] = cj;
        }
        if (orbits) {
          json oj = json::array();
          for (const auto& o : orbit_list) {
            json ties = json::array();
            for (const auto& t : o.tie_terms) {
              json tt = json::array();
              for (const auto& m : t) tt.push_back(monomial_name(m));
              ties.push_back(tt);
            }
            oj.push_back({{"size", o.members.size()}, {"members", o.members}, {"tie_terms", ties}});
          }
          j["orbits"] = oj;
        }
        out << j.dump(2) << "\n";
        return kOk;
      }
      out << "configuration: " << in.name << "\n"
          << "dimension: " << in.dim << "\n"
          << "generators: " << in.gens.size() << "\n"
          << "lineality: " << f.lineality_dim << "\n"
          << "f-vector: " << join_counts(f.counts) << "\n"
          << "cells: " << cells.size() << "\n";
      if (emit_cells) {
        for (const auto& c : cells) {
          out << "cell dim " << c.dim << " pattern " << pattern_string(c.pattern) << " witness (";
          for (std::size_t i = 0; i < c.witness.size(); ++i) out << (i ? ", " : "") << to_fraction_string(c.witness[i]);
          out << ")\n";
        }
      }
      for (const auto& o : orbit_list) {
        out << "orbit size " << o.members.size() << ":";
        for (const auto& t : o.tie_terms) {
          out << " {";
          for (std::size_t i = 0; i < t.size(); ++i) out << (i ? ", " : "") << monomial_name(t[i]);
          out << "}";
        }
        out << "\n";
      }
      return kOk;
    }

    if (sample->parsed()) {
      const Region region = parse_region(region_name);
      if (sample_n != 2 && sample_n != 3) throw UnsupportedSize("sampling supports n = 2 and n = 3");
      if (dist != "auto" && dist != "premetric" && dist != "integer") throw ParseError("unknown distribution '" + dist + "'");
      const bool premetric = dist == "premetric" || (dist == "auto" && region == Region::TsMinusTpre);
      std::mt19937_64 rng(seed);
      for (std::uint64_t draw = 1; draw <= max_draws; ++draw) {
        TropMatrix a = premetric ? draw_premetric(sample_n, rng) : draw_integer(sample_n, rng);
        TropMatrix b = premetric ? draw_premetric(sample_n, rng) : draw_integer(sample_n, rng);
        if (!in_region(region, classify_pair(a, b))) continue;
        const PairReport r = pair_report(a, b, 0);
        if (as_json) {
          json j = {{"region", region_name}, {"seed", seed}, {"draws", draw}, {"pair", pair_to_json({a, b})},
                    {"report", r.data}};
          out << j.dump(2) << "\n";
        } else {
          out << "region: " << region_name << "\n"
              << "seed: " << seed << ", draws: " << draw << ", distribution: " << (premetric ? "premetric" : "integer")
              << "\n"
              << "A: " << format_matrix(a) << "\n"
              << "B: " << format_matrix(b) << "\n"
              << r.text;
        }
        return kOk;
      }
      err << "error: no pair in region " << region_name << " after " << max_draws << " draws\n";
      return kExhausted;
    }

    if (star->parsed()) {
      const TropMatrix m = matrix_from_json(read_json_file(path));
      out << matrix_to_json(kleene_star(m)).dump() << "\n";
      return kOk;
    }

    if (gens->parsed()) {
      if (gens_n < 2 || gens_n > 9) throw UnsupportedSize("gens supports 2 <= n <= 9");
      const VariableLayout layout = symmetric ? VariableLayout::symmetric(gens_n) : VariableLayout::full(gens_n);
      for (const auto& g : distinct_generators(layout)) {
        out << "g" << g.row + 1 << g.col + 1 << " = " << format_poly(g.poly, layout) << "\n";
      }
      return kOk;
    }

    if (certify->parsed()) {
      const MatrixPair pair = read_pair(path);
      if (pair.a.size() != 3) throw UnsupportedSize("certificates are implemented for 3x3 pairs");
      auto cert = certify_not_in_TC3(pair.a, pair.b);
      if (!cert && slice_degree > 0) cert = certify_by_slices(pair.a, pair.b, slice_degree);
      const auto layout = VariableLayout::full(3);
      if (as_json) {
        out << (cert ? certificate_json(*cert, layout) : json{{"certificate", nullptr}}).dump(2) << "\n";
        return kOk;
      }
      if (!cert) {
        out << "no certificate: status unknown\n";
        return kOk;
      }
      out << "family: " << cert->family << "\n"
          << "polynomial: " << format_poly(cert->element.poly, layout) << "\n"
          << "min term: " << format_monomial(cert->unique_min_monomial, layout) << "\n"
          << "min value: " << to_display_string(cert->min_value) << "\n"
          << "runner-up value: " << to_display_string(cert->runner_up_value) << "\n";
      return kOk;
    }

    if (lift->parsed()) {
      const MatrixPair pair = read_pair(path);
      const auto found = lift_2x2(pair.a, pair.b);
      if (!found) {
        err << "error: no lift found within the search bounds\n";
        return kExhausted;
      }
      if (as_json) {
        json j = pair_to_json(pair);
        j["X"] = series_matrix_json(found->first);
        j["Y"] = series_matrix_json(found->second);
        out << j.dump(2) << "\n";
      } else {
        out << "X: " << series_matrix_text(found->first) << "\n"
            << "Y: " << series_matrix_text(found->second) << "\n"
            << "VERIFIED\n";
      }
      return kOk;
    }

    if (lift_verify->parsed()) {
      const json j = read_json_file(path);
      MatrixPair pair;
      SeriesMatrix x(0), y(0);
      try {
        pair = pair_from_json(j);
        x = series_matrix_from_json(j.at("X"));
        y = series_matrix_from_json(j.at("Y"));
      } catch (const json::exception& e) {
        throw ParseError(std::string("malformed lift file: ") + e.what());
      }
      const LiftReport r = verify_lift(x, y, pair.a, pair.b);
      if (r.verified) {
        out << "VERIFIED\n";
        return kOk;
      }
      out << "FAILED\n";
      if (r.product_entry) {
        out << "XY and YX differ at " << entry(r.product_entry->first, r.product_entry->second)
            << ": XY = " << format_series(*r.xy_value) << ", YX = " << format_series(*r.yx_value) << "\n";
      }
      if (r.x_valuation_entry) {
        out << "val(X) differs from A at " << entry(r.x_valuation_entry->first, r.x_valuation_entry->second) << "\n";
      }
      if (r.y_valuation_entry) {
        out << "val(Y) differs from B at " << entry(r.y_valuation_entry->first, r.y_valuation_entry->second) << "\n";
      }
      return kFailure;
    }

    if (svg->parsed()) {
      const auto mats = svg_inputs(svg_paths);
      if (output.empty()) {
        render_polytrope_svg(mats, out);
      } else {
        render_polytrope_svg(mats, output);
        out << "wrote " << output << "\n";
      }
      return kOk;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const json::exception& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const UnsupportedSize& e) {
    err << "unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kFailure;
  }
  return kOk;
}

}  // namespace tropcomm::cli
