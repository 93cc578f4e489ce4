#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "core_entropy/angle.hpp"
#include "core_entropy/entropy.hpp"
#include "core_entropy/errors.hpp"
#include "core_entropy/families.hpp"
#include "core_entropy/galois.hpp"
#include "core_entropy/kneading_det.hpp"
#include "core_entropy/symbolic.hpp"
#include "core_entropy/transition.hpp"

namespace core_entropy::cli {

namespace {

using json = nlohmann::ordered_json;

std::string fmt9(double v) {
  if (v == 0) v = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

// JSON numbers carry the same 9 significant digits as the text output.
double round9(double v) { return std::stod(fmt9(v)); }

// Angles above 1/2 share kneading data with their mirror image.
Angle lower_half(const Angle& a) { return a.circle_norm(); }

void print_kv(std::ostream& out, const std::string& key, const std::string& value) {
  out << key << ' ' << value << '\n';
}

// Output sink: the named file, or `fallback` when the path is empty.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : out_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw DomainError("cannot open output file: " + path);
      out_ = &file_;
    }
  }
  std::ostream& stream() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

struct EntropyArgs {
  std::string angle;
  std::string method = "pair-matrix";
  double tol = 1e-10;
  std::size_t terms = 200;
  std::size_t depth = 20;
  bool json = false;
};

void cmd_entropy(const EntropyArgs& a, std::ostream& out) {
  const Angle theta = parse_angle(a.angle);
  json j;
  j["theta"] = theta.to_string();
  j["method"] = a.method;
  double lambda = 1.0;
  double dimension = 0.0;

  if (a.method == "pair-matrix") {
    GrowthOptions opt;
    opt.tol = a.tol;
    const EntropyReport r = core_entropy(theta, opt);
    lambda = r.lambda;
    dimension = r.dimension;
    j["lambda"] = round9(r.lambda);
    j["entropy"] = round9(r.entropy);
    j["dimension"] = round9(r.dimension);
    j["preperiod"] = r.orbit.preperiod;
    j["period"] = r.orbit.period;
    j["matrix_dim"] = r.matrix_dim;
    j["growth"] = to_string(r.method);
    j["iterations"] = r.iterations;
  } else if (a.method == "kneading" || a.method == "subshift") {
    if (!theta.is_zero()) {
      const Angle t = lower_half(theta);
      if (!is_real_angle(t))
        throw DomainError(theta.to_string() + " is not real-admissible; method " + a.method +
                          " does not apply");
      if (a.method == "kneading") {
        lambda = kneading_lambda(t, a.terms).lambda;
        dimension = std::log2(lambda);
        j["terms"] = a.terms;
      } else {
        dimension = dimension_estimate_real(t, a.depth);
        lambda = std::exp2(dimension);
        j["depth"] = a.depth;
      }
    }
    j["lambda"] = round9(lambda);
    j["entropy"] = round9(dimension * std::log(2.0));
    j["dimension"] = round9(dimension);
  } else {
    throw ParseError("unknown method: " + a.method);
  }

  if (a.json) {
    out << j.dump(2) << '\n';
    return;
  }
  for (const auto& [key, value] : j.items()) {
    if (value.is_string()) {
      print_kv(out, key, value.get<std::string>());
    } else if (value.is_number_float()) {
      print_kv(out, key, fmt9(value.get<double>()));
    } else {
      print_kv(out, key, value.dump());
    }
  }
}

struct GraphArgs {
  std::string lo, hi, out;
  std::size_t depth = 0;
};

void cmd_graph(const GraphArgs& a, std::ostream& out) {
  const Angle lo = parse_angle(a.lo);
  const Angle hi = parse_angle(a.hi);
  const auto rows = graph_samples(lo, hi, a.depth);
  Sink sink(a.out, out);
  write_graph_csv(sink.stream(), rows);
}

struct MatrixArgs {
  std::string angle;
  bool dump = false;
  bool charpoly = false;
};

void cmd_matrix(const MatrixArgs& a, std::ostream& out) {
  const Angle theta = parse_angle(a.angle);
  const PairMatrix pm = build_pair_matrix(theta);
  const DominantComponent dc = dominant_component(pm);
  print_kv(out, "theta", theta.to_string());
  print_kv(out, "preperiod", std::to_string(pm.basis.orbit.preperiod));
  print_kv(out, "period", std::to_string(pm.basis.orbit.period));
  print_kv(out, "points", std::to_string(pm.basis.points()));
  print_kv(out, "matrix_dim", std::to_string(pm.dim()));
  print_kv(out, "lambda", fmt9(dc.growth.lambda));
  print_kv(out, "growth", to_string(dc.growth.method));
  print_kv(out, "dominant_size", std::to_string(dc.vertices.size()));
  print_kv(out, "cyclic_index", std::to_string(dc.cyclic_index));
  print_kv(out, "primitive", dc.primitive ? "true" : "false");
  std::string block;
  for (auto v : dc.vertices) block += (block.empty() ? "" : " ") + pm.basis.label(v);
  print_kv(out, "dominant_block", block);
  if (a.charpoly) print_kv(out, "charpoly", char_poly(pm.matrix).to_string());
  if (a.dump) dump(pm, out);
}

struct FamilyArgs {
  std::string name;
  int q = 0;
  int n = 0;
  std::string fit;
};

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw ParseError("range must look like LO..HI: " + text);
  try {
    std::size_t used = 0;
    const std::string lo_text = text.substr(0, dots);
    const std::string hi_text = text.substr(dots + 2);
    const int lo = std::stoi(lo_text, &used);
    if (used != lo_text.size()) throw ParseError("bad range: " + text);
    const int hi = std::stoi(hi_text, &used);
    if (used != hi_text.size()) throw ParseError("bad range: " + text);
    if (lo > hi) throw ParseError("empty range: " + text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw ParseError("bad range: " + text);
  }
}

void cmd_family(const FamilyArgs& a, std::ostream& out) {
  const Family f = parse_family(a.name);
  if (!a.fit.empty()) {
    const auto [lo, hi] = parse_range(a.fit);
    const AsymptoticsFit fit = fit_asymptotics(f, a.q, lo, hi);
    json j;
    j["family"] = family_name(f);
    if (uses_q(f)) j["q"] = a.q;
    j["n_lo"] = lo;
    j["n_hi"] = hi;
    j["count"] = fit.indices.size();
    j["lambda0"] = round9(fit.lambda0);
    j["K"] = round9(fit.K);
    j["drift"] = round9(fit.drift);
    j["sign"] = fit.sign;
    out << j.dump(2) << '\n';
    return;
  }
  const FamilySpec spec{f, a.q, a.n};
  print_kv(out, "family", family_name(f));
  if (uses_q(f)) print_kv(out, "q", std::to_string(a.q));
  if (uses_n(f)) print_kv(out, "n", std::to_string(a.n));
  print_kv(out, "polynomial", family_polynomial(spec).to_string());
  print_kv(out, "root", fmt9(family_growth(spec)));
}

struct TuneArgs {
  std::string minus, plus, angle;
};

void cmd_tune(const TuneArgs& a, std::ostream& out) {
  const Angle result = tune_angle(a.minus, a.plus, parse_angle(a.angle));
  print_kv(out, "angle", result.to_string());
  print_kv(out, "binary", render_binary(to_binary(result)));
}

struct KneadArgs {
  std::string angle;
  std::size_t terms = 200;
  bool allow_unsupported = false;
};

void cmd_knead(const KneadArgs& a, std::ostream& out) {
  const Angle theta = parse_angle(a.angle);
  if (theta.is_zero()) throw DomainError("kneading data undefined for theta = 0");
  const Angle t = lower_half(theta);
  if (!is_real_angle(t) && !a.allow_unsupported)
    throw DomainError(theta.to_string() + " is not real-admissible");
  const KneadingResult r = kneading_lambda(t, a.terms);
  print_kv(out, "theta", theta.to_string());
  print_kv(out, "kneading", r.nu.render());
  print_kv(out, "regime", r.supported ? "real" : "unsupported");
  std::string signs;
  for (int s : r.signs) signs.push_back(s > 0 ? '+' : '-');
  print_kv(out, "signs", signs);
  print_kv(out, "t_star", r.has_root ? fmt9(r.t_star) : "none");
  print_kv(out, "lambda", fmt9(r.lambda));
}

struct GaloisArgs {
  std::string set, out;
  int max_degree = 0;
  double tol = 1e-10;
};

void cmd_galois(const GaloisArgs& a, std::ostream& out) {
  const auto cloud = root_cloud(parse_poly_set(a.set), a.max_degree, a.tol);
  Sink sink(a.out, out);
  write_cloud_csv(sink.stream(), cloud);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Core entropy and biaccessibility dimension from external angles", "core-entropy"};
  app.require_subcommand(1);

  EntropyArgs entropy_args;
  auto* entropy = app.add_subcommand("entropy", "lambda, entropy and dimension of an angle");
  entropy->add_option("angle", entropy_args.angle, "p/q or 0b.BITS(BITS)")->required();
  entropy->add_option("--method", entropy_args.method, "pair-matrix | kneading | subshift")
      ->check(CLI::IsMember({"pair-matrix", "kneading", "subshift"}));
  entropy->add_option("--tol", entropy_args.tol, "growth-rate tolerance")->check(CLI::PositiveNumber);
  entropy->add_option("--terms", entropy_args.terms, "kneading series terms")->check(CLI::Range(2, 100000));
  entropy->add_option("--depth", entropy_args.depth, "subshift depth")->check(CLI::Range(1, 40));
  entropy->add_flag("--json", entropy_args.json, "emit JSON");

  GraphArgs graph_args;
  auto* graph = app.add_subcommand("graph", "sample lambda on a dyadic grid (CSV)");
  graph->add_option("lo", graph_args.lo)->required();
  graph->add_option("hi", graph_args.hi)->required();
  graph->add_option("--depth", graph_args.depth, "grid spacing 2^-(depth+1)")->required();
  graph->add_option("--out", graph_args.out, "output file (default stdout)");

  MatrixArgs matrix_args;
  auto* matrix = app.add_subcommand("matrix", "pair transition matrix of an angle");
  matrix->add_option("angle", matrix_args.angle)->required();
  matrix->add_flag("--dump", matrix_args.dump, "print basis and columns");
  matrix->add_flag("--charpoly", matrix_args.charpoly, "exact characteristic polynomial (dim <= 64)");

  FamilyArgs family_args;
  auto* family = app.add_subcommand("family", "closed-form polynomial families");
  family->add_option("name", family_args.name)->required();
  family->add_option("--q", family_args.q);
  family->add_option("--n", family_args.n);
  family->add_option("--fit", family_args.fit, "fit asymptotics over LO..HI");

  TuneArgs tune_args;
  auto* tune = app.add_subcommand("tune", "binary digit substitution 0 -> W-, 1 -> W+");
  tune->add_option("wminus", tune_args.minus)->required();
  tune->add_option("wplus", tune_args.plus)->required();
  tune->add_option("angle", tune_args.angle)->required();

  KneadArgs knead_args;
  auto* knead = app.add_subcommand("knead", "kneading sequence and determinant root");
  knead->add_option("angle", knead_args.angle)->required();
  knead->add_option("--terms", knead_args.terms)->check(CLI::Range(2, 100000));
  knead->add_flag("--allow-unsupported", knead_args.allow_unsupported,
                  "also evaluate angles that are not real-admissible");

  GaloisArgs galois_args;
  auto* galois = app.add_subcommand("galois", "root clouds of M0 / M1 / M2 (CSV)");
  galois->add_option("set", galois_args.set, "m0 | m1 | m2")->required();
  galois->add_option("--max-degree", galois_args.max_degree, "degree bound (period for m2)")->required();
  galois->add_option("--tol", galois_args.tol)->check(CLI::PositiveNumber);
  galois->add_option("--out", galois_args.out, "output file (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (entropy->parsed()) cmd_entropy(entropy_args, out);
    else if (graph->parsed()) cmd_graph(graph_args, out);
    else if (matrix->parsed()) cmd_matrix(matrix_args, out);
    else if (family->parsed()) cmd_family(family_args, out);
    else if (tune->parsed()) cmd_tune(tune_args, out);
    else if (knead->parsed()) cmd_knead(knead_args, out);
    else if (galois->parsed()) cmd_galois(galois_args, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << " (bracket [" << fmt9(e.lower()) << ", " << fmt9(e.upper())
        << "])\n";
    return kConvergence;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  }
  return kOk;
}

}  // namespace core_entropy::cli
