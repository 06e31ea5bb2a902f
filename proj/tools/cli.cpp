#include "cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "urt/embed.hpp"
#include "urt/errors.hpp"
#include "urt/generators.hpp"
#include "urt/graph_io.hpp"
#include "urt/hyperbolic.hpp"
#include "urt/stats.hpp"

namespace urtlab {

using nlohmann::json;
using namespace urt;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t at = s.find(sep, start);
    out.push_back(s.substr(start, at - start));
    if (at == std::string::npos) break;
    start = at + 1;
  }
  return out;
}

int to_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError("bad integer '" + s + "' in " + what);
}

double to_real(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError("bad number '" + s + "' in " + what);
}

json num(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

struct RunConfig {
  std::string subcommand;
  std::string fixture = "canopy";
  int d = 0;  // 0: use the fixture itself
  int radius = 1;
  long n = 100000;
  std::uint64_t seed = 1;
  double quantization = 0.0;
  double threshold = 0.0;
  std::string calibration = "bootstrap";
  int replicates = 100;
  bool iid_marks = false;
  std::string mass = "one";
  std::string family = "star";
  std::vector<int> sizes;
  int r = 1;
  int M = 3;
  double epsilon = 0.01;
  std::string target;
  int count = 1;
  bool whole = false;
  std::string emit = "rho";
  int qmax = 3;
  double delta = std::numbers::ln2;
  double keep = 1.0;
  bool isometry = false;
  std::string out = "-";
  std::string json_out = "-";
  std::string csv_out;
  std::vector<std::string> streams;

  json to_json() const {
    return json{{"subcommand", subcommand},
                {"fixture", fixture},
                {"d", d},
                {"radius", radius},
                {"n", n},
                {"seed", seed},
                {"quantization", quantization},
                {"threshold", threshold},
                {"calibration", calibration},
                {"replicates", replicates},
                {"iid_marks", iid_marks},
                {"mass", mass},
                {"family", family},
                {"sizes", sizes},
                {"r", r},
                {"M", M},
                {"epsilon", epsilon},
                {"target", target},
                {"count", count},
                {"whole", whole},
                {"emit", emit},
                {"qmax", qmax},
                {"delta", delta},
                {"keep", keep},
                {"isometry", isometry},
                {"out", out},
                {"json", json_out},
                {"csv", csv_out}};
  }
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("URTLAB_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError("URTLAB_SEED is not an unsigned integer");
    }
  }
  return 1;
}

// Writes to the named file, or to `fallback` for "-".
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (path != "-") {
      file_.open(path);
      if (!file_) throw UsageError("cannot open " + path + " for writing");
      os_ = &file_;
    }
  }
  std::ostream& operator*() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_;
};

json report_json(const TestReport& r) {
  json diag = json::object();
  for (const auto& [k, v] : r.diagnostics) diag[k] = num(v);
  return json{{"test", r.test},
              {"statistic", num(r.statistic)},
              {"threshold", num(r.threshold)},
              {"verdict", r.pass ? "pass" : "fail"},
              {"samples", r.samples},
              {"seed", r.seed},
              {"diagnostics", diag},
              {"warnings", r.warnings}};
}

void emit_json(const RunConfig& cfg, json report, std::ostream& out) {
  json doc{{"config", cfg.to_json()}, {"streams", cfg.streams}, {"report", std::move(report)}};
  Sink sink(cfg.json_out, out);
  *sink << doc.dump(2) << '\n';
}

void emit_class_csv(const RunConfig& cfg, const TestReport& r) {
  if (cfg.csv_out.empty()) return;
  std::ofstream f(cfg.csv_out);
  if (!f) throw UsageError("cannot open " + cfg.csv_out + " for writing");
  f << "class,freq_a,freq_b\n";
  for (const auto& row : r.per_class) {
    f << row.digest << ',' << format_real(row.a) << ',' << format_real(row.b) << '\n';
  }
}

SamplerPtr subject(const RunConfig& cfg) {
  SamplerPtr mu = parse_fixture(cfg.fixture);
  if (cfg.d > 0) mu = rho_prime_sampler(mu, cfg.d);
  if (cfg.iid_marks) {
    mu = iid_marked_sampler(mu, [](Rng& rng) { return uniform01(rng); }, "uniform01");
  }
  return mu;
}

int run_sample(RunConfig& cfg, std::ostream& out) {
  Sink sink(cfg.out, out);
  Rng rng = SeedTree(cfg.seed).stream("sample");
  cfg.streams = {"sample"};
  const std::string kind = split(cfg.fixture, ':')[0];
  if (kind == "star" || kind == "regular_tree_ball" || kind == "sierpinski") {
    RootedNetwork g = parse_graph(cfg.fixture);
    if (cfg.whole) {
      write_network(*sink, g, cfg.fixture);
      return 0;
    }
    for (int i = 0; i < cfg.count; ++i) {
      auto x = static_cast<VertexId>(uniform_index(rng, g.vertex_count()));
      write_network(*sink, ball(g, x, cfg.radius), std::to_string(i));
    }
    return 0;
  }
  SamplerPtr mu = parse_fixture(cfg.fixture);
  for (int i = 0; i < cfg.count; ++i) {
    write_network(*sink, sample_ball(*mu, cfg.radius, rng), std::to_string(i));
  }
  return 0;
}

int run_embed(RunConfig& cfg, std::ostream& out) {
  if (cfg.d < 1) throw UsageError("embed needs --d >= 1");
  SamplerPtr mu = parse_fixture(cfg.fixture);
  SamplerPtr rho = cfg.emit == "rho-prime" ? rho_prime_sampler(mu, cfg.d) : rho_sampler(mu, cfg.d);
  Sink sink(cfg.out, out);
  Rng rng = SeedTree(cfg.seed).stream("embed");
  cfg.streams = {"embed"};
  for (int i = 0; i < cfg.count; ++i) {
    RootedNetwork b = sample_ball(*rho, cfg.radius, rng);
    if (cfg.emit == "stripped") b = strip_closed(b);
    write_network(*sink, b, std::to_string(i));
  }
  return 0;
}

int run_involution(RunConfig& cfg, std::ostream& out) {
  SamplerPtr mu = subject(cfg);
  InvolutionOptions opt;
  opt.depth = cfg.radius;
  opt.quantization = cfg.quantization;
  opt.replicates = cfg.replicates;
  opt.fixed_threshold = cfg.threshold;
  opt.calibration = cfg.calibration == "harness" ? Calibration::seed_harness
                                                 : Calibration::multiplier_bootstrap;
  TestReport r = involution_test(*mu, cfg.n, cfg.seed, opt);
  cfg.streams = {"pairs/chunk[0..63]",
                 opt.calibration == Calibration::seed_harness ? "harness/chunk[0..63]"
                                                              : "bootstrap"};
  json rep = report_json(r);
  rep["sampler"] = mu->name();
  emit_json(cfg, rep, out);
  emit_class_csv(cfg, r);
  return r.pass ? 0 : 1;
}

int run_mtp(RunConfig& cfg, std::ostream& out) {
  SamplerPtr mu = subject(cfg);
  MassFunction f;
  if (cfg.mass == "one") {
    f = mass_one();
  } else if (cfg.mass == "leaf_sender") {
    f = mass_leaf_sender();
  } else {
    throw UsageError("unknown mass function '" + cfg.mass + "'");
  }
  double threshold = cfg.threshold > 0.0 ? cfg.threshold : kMtpZThreshold;
  TestReport r = mtp_test(*mu, f, cfg.n, cfg.seed, threshold);
  cfg.streams = {"chunk[0..63]"};
  json rep = report_json(r);
  rep["sampler"] = mu->name();
  emit_json(cfg, rep, out);
  return r.pass ? 0 : 1;
}

int run_tightness(RunConfig& cfg, std::ostream& out) {
  auto family = parse_family(cfg.family, cfg.sizes);
  TightnessReport t = tightness_report(family, cfg.r, cfg.M, cfg.epsilon);
  json rows = json::array();
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const auto& row = t.rows[i];
    rows.push_back({{"size", cfg.sizes[i]},
                    {"vertices", family[i].vertex_count()},
                    {"mean_degree", row.mean_degree},
                    {"p_uniform", row.p_uniform},
                    {"p_degree_biased", row.p_biased},
                    {"ui_tail", row.ui_tail}});
  }
  json rep{{"test", "tightness"},
           {"rows", rows},
           {"sup_p_uniform", t.sup_uniform},
           {"sup_p_degree_biased", t.sup_biased},
           {"sup_ui_tail", t.sup_ui_tail},
           {"tight", t.tight},
           {"verdict", t.tight ? "pass" : "fail"}};
  emit_json(cfg, rep, out);
  return t.tight ? 0 : 1;
}

int run_converge(RunConfig& cfg, std::ostream& out) {
  auto seq = parse_family(cfg.family, cfg.sizes);
  std::vector<double> tv;
  bool pass;
  json rep{{"test", "converge"}};
  if (cfg.target.empty()) {
    tv = cauchy_trend(seq, cfg.radius, cfg.quantization);
    pass = true;
    for (std::size_t i = 1; i < tv.size(); ++i) pass = pass && tv[i] <= tv[i - 1];
    rep["mode"] = "cauchy";
    cfg.streams = {};
  } else {
    SamplerPtr target = parse_fixture(cfg.target);
    SeedTree tree(cfg.seed);
    auto law = empirical_distribution(*target, cfg.radius, cfg.n, tree.derive("target"),
                                      cfg.quantization);
    tv = convergence_check(seq, law, cfg.n, tree.derive("members"));
    double threshold = cfg.threshold > 0.0 ? cfg.threshold : 0.05;
    pass = !tv.empty() && tv.back() <= threshold;
    bool monotone = true;
    for (std::size_t i = 1; i < tv.size(); ++i) monotone = monotone && tv[i] <= tv[i - 1];
    rep["mode"] = "target";
    rep["threshold"] = threshold;
    rep["nonincreasing"] = monotone;
    cfg.streams = {"target/chunk[0..63]", "members/member[i]/chunk[0..63]"};
  }
  rep["tv"] = tv;
  rep["verdict"] = pass ? "pass" : "fail";
  emit_json(cfg, rep, out);
  return pass ? 0 : 1;
}

int run_hyperbolic(RunConfig& cfg, std::ostream& out) {
  using namespace urt::hyp;
  if (cfg.qmax < 1) throw UsageError("--qmax must be >= 1");
  if (cfg.n < 1) throw UsageError("--n must be >= 1");
  SeedTree tree(cfg.seed);
  Rng rng = tree.stream("hyperbolic");
  cfg.streams = {"hyperbolic"};
  std::optional<MobiusMap> g;
  if (cfg.isometry) g = random_isometry(rng);
  json rep{{"test", "hyperbolic"}};
  bool pass = true;

  if (cfg.keep < 1.0) {
    Horoforest forest = build_horoforest(cfg.qmax, cfg.delta, cfg.keep, cfg.n, rng);
    double total = 0.0;
    long interior = 0;
    for (const auto& p : forest.paths) {
      if (p.open_left || p.open_right) continue;
      total += static_cast<double>(p.points.size());
      ++interior;
    }
    rep["horoballs"] = forest.horoballs.size();
    rep["components"] = forest.paths.size();
    rep["mean_component_size"] = interior > 0 ? total / static_cast<double>(interior) : 0.0;
    rep["expected_component_size"] = 1.0 / (1.0 - cfg.keep);
    rep["verdict"] = "pass";
    emit_json(cfg, rep, out);
    return 0;
  }

  std::unique_ptr<std::ofstream> csv;
  if (cfg.out != "-") {
    csv = std::make_unique<std::ofstream>(cfg.out);
    if (!*csv) throw UsageError("cannot open " + cfg.out + " for writing");
    *csv << "horoball,n,distance,speed,disc_x,disc_y\n";
  }
  auto n_max = static_cast<std::size_t>(cfg.n);
  json rays = json::array();
  auto balls = ford_horoballs(cfg.qmax);
  for (std::size_t b = 0; b < balls.size(); ++b) {
    Horoball h = g ? balls[b].transformed(*g) : balls[b];
    auto ray = horocycle_lattice(h, cfg.delta, 0, cfg.n + 1);
    RayTrace t = ray_metrics(ray, n_max, h.tangency());
    double chord_err = 0.0, tail_err = 0.0;
    for (std::size_t k = 0; k <= n_max; ++k) {
      chord_err = std::max(chord_err, std::abs(t.distance[k] - 2.0 * std::asinh(k / 2.0)));
      if (k >= n_max / 10) tail_err = std::max(tail_err, t.disc_error[k]);
      if (csv) {
        *csv << b << ',' << k << ',' << format_real(t.distance[k]) << ','
             << format_real(t.speed[k]) << ',' << format_real(t.disc[k].real()) << ','
             << format_real(t.disc[k].imag()) << '\n';
      }
    }
    json tangency = "inf";
    if (auto x = h.tangency()) tangency = *x;
    json ray_json{{"horoball", b},
                  {"tangency", tangency},
                  {"final_distance", t.distance.back()},
                  {"final_speed", t.speed.back()},
                  {"chord_identity_max_error", chord_err},
                  {"disc_error_max_after_n_over_10", tail_err}};
    if (const auto& q = balls[b].rational_tangency(); q && q->q != 0) {
      ray_json["ford"] = std::to_string(q->p) + "/" + std::to_string(q->q);
    }
    pass = pass && t.speed.back() < 0.01;
    rays.push_back(ray_json);
  }
  rep["rays"] = rays;
  rep["speed_threshold"] = 0.01;
  rep["verdict"] = pass ? "pass" : "fail";
  emit_json(cfg, rep, out);
  return pass ? 0 : 1;
}

}  // namespace

SamplerPtr parse_fixture(const std::string& spec) {
  auto parts = split(spec, ':');
  const std::string& kind = parts[0];
  if (kind == "canopy" && parts.size() == 1) return canopy_sampler();
  if (kind == "single_vertex" && parts.size() == 1) {
    return point_mass_sampler(PointMass::single_vertex);
  }
  if (kind == "line" && parts.size() == 1) return point_mass_sampler(PointMass::line);
  if (kind == "ray_from_endpoint" && parts.size() == 1) return ray_from_endpoint_sampler();
  if (kind == "regular" && parts.size() == 2) {
    int k = to_int(parts[1], spec);
    if (k < 1) throw UsageError("regular:<k> needs k >= 1");
    return point_mass_sampler(PointMass::regular, k);
  }
  if (kind == "chain_cover") {
    try {
      if (parts.size() == 4 && parts[1] == "uniform") {
        return chain_cover_sampler(
            OffspringLaw::uniform(to_int(parts[2], spec), to_int(parts[3], spec)));
      }
      if (parts.size() == 2) {
        std::vector<double> p;
        for (const auto& x : split(parts[1], ',')) p.push_back(to_real(x, spec));
        return chain_cover_sampler(OffspringLaw(p));
      }
    } catch (const DomainError& e) {
      throw UsageError(spec + ": " + e.what());
    }
  }
  throw UsageError("unknown fixture '" + spec + "'");
}

RootedNetwork parse_graph(const std::string& spec) {
  auto parts = split(spec, ':');
  try {
    if (parts[0] == "star" && parts.size() == 2) return star_graph(to_int(parts[1], spec));
    if (parts[0] == "sierpinski" && parts.size() == 2) {
      return sierpinski_graph(to_int(parts[1], spec));
    }
    if (parts[0] == "regular_tree_ball" && parts.size() == 3) {
      return regular_tree_ball(to_int(parts[1], spec), to_int(parts[2], spec));
    }
  } catch (const DomainError& e) {
    throw UsageError(spec + ": " + e.what());
  }
  throw UsageError("unknown graph '" + spec + "'");
}

std::vector<RootedNetwork> parse_family(const std::string& family,
                                        const std::vector<int>& sizes) {
  if (sizes.empty()) throw UsageError("--sizes must list at least one size");
  std::vector<RootedNetwork> out;
  for (int n : sizes) out.push_back(parse_graph(family + ":" + std::to_string(n)));
  return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Unimodular random tree laboratory"};
  app.name("urtlab");
  app.require_subcommand(1);
  app.fallthrough();
  unsigned threads = 0;
  app.add_option("--threads", threads, "Worker threads (0 = all cores)");

  try {
    cfg.seed = default_seed();
  } catch (const UsageError& e) {
    err << "urtlab: " << e.what() << '\n';
    return 2;
  }

  auto seed_opt = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "Master seed (default $URTLAB_SEED or 1)");
  };
  auto json_opt = [&](CLI::App* sub) {
    sub->add_option("--json", cfg.json_out, "JSON report path ('-' = stdout)");
  };
  auto mu_opts = [&](CLI::App* sub) {
    sub->add_option("--mu", cfg.fixture, "Fixture law")->required();
    sub->add_option("--d", cfg.d, "Test rho'(mu, d) instead of mu")->check(CLI::NonNegativeNumber);
    sub->add_flag("--iid-marks", cfg.iid_marks, "Append uniform[0,1] vertex marks");
    sub->add_option("--n", cfg.n, "Sample count")->check(CLI::Range(2L, 1L << 40));
    seed_opt(sub);
    json_opt(sub);
  };
  auto tightness_opts = [&](CLI::App* sub) {
    sub->add_option("--family", cfg.family, "star | regular_tree_ball:<d> | sierpinski");
    sub->add_option("--sizes", cfg.sizes, "Family sizes")->delimiter(',')->required();
    sub->add_option("--r", cfg.r, "Radius of F_r^M")->check(CLI::NonNegativeNumber);
    sub->add_option("--M", cfg.M, "Degree cutoff")->check(CLI::NonNegativeNumber);
    sub->add_option("--epsilon", cfg.epsilon, "Tightness tolerance");
    json_opt(sub);
  };
  auto converge_opts = [&](CLI::App* sub) {
    sub->add_option("--family", cfg.family, "star | regular_tree_ball:<d> | sierpinski");
    sub->add_option("--sizes", cfg.sizes, "Sequence sizes")->delimiter(',')->required();
    sub->add_option("--target", cfg.target, "Target fixture (omit for a Cauchy trend)");
    sub->add_option("--radius", cfg.radius, "Depth of ball statistics")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--n", cfg.n, "Samples per law")->check(CLI::PositiveNumber);
    sub->add_option("--quantization", cfg.quantization, "Mark quantum")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--threshold", cfg.threshold, "TV threshold (default 0.05)");
    seed_opt(sub);
    json_opt(sub);
  };

  auto* sample = app.add_subcommand("sample", "Emit exact ball samples in the graph format");
  sample->add_option("generator", cfg.fixture, "Fixture or finite graph")->required();
  sample->add_option("--radius", cfg.radius, "Ball radius")->check(CLI::NonNegativeNumber);
  sample->add_option("--count", cfg.count, "Number of samples")->check(CLI::PositiveNumber);
  sample->add_flag("--whole", cfg.whole, "Emit a finite graph whole");
  sample->add_option("--out", cfg.out, "Output path ('-' = stdout)");
  seed_opt(sample);

  auto* embed = app.add_subcommand("embed", "Sample the invariant percolation of a law");
  embed->add_option("--mu", cfg.fixture, "Fixture law")->required();
  embed->add_option("--d", cfg.d, "Degree of the host tree")->required()->check(
      CLI::PositiveNumber);
  embed->add_option("--radius", cfg.radius, "Ball radius")->check(CLI::NonNegativeNumber);
  embed->add_option("--count", cfg.count, "Number of samples")->check(CLI::PositiveNumber);
  embed->add_option("--emit", cfg.emit, "rho | rho-prime | stripped")
      ->check(CLI::IsMember({"rho", "rho-prime", "stripped"}));
  embed->add_option("--out", cfg.out, "Output path ('-' = stdout)");
  seed_opt(embed);

  auto* test = app.add_subcommand("test", "Statistical tests with a JSON verdict");
  test->require_subcommand(1);
  auto* involution = test->add_subcommand("involution", "Involution invariance");
  mu_opts(involution);
  involution->add_option("--radius", cfg.radius, "Code depth")->check(CLI::PositiveNumber);
  involution->add_option("--quantization", cfg.quantization, "Mark quantum")
      ->check(CLI::NonNegativeNumber);
  involution->add_option("--calibration", cfg.calibration, "bootstrap | harness")
      ->check(CLI::IsMember({"bootstrap", "harness"}));
  involution->add_option("--replicates", cfg.replicates, "Null replicates")
      ->check(CLI::PositiveNumber);
  involution->add_option("--threshold", cfg.threshold, "Fixed TV threshold");
  involution->add_option("--csv", cfg.csv_out, "Per-class frequency CSV");
  auto* mtp = test->add_subcommand("mtp", "Mass-transport balance");
  mu_opts(mtp);
  mtp->add_option("--mass", cfg.mass, "one | leaf_sender")
      ->check(CLI::IsMember({"one", "leaf_sender"}));
  mtp->add_option("--threshold", cfg.threshold, "z threshold (default 2.5758)");
  auto* test_tight = test->add_subcommand("tightness", "Tightness of a finite family");
  tightness_opts(test_tight);
  auto* test_conv = test->add_subcommand("converge", "Random weak convergence");
  converge_opts(test_conv);

  auto* tight = app.add_subcommand("tightness", "Tightness of a finite family");
  tightness_opts(tight);
  auto* conv = app.add_subcommand("converge", "Random weak convergence");
  converge_opts(conv);

  auto* hyper = app.add_subcommand("hyperbolic", "Horocycle rays in the Ford packing");
  hyper->add_option("--qmax", cfg.qmax, "Largest Ford denominator")->check(CLI::PositiveNumber);
  hyper->add_option("--delta", cfg.delta, "Depth of the lattice horocycle")
      ->check(CLI::NonNegativeNumber);
  hyper->add_option("--keep", cfg.keep, "Bernoulli edge retention")
      ->check(CLI::Range(0.0, 1.0));
  hyper->add_option("--n", cfg.n, "Ray length")->check(CLI::PositiveNumber);
  hyper->add_flag("--isometry", cfg.isometry, "Apply a random isometry first");
  hyper->add_option("--out", cfg.out, "Per-ray trace CSV");
  seed_opt(hyper);
  json_opt(hyper);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  set_max_workers(threads);

  try {
    if (sample->parsed()) {
      cfg.subcommand = "sample";
      return run_sample(cfg, out);
    }
    if (embed->parsed()) {
      cfg.subcommand = "embed";
      return run_embed(cfg, out);
    }
    if (involution->parsed()) {
      cfg.subcommand = "test involution";
      return run_involution(cfg, out);
    }
    if (mtp->parsed()) {
      cfg.subcommand = "test mtp";
      return run_mtp(cfg, out);
    }
    if (test_tight->parsed() || tight->parsed()) {
      cfg.subcommand = "tightness";
      return run_tightness(cfg, out);
    }
    if (test_conv->parsed() || conv->parsed()) {
      cfg.subcommand = "converge";
      return run_converge(cfg, out);
    }
    if (hyper->parsed()) {
      cfg.subcommand = "hyperbolic";
      return run_hyperbolic(cfg, out);
    }
  } catch (const UsageError& e) {
    err << "urtlab: " << e.what() << '\n';
    return 2;
  } catch (const urt::Error& e) {
    err << "urtlab: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace urtlab
