#include <complex>
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hardy/experiments.hpp"
#include "hardy/serialization.hpp"
#include "hardy/witness_constructions.hpp"

namespace hardy {

namespace {

constexpr const char* kSchemaText = R"(hardy data formats (all JSON; angles in radians)

FunctionSpec   {"factors":[{"type":"monomial","degree":N,"power":K},
                           {"type":"blaschke","zeros":[{"re":X,"im":Y},...],"power":K},
                           {"type":"outer","log_modulus":<BoundaryData>,"power":K},
                           {"type":"singular_inner","zeta_angle":T,"mass":S,"power":K},
                           {"type":"constant","re":X,"im":Y,"power":K}]}
BoundaryData   {"arcs":[{"center":A,"half_width":W,"level":V},...],"background":V0}
               or {"grid_size":N,"values":[...]}
PointSet       {"points":[{"re":X,"im":Y,"gen":N},...]}   ("gen" optional)
Point spec     {"path":FILE} | {"points":[...]} |
               {"generator":"rings","rings":N,"base":B,"sector":[LO,HI]} |
               {"generator":"prop3","n_min":N0,"n_max":N1,"schedule":[...]} |
               {"generator":"cluster","zeros":[...],"q":[...]}
Config         {"schema":1,"experiment":NAME,"seed":S,"threads":T,"grid":G,
                "p_ladder":[...],"alpha_ladder":[...],"params":{...}}
Experiments    theorem1-forward | theorem1-converse | theorem2-divergence |
               theorem2-dominated | prop3 | lemma2
Arc list flag  "lo:hi[,lo:hi...]" with endpoints as decimals or pi multiples
               ("0:pi", "1.3:1.5pi")

Exit codes: 0 success, 1 validation/usage error, 2 verdict failure.
)";

FunctionSpec load_function_arg(const std::string& arg) {
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '"'))
    return build_function(json::parse(arg));
  return build_function(json{{"path", arg}});
}

PointSet load_points_arg(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') return build_pointset(json::parse(arg));
  return build_pointset(json{{"path", arg}});
}

void emit(const json& j, const std::string& out_path) {
  std::string text = j.dump(2) + "\n";
  if (out_path.empty())
    std::fputs(text.c_str(), stdout);
  else
    write_text_file(out_path, text);
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"desk-scale laboratory for sampling sets of Hardy spaces of the disk"};
  app.require_subcommand(1);
  app.footer("Data formats and config schema: hardy schema");

  std::string f_arg, points_arg, out_path, config_path, out_json, out_csv, arcs_arg,
      z_arg, zeros_arg, q_arg, schedule_arg, g_arg, alphas_arg;
  double p = 2.0, alpha = 1.0, tol = 1e-10, ceiling = 64.0;
  int grid = 1 << 12, depth = 1 << 10, n = 1, n_min = 1, n_max = 8, budget = 10000,
      threads = 1;
  std::uint64_t seed = 1;
  bool derivative = false;

  auto* norm = app.add_subcommand("norm", "H^p norm of a structured function");
  norm->add_option("--f", f_arg, "FunctionSpec file or inline JSON")->required();
  norm->add_option("--p", p, "exponent (inf allowed)");

  auto* evalc = app.add_subcommand("eval", "evaluate a structured function");
  evalc->add_option("--f", f_arg)->required();
  evalc->add_option("--z", z_arg, "point 're,im'")->required();
  evalc->add_flag("--derivative", derivative, "emit f'(z) instead of f(z)");

  auto* construct = app.add_subcommand("construct", "emit canonical constructions");
  auto* omega = construct->add_subcommand("omega", "outer function of a gap set");
  omega->add_option("--arcs", arcs_arg, "A as 'lo:hi[,...]'")->required();
  omega->add_option("--out", out_path);
  auto* witness = construct->add_subcommand("witness", "gap witness f_n = z^n omega_A^n");
  witness->add_option("--arcs", arcs_arg)->required();
  witness->add_option("--n", n)->required();
  witness->add_option("--out", out_path);
  auto* prop3c = construct->add_subcommand("prop3", "one-point accumulation rings");
  prop3c->add_option("--n-min", n_min);
  prop3c->add_option("--n-max", n_max);
  prop3c->add_option("--schedule", schedule_arg, "comma-separated p_n overriding n*2^n");
  prop3c->add_option("--out", out_path);
  auto* clusterc = construct->add_subcommand("cluster", "clusters around Blaschke zeros");
  clusterc->add_option("--zeros", zeros_arg, "'re,im;re,im;...'")->required();
  clusterc->add_option("--q", q_arg, "comma-separated cluster sizes")->required();
  clusterc->add_option("--out", out_path);
  construct->require_subcommand(1);

  auto* coverage = app.add_subcommand("coverage", "NT-coverage ladder of a point set");
  coverage->add_option("--points", points_arg)->required();
  coverage->add_option("--alpha", alpha);
  coverage->add_option("--alphas", alphas_arg, "comma-separated aperture ladder");
  coverage->add_option("--depth", depth, "max depth N (ladder 1,2,4,...,N)");

  auto* sample = app.add_subcommand("sample-check", "sampling ratio ||M_a f||_p / ||f||_p");
  sample->add_option("--f", f_arg)->required();
  sample->add_option("--points", points_arg)->required();
  sample->add_option("--p", p);
  sample->add_option("--alpha", alpha);
  sample->add_option("--ceiling", ceiling);
  sample->add_option("--out", out_path);

  auto* identity = app.add_subcommand("identity-check", "both sides of the arc identity");
  identity->add_option("--points", points_arg)->required();
  identity->add_option("--f", f_arg, "FunctionSpec (default f = 1)");
  identity->add_option("--p", p);
  identity->add_option("--alpha", alpha);
  identity->add_option("--tol", tol, "relative-error verdict threshold");

  auto* floorc = app.add_subcommand("floor", "empirical harmonic-measure floor c_alpha");
  floorc->add_option("--arcs", arcs_arg)->required();
  floorc->add_option("--alpha", alpha);
  floorc->add_option("--budget", budget);

  auto* exper = app.add_subcommand("experiment", "run a named experiment");
  exper->add_option("name", g_arg, "experiment name")->required();
  exper->add_option("--config", config_path, "config JSON (defaults used if absent)");
  exper->add_option("--out-json", out_json);
  exper->add_option("--out-csv", out_csv);
  exper->add_option("--seed", seed);
  exper->add_option("--threads", threads);
  exper->add_option("--grid", grid);

  auto* schema = app.add_subcommand("schema", "print data formats and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (schema->parsed()) {
      std::fputs(kSchemaText, stdout);
      return 0;
    }
    if (norm->parsed()) {
      FunctionSpec f = load_function_arg(f_arg);
      std::printf("%s\n", format_sci(hp_norm(f, p)).c_str());
      return 0;
    }
    if (evalc->parsed()) {
      FunctionSpec f = load_function_arg(f_arg);
      auto comma = z_arg.find(',');
      if (comma == std::string::npos)
        throw std::invalid_argument("--z must be 're,im'");
      DiskPoint z(std::stod(z_arg.substr(0, comma)), std::stod(z_arg.substr(comma + 1)));
      std::complex<double> v = derivative ? eval_derivative(f, z) : eval(f, z);
      std::printf("%s %s\n", format_sci(v.real()).c_str(), format_sci(v.imag()).c_str());
      return 0;
    }
    if (omega->parsed()) {
      emit(to_json(outer_from_gap(parse_arc_list(arcs_arg))), out_path);
      return 0;
    }
    if (witness->parsed()) {
      emit(to_json(gap_witness_family(parse_arc_list(arcs_arg), n)), out_path);
      return 0;
    }
    if (prop3c->parsed()) {
      Prop3Params params;
      if (!schedule_arg.empty()) {
        std::vector<std::int64_t> sched;
        std::stringstream ss(schedule_arg);
        std::string tok;
        while (std::getline(ss, tok, ',')) sched.push_back(std::stoll(tok));
        params = Prop3Params::from_schedule(n_min, std::move(sched));
      } else {
        params = Prop3Params::default_schedule(n_min, n_max);
      }
      emit(to_json(prop3_pointset(params)), out_path);
      return 0;
    }
    if (clusterc->parsed()) {
      std::vector<DiskPoint> zeros;
      std::stringstream zs(zeros_arg);
      std::string tok;
      while (std::getline(zs, tok, ';')) {
        auto comma = tok.find(',');
        if (comma == std::string::npos)
          throw std::invalid_argument("--zeros entries must be 're,im'");
        zeros.emplace_back(std::stod(tok.substr(0, comma)), std::stod(tok.substr(comma + 1)));
      }
      std::vector<std::int64_t> q;
      std::stringstream qs(q_arg);
      while (std::getline(qs, tok, ',')) q.push_back(std::stoll(tok));
      emit(to_json(cluster_pointset(zeros, q)), out_path);
      return 0;
    }
    if (coverage->parsed()) {
      PointSet a = load_points_arg(points_arg);
      std::vector<double> alphas;
      if (alphas_arg.empty()) {
        alphas.push_back(alpha);
      } else {
        std::stringstream ss(alphas_arg);
        std::string tok;
        while (std::getline(ss, tok, ',')) alphas.push_back(std::stod(tok));
      }
      json out = json::array();
      for (double av : alphas) {
        json rows = json::array();
        for (int d = 1; d <= depth; d *= 2)
          rows.push_back(json{{"depth", d},
                              {"coverage", nt_coverage(a, StolzParams(av), d)}});
        out.push_back(json{{"alpha", av}, {"rows", rows}});
      }
      emit(out, "");
      return 0;
    }
    if (sample->parsed()) {
      FunctionSpec f = load_function_arg(f_arg);
      PointSet a = load_points_arg(points_arg);
      SamplingReport rep = sampling_ratio(f, a, p, StolzParams(alpha), ceiling);
      emit(to_json(rep), out_path);
      return rep.ceiling_ok ? 0 : 2;
    }
    if (identity->parsed()) {
      FunctionSpec f = f_arg.empty() ? FunctionSpec::one() : load_function_arg(f_arg);
      PointSet a = load_points_arg(points_arg);
      IdentityCheck c = lemma1_identity_check(f, a, p, StolzParams(alpha));
      std::printf("lhs %s\nrhs %s\nrelative_error %s\n", format_sci(c.lhs).c_str(),
                  format_sci(c.rhs).c_str(), format_sci(c.relative_error).c_str());
      return c.relative_error <= tol ? 0 : 2;
    }
    if (floorc->parsed()) {
      FloorEstimate est =
          harmonic_measure_floor(parse_arc_list(arcs_arg), StolzParams(alpha), budget);
      emit(to_json(est), "");
      return est.floor > 0.0 ? 0 : 2;
    }
    if (exper->parsed()) {
      ExperimentConfig cfg;
      if (!config_path.empty()) {
        json raw = parse_json_file(config_path);
        cfg = ExperimentConfig::from_json(raw);
        if (cfg.experiment != g_arg)
          throw std::invalid_argument("config experiment name disagrees with the argument");
        if (out_json.empty() && raw.contains("out_json"))
          out_json = raw["out_json"].get<std::string>();
        if (out_csv.empty() && raw.contains("out_csv"))
          out_csv = raw["out_csv"].get<std::string>();
      } else {
        cfg = default_config(g_arg);
      }
      if (exper->count("--seed")) cfg.seed = seed;
      if (exper->count("--threads")) cfg.threads = threads;
      if (exper->count("--grid")) cfg.grid = grid;
      Report rep = run_experiment(cfg);
      rep.write(out_json, out_csv);
      if (out_json.empty() && out_csv.empty()) std::fputs(rep.to_csv().c_str(), stdout);
      for (const auto& v : rep.verdicts)
        std::fprintf(stderr, "verdict %s: %s\n", v.first.c_str(),
                     v.second ? "pass" : "fail");
      return rep.all_pass() ? 0 : 2;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 1;
}

}  // namespace hardy
