#include "aptsim/experiments.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "aptsim/entanglement.hpp"
#include "aptsim/errors.hpp"
#include "aptsim/io.hpp"
#include "parallel.hpp"

namespace aptsim {

namespace {

constexpr std::array<std::string_view, 10> kFigureIds{"2a", "2b", "3a", "3b", "4a", "4b", "4c", "4d", "A4", "A5"};

CurveSpec apt_pair(double a1, double a2) { return {AptParams::apt(a1), AptParams::apt(a2)}; }
CurveSpec pt_pair(double a1, double a2) { return {AptParams::pt(a1), AptParams::pt(a2)}; }

std::vector<double> inclusive_range(double lo, double hi, double step) {
  if (!(step > 0.0) || !(hi >= lo)) throw ValidationError("invalid range: step must be > 0 and max >= min");
  std::vector<double> out;
  const auto n = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9));
  for (std::size_t i = 0; i <= n; ++i) {
    // Round to 12 decimals so 0.5 + 7 * 0.1 prints as 1.2, not 1.2000000000000002.
    const double v = lo + static_cast<double>(i) * step;
    out.push_back(std::round(v * 1e12) / 1e12);
  }
  return out;
}

std::string a_label(const QubitEvolution& q) {
  if (const auto* p = std::get_if<AptParams>(&q)) return io::format_number(p->a);
  return "id";
}

nlohmann::json qubit_json(const QubitEvolution& q) {
  if (const auto* p = std::get_if<AptParams>(&q))
    return {{"a", p->a}, {"gamma", p->gamma}, {"family", std::string(to_string(p->family))}};
  return {{"identity", true}};
}

void require_figure_free(const RunConfig& cfg) {
  if (cfg.a1 || cfg.a2 || cfg.identity_qubit2)
    throw ValidationError("--figure fixes the parameter sets; --a1/--a2/--identity-qubit2 cannot be combined with it");
}

QubitEvolution second_qubit(const RunConfig& cfg, double fallback) {
  if (cfg.identity_qubit2) {
    if (cfg.a2) throw ValidationError("--identity-qubit2 and --a2 are mutually exclusive");
    return IdentityEvolution{};
  }
  return AptParams::apt(cfg.a2.value_or(fallback));
}

std::filesystem::path resolve_output(const RunConfig& cfg, const std::string& default_name) {
  std::error_code ec;
  if (cfg.output_path.empty() || std::filesystem::is_directory(cfg.output_path, ec))
    return cfg.output_path / default_name;
  return cfg.output_path;
}

std::string extension(OutputFormat f) { return f == OutputFormat::Csv ? ".csv" : ".json"; }

}  // namespace

std::span<const std::string_view> figure_ids() { return kFigureIds; }

FigureDefinition figure_definition(std::string_view id) {
  FigureDefinition fig;
  fig.id = std::string(id);
  const auto a2_sweep = [](double a1) {
    std::vector<CurveSpec> curves;
    for (double a2 : inclusive_range(0.5, 2.5, 0.1)) curves.push_back(apt_pair(a1, a2));
    return curves;
  };
  if (id == "2a") {
    fig.curves = {apt_pair(1.2, 1.2), apt_pair(1.8, 1.8)};
  } else if (id == "2b") {
    fig.curves = {apt_pair(1.01, 1.01)};
    fig.t_max = 70.0;
  } else if (id == "3a") {
    fig.curves = {apt_pair(1.2, 1.3), apt_pair(1.5, 1.6)};
  } else if (id == "3b") {
    fig.curves = {apt_pair(1.01, 1.03)};
    fig.t_max = 70.0;
  } else if (id == "4a" || id == "4c") {
    fig.curves = a2_sweep(id == "4a" ? 0.8 : 1.0);
    fig.t_max = 10.0;
  } else if (id == "4b" || id == "4d") {
    const double a1 = id == "4b" ? 0.8 : 1.0;
    fig.curves = {apt_pair(a1, 0.8), apt_pair(a1, 1.0), apt_pair(a1, 2.0)};
    fig.t_max = 10.0;
  } else if (id == "A4") {
    // Matched periods: (a^2 - 1) for APT equals (1 - a'^2) for PT.
    const double pt_unbroken = std::sqrt(2.0 - 1.2 * 1.2);
    const double pt_broken = std::sqrt(2.0 - 0.8 * 0.8);
    fig.curves = {pt_pair(pt_unbroken, pt_unbroken), apt_pair(1.2, 1.2), pt_pair(pt_broken, pt_broken),
                  apt_pair(0.8, 0.8)};
  } else if (id == "A5") {
    for (double a1 : {1.2, 1.8, 0.8}) fig.curves.push_back({AptParams::apt(a1), IdentityEvolution{}});
  } else {
    throw ValidationError("unknown figure id '" + std::string(id) + "'");
  }
  return fig;
}

std::string curve_stem(std::string_view figure_id, const CurveSpec& curve) {
  return fmt::format("fig{}_{}_{}", figure_id, a_label(curve.qubit1), a_label(curve.qubit2));
}

std::vector<std::filesystem::path> run_figure(const RunConfig& cfg) {
  FigureDefinition fig;
  if (cfg.figure_id) {
    require_figure_free(cfg);
    fig = figure_definition(*cfg.figure_id);
  } else {
    if (!cfg.a1) throw ValidationError("figure: either --figure or --a1 is required");
    fig.id = "custom";
    fig.curves = {{AptParams::apt(*cfg.a1), second_qubit(cfg, *cfg.a1)}};
  }
  fig.t_max = cfg.t_max.value_or(fig.t_max);
  fig.dt = cfg.dt.value_or(fig.dt);

  std::vector<EvolutionSpec> specs;
  for (const auto& c : fig.curves) {
    EvolutionSpec s;
    s.qubit1 = c.qubit1;
    s.qubit2 = c.qubit2;
    s.t_max = fig.t_max;
    s.dt = fig.dt;
    specs.push_back(s);
  }
  const std::vector<Trajectory> trajs = run_batch(specs);

  std::vector<std::filesystem::path> written;
  if (cfg.format == OutputFormat::Json) {
    nlohmann::json j;
    j["figure"] = fig.id;
    j["curves"] = nlohmann::json::array();
    for (std::size_t i = 0; i < trajs.size(); ++i) {
      j["curves"].push_back({{"name", curve_stem(fig.id, fig.curves[i])},
                             {"qubit1", qubit_json(fig.curves[i].qubit1)},
                             {"qubit2", qubit_json(fig.curves[i].qubit2)},
                             {"t", trajs[i].times},
                             {"concurrence", trajs[i].concurrence},
                             {"norm", trajs[i].unnormalized_norm}});
    }
    const auto path = cfg.output_path / ("fig" + fig.id + ".json");
    io::write_file(path, j.dump(1) + "\n");
    written.push_back(path);
    return written;
  }
  for (std::size_t i = 0; i < trajs.size(); ++i) {
    std::ostringstream os;
    io::write_trajectory_csv(os, trajs[i]);
    const auto path = cfg.output_path / (curve_stem(fig.id, fig.curves[i]) + ".csv");
    io::write_file(path, os.str());
    written.push_back(path);
  }
  return written;
}

std::vector<SweepRow> sweep_rows(const RunConfig& cfg) {
  double t_max = 10.0;
  std::vector<double> a1s, a2s;
  if (cfg.figure_id) {
    require_figure_free(cfg);
    if (*cfg.figure_id != "4a" && *cfg.figure_id != "4c")
      throw ValidationError("sweep: only figures 4a and 4c are surfaces");
    a1s = {*cfg.figure_id == "4a" ? 0.8 : 1.0};
    a2s = inclusive_range(0.5, 2.5, 0.1);
  } else {
    if (cfg.a1_min || cfg.a1_max || cfg.a1_step) {
      if (cfg.a1) throw ValidationError("sweep: --a1 and an a1 range are mutually exclusive");
      a1s = inclusive_range(cfg.a1_min.value_or(0.5), cfg.a1_max.value_or(2.5), cfg.a1_step.value_or(0.1));
    } else {
      if (!cfg.a1) throw ValidationError("sweep: --a1 (or an a1 range) is required");
      a1s = {*cfg.a1};
    }
    if (cfg.a2) {
      if (cfg.a2_min || cfg.a2_max || cfg.a2_step)
        throw ValidationError("sweep: --a2 and an a2 range are mutually exclusive");
      a2s = {*cfg.a2};
    } else {
      a2s = inclusive_range(cfg.a2_min.value_or(0.5), cfg.a2_max.value_or(2.5), cfg.a2_step.value_or(0.1));
    }
  }
  t_max = cfg.t_max.value_or(t_max);
  const double dt = cfg.dt.value_or(0.01);

  std::vector<EvolutionSpec> specs;
  for (double a1 : a1s)
    for (double a2 : a2s) {
      EvolutionSpec s;
      s.qubit1 = AptParams::apt(a1);
      s.qubit2 = AptParams::apt(a2);
      s.t_max = t_max;
      s.dt = dt;
      specs.push_back(s);
    }
  const std::vector<Trajectory> trajs = run_batch(specs);

  std::vector<SweepRow> rows;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const double a1 = std::get<AptParams>(specs[i].qubit1).a;
    const double a2 = std::get<AptParams>(specs[i].qubit2).a;
    for (std::size_t k = 0; k < trajs[i].size(); ++k)
      rows.push_back({a1, a2, trajs[i].times[k], trajs[i].concurrence[k]});
  }
  return rows;
}

std::filesystem::path run_sweep(const RunConfig& cfg) {
  const auto rows = sweep_rows(cfg);
  std::string body;
  if (cfg.format == OutputFormat::Csv) {
    body = "a1,a2,t,concurrence\n";
    for (const auto& r : rows)
      body += fmt::format("{},{},{},{}\n", io::format_number(r.a1), io::format_number(r.a2),
                          io::format_number(r.t), io::format_number(r.concurrence));
  } else {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : rows) j.push_back({{"a1", r.a1}, {"a2", r.a2}, {"t", r.t}, {"concurrence", r.concurrence}});
    body = j.dump(1) + "\n";
  }
  const std::string name = cfg.figure_id ? "fig" + *cfg.figure_id + "_sweep" : "sweep";
  const auto path = resolve_output(cfg, name + extension(cfg.format));
  io::write_file(path, body);
  return path;
}

std::vector<DecompositionRow> decomposition_rows(const RunConfig& cfg) {
  if (cfg.figure_id) throw ValidationError("decompose does not take --figure");
  std::vector<double> as{cfg.a1.value_or(1.2)};
  if (cfg.a2) as.push_back(*cfg.a2);
  std::vector<DecompositionRow> rows;
  for (double a : as)
    for (double t : sample_times(cfg.t_max.value_or(5.0), cfg.dt.value_or(0.5)))
      rows.push_back({a, t, decompose(AptParams::apt(a), t)});
  return rows;
}

std::filesystem::path run_decompose(const RunConfig& cfg) {
  const auto rows = decomposition_rows(cfg);
  std::string body;
  if (cfg.format == OutputFormat::Csv) {
    body = "a,t,theta1_deg,theta2_deg,xi1_deg,xi2_deg,k,c\n";
    for (const auto& r : rows) {
      const auto& d = r.params;
      body += fmt::format("{},{},{},{},{},{},{},{}\n", io::format_number(r.a), io::format_number(r.t),
                          io::format_number(d.theta1_deg), io::format_number(d.theta2_deg),
                          io::format_number(d.xi1_deg), io::format_number(d.xi2_deg), d.k, io::format_number(d.c));
    }
  } else {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : rows) {
      const auto& d = r.params;
      j.push_back({{"a", r.a}, {"t", r.t}, {"theta1_deg", d.theta1_deg}, {"theta2_deg", d.theta2_deg},
                   {"xi1_deg", d.xi1_deg}, {"xi2_deg", d.xi2_deg}, {"k", d.k}, {"c", d.c},
                   {"lambda1", d.lambda1}, {"lambda2", d.lambda2}});
    }
    body = j.dump(1) + "\n";
  }
  const auto path = resolve_output(cfg, "decomposition" + extension(cfg.format));
  io::write_file(path, body);
  return path;
}

std::vector<TomographyPoint> tomography_points(const RunConfig& cfg) {
  if (cfg.figure_id) throw ValidationError("tomography does not take --figure");
  if (cfg.total == 0) throw ValidationError("tomography: --total must be > 0");
  if (cfg.points == 0) throw ValidationError("tomography: --points must be > 0");
  const double a1 = cfg.a1.value_or(1.2);
  const QubitEvolution q1 = AptParams::apt(a1);
  const QubitEvolution q2 = second_qubit(cfg, a1);
  std::get<AptParams>(q1).validate();
  if (const auto* p = std::get_if<AptParams>(&q2)) p->validate();
  const double t_max = cfg.t_max.value_or(5.0);
  if (!(t_max >= 0.0)) throw ValidationError("tomography: --t-max must be >= 0");

  std::vector<double> times(cfg.points, 0.0);
  for (std::size_t i = 1; i < cfg.points; ++i)
    times[i] = t_max * static_cast<double>(i) / static_cast<double>(cfg.points - 1);

  const CountNoise noise = cfg.noiseless ? CountNoise::Noiseless : CountNoise::Poisson;
  std::vector<TomographyPoint> points(times.size());
  std::vector<std::vector<CountRecord>> counts(times.size());
  detail::parallel_for(times.size(), detail::Schedule::Dynamic, [&](std::size_t i) {
    const double t = times[i];
    const DensityMatrix truth = evolve_state(bell_state(), q1, q2, t);
    counts[i] = simulate_counts(truth, cfg.total, derive_seed(cfg.seed, i), noise);
    MleResult mle = [&] {
      try {
        return mle_reconstruct(counts[i]);
      } catch (const ConvergenceError& e) {
        throw ConvergenceError(fmt::format("{} (t = {})", e.what(), io::format_number(t)));
      }
    }();
    mle.fidelity_vs_truth = fidelity(truth, mle.rho_hat);
    points[i] = {t, concurrence(truth).value, concurrence(mle.rho_hat).value, std::move(mle)};
  });

  if (cfg.counts_out) {
    for (std::size_t i = 0; i < times.size(); ++i) {
      std::ostringstream os;
      io::write_counts_csv(os, counts[i]);
      io::write_file(*cfg.counts_out / fmt::format("counts_{:03d}.csv", i), os.str());
    }
  }
  return points;
}

std::filesystem::path run_tomography(const RunConfig& cfg) {
  if (cfg.counts_in) {
    std::istringstream is(io::read_file(*cfg.counts_in));
    const auto counts = io::read_counts_csv(is);
    const MleResult r = mle_reconstruct(counts);
    const auto path = resolve_output(cfg, "mle.json");
    io::write_file(path, io::mle_to_json(r).dump(1) + "\n");
    return path;
  }

  const auto points = tomography_points(cfg);
  std::string body;
  if (cfg.format == OutputFormat::Csv) {
    body = "t,fidelity,concurrence_theory,concurrence_mle,log_likelihood,iterations\n";
    for (const auto& p : points)
      body += fmt::format("{},{},{},{},{},{}\n", io::format_number(p.t), io::format_number(*p.mle.fidelity_vs_truth),
                          io::format_number(p.concurrence_theory), io::format_number(p.concurrence_mle),
                          io::format_number(p.mle.log_likelihood), p.mle.iterations);
  } else {
    const double a1 = cfg.a1.value_or(1.2);
    nlohmann::json j;
    j["qubit1"] = qubit_json(AptParams::apt(a1));
    j["qubit2"] = qubit_json(second_qubit(cfg, a1));
    j["total"] = cfg.total;
    j["seed"] = cfg.seed;
    j["noise"] = cfg.noiseless ? "noiseless" : "poisson";
    j["points"] = nlohmann::json::array();
    for (const auto& p : points)
      j["points"].push_back({{"t", p.t},
                             {"fidelity", *p.mle.fidelity_vs_truth},
                             {"concurrence_theory", p.concurrence_theory},
                             {"concurrence_mle", p.concurrence_mle},
                             {"mle", io::mle_to_json(p.mle)}});
    body = j.dump(1) + "\n";
  }
  const auto path = resolve_output(cfg, "tomography" + extension(cfg.format));
  io::write_file(path, body);
  return path;
}

std::vector<std::filesystem::path> run(const RunConfig& cfg) {
  switch (cfg.command) {
    case Command::Figure: return run_figure(cfg);
    case Command::Sweep: return {run_sweep(cfg)};
    case Command::Decompose: return {run_decompose(cfg)};
    case Command::Tomography: return {run_tomography(cfg)};
  }
  return {};
}

}  // namespace aptsim
