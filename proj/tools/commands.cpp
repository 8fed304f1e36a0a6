#include "commands.hpp"

#include <cmath>
#include <string>

#include "catbreed/fock_oracle.hpp"
#include "catbreed/monte_carlo.hpp"
#include "output.hpp"

namespace catbreed::cli {

namespace {

void append_metrics_columns(Table& table) {
  table.columns.insert(table.columns.end(),
                       {"delta_x_db", "delta_p_db", "delta_sym_db", "delta_x", "delta_p",
                        "delta_sym"});
}

void append_metrics_cells(std::vector<Cell>& row, const MetricBundle& m) {
  row.insert(row.end(), {Cell{m.delta_x_db}, Cell{m.delta_p_db}, Cell{m.delta_sym_db},
                         Cell{m.delta_x}, Cell{m.delta_p}, Cell{m.delta_sym}});
}

}  // namespace

int cmd_breed(const RunConfig& config) {
  const BreedResult res = breed(config.breeding());
  Table table;
  table.command = "breed";
  append_metrics_columns(table);
  table.columns.push_back("term_count");
  for (std::size_t i = 0; i < res.outcomes.size(); ++i) {
    table.columns.push_back("outcome_" + std::to_string(i + 1));
  }
  for (std::size_t i = 0; i < res.densities.size(); ++i) {
    table.columns.push_back("density_" + std::to_string(i + 1));
  }
  std::vector<Cell> row;
  append_metrics_cells(row, res.metrics);
  row.push_back(static_cast<long long>(res.final_state.n_terms()));
  for (double v : res.outcomes) {
    row.push_back(v);
  }
  for (double v : res.densities) {
    row.push_back(v);
  }
  table.add_row(std::move(row));
  write_table(table, config);
  return 0;
}

int cmd_sample(const RunConfig& config) {
  const int n_samples = config.samples > 0 ? config.samples : 1000;
  const MonteCarloResult res =
      monte_carlo_breed_detailed(config.breeding(), n_samples, config.seed, config.workers);
  const MonteCarloSummary& s = res.summary;

  Table table;
  table.command = "sample";
  table.columns = {"n_samples",        "mean_delta_x_db", "std_delta_x_db",
                   "mean_delta_p_db",  "std_delta_p_db",  "mean_delta_sym_db",
                   "std_delta_sym_db", "min_delta_sym_db", "max_delta_sym_db",
                   "success_prob",     "ft_prob",         "reference_delta_p_db",
                   "reference_delta_sym_db"};
  table.add_row({static_cast<long long>(s.n_samples), s.mean_delta_x_db, s.std_delta_x_db,
                 s.mean_delta_p_db, s.std_delta_p_db, s.mean_delta_sym_db, s.std_delta_sym_db,
                 s.min_delta_sym_db, s.max_delta_sym_db, s.success_prob, s.ft_prob,
                 s.reference.delta_p_db, s.reference.delta_sym_db});
  write_table(table, config);

  if (!config.per_sample_out.empty()) {
    Table samples;
    samples.command = "sample.per-sample";
    samples.columns = {"sample"};
    append_metrics_columns(samples);
    samples.columns.insert(samples.columns.end(), {"success", "fault_tolerant"});
    for (int i = 1; i < config.n_cats; ++i) {
      samples.columns.push_back("outcome_" + std::to_string(i));
    }
    for (std::size_t i = 0; i < res.samples.size(); ++i) {
      std::vector<Cell> row{static_cast<long long>(i)};
      append_metrics_cells(row, res.samples[i].metrics);
      row.push_back(static_cast<long long>(res.samples[i].success ? 1 : 0));
      row.push_back(static_cast<long long>(res.samples[i].fault_tolerant ? 1 : 0));
      for (double v : res.samples[i].outcomes) {
        row.push_back(v);
      }
      samples.add_row(std::move(row));
    }
    write_table(samples, config, config.per_sample_out);
  }
  return 0;
}

int cmd_sweep(const RunConfig& config, const std::vector<int>& n_list,
              const std::vector<double>& squeezing_list, const std::vector<double>& eta_list) {
  const std::vector<int> ns = n_list.empty() ? std::vector<int>{config.n_cats} : n_list;
  const std::vector<double> dbs =
      squeezing_list.empty() ? std::vector<double>{config.squeezing_db} : squeezing_list;
  const std::vector<double> etas =
      eta_list.empty() ? std::vector<double>{config.eta} : eta_list;
  if (ns.empty() || dbs.empty() || etas.empty()) {
    throw ConfigError("sweep axes must be non-empty");
  }

  struct Combo {
    int n;
    double db;
    double eta;
  };
  std::vector<Combo> combos;
  for (int n : ns) {
    for (double db : dbs) {
      for (double eta : etas) {
        combos.push_back({n, db, eta});
      }
    }
  }

  Table table;
  table.command = "sweep";
  table.columns = {"n_cats", "squeezing_db", "eta"};
  append_metrics_columns(table);
  table.columns.push_back("term_count");
  const bool with_samples = config.samples > 0;
  if (with_samples) {
    table.columns.insert(table.columns.end(),
                         {"mean_delta_sym_db", "std_delta_sym_db", "success_prob", "ft_prob"});
  }

  std::vector<std::vector<Cell>> rows(combos.size());
  const auto run_combo = [&](int idx) {
    const Combo& c = combos[idx];
    RunConfig local = config;
    local.n_cats = c.n;
    local.squeezing_db = c.db;
    local.eta = c.eta;
    local.parities.clear();
    local.outcomes = "zeros";
    const BreedResult res = breed(local.breeding());
    std::vector<Cell> row{static_cast<long long>(c.n), c.db, c.eta};
    append_metrics_cells(row, res.metrics);
    row.push_back(static_cast<long long>(res.final_state.n_terms()));
    if (with_samples) {
      BreedingConfig bc = local.breeding();
      const MonteCarloSummary s =
          monte_carlo_breed(bc, config.samples, config.seed, with_samples ? 1 : config.workers);
      row.insert(row.end(),
                 {Cell{s.mean_delta_sym_db}, Cell{s.std_delta_sym_db}, Cell{s.success_prob},
                  Cell{s.ft_prob}});
    }
    rows[idx] = std::move(row);
  };
  parallel_for(static_cast<int>(combos.size()), config.workers, run_combo);
  for (auto& row : rows) {
    table.add_row(std::move(row));
  }
  write_table(table, config);
  return 0;
}

int cmd_map3(const RunConfig& config) {
  if (config.n_cats != 3) {
    throw ConfigError("map3 requires n_cats = 3");
  }
  const int res = config.map_resolution;
  Table table;
  table.command = "map3";
  table.columns = {"p1", "p2", "delta_p_db", "delta_x_db", "density"};

  std::vector<std::vector<Cell>> rows(res * res);
  const auto at = [&](double lo, double hi, int i) {
    return lo + (hi - lo) * i / (res - 1);
  };
  parallel_for(res * res, config.workers, [&](int idx) {
    const int i = idx / res;
    const int j = idx % res;
    const double p1 = at(config.p1_min, config.p1_max, i);
    const double p2 = at(config.p2_min, config.p2_max, j);
    BreedingConfig bc = config.breeding();
    bc.outcomes = {OutcomePolicy::Kind::kFixed, {p1, p2}, 0};
    const BreedResult result = breed(bc);
    rows[idx] = {p1, p2, result.metrics.delta_p_db, result.metrics.delta_x_db,
                 result.densities[0] * result.densities[1]};
  });
  for (auto& row : rows) {
    table.add_row(std::move(row));
  }
  write_table(table, config);
  return 0;
}

int cmd_wigner(const RunConfig& config) {
  GaussianMixtureState state = vacuum(1, config.hbar);
  if (config.wigner_target == "cat") {
    const double r = config.breeding().squeezing_r();
    double alpha = amplitude_for_target(config.n_cats, config.lattice, r, config.hbar);
    if (config.prescale) {
      alpha /= std::sqrt(config.eta);
    }
    const int parity = config.parities.empty() ? 0 : config.parities.front();
    state = squeezed_cat({alpha, r, parity, config.eta}, config.hbar);
  } else {
    state = breed(config.breeding()).final_state;
  }

  const int res = config.wigner_resolution;
  const double w = config.wigner_window;
  std::vector<Eigen::VectorXd> points;
  points.reserve(res * res);
  for (int i = 0; i < res; ++i) {
    for (int j = 0; j < res; ++j) {
      Eigen::VectorXd q(2);
      q << -w + 2.0 * w * i / (res - 1), -w + 2.0 * w * j / (res - 1);
      points.push_back(std::move(q));
    }
  }
  const std::vector<double> values = evaluate_wigner(state, points);

  Table table;
  table.command = "wigner";
  table.columns = {"x", "p", "w"};
  for (std::size_t k = 0; k < points.size(); ++k) {
    table.add_row({points[k](0), points[k](1), values[k]});
  }
  write_table(table, config);
  return 0;
}

int cmd_oracle_check(const RunConfig& config) {
  struct Case {
    std::string label;
    CatSpec spec;
    std::vector<double> outcomes;  // empty = cat-only comparison
  };
  const std::vector<Case> cases = {
      {"cat a=1.5 r=0.3 eta=0.95", {1.5, 0.3, 0, 0.95}, {}},
      {"cat a=2.0 r=0.5 eta=1", {2.0, 0.5, 0, 1.0}, {}},
      {"breed2 a=1.5 r=0.3 eta=1 p=0.4", {1.5, 0.3, 0, 1.0}, {0.4}},
      {"breed2 a=2.0 r=0.5 eta=0.9 p=-0.5", {2.0, 0.5, 0, 0.9}, {-0.5}},
      {"breed3 a=1.5 r=0.3 eta=0.9 p=0.5;-0.5", {1.5, 0.3, 0, 0.9}, {0.5, -0.5}},
  };

  Table table;
  table.command = "oracle-check";
  table.columns = {"case",          "status", "max_wigner_dev", "max_delta_dev",
                   "max_density_dev"};
  const auto spec_qn = stabilizer_displacements(Lattice::kQunaught);
  bool all_ok = true;

  for (const auto& c : cases) {
    std::string status = "pass";
    double wig_dev = 0.0, delta_dev = 0.0, dens_dev = 0.0;
    try {
      GaussianMixtureState lcg = squeezed_cat(c.spec, config.hbar);
      FockDensity rho;
      if (c.outcomes.empty()) {
        rho = cat_density_fock(c.spec, config.cutoff, config.hbar);
      } else {
        std::vector<CatSpec> cats(c.outcomes.size() + 1, c.spec);
        auto fock = breed_fock(cats, c.outcomes, config.cutoff, config.hbar);
        rho = std::move(fock.rho);
        GaussianMixtureState acc = lcg;
        for (std::size_t i = 0; i < c.outcomes.size(); ++i) {
          const auto cat = squeezed_cat(c.spec, config.hbar);
          const auto two = apply_symplectic(tensor(acc, cat),
                                            cascade_step_splitter(static_cast<int>(i) + 1));
          dens_dev = std::max(dens_dev, std::abs(homodyne_pdf(two, 0, c.outcomes[i]) -
                                                 fock.densities[i]));
          acc = breed_step(acc, cat, static_cast<int>(i) + 1, c.outcomes[i], nullptr).state;
        }
        lcg = acc;
      }
      for (int i = 0; i < 9; ++i) {
        for (int j = 0; j < 9; ++j) {
          Eigen::VectorXd q(2);
          q << -4.0 + i, -4.0 + j;
          wig_dev = std::max(
              wig_dev, std::abs(evaluate_wigner(lcg, q) - wigner_fock(rho, q(0), q(1))));
        }
      }
      for (auto stab : {spec_qn.alpha_stab, spec_qn.beta_stab}) {
        delta_dev = std::max(delta_dev, std::abs(effective_squeezing(lcg, stab) -
                                                 effective_squeezing_fock(rho, stab)));
      }
      if (wig_dev > 1e-5 || delta_dev > 1e-4 || dens_dev > 1e-6) {
        status = "fail";
      }
    } catch (const std::exception& e) {
      status = std::string("error: ") + e.what();
    }
    if (status != "pass") {
      all_ok = false;
    }
    table.add_row({c.label, status, wig_dev, delta_dev, dens_dev});
  }
  write_table(table, config);
  return all_ok ? 0 : 1;
}

}  // namespace catbreed::cli
