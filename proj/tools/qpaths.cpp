// qpaths — command-line driver: runs channel-superposition scenarios and
// emits machine-readable reports.
//
// Report shape: JSON object { scenario, config, results, verdict }, complex
// entries as [re, im] pairs. Reports carry no timestamps and echo the full
// resolved configuration, so a rerun with the same flags and seed is
// byte-identical. The dtqw scenario emits CSV (position,probability).
//
// Exit codes: 0 success; 1 --expect-equivalent set but the verdict is
// not-equivalent; 2 parse/format errors; 3 domain validation errors.

#include "qpaths/qpaths.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace {

using qpaths::CoinOperator;
using qpaths::Complex;
using qpaths::DensityMatrix;
using qpaths::Index;
using qpaths::KrausChannel;
using qpaths::Matrix;
using qpaths::ValidationError;
using qpaths::VacuumExtendedChannel;
using qpaths::Vector;
using qpaths::io::ordered_json;

// splitmix64 finalizer: decorrelated per-trial seeds, independent of trial
// execution order.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (trial + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void emit(const std::string& out_path, const std::string& payload) {
  if (out_path.empty())
    std::cout << payload;
  else
    qpaths::io::write_text(out_path, payload);
}

std::string report_payload(ordered_json report) { return report.dump(2) + "\n"; }

// --coin: named I / X / H, or a path to a JSON matrix payload.
CoinOperator resolve_coin(const std::string& spec) {
  if (spec == "I") return CoinOperator::identity_coin();
  if (spec == "X") return CoinOperator::pauli_x_coin();
  if (spec == "H") return CoinOperator::hadamard_coin();
  return CoinOperator(qpaths::io::parse_matrix_payload(qpaths::io::load_json(spec)));
}

// --carrier: named zero / plus / mixed (sized by the channel dimension), or a
// path to a JSON matrix payload holding a density matrix.
DensityMatrix resolve_carrier(const std::string& spec, Index dim) {
  if (spec == "zero") return DensityMatrix::pure(qpaths::ket(dim, 0));
  if (spec == "plus") return DensityMatrix::pure(Vector::Constant(dim, Complex(1.0, 0.0)));
  if (spec == "mixed") return DensityMatrix::maximally_mixed(dim);
  return DensityMatrix(qpaths::io::parse_matrix_payload(qpaths::io::load_json(spec)));
}

// --coin-state (dtqw): named 0 / 1 / balanced, or a path to a JSON list of
// two [re, im] pairs.
Vector resolve_coin_state(const std::string& spec) {
  if (spec == "0") return qpaths::ket0();
  if (spec == "1") return qpaths::ket1();
  if (spec == "balanced") return qpaths::balanced_coin_state();
  const std::vector<Complex> entries =
      qpaths::io::parse_complex_list(qpaths::io::load_json(spec), "coin state");
  if (entries.size() != 2) throw qpaths::SpecError("coin state must have exactly 2 entries");
  Vector v(2);
  v << entries[0], entries[1];
  return v;
}

struct LoadedExtension {
  VacuumExtendedChannel ext;
  ordered_json config;  // resolved spec echoed into the report
};

LoadedExtension load_extension(const std::string& path) {
  const qpaths::io::json raw = qpaths::io::load_json(path);
  VacuumExtendedChannel ext = qpaths::io::parse_extension(raw);
  ordered_json config = ordered_json::object();
  config["path"] = path;
  config.update(qpaths::io::extension_to_json(ext, qpaths::io::spec_name(raw)));
  return {std::move(ext), std::move(config)};
}

ordered_json coin_config(const std::string& spec, const CoinOperator& coin) {
  ordered_json j = ordered_json::object();
  j["spec"] = spec;
  j["matrix"] = qpaths::io::matrix_to_json(coin.matrix());
  return j;
}

ordered_json carrier_config(const std::string& spec, const DensityMatrix& carrier) {
  ordered_json j = ordered_json::object();
  j["spec"] = spec;
  j["matrix"] = qpaths::io::matrix_to_json(carrier.matrix());
  return j;
}

ordered_json joint_results(const qpaths::JointState& js) {
  ordered_json j = ordered_json::object();
  j["joint"] = qpaths::io::matrix_to_json(js.joint().matrix());
  j["carrier_marginal"] = qpaths::io::matrix_to_json(js.carrier_marginal().matrix());
  j["control_marginal"] = qpaths::io::matrix_to_json(js.control_marginal().matrix());
  return j;
}

void check_tolerance(double tolerance) {
  if (!(tolerance > 0.0)) throw ValidationError("tolerance must be > 0");
}

// Shared flag set; each subcommand binds the subset it uses.
struct Options {
  std::string channel_e;
  std::string channel_d;
  std::string coin = "X";
  std::string carrier = "zero";
  std::string coin_state = "0";
  std::string out;
  int hops = 2;
  int steps = 0;
  int dim = 2;
  int kraus_count = 1;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  double tolerance = qpaths::tol::equivalence;
  bool expect_equivalent = false;
};

int run_switch_equiv(const Options& opt, bool carrier_given) {
  check_tolerance(opt.tolerance);
  const LoadedExtension e = load_extension(opt.channel_e);
  const LoadedExtension d = load_extension(opt.channel_d);
  const CoinOperator coin = resolve_coin(opt.coin);

  std::vector<DensityMatrix> carriers;
  if (carrier_given)
    carriers.push_back(resolve_carrier(opt.carrier, e.ext.dim()));
  else
    carriers = qpaths::probe_states(e.ext.dim());

  double distance = 0.0;
  for (const DensityMatrix& carrier : carriers) {
    const qpaths::EquivalenceReport rep =
        qpaths::switch_equivalence(e.ext, d.ext, coin, carrier, opt.tolerance);
    distance = std::max(distance, rep.distance);
  }
  const bool equivalent = distance <= opt.tolerance;

  ordered_json report;
  report["scenario"] = "switch-equiv";
  report["config"] = {{"channel_e", e.config},
                      {"channel_d", d.config},
                      {"coin", coin_config(opt.coin, coin)},
                      {"carrier", carrier_given ? ordered_json(opt.carrier) : ordered_json(nullptr)},
                      {"tolerance", opt.tolerance},
                      {"expect_equivalent", opt.expect_equivalent}};
  report["results"] = {{"hops", 2},
                       {"probe_count", carriers.size()},
                       {"distance", distance},
                       {"equivalent", equivalent}};
  report["verdict"] = equivalent ? "equivalent" : "not-equivalent";
  emit(opt.out, report_payload(std::move(report)));
  return (opt.expect_equivalent && !equivalent) ? 1 : 0;
}

int run_spatial_run(const Options& opt) {
  const LoadedExtension e = load_extension(opt.channel_e);
  const LoadedExtension d = load_extension(opt.channel_d);
  const CoinOperator coin = resolve_coin(opt.coin);
  const DensityMatrix carrier = resolve_carrier(opt.carrier, e.ext.dim());

  const KrausChannel w = qpaths::hop_channel(qpaths::spatial_superposition(e.ext, d.ext), coin);
  const qpaths::JointState out =
      qpaths::evolve(w, opt.hops, carrier, DensityMatrix::pure(qpaths::ket_plus()));

  ordered_json results = ordered_json::object();
  results["hops"] = opt.hops;
  results.update(joint_results(out));
  ordered_json blocks = ordered_json::object();
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      blocks[std::to_string(a) + std::to_string(b)] =
          qpaths::io::matrix_to_json(qpaths::control_block(out, a, b));
  results["control_blocks"] = std::move(blocks);

  ordered_json report;
  report["scenario"] = "spatial-run";
  report["config"] = {{"channel_e", e.config},
                      {"channel_d", d.config},
                      {"coin", coin_config(opt.coin, coin)},
                      {"carrier", carrier_config(opt.carrier, carrier)},
                      {"hops", opt.hops}};
  report["results"] = std::move(results);
  report["verdict"] = "ok";
  emit(opt.out, report_payload(std::move(report)));
  return 0;
}

int run_switch_run(const Options& opt) {
  const qpaths::io::json raw_e = qpaths::io::load_json(opt.channel_e);
  const qpaths::io::json raw_d = qpaths::io::load_json(opt.channel_d);
  const KrausChannel e = qpaths::io::parse_channel(raw_e);
  const KrausChannel d = qpaths::io::parse_channel(raw_d);
  const DensityMatrix carrier = resolve_carrier(opt.carrier, e.dim());

  const qpaths::JointState out = qpaths::apply_joint(
      qpaths::quantum_switch(e, d), carrier, DensityMatrix::pure(qpaths::ket_plus()));

  ordered_json config_e = ordered_json::object();
  config_e["path"] = opt.channel_e;
  config_e.update(qpaths::io::channel_to_json(e, qpaths::io::spec_name(raw_e)));
  ordered_json config_d = ordered_json::object();
  config_d["path"] = opt.channel_d;
  config_d.update(qpaths::io::channel_to_json(d, qpaths::io::spec_name(raw_d)));

  ordered_json report;
  report["scenario"] = "switch-run";
  report["config"] = {{"channel_e", config_e},
                      {"channel_d", config_d},
                      {"carrier", carrier_config(opt.carrier, carrier)}};
  report["results"] = joint_results(out);
  report["verdict"] = "ok";
  emit(opt.out, report_payload(std::move(report)));
  return 0;
}

int run_walk_hybrid(const Options& opt) {
  const LoadedExtension e = load_extension(opt.channel_e);
  const LoadedExtension d = load_extension(opt.channel_d);
  const CoinOperator coin = resolve_coin(opt.coin);
  const DensityMatrix carrier = resolve_carrier(opt.carrier, e.ext.dim());

  const KrausChannel w = qpaths::hop_channel(qpaths::spatial_superposition(e.ext, d.ext), coin);
  const qpaths::JointState out =
      qpaths::evolve(w, opt.hops, carrier, DensityMatrix::pure(qpaths::ket_plus()));
  const qpaths::CrossTermReport cross = qpaths::cross_term_condition(e.ext, d.ext);

  ordered_json results = ordered_json::object();
  results["hops"] = opt.hops;
  results.update(joint_results(out));
  ordered_json tuples = ordered_json::array();
  for (const auto& t : cross.violating_tuples) tuples.push_back({t[0], t[1], t[2], t[3]});
  results["cross_term"] = {{"holds", cross.holds}, {"violating_tuples", std::move(tuples)}};

  ordered_json report;
  report["scenario"] = "walk-hybrid";
  report["config"] = {{"channel_e", e.config},
                      {"channel_d", d.config},
                      {"coin", coin_config(opt.coin, coin)},
                      {"carrier", carrier_config(opt.carrier, carrier)},
                      {"hops", opt.hops}};
  report["results"] = std::move(results);
  report["verdict"] = "ok";
  emit(opt.out, report_payload(std::move(report)));
  return 0;
}

int run_eb_demo(const Options& opt, bool e_given, bool d_given) {
  check_tolerance(opt.tolerance);

  ordered_json config_e;
  ordered_json config_d;
  KrausChannel e = qpaths::eb_xz();
  KrausChannel d = qpaths::eb_xz();
  if (e_given) {
    const qpaths::io::json raw = qpaths::io::load_json(opt.channel_e);
    e = qpaths::io::parse_channel(raw);
    config_e = ordered_json::object();
    config_e["path"] = opt.channel_e;
    config_e.update(qpaths::io::channel_to_json(e, qpaths::io::spec_name(raw)));
  } else {
    config_e = qpaths::io::channel_to_json(e, "eb_xz");
  }
  if (d_given) {
    const qpaths::io::json raw = qpaths::io::load_json(opt.channel_d);
    d = qpaths::io::parse_channel(raw);
    config_d = ordered_json::object();
    config_d["path"] = opt.channel_d;
    config_d.update(qpaths::io::channel_to_json(d, qpaths::io::spec_name(raw)));
  } else {
    config_d = qpaths::io::channel_to_json(d, "eb_xz");
  }

  const DensityMatrix carrier = resolve_carrier(opt.carrier, e.dim());
  const qpaths::JointState out = qpaths::apply_joint(
      qpaths::quantum_switch(e, d), carrier, DensityMatrix::pure(qpaths::ket_plus()));
  const std::vector<qpaths::MeasurementOutcome> outcomes =
      qpaths::measure_control(out, qpaths::ControlBasis::plus_minus());

  ordered_json outcome_json = ordered_json::array();
  for (const qpaths::MeasurementOutcome& o : outcomes)
    outcome_json.push_back({{"label", o.label}, {"probability", o.probability}});

  ordered_json results = ordered_json::object();
  results["measurement_basis"] = "plus_minus";
  results["outcomes"] = std::move(outcome_json);

  // The correction table must be input-independent: search against the full
  // probe family, not just the requested carrier, so the reported Paulis work
  // for every transmitted state.
  std::vector<std::pair<std::vector<qpaths::MeasurementOutcome>, DensityMatrix>> cases;
  for (const DensityMatrix& probe : qpaths::probe_states(e.dim()))
    cases.emplace_back(
        qpaths::measure_control(
            qpaths::apply_joint(qpaths::quantum_switch(e, d), probe,
                                DensityMatrix::pure(qpaths::ket_plus())),
            qpaths::ControlBasis::plus_minus()),
        probe);
  const auto corrections = qpaths::search_pauli_corrections(cases, opt.tolerance);
  bool corrected = false;
  if (corrections) {
    const qpaths::CorrectionReport check =
        qpaths::heralded_correction_check(outcomes, carrier, *corrections);
    ordered_json names = ordered_json::object();
    for (const auto& [label, u] : *corrections) {
      for (const auto& [pname, pm] : {std::pair<std::string, Matrix>{"I", qpaths::identity(2)},
                                      {"X", qpaths::pauli_x()},
                                      {"Y", qpaths::pauli_y()},
                                      {"Z", qpaths::pauli_z()}})
        if (qpaths::max_abs(u - pm) < 1e-12) {
          names[label] = pname;
          break;
        }
    }
    ordered_json dists = ordered_json::object();
    for (const auto& [label, dist] : check.distances) dists[label] = dist;
    results["corrections"] = std::move(names);
    results["corrected_distances"] = std::move(dists);
    results["worst_case_distance"] = check.worst_case;
    corrected = check.worst_case <= opt.tolerance;
  } else {
    results["corrections"] = nullptr;
  }

  ordered_json report;
  report["scenario"] = "eb-demo";
  report["config"] = {{"channel_e", config_e},
                      {"channel_d", config_d},
                      {"carrier", carrier_config(opt.carrier, carrier)},
                      {"tolerance", opt.tolerance}};
  report["results"] = std::move(results);
  report["verdict"] = corrected ? "corrected" : "uncorrected";
  emit(opt.out, report_payload(std::move(report)));
  return 0;
}

int run_dtqw(const Options& opt) {
  const CoinOperator coin = resolve_coin(opt.coin);
  const Vector start = resolve_coin_state(opt.coin_state);
  const std::map<int, double> dist = qpaths::run_walk(opt.steps, start, coin);
  emit(opt.out, qpaths::io::distribution_csv(dist));
  return 0;
}

int run_sweep(const Options& opt) {
  check_tolerance(opt.tolerance);
  if (opt.dim < 1) throw ValidationError("sweep: --dim must be >= 1");
  if (opt.kraus_count < 1) throw ValidationError("sweep: --kraus-count must be >= 1");
  const CoinOperator coin = resolve_coin(opt.coin);

  ordered_json per_trial = ordered_json::array();
  double max_distance = 0.0;
  double sum_distance = 0.0;
  bool all_equivalent = true;
  for (std::uint64_t t = 0; t < opt.trials; ++t) {
    qpaths::Rng rng(trial_seed(opt.seed, t));
    const VacuumExtendedChannel e =
        qpaths::uniform_extension(qpaths::random_kraus_channel(opt.dim, opt.kraus_count, rng));
    const VacuumExtendedChannel d =
        qpaths::uniform_extension(qpaths::random_kraus_channel(opt.dim, opt.kraus_count, rng));
    const DensityMatrix carrier = qpaths::random_density_matrix(opt.dim, rng);
    const qpaths::EquivalenceReport rep =
        qpaths::switch_equivalence(e, d, coin, carrier, opt.tolerance);
    per_trial.push_back(
        {{"trial", t}, {"distance", rep.distance}, {"equivalent", rep.equivalent}});
    max_distance = std::max(max_distance, rep.distance);
    sum_distance += rep.distance;
    all_equivalent = all_equivalent && rep.equivalent;
  }

  ordered_json results = ordered_json::object();
  results["trials"] = opt.trials;
  results["per_trial"] = std::move(per_trial);
  if (opt.trials > 0) {
    results["max_distance"] = max_distance;
    results["mean_distance"] = sum_distance / static_cast<double>(opt.trials);
  } else {
    results["max_distance"] = nullptr;
    results["mean_distance"] = nullptr;
  }
  results["all_equivalent"] = all_equivalent;

  ordered_json report;
  report["scenario"] = "sweep";
  report["config"] = {{"dim", opt.dim},
                      {"kraus_count", opt.kraus_count},
                      {"trials", opt.trials},
                      {"seed", opt.seed},
                      {"coin", coin_config(opt.coin, coin)},
                      {"tolerance", opt.tolerance},
                      {"expect_equivalent", opt.expect_equivalent}};
  report["results"] = std::move(results);
  report["verdict"] = all_equivalent ? "equivalent" : "not-equivalent";
  emit(opt.out, report_payload(std::move(report)));
  return (opt.expect_equivalent && !all_equivalent) ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "qpaths: channel-superposition supermaps (spatial superposition, quantum switch),\n"
      "coin-augmented hop evolution, and a 1-D discrete-time quantum walk.\n"
      "Reports are seed-deterministic JSON {scenario, config, results, verdict};\n"
      "dtqw emits CSV."};
  app.require_subcommand(1);
  Options opt;

  const auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", opt.out, "write the report here instead of stdout");
  };
  const auto add_channels = [&](CLI::App* cmd, const char* what) {
    cmd->add_option("--channel-e", opt.channel_e, std::string("path to the first ") + what)
        ->required();
    cmd->add_option("--channel-d", opt.channel_d, std::string("path to the second ") + what)
        ->required();
  };
  const auto add_coin = [&](CLI::App* cmd, const char* def) {
    return cmd->add_option("--coin", opt.coin,
                           std::string("coin: I, X, H, or a JSON matrix file (default ") + def +
                               ")");
  };
  const auto add_carrier = [&](CLI::App* cmd) {
    return cmd->add_option("--carrier", opt.carrier,
                           "carrier state: zero, plus, mixed, or a JSON matrix file");
  };

  CLI::App* switch_equiv = app.add_subcommand(
      "switch-equiv",
      "compare two-hop spatial-superposition evolution against the quantum switch");
  add_channels(switch_equiv, "channel/extension spec (JSON)");
  add_coin(switch_equiv, "X");
  CLI::Option* se_carrier = add_carrier(switch_equiv);
  switch_equiv->add_option("--tolerance", opt.tolerance, "equivalence tolerance");
  switch_equiv->add_flag("--expect-equivalent", opt.expect_equivalent,
                         "exit 1 if the verdict is not-equivalent");
  add_out(switch_equiv);

  CLI::App* spatial_run =
      app.add_subcommand("spatial-run", "evolve carrier + control through coin-augmented hops");
  add_channels(spatial_run, "channel/extension spec (JSON)");
  add_coin(spatial_run, "X");
  add_carrier(spatial_run);
  spatial_run->add_option("--hops", opt.hops, "number of hops (default 1)");
  add_out(spatial_run);

  CLI::App* switch_run =
      app.add_subcommand("switch-run", "apply the quantum switch of two channels");
  add_channels(switch_run, "channel spec (JSON)");
  add_carrier(switch_run);
  add_out(switch_run);

  CLI::App* walk_hybrid = app.add_subcommand(
      "walk-hybrid", "hop evolution plus the vacuum-amplitude cross-term predicate");
  add_channels(walk_hybrid, "channel/extension spec (JSON)");
  add_coin(walk_hybrid, "X");
  add_carrier(walk_hybrid);
  walk_hybrid->add_option("--hops", opt.hops, "number of hops (default 2)");
  add_out(walk_hybrid);

  CLI::App* eb_demo = app.add_subcommand(
      "eb-demo", "heralded correction through a switch of entanglement-breaking channels");
  CLI::Option* eb_e = eb_demo->add_option("--channel-e", opt.channel_e,
                                          "first channel spec (default: built-in eb_xz)");
  CLI::Option* eb_d = eb_demo->add_option("--channel-d", opt.channel_d,
                                          "second channel spec (default: built-in eb_xz)");
  add_carrier(eb_demo);
  eb_demo->add_option("--tolerance", opt.tolerance, "correction tolerance");
  add_out(eb_demo);

  CLI::App* dtqw = app.add_subcommand("dtqw", "1-D discrete-time quantum walk (CSV output)");
  dtqw->add_option("--steps", opt.steps, "number of walk steps")->required();
  add_coin(dtqw, "H");
  dtqw->add_option("--coin-state", opt.coin_state,
                   "initial coin state: 0, 1, balanced, or a JSON 2-vector file (default 0)");
  add_out(dtqw);

  CLI::App* sweep =
      app.add_subcommand("sweep", "seeded random-channel equivalence sweep with aggregates");
  sweep->add_option("--trials", opt.trials, "number of random trials")->required();
  sweep->add_option("--seed", opt.seed, "RNG seed")->required();
  sweep->add_option("--dim", opt.dim, "carrier dimension (default 2)");
  sweep->add_option("--kraus-count", opt.kraus_count,
                    "Kraus operators per random channel (default 1 = Haar unitaries)");
  add_coin(sweep, "X");
  sweep->add_option("--tolerance", opt.tolerance, "equivalence tolerance");
  sweep->add_flag("--expect-equivalent", opt.expect_equivalent,
                  "exit 1 if any trial is not equivalent");
  add_out(sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (switch_equiv->parsed()) return run_switch_equiv(opt, se_carrier->count() > 0);
    if (spatial_run->parsed()) {
      if (spatial_run->count("--hops") == 0) opt.hops = 1;
      return run_spatial_run(opt);
    }
    if (switch_run->parsed()) return run_switch_run(opt);
    if (walk_hybrid->parsed()) return run_walk_hybrid(opt);
    if (eb_demo->parsed()) return run_eb_demo(opt, eb_e->count() > 0, eb_d->count() > 0);
    if (dtqw->parsed()) {
      if (dtqw->count("--coin") == 0) opt.coin = "H";
      return run_dtqw(opt);
    }
    if (sweep->parsed()) return run_sweep(opt);
  } catch (const qpaths::SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
