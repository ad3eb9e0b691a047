#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <tuple>

#include <CLI11.hpp>

#include "msy/csv.hpp"
#include "msy/runconfig.hpp"
#include "msy/verify.hpp"
#include "msy/wavefn.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPhysics = 1;
constexpr int kExitUsage = 2;

struct CommonOpts {
    std::string config_path;
    std::string out_path;
    std::string limit;
    std::string choice;
    std::string branch;
    bool no_timestamp = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool config_required = true) {
    auto* c = cmd->add_option("--config", opts.config_path, "configuration file (key = value)");
    if (config_required) c->required();
    cmd->add_option("--out", opts.out_path, "output path (default: config 'output' or stdout)");
    cmd->add_option("--limit", opts.limit, "override symmetry limit")
        ->check(CLI::IsMember({"pseudospin", "spin"}));
    cmd->add_option("--choice", opts.choice, "override potential choice")
        ->check(CLI::IsMember({"first", "second"}));
    cmd->add_option("--branch", opts.branch, "override branch policy")
        ->check(CLI::IsMember({"auto", "plus", "minus"}));
    cmd->add_flag("--no-timestamp", opts.no_timestamp, "omit the timestamp metadata line");
}

msy::RunConfig load_config(const CommonOpts& opts) {
    msy::RunConfig cfg =
        opts.config_path.empty() ? msy::RunConfig{} : msy::RunConfig::load(opts.config_path);
    if (opts.limit == "pseudospin") cfg.spec.limit = msy::SymmetryLimit::pseudospin;
    if (opts.limit == "spin") cfg.spec.limit = msy::SymmetryLimit::spin;
    if (opts.choice == "first") cfg.spec.choice = msy::PotentialChoice::first;
    if (opts.choice == "second") cfg.spec.choice = msy::PotentialChoice::second;
    if (opts.branch == "auto") cfg.branch = msy::BranchPolicy::automatic;
    if (opts.branch == "plus") cfg.branch = msy::BranchPolicy::plus;
    if (opts.branch == "minus") cfg.branch = msy::BranchPolicy::minus;
    cfg.params.validate();
    cfg.spec.validate();
    return cfg;
}

// stream selection: file when a path is configured, stdout otherwise
class OutputTarget {
  public:
    OutputTarget(const CommonOpts& opts, const msy::RunConfig& cfg) {
        const std::string path = !opts.out_path.empty() ? opts.out_path : cfg.output_path;
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw msy::config_error("cannot open output file " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

std::string fmt(double v) { return msy::format_number(v); }

int cmd_energies(const CommonOpts& opts) {
    const auto cfg = load_config(opts);
    struct Key {
        int n, akappa, sgn;
        double H;
        auto tie() const { return std::make_tuple(n, akappa, sgn, H); }
    };
    struct Row {
        msy::QuantumState q;
        double H;
    };
    std::vector<Row> rows;
    for (int n : cfg.n_list)
        for (int kappa : cfg.kappa_list)
            for (double H : cfg.H_list) rows.push_back({{n, kappa}, H});
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        const Key ka{a.q.n, std::abs(a.q.kappa), a.q.kappa > 0 ? 1 : -1, a.H};
        const Key kb{b.q.n, std::abs(b.q.kappa), b.q.kappa > 0 ? 1 : -1, b.H};
        return ka.tie() < kb.tie();
    });

    OutputTarget out(opts, cfg);
    msy::CsvWriter csv(out.stream());
    csv.metadata("command", "energies");
    csv.metadata("limit", msy::to_string(cfg.spec.limit));
    csv.metadata("choice", msy::to_string(cfg.spec.choice));
    csv.metadata("tail", msy::to_string(cfg.spec.tail));
    csv.timestamp(!opts.no_timestamp);
    csv.header({"limit", "choice", "n", "kappa", "label", "H", "E_fm_inv", "branch", "residual",
                "status"});

    bool any_failed = false;
    for (const auto& row : rows) {
        msy::SymmetrySpec spec = cfg.spec;
        spec.H = row.H;
        std::vector<std::string> cells{msy::to_string(cfg.spec.limit),
                                       msy::to_string(cfg.spec.choice),
                                       std::to_string(row.q.n),
                                       std::to_string(row.q.kappa),
                                       row.q.label(),
                                       fmt(row.H)};
        try {
            msy::SolveOptions so;
            so.branch = cfg.branch;
            const auto bs = msy::solve_energy(row.q, cfg.params, spec, so);
            cells.push_back(fmt(bs.E));
            cells.push_back(msy::to_string(bs.branch));
            cells.push_back(fmt(bs.residual_at_E));
            cells.push_back("ok");
        } catch (const msy::no_bound_state_error&) {
            any_failed = true;
            cells.insert(cells.end(), {"nan", "", "nan", "no-root"});
        }
        csv.row(cells);
    }
    return any_failed ? kExitPhysics : kExitOk;
}

struct SweepOpts {
    std::string param;
    double from = 0.0, to = 0.0;
    int steps = 1;
};

int cmd_sweep(const CommonOpts& opts, const SweepOpts& sw) {
    auto cfg = load_config(opts);
    const double H0 = cfg.H_list.empty() ? 0.0 : cfg.H_list.front();

    OutputTarget out(opts, cfg);
    msy::CsvWriter csv(out.stream());
    csv.metadata("command", "sweep");
    csv.metadata("parameter", sw.param);
    csv.timestamp(!opts.no_timestamp);

    std::vector<std::string> header{sw.param};
    std::vector<msy::QuantumState> states;
    for (int n : cfg.n_list)
        for (int kappa : cfg.kappa_list) {
            states.push_back({n, kappa});
            header.push_back("E_n" + std::to_string(n) + "_k"
                             + (kappa > 0 ? "p" : "m") + std::to_string(std::abs(kappa)));
        }
    csv.header(header);

    bool any_failed = false;
    for (int i = 0; i < sw.steps; ++i) {
        const double value =
            sw.steps == 1 ? sw.from : sw.from + (sw.to - sw.from) * i / (sw.steps - 1);
        msy::PotentialParams p = cfg.params;
        msy::SymmetrySpec s = cfg.spec;
        s.H = H0;
        if (sw.param == "alpha") p.alpha = value;
        else if (sw.param == "V0") p.V0 = value;
        else if (sw.param == "V1") p.V1 = value;
        else if (sw.param == "H") s.H = value;
        else if (sw.param == "sym_const") s.sym_const = value;
        else if (sw.param == "M") s.M = value;

        std::vector<std::string> cells{fmt(value)};
        for (const auto& q : states) {
            try {
                msy::SolveOptions so;
                so.branch = cfg.branch;
                cells.push_back(fmt(msy::solve_energy(q, p, s, so).E));
            } catch (const msy::no_bound_state_error&) {
                any_failed = true;
                cells.push_back("nan");
            }
        }
        csv.row(cells);
    }
    return any_failed ? kExitPhysics : kExitOk;
}

struct WavefunctionOpts {
    int n = 0;
    int kappa = -1;
    std::optional<double> H;
    std::optional<double> r_min, r_max;
    std::optional<int> points;
};

int cmd_wavefunction(const CommonOpts& opts, const WavefunctionOpts& wf) {
    auto cfg = load_config(opts);
    msy::SymmetrySpec spec = cfg.spec;
    spec.H = wf.H ? *wf.H : (cfg.H_list.empty() ? 0.0 : cfg.H_list.front());
    msy::RadialGrid grid = cfg.grid;
    if (wf.r_min) grid.r_min = *wf.r_min;
    if (wf.r_max) grid.r_max = *wf.r_max;
    if (wf.points) grid.points = *wf.points;

    const msy::QuantumState q{wf.n, wf.kappa};
    msy::SolveOptions so;
    so.branch = cfg.branch;
    const auto bs = msy::solve_energy(q, cfg.params, spec, so);
    const auto sol = msy::solve_components(bs, grid);

    OutputTarget out(opts, cfg);
    msy::CsvWriter csv(out.stream());
    csv.metadata("command", "wavefunction");
    csv.metadata("state", q.label());
    csv.metadata("limit", msy::to_string(spec.limit));
    csv.metadata("choice", msy::to_string(spec.choice));
    csv.metadata("H", fmt(spec.H));
    csv.metadata("E_fm_inv", fmt(bs.E));
    csv.metadata("branch", msy::to_string(bs.branch));
    csv.metadata("degree", std::to_string(bs.degree));
    csv.metadata("exp1", fmt(sol.spec.exp1));
    csv.metadata("exp2", fmt(sol.spec.exp2));
    csv.metadata("jacobi_a", fmt(sol.spec.jacobi_a));
    csv.metadata("jacobi_b", fmt(sol.spec.jacobi_b));
    csv.metadata("jacobi_arg_in_range", sol.spec.jacobi_arg_in_range ? "yes" : "no");
    csv.metadata("norm", fmt(sol.spec.norm));
    csv.timestamp(!opts.no_timestamp);
    csv.header({"r", "F", "G"});
    for (std::size_t i = 0; i < sol.r.size(); ++i)
        csv.row({fmt(sol.r[i]), fmt(sol.upper[i]), fmt(sol.lower[i])});
    return kExitOk;
}

std::optional<int> match_benchmark(const msy::RunConfig& cfg) {
    for (int table = 1; table <= 4; ++table) {
        const auto bench = msy::benchmark_config(table);
        if (cfg.params == bench.params && cfg.spec == bench.spec) return table;
    }
    return std::nullopt;
}

int cmd_verify(const CommonOpts& opts, const std::string& suite) {
    std::optional<int> only_table;
    if (!opts.config_path.empty()) only_table = match_benchmark(load_config(opts));

    std::vector<msy::verify::CheckResult> results;
    if (suite == "tables") {
        results = msy::verify::tables();
    } else if (suite == "riccati") {
        results = msy::verify::riccati();
    } else if (suite == "shape-invariance") {
        results = msy::verify::shape_invariance();
    } else if (suite == "oracle") {
        results = msy::verify::oracle_agreement();
    } else if (suite == "degeneracy") {
        results = msy::verify::degeneracy();
    }
    if (only_table) {
        const std::string tag = "table " + std::to_string(*only_table);
        std::erase_if(results, [&](const msy::verify::CheckResult& r) {
            return r.name.find("table") != std::string::npos
                   && r.name.find(tag) == std::string::npos;
        });
    }
    bool pass = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " — " << r.detail << "\n";
        pass = pass && r.pass;
    }
    std::cout << (pass ? "all checks passed" : "CHECKS FAILED") << " (" << results.size()
              << " checks)\n";
    return pass ? kExitOk : kExitPhysics;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dirac bound states of the Mobius-square plus (quasi-)Yukawa potential "
                 "with a Coulomb-like tensor term"};
    app.require_subcommand(1);

    CommonOpts en_opts, sw_opts_c, wf_opts_c, vf_opts;
    SweepOpts sw;
    WavefunctionOpts wf;
    std::string suite;

    auto* energies = app.add_subcommand("energies", "bound-state energies for all configured states");
    add_common(energies, en_opts);

    auto* sweep = app.add_subcommand("sweep", "energy curves along one parameter");
    add_common(sweep, sw_opts_c);
    sweep->add_option("--param", sw.param, "parameter to sweep")
        ->required()
        ->check(CLI::IsMember({"alpha", "V0", "V1", "H", "sym_const", "M"}));
    sweep->add_option("--from", sw.from, "first value")->required();
    sweep->add_option("--to", sw.to, "last value")->required();
    sweep->add_option("--steps", sw.steps, "number of samples")->required()
        ->check(CLI::PositiveNumber);

    auto* wavefn = app.add_subcommand("wavefunction", "normalized radial spinor components");
    add_common(wavefn, wf_opts_c);
    wavefn->add_option("--n", wf.n, "radial quantum number")->required();
    wavefn->add_option("--kappa", wf.kappa, "spin-orbit quantum number")->required();
    wavefn->add_option("--H", wf.H, "tensor strength (default: first H_list entry)");
    wavefn->add_option("--r-min", wf.r_min, "grid start (fm)");
    wavefn->add_option("--r-max", wf.r_max, "grid end (fm)");
    wavefn->add_option("--points", wf.points, "grid points");

    auto* verify = app.add_subcommand("verify", "self-checks against the benchmark tables");
    add_common(verify, vf_opts, /*config_required=*/false);
    verify->add_option("suite", suite, "one of: tables, riccati, shape-invariance, oracle, degeneracy")
        ->required()
        ->check(CLI::IsMember({"tables", "riccati", "shape-invariance", "oracle", "degeneracy"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (energies->parsed()) return cmd_energies(en_opts);
        if (sweep->parsed()) return cmd_sweep(sw_opts_c, sw);
        if (wavefn->parsed()) return cmd_wavefunction(wf_opts_c, wf);
        if (verify->parsed()) return cmd_verify(vf_opts, suite);
    } catch (const msy::config_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPhysics;
    }
    return kExitUsage;
}
