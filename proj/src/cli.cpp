#include "qwalk/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "qwalk/oracle.hpp"
#include "qwalk/report.hpp"
#include "qwalk/serialize.hpp"

namespace qwalk {

namespace {

namespace fs = std::filesystem;

std::string fmt3(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

void write_file(const std::string& dir, const std::string& name,
                const std::string& content) {
    fs::create_directories(dir);
    const fs::path path = fs::path(dir) / name;
    std::ofstream f(path);
    if (!f) throw ConfigError("cannot write output file '" + path.string() + "'");
    f << content;
}

std::vector<std::pair<Position, double>> ensemble_histogram(const CompositeEnsemble& e) {
    std::map<Position, double> acc;
    for (const auto& [w, st] : e.branches()) {
        for (const auto& [m, p] : histogram(st)) acc[m] += w * p;
    }
    return {acc.begin(), acc.end()};
}

struct CommonArgs {
    std::string config_path;
    std::string out_dir = ".";
    std::string grid_text;
    std::uint64_t seed = 42;
    double tie_tol = 1e-9;
};

RunConfig load(const CommonArgs& args) {
    if (args.config_path.empty()) throw ConfigError("--config <file> is required");
    RunConfig cfg = load_config(args.config_path);
    if (!args.grid_text.empty()) {
        const auto [nt, np] = parse_grid(args.grid_text);
        cfg.grid_theta = nt;
        cfg.grid_phi = np;
    }
    return cfg;
}

const CoinDensity& require_home(const RunConfig& cfg) {
    if (!cfg.home) throw ConfigError("config needs a 'home' state");
    return *cfg.home;
}

void emit_histogram(const std::string& dir, const std::string& stem,
                    const std::vector<std::pair<Position, double>>& rows, bool svg) {
    std::ostringstream csv;
    write_histogram_csv(csv, rows);
    write_file(dir, stem + ".csv", csv.str());
    if (svg) write_file(dir, stem + ".svg", histogram_svg(rows));
}

int cmd_run(const CommonArgs& args, std::ostream& out) {
    const RunConfig cfg = load(args);
    const CoinDensity& home = require_home(cfg);
    if (cfg.walk) {
        const auto rows = ensemble_histogram(run_mixed(*cfg.walk, home));
        emit_histogram(args.out_dir, "histogram", rows, cfg.svg);
        out << "histogram over " << rows.size() << " positions written to "
            << args.out_dir << "/histogram.csv\n";
        return 0;
    }
    if (cfg.steps.empty()) {
        throw ConfigError("run needs either a 'walk' or family 'steps'");
    }
    const long long n_from = cfg.has_n_range ? cfg.n_from : cfg.cycles;
    const long long n_to = cfg.has_n_range ? cfg.n_to : cfg.cycles;
    int files = 0;
    for (long long n = n_from; n <= n_to; ++n) {
        const WalkFamily fam = build_family(cfg.steps, n);
        for (size_t i = 0; i < fam.walks.size(); ++i) {
            const auto rows = ensemble_histogram(run_mixed(fam.walks[i], home));
            std::ostringstream stem;
            stem << "hist_w" << i + 1 << "_n" << n;
            emit_histogram(args.out_dir, stem.str(), rows, cfg.svg);
            ++files;
        }
    }
    out << files << " histograms written to " << args.out_dir << "\n";
    return 0;
}

void print_analysis(std::ostream& out, int index, const CoinObservableAnalysis& a) {
    const auto entry = [](cplx z) {
        std::ostringstream ss;
        ss << fmt3(z.real());
        if (std::abs(z.imag()) >= 5e-4) {
            ss << (z.imag() < 0 ? "-" : "+") << fmt3(std::abs(z.imag())) << "i";
        }
        return ss.str();
    };
    out << "walk " << index << " reduced coin operator:\n";
    out << "  [ " << entry(a.o_matrix.m00) << "  " << entry(a.o_matrix.m01) << " ]\n";
    out << "  [ " << entry(a.o_matrix.m10) << "  " << entry(a.o_matrix.m11) << " ]\n";
    out << "  o_max = " << fmt3(a.o_max) << "  v_max = (" << entry(a.v_max.a0()) << ", "
        << entry(a.v_max.a1()) << ")\n";
    out << "  o_min = " << fmt3(a.o_min) << "  v_min = (" << entry(a.v_min.a0()) << ", "
        << entry(a.v_min.a1()) << ")\n";
    if (a.degenerate()) {
        out << "  degenerate: every home state pays " << fmt3(0.5 * (a.o_max + a.o_min))
            << "\n";
    } else {
        out << "  Omega = " << fmt3(*a.omega_cap) << "\n";
    }
}

int cmd_analyze(const CommonArgs& args, std::ostream& out) {
    const RunConfig cfg = load(args);
    std::vector<Walk> walks;
    if (cfg.walk) {
        walks.push_back(*cfg.walk);
    } else if (!cfg.steps.empty()) {
        walks = build_family(cfg.steps, cfg.cycles).walks;
    } else {
        throw ConfigError("analyze needs either a 'walk' or family 'steps'");
    }
    std::ostringstream csv;
    csv << "walk_index,m00_re,m00_im,m01_re,m01_im,m10_re,m10_im,m11_re,m11_im,"
           "o_max,o_min,vmax_a0_re,vmax_a0_im,vmax_a1_re,vmax_a1_im,Omega\n";
    for (size_t i = 0; i < walks.size(); ++i) {
        const CoinObservableAnalysis a = analyze(cfg.observable, walks[i], cfg.omega);
        print_analysis(out, static_cast<int>(i) + 1, a);
        const Mat2& m = a.o_matrix;
        csv << i + 1;
        for (cplx z : {m.m00, m.m01, m.m10, m.m11}) {
            csv << ',' << fmt12(z.real()) << ',' << fmt12(z.imag());
        }
        csv << ',' << fmt12(a.o_max) << ',' << fmt12(a.o_min);
        csv << ',' << fmt12(a.v_max.a0().real()) << ',' << fmt12(a.v_max.a0().imag());
        csv << ',' << fmt12(a.v_max.a1().real()) << ',' << fmt12(a.v_max.a1().imag());
        csv << ',' << (a.degenerate() ? std::string("nan") : fmt12(*a.omega_cap)) << '\n';
    }
    write_file(args.out_dir, "analyze.csv", csv.str());
    return 0;
}

int cmd_regions(const CommonArgs& args, std::ostream& out) {
    const RunConfig cfg = load(args);
    if (cfg.steps.empty()) throw ConfigError("regions needs family 'steps'");
    const WalkFamily fam = build_family(cfg.steps, cfg.cycles);
    const RegionMap map = region_map(fam, cfg.observable, cfg.omega, cfg.grid_theta,
                                     cfg.grid_phi, args.tie_tol);
    std::ostringstream csv;
    write_region_csv(csv, map);
    write_file(args.out_dir, "regions.csv", csv.str());
    std::ostringstream caps_csv;
    write_caps_csv(caps_csv, region_caps(fam, cfg.observable, cfg.omega));
    write_file(args.out_dir, "caps.csv", caps_csv.str());
    if (cfg.svg) write_file(args.out_dir, "regions.svg", region_svg(map, cfg.marks));

    size_t parrondo_nodes = 0;
    for (const auto& n : map.nodes) parrondo_nodes += n.parrondo ? 1 : 0;
    out << "label vectors present:";
    for (const auto& l : map.distinct_labels()) out << ' ' << l;
    out << "\n" << parrondo_nodes << " of " << map.nodes.size()
        << " grid nodes are Parrondo states\n";
    return 0;
}

int cmd_persist(const CommonArgs& args, std::ostream& out) {
    const RunConfig cfg = load(args);
    if (cfg.steps.empty()) throw ConfigError("persist needs family 'steps'");
    if (!cfg.has_n_range) throw ConfigError("persist needs an 'n_range'");
    const CoinDensity& home = require_home(cfg);
    const PersistenceScan scan = persistence_scan(cfg.steps, cfg.observable, cfg.omega,
                                                  home, cfg.n_from, cfg.n_to,
                                                  args.tie_tol);
    std::ostringstream csv;
    write_persistence_csv(csv, scan);
    write_file(args.out_dir, "persist.csv", csv.str());
    if (cfg.svg) write_file(args.out_dir, "persist.svg", persistence_svg(scan));

    out << "parrondo flag per n:";
    for (const auto& row : scan.rows) out << ' ' << (row.parrondo ? '+' : '-');
    out << "\npersistent over scanned range: " << (scan.persistent ? "yes" : "no")
        << "\n";
    if (cfg.n_from < cfg.n_to) {
        out << "commutation diagnostic [o_i(" << cfg.n_from << "), o_i(" << cfg.n_to
            << ")] Frobenius norms:";
        for (double nrm : commutation_diagnostic(cfg.steps, cfg.observable, cfg.n_from,
                                                 cfg.n_to)) {
            out << ' ' << fmt3(nrm);
        }
        out << "\n";
    }
    return 0;
}

int cmd_design(const CommonArgs& args, std::ostream& out) {
    const RunConfig cfg = load(args);
    if (!cfg.design) throw ConfigError("design needs a 'design' block");
    std::vector<GeneralStep> steps;
    try {
        steps = design_daisy_chain(*cfg.design);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    nlohmann::json j = nlohmann::json::array();
    for (const auto& s : steps) j.push_back(step_to_json(QuantumStep(s)));
    write_file(args.out_dir, "design_steps.json", j.dump(2) + "\n");
    const ParrondoCap cap = parrondo_cap(steps);
    out << "steps:\n" << j.dump(2) << "\n";
    out << "threshold: |<target|s>|^2 > " << cap.threshold_num << "/"
        << cap.threshold_den << " (" << fmt3(cap.threshold()) << ")\n";
    out << "nu_max: " << fmt3(cap.nu_max) << " rad\n";
    return 0;
}

int cmd_oracle(const CommonArgs& args, long long trials, std::ostream& out) {
    const OracleReport report = run_oracle(args.seed, trials);
    print_oracle_report(out, report);
    return report.all_pass() ? 0 : 2;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"discrete-time quantum walks with biased steps: payoff games, "
                 "Bloch-sphere classification and Parrondo-state tools"};
    app.require_subcommand(1);
    app.fallthrough();

    CommonArgs common;
    long long trials = 1000;
    app.add_option("--config", common.config_path, "JSON config file");
    app.add_option("--seed", common.seed, "RNG seed for randomized suites");
    app.add_option("--out", common.out_dir, "output directory");
    app.add_option("--tie-tol", common.tie_tol, "numeric band treated as a tie");
    app.add_option("--grid", common.grid_text, "region grid as <n_theta>x<n_phi>");

    CLI::App* run = app.add_subcommand("run", "run a walk and write histograms");
    CLI::App* analyze_cmd =
        app.add_subcommand("analyze", "reduced coin operator, eigenpairs and Omega");
    CLI::App* regions =
        app.add_subcommand("regions", "classify the Bloch sphere per walk family");
    CLI::App* persist =
        app.add_subcommand("persist", "payoffs and Parrondo flag over a cycle range");
    CLI::App* design =
        app.add_subcommand("design", "build daisy-chained steps for a target state");
    CLI::App* oracle = app.add_subcommand("oracle", "randomized property suites");
    oracle->add_option("--trials", trials, "randomized case count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (run->parsed()) return cmd_run(common, out);
        if (analyze_cmd->parsed()) return cmd_analyze(common, out);
        if (regions->parsed()) return cmd_regions(common, out);
        if (persist->parsed()) return cmd_persist(common, out);
        if (design->parsed()) return cmd_design(common, out);
        if (oracle->parsed()) return cmd_oracle(common, trials, out);
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace qwalk
