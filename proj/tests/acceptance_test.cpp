/******************************************************************************
 * Copyright 2026 The glct Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
 * @file acceptance_test.cpp
 * @brief Release gate: every criterion prints one PASS/FAIL line.
 *
 * Exit code is the number of failed criteria. Tolerances are pinned below;
 * runtime and memory bounds are enforced on a child process so the large
 * run measures the CLI as shipped.
 *****************************************************************************/
#include <fcntl.h>
#include <sys/resource.h>
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "glct/glct.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

// Pinned gate tolerances and bounds.
constexpr double kTolUnitarityPerN = 1e-9;
constexpr double kTolInverseRel = 1e-9;
constexpr double kTolReduction = 1e-10;
constexpr double kTolCycleOracle = 1e-8;
constexpr double kTolDft = 1e-10;
constexpr double kTolOps = 1e-9;
constexpr double kTolRestrictedAdditivity = 1e-9;
constexpr double kTolScalingInvariance = 1e-10;
constexpr double kTolGfrftAdditivity = 1e-9;
constexpr double kMaxSweepSeconds = 60.0;
constexpr double kMaxLargeSeconds = 180.0;
constexpr long kMaxLargeRssKb = 2L * 1024 * 1024;
constexpr double kTolLargeDefectPerN = 1e-9;
constexpr Eigen::Index kLargeN = 2642;

int g_failures = 0;
fs::path g_workdir;

void report(int id, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %d: %s\n", pass ? "PASS" : "FAIL", id, detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

std::string params_text(const glct::LctParams& p) {
    return glct::format_double(p.a) + "," + glct::format_double(p.b) + "," +
           glct::format_double(p.c) + "," + glct::format_double(p.d);
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct CliResult {
    int exit_code = -1;
    double wall_seconds = 0.0;
    long max_rss_kb = 0;
};

/// Runs the CLI in a child process with GLCT_CACHE_DIR set, capturing exit
/// code, wall time, and peak RSS. Output goes to a log file in the work dir.
CliResult run_cli(const std::vector<std::string>& args, const std::string& cache_dir,
                  const std::string& log_name) {
    std::vector<std::string> full;
    full.emplace_back(GLCT_CLI_PATH);
    full.insert(full.end(), args.begin(), args.end());
    std::vector<char*> argv;
    argv.reserve(full.size() + 1);
    for (std::string& s : full) argv.push_back(s.data());
    argv.push_back(nullptr);

    const fs::path log_path = g_workdir / log_name;
    const auto t0 = std::chrono::steady_clock::now();
    const pid_t pid = ::fork();
    if (pid == 0) {
        if (!cache_dir.empty()) ::setenv("GLCT_CACHE_DIR", cache_dir.c_str(), 1);
        const int fd = ::open(log_path.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0644);
        if (fd >= 0) {
            ::dup2(fd, 1);
            ::dup2(fd, 2);
            ::close(fd);
        }
        ::execv(GLCT_CLI_PATH, argv.data());
        ::_exit(127);
    }
    CliResult r;
    if (pid < 0) return r;
    int status = 0;
    struct rusage ru {};
    ::wait4(pid, &status, 0, &ru);
    r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.max_rss_kb = ru.ru_maxrss;
    return r;
}

std::vector<std::pair<std::string, glct::Graph>> sweep_graphs(Eigen::Index n, glct::Rng& rng) {
    std::vector<std::pair<std::string, glct::Graph>> graphs;
    graphs.emplace_back("cycle", glct::cycle_graph(n));
    graphs.emplace_back("path", glct::path_graph(n));
    for (double p : {0.25, 0.35, 0.45, 0.3})
        graphs.emplace_back("er", glct::erdos_renyi_graph(n, p, rng));
    const double radius = std::sqrt(6.0 / (std::numbers::pi * static_cast<double>(n)));
    for (int k = 0; k < 4; ++k)
        graphs.emplace_back("geo", glct::geometric_graph(n, std::min(1.0, radius * (1.0 + 0.2 * k)), rng));
    return graphs;
}

/// Criteria 1 and 2 share one sweep: 4 sizes x 10 graphs x 10 parameter sets.
void criteria_unitarity_and_inverse() {
    int combos = 0;
    double worst_defect_ratio = 0.0;
    double worst_inverse_ratio = 0.0;
    const auto t0 = std::chrono::steady_clock::now();
    for (Eigen::Index n : {8, 16, 32, 64}) {
        glct::Rng rng(1000 + static_cast<std::uint64_t>(n));
        for (auto& [label, g] : sweep_graphs(n, rng)) {
            (void)label;
            for (int k = 0; k < 10; ++k) {
                const glct::LctParams p = glct::random_params(rng);
                const glct::GlctOperator op = glct::glct_operator(g, p);
                worst_defect_ratio =
                    std::max(worst_defect_ratio,
                             glct::unitarity_defect(op.matrix) / static_cast<double>(n));
                const glct::GraphSignal s = glct::random_signal(n, rng);
                const glct::GraphSignal back = glct::iglct(g, glct::glct(g, s, p), p);
                const double scale = std::max(1e-300, glct::max_abs(s.values));
                worst_inverse_ratio =
                    std::max(worst_inverse_ratio,
                             glct::max_abs(Eigen::VectorXcd(back.values - s.values)) / scale);
                ++combos;
            }
        }
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(1,
           combos >= 400 && worst_defect_ratio <= kTolUnitarityPerN &&
               elapsed <= kMaxSweepSeconds,
           "unitarity: " + std::to_string(combos) + " (graph, params) combos, max defect/N = " +
               num(worst_defect_ratio) + " (tol " + num(kTolUnitarityPerN) + "), sweep " +
               num(elapsed) + "s (limit " + num(kMaxSweepSeconds) + "s)");
    report(2, worst_inverse_ratio <= kTolInverseRel,
           "inverse identity: max |iglct(glct(s)) - s| / |s| = " + num(worst_inverse_ratio) +
               " (tol " + num(kTolInverseRel) + ") over the same sweep");
}

void criterion_reductions() {
    glct::Rng rng(3000);
    std::vector<glct::Graph> graphs;
    graphs.push_back(glct::cycle_graph(16));
    graphs.push_back(glct::path_graph(16));
    graphs.push_back(glct::erdos_renyi_graph(32, 0.3, rng));
    graphs.push_back(glct::erdos_renyi_graph(64, 0.15, rng));
    graphs.push_back(glct::cycle_graph(64));
    graphs.push_back(glct::path_graph(64));
    double worst = 0.0;
    for (const glct::Graph& g : graphs) {
        const Eigen::Index n = g.n();
        const Eigen::MatrixXcd identity_op = glct::glct_operator(g, glct::identity_params()).matrix;
        worst = std::max(worst, glct::max_abs(Eigen::MatrixXcd(
                                    identity_op - Eigen::MatrixXcd::Identity(n, n))));
        const Eigen::MatrixXcd gft_op =
            glct::glct_operator(g, glct::LctParams{0.0, 1.0, -1.0, 0.0}).matrix;
        worst = std::max(worst, glct::max_abs(Eigen::MatrixXcd(gft_op - glct::gft_matrix(g))));
        for (double order : {0.3, 0.7, 1.4}) {
            const Eigen::MatrixXcd frac_op =
                glct::glct_operator(g, glct::rotation_params(order * std::numbers::pi / 2.0))
                    .matrix;
            worst = std::max(
                worst, glct::max_abs(Eigen::MatrixXcd(frac_op - glct::gfrft_matrix(g, order))));
        }
    }
    report(3, worst <= kTolReduction,
           "GFrFT/GFT/identity reductions: max deviation = " + num(worst) + " (tol " +
               num(kTolReduction) + ") across " + std::to_string(graphs.size()) + " graphs");
}

void criterion_cycle_oracle() {
    double worst_lct = 0.0;
    double worst_dft = 0.0;
    for (Eigen::Index n : {4, 8, 16}) {
        glct::Rng rng(400 + static_cast<std::uint64_t>(n));
        const glct::Graph g = glct::cycle_graph(n);
        worst_dft = std::max(worst_dft, glct::max_abs(Eigen::MatrixXcd(
                                            glct::gft_matrix(g) - glct::canonical_dft_matrix(n))));
        for (int k = 0; k < 10; ++k) {
            const glct::LctParams p = glct::random_params(rng);
            worst_lct = std::max(worst_lct,
                                 glct::max_abs(Eigen::MatrixXcd(glct::glct_operator(g, p).matrix -
                                                                glct::dlct_reference(n, p))));
        }
    }
    report(4, worst_lct <= kTolCycleOracle && worst_dft <= kTolDft,
           "cycle graph vs DLCT reference: max operator deviation = " + num(worst_lct) +
               " (tol " + num(kTolCycleOracle) + "), GFT vs unitary DFT = " + num(worst_dft) +
               " (tol " + num(kTolDft) + ")");
}

void criterion_signal_ops() {
    glct::Rng rng(5000);
    std::vector<glct::Graph> graphs;
    graphs.push_back(glct::erdos_renyi_graph(16, 0.4, rng));
    graphs.push_back(glct::erdos_renyi_graph(32, 0.25, rng));
    graphs.push_back(glct::cycle_graph(24));
    graphs.push_back(glct::path_graph(20));
    graphs.push_back(glct::geometric_graph(28, 0.45, rng));
    int draws = 0;
    double worst_conv = 0.0;
    double worst_trans = 0.0;
    for (const glct::Graph& g : graphs) {
        const Eigen::Index n = g.n();
        for (int k = 0; k < 10; ++k) {
            const glct::LctParams p = glct::random_params(rng);
            const glct::GraphSignal f = glct::random_signal(n, rng);
            const glct::GraphSignal h = glct::random_signal(n, rng);
            const Eigen::VectorXcd lhs =
                glct::glct(g, glct::glct_convolve(g, f, h, p), p).values;
            const Eigen::VectorXcd rhs =
                glct::glct(g, f, p).values.cwiseProduct(glct::glct(g, h, p).values);
            worst_conv = std::max(worst_conv, glct::max_abs(Eigen::VectorXcd(lhs - rhs)));

            const Eigen::Index i = static_cast<Eigen::Index>(k) % n;
            const glct::GlctOperator op = glct::glct_operator(g, p);
            const Eigen::VectorXcd t_lhs = glct::glct(g, glct::translate(g, f, i, p), p).values;
            const Eigen::VectorXcd t_rhs =
                std::sqrt(static_cast<double>(n)) *
                glct::glct(g, f, p).values.cwiseProduct(op.matrix.col(i));
            worst_trans = std::max(worst_trans, glct::max_abs(Eigen::VectorXcd(t_lhs - t_rhs)));
            ++draws;
        }
    }
    report(5, draws >= 50 && worst_conv <= kTolOps && worst_trans <= kTolOps,
           "convolution/translation identities: " + std::to_string(draws) +
               " draws, max convolution deviation = " + num(worst_conv) +
               ", max translation deviation = " + num(worst_trans) + " (tol " + num(kTolOps) +
               ")");
}

void criterion_restricted_additivity() {
    glct::Rng rng(6000);
    std::vector<glct::Graph> graphs;
    graphs.push_back(glct::erdos_renyi_graph(24, 0.3, rng));
    graphs.push_back(glct::cycle_graph(16));
    double worst = 0.0;
    for (const glct::Graph& g : graphs) {
        for (int k = 0; k < 5; ++k) {
            // Half-branch draws keep alpha1 + alpha2 inside (-pi, pi]: the
            // parameter matrix only determines alpha modulo 2 pi, and a wrap
            // shifts the fractional order by 4, which is visible on any
            // spectrum whose eigenvalue angles are not quarter-turns.
            const glct::LctParams p1 =
                glct::rotation_params(rng.uniform(-std::numbers::pi / 2.0, std::numbers::pi / 2.0));
            const glct::LctParams p2 = glct::params_from_decomposition(
                rng.uniform(-1.0, 1.0), 1.0,
                rng.uniform(-std::numbers::pi / 2.0, std::numbers::pi / 2.0));
            const Eigen::MatrixXcd chained =
                glct::glct_operator(g, p2).matrix * glct::glct_operator(g, p1).matrix;
            const Eigen::MatrixXcd composed =
                glct::glct_operator(g, glct::compose_params(p2, p1)).matrix;
            worst = std::max(worst, glct::max_abs(Eigen::MatrixXcd(chained - composed)));
        }
    }

    // General pairs have no additivity law; the CLI reports the measured
    // deviation without asserting it. Surface that number here.
    const fs::path graph_file = g_workdir / "compose_graph.csv";
    glct::save_graph_edge_list(graph_file.string(), glct::cycle_graph(16));
    const glct::LctParams g1 = glct::params_from_decomposition(0.4, 1.7, 0.8);
    const glct::LctParams g2 = glct::params_from_decomposition(0.3, 0.6, 1.1);
    const fs::path compose_out = g_workdir / "compose_general.json";
    const CliResult r = run_cli({"compose", "--params", params_text(g1), "--params2",
                                 params_text(g2), "--graph", graph_file.string(), "--format",
                                 "json", "--out", compose_out.string()},
                                "", "compose.log");
    std::string general = "unavailable";
    if (r.exit_code == 0) {
        const json c = json::parse(read_file(compose_out), nullptr, false);
        if (!c.is_discarded()) general = num(c["deviation_max_abs"].get<double>());
    }
    report(6, worst <= kTolRestrictedAdditivity,
           "restricted additivity (pure rotation then sigma=1, principal-branch angles): "
           "max deviation = " + num(worst) +
               " (tol " + num(kTolRestrictedAdditivity) +
               "); general-pair deviation reported by compose = " + general + " (not asserted)");
}

void criterion_scaling_invariance() {
    glct::Rng rng(7000);
    std::vector<glct::Graph> graphs;
    graphs.push_back(glct::cycle_graph(16));
    graphs.push_back(glct::erdos_renyi_graph(24, 0.3, rng));
    double worst = 0.0;
    for (const glct::Graph& g : graphs) {
        std::vector<Eigen::MatrixXcd> ops;
        for (double sigma : {0.5, 1.0, 2.0, 10.0})
            ops.push_back(glct::glct_operator(g, glct::params_from_decomposition(0.3, sigma, 0.7))
                              .matrix);
        for (std::size_t i = 0; i < ops.size(); ++i)
            for (std::size_t j = i + 1; j < ops.size(); ++j)
                worst = std::max(worst, glct::max_abs(Eigen::MatrixXcd(ops[i] - ops[j])));
    }
    report(7, worst <= kTolScalingInvariance,
           "scaling invariance (gft mode, sigma in {0.5, 1, 2, 10}): max pairwise deviation = " +
               num(worst) + " (tol " + num(kTolScalingInvariance) + ")");
}

void criterion_gfrft_additivity() {
    const glct::Graph g = glct::path_graph(16);
    const auto frac = [&](double order) {
        return glct::glct_operator(g, glct::rotation_params(order * std::numbers::pi / 2.0))
            .matrix;
    };
    const double worst =
        glct::max_abs(Eigen::MatrixXcd(frac(0.3) * frac(0.4) - frac(0.7)));
    report(8, worst <= kTolGfrftAdditivity,
           "fractional additivity F^0.3 F^0.4 = F^0.7 on the 16-vertex path: max deviation = " +
               num(worst) + " (tol " + num(kTolGfrftAdditivity) + ")");
}

bool check_plot_csv(const fs::path& csv, Eigen::Index n, bool with_coords, std::string& why) {
    std::ifstream in(csv);
    if (!in.good()) {
        why = "missing " + csv.string();
        return false;
    }
    std::string line;
    if (!std::getline(in, line)) {
        why = "empty " + csv.string();
        return false;
    }
    const std::string expected = with_coords
                                     ? "vertex_index,x,y,signal_re,signal_im,glct_re,glct_im"
                                     : "vertex_index,signal_re,signal_im,glct_re,glct_im";
    if (line != expected) {
        why = "bad header in " + csv.string() + ": " + line;
        return false;
    }
    const std::size_t fields = with_coords ? 7 : 5;
    Eigen::Index rows = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::size_t commas = 0;
        for (char ch : line)
            if (ch == ',') ++commas;
        if (commas + 1 != fields) {
            why = "bad row in " + csv.string() + ": " + line;
            return false;
        }
        ++rows;
    }
    if (rows != n) {
        why = csv.string() + " has " + std::to_string(rows) + " rows, expected " +
              std::to_string(n);
        return false;
    }
    return true;
}

bool check_sidecar_defect(const fs::path& meta, double tol, std::string& why) {
    const json sidecar = json::parse(read_file(meta), nullptr, false);
    if (sidecar.is_discarded() || !sidecar.contains("unitarity_defect")) {
        why = "bad sidecar " + meta.string();
        return false;
    }
    const double defect = sidecar["unitarity_defect"].get<double>();
    if (!(defect <= tol)) {
        why = meta.string() + " defect " + num(defect) + " > " + num(tol);
        return false;
    }
    return true;
}

/// Large-scale run: operator construction plus transform at N = 2642 through
/// the CLI within the time and memory bounds, then plot-data grids at
/// moderate scale with recorded defects.
void criterion_large_scale() {
    const std::string cache = (g_workdir / "cache").string();
    const std::string big_graph = (g_workdir / "big_graph.csv").string();
    const std::string big_xy = (g_workdir / "big_xy.csv").string();
    const std::string big_sig = (g_workdir / "big_sig.csv").string();
    std::string why;

    CliResult r = run_cli({"gen", "--kind", "graph:random", "--n", std::to_string(kLargeN),
                           "--seed", "77", "--out", big_graph, "--coords-out", big_xy},
                          cache, "gen_big_graph.log");
    if (r.exit_code != 0) {
        report(9, false, "large-scale run: graph generation failed (exit " +
                             std::to_string(r.exit_code) + ")");
        return;
    }
    r = run_cli({"gen", "--kind", "signal:bipolar-rect", "--n", std::to_string(kLargeN), "--out",
                 big_sig},
                cache, "gen_big_sig.log");
    if (r.exit_code != 0) {
        report(9, false, "large-scale run: signal generation failed");
        return;
    }

    // sigma decomposes to exactly 1.0 here, alpha stays fractional.
    const std::string big_out = (g_workdir / "big_out.csv").string();
    const CliResult big = run_cli({"transform", "--graph", big_graph, "--signal", big_sig,
                                   "--params", "0.6,0.8,-0.65,0.8", "--out", big_out},
                                  cache, "big_transform.log");
    const bool big_ok =
        big.exit_code == 0 && big.wall_seconds <= kMaxLargeSeconds && big.max_rss_kb <= kMaxLargeRssKb;
    std::string detail = "N = " + std::to_string(kLargeN) + " transform: exit " +
                         std::to_string(big.exit_code) + ", " + num(big.wall_seconds) +
                         "s (limit " + num(kMaxLargeSeconds) + "s), peak RSS " +
                         num(static_cast<double>(big.max_rss_kb) / (1024.0 * 1024.0)) +
                         " GiB (limit 2 GiB)";
    bool grids_ok = big_ok;
    if (big_ok && !check_sidecar_defect(fs::path(big_out + ".meta.json"),
                                        kTolLargeDefectPerN * static_cast<double>(kLargeN), why)) {
        grids_ok = false;
        detail += "; " + why;
    }

    if (grids_ok) {
        // Alpha sweep on a cycle fixture.
        const std::string cyc_graph = (g_workdir / "cyc128.csv").string();
        const std::string cyc_sig = (g_workdir / "cyc128_sig.csv").string();
        run_cli({"gen", "--kind", "graph:cycle", "--n", "128", "--out", cyc_graph}, cache,
                "gen_cyc.log");
        run_cli({"gen", "--kind", "signal:bipolar-rect", "--n", "128", "--window", "0,64",
                 "--out", cyc_sig},
                cache, "gen_cyc_sig.log");
        std::vector<std::string> alpha_args = {"plot-data", "--graph", cyc_graph,
                                               "--signal", cyc_sig, "--out",
                                               (g_workdir / "alpha_sweep").string()};
        for (double alpha : {0.3, 0.6, 0.9, 1.2, 1.5}) {
            alpha_args.push_back("--params");
            alpha_args.push_back(params_text(glct::params_from_decomposition(0.5, 1.0, alpha)));
        }
        r = run_cli(alpha_args, cache, "alpha_sweep.log");
        if (r.exit_code != 0) {
            grids_ok = false;
            detail += "; alpha sweep failed";
        }
        for (int i = 0; grids_ok && i < 5; ++i) {
            const std::string base = (g_workdir / ("alpha_sweep_p" + std::to_string(i))).string();
            if (!check_plot_csv(base + ".csv", 128, false, why) ||
                !check_sidecar_defect(base + ".meta.json", kTolLargeDefectPerN * 128.0, why)) {
                grids_ok = false;
                detail += "; " + why;
            }
        }
    }

    if (grids_ok) {
        // (sigma, alpha) grid and xi sweep on a geometric fixture.
        const std::string geo_graph = (g_workdir / "geo256.csv").string();
        const std::string geo_xy = (g_workdir / "geo256_xy.csv").string();
        const std::string geo_sig = (g_workdir / "geo256_sig.csv").string();
        run_cli({"gen", "--kind", "graph:random", "--n", "256", "--seed", "99", "--out",
                 geo_graph, "--coords-out", geo_xy},
                cache, "gen_geo.log");
        run_cli({"gen", "--kind", "signal:bipolar-rect", "--n", "256", "--out", geo_sig}, cache,
                "gen_geo_sig.log");

        std::vector<std::string> grid_args = {"plot-data", "--graph", geo_graph, "--coords",
                                              geo_xy,      "--signal", geo_sig,  "--out",
                                              (g_workdir / "grid").string()};
        for (double sigma : {0.5, 1.0, 2.0})
            for (double alpha : {0.5, 1.0, 1.5}) {
                grid_args.push_back("--params");
                grid_args.push_back(params_text(glct::params_from_decomposition(0.3, sigma, alpha)));
            }
        r = run_cli(grid_args, cache, "grid.log");
        if (r.exit_code != 0) {
            grids_ok = false;
            detail += "; (sigma, alpha) grid failed";
        }
        for (int i = 0; grids_ok && i < 9; ++i) {
            const std::string base = (g_workdir / ("grid_p" + std::to_string(i))).string();
            if (!check_plot_csv(base + ".csv", 256, true, why) ||
                !check_sidecar_defect(base + ".meta.json", kTolLargeDefectPerN * 256.0, why)) {
                grids_ok = false;
                detail += "; " + why;
            }
        }

        std::vector<std::string> xi_args = {"plot-data", "--graph", geo_graph, "--coords",
                                            geo_xy,      "--signal", geo_sig,  "--out",
                                            (g_workdir / "xi_sweep").string()};
        for (double xi : {0.0, 0.3, 0.6, 0.9, 1.2}) {
            xi_args.push_back("--params");
            xi_args.push_back(params_text(glct::params_from_decomposition(xi, 1.0, 0.8)));
        }
        if (grids_ok) {
            r = run_cli(xi_args, cache, "xi_sweep.log");
            if (r.exit_code != 0) {
                grids_ok = false;
                detail += "; xi sweep failed";
            }
        }
        for (int i = 0; grids_ok && i < 5; ++i) {
            const std::string base = (g_workdir / ("xi_sweep_p" + std::to_string(i))).string();
            if (!check_plot_csv(base + ".csv", 256, true, why) ||
                !check_sidecar_defect(base + ".meta.json", kTolLargeDefectPerN * 256.0, why)) {
                grids_ok = false;
                detail += "; " + why;
            }
        }
        if (grids_ok) detail += "; plot-data grids well formed with recorded defects in bound";
    }
    report(9, big_ok && grids_ok, detail);
}

void criterion_verify_determinism() {
    const fs::path r1 = g_workdir / "verify1.txt";
    const fs::path r2 = g_workdir / "verify2.txt";
    const CliResult a =
        run_cli({"verify", "--seed", "123", "--out", r1.string()}, "", "verify1.log");
    const CliResult b =
        run_cli({"verify", "--seed", "123", "--out", r2.string()}, "", "verify2.log");
    const std::string text1 = read_file(r1);
    const bool identical = !text1.empty() && text1 == read_file(r2);
    const bool passed = a.exit_code == 0 && b.exit_code == 0 &&
                        text1.find("RESULT PASS") != std::string::npos;
    report(10, identical && passed,
           std::string("verify determinism: two runs with seed 123 ") +
               (identical ? "byte-identical" : "DIFFER") + ", exit codes " +
               std::to_string(a.exit_code) + "/" + std::to_string(b.exit_code) +
               (passed ? ", RESULT PASS" : ", missing RESULT PASS"));
}

}  // namespace

int main() {
    g_workdir = fs::temp_directory_path() /
                ("glct_acceptance_" + std::to_string(static_cast<long>(::getpid())));
    fs::create_directories(g_workdir);
    std::printf("glct acceptance gate\n");

    struct Entry {
        void (*fn)();
        int id;
    };
    const Entry entries[] = {
        {&criteria_unitarity_and_inverse, 1}, {&criterion_reductions, 3},
        {&criterion_cycle_oracle, 4},         {&criterion_signal_ops, 5},
        {&criterion_restricted_additivity, 6}, {&criterion_scaling_invariance, 7},
        {&criterion_gfrft_additivity, 8},     {&criterion_large_scale, 9},
        {&criterion_verify_determinism, 10},
    };
    for (const Entry& e : entries) {
        try {
            e.fn();
        } catch (const std::exception& ex) {
            report(e.id, false, std::string("exception: ") + ex.what());
        }
    }

    if (g_failures == 0) {
        std::error_code ec;
        fs::remove_all(g_workdir, ec);
        std::printf("acceptance: all criteria passed\n");
    } else {
        std::printf("acceptance: %d criterion(s) failed; artifacts kept in %s\n", g_failures,
                    g_workdir.c_str());
    }
    return g_failures;
}
