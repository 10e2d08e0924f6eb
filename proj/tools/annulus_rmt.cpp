#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "annulus/ensemble.hpp"
#include "annulus/kernel.hpp"
#include "annulus/output.hpp"
#include "annulus/plasma.hpp"
#include "annulus/stats.hpp"
#include "annulus/verify.hpp"

namespace {

using annulus::output::OutputRecord;
using Complex = std::complex<double>;

constexpr double kPi = 3.141592653589793238462643383279503;

std::string fmt(double v) {
    return annulus::output::format_cell(v);
}

void emit(OutputRecord& rec, const std::string& format, const std::string& out,
          std::chrono::steady_clock::time_point t0) {
    rec.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
    std::string body;
    if (format == "csv") body = annulus::output::to_csv(rec);
    else if (format == "json") body = annulus::output::to_json(rec);
    else body = annulus::output::to_svg(rec);
    annulus::output::write_output(out, body);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact theory and matrix sampling for the beta=2 plasma on a "
                 "spherical annulus"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value config file (flags take precedence)");

    std::string format = "csv", out = "-";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json", "svg"}))
        ->capture_default_str();
    app.add_option("--out", out, "output path ('-' = stdout)")->capture_default_str();

    // sample ------------------------------------------------------------------
    auto* sample = app.add_subcommand("sample", "draw eigenvalue replicas");
    int s_M = 10, s_Ncols = 20, s_n = 20, s_replicas = 1000;
    std::uint64_t s_seed = 0;
    sample->add_option("--M", s_M, "matrix size / particle count")->capture_default_str();
    sample->add_option("--N-cols", s_Ncols, "Gaussian block columns")->capture_default_str();
    sample->add_option("--n", s_n, "Wishart block rows")->capture_default_str();
    sample->add_option("--replicas", s_replicas)->capture_default_str();
    sample->add_option("--seed", s_seed, "RNG seed")->required();

    // density -----------------------------------------------------------------
    auto* density = app.add_subcommand("density", "exact one-point density profile");
    int d_N = 20;
    double d_Q = 1.0, d_q = 1.0, d_rmin = 0.05, d_rmax = 3.0;
    int d_points = 200;
    density->add_option("--N", d_N)->capture_default_str();
    density->add_option("--Q", d_Q)->capture_default_str();
    density->add_option("--q", d_q)->capture_default_str();
    density->add_option("--r-min", d_rmin)->capture_default_str();
    density->add_option("--r-max", d_rmax)->capture_default_str();
    density->add_option("--points", d_points)->capture_default_str();

    // kernel ------------------------------------------------------------------
    auto* kernelc = app.add_subcommand("kernel", "kernel and truncated two-point values");
    int k_N = 20;
    double k_Q = 1.0, k_q = 1.0, k_r1 = 1.0, k_theta1 = 0.0, k_theta2 = 0.0;
    double k_r2min = 0.5, k_r2max = 1.5;
    int k_points = 100;
    kernelc->add_option("--N", k_N)->capture_default_str();
    kernelc->add_option("--Q", k_Q)->capture_default_str();
    kernelc->add_option("--q", k_q)->capture_default_str();
    kernelc->add_option("--r1", k_r1)->capture_default_str();
    kernelc->add_option("--theta1", k_theta1)->capture_default_str();
    kernelc->add_option("--theta2", k_theta2)->capture_default_str();
    kernelc->add_option("--r2-min", k_r2min)->capture_default_str();
    kernelc->add_option("--r2-max", k_r2max)->capture_default_str();
    kernelc->add_option("--points", k_points)->capture_default_str();

    // free-energy -------------------------------------------------------------
    auto* fe = app.add_subcommand("free-energy", "exact and asymptotic log partition function");
    std::vector<int> f_N = {20, 40, 80, 160};
    double f_Q = 1.0, f_q = 1.0;
    fe->add_option("--N-list", f_N, "particle counts")->capture_default_str();
    fe->add_option("--Q", f_Q)->capture_default_str();
    fe->add_option("--q", f_q)->capture_default_str();

    // fluct -------------------------------------------------------------------
    auto* fluct = app.add_subcommand("fluct", "linear-statistic fluctuation report");
    int fl_M = 50, fl_replicas = 500;
    double fl_Q = 1.0, fl_q = 1.0;
    std::uint64_t fl_seed = 0;
    std::string fl_stat = "s_over_1_plus_s";
    std::vector<double> fl_poly;
    fluct->add_option("--M", fl_M, "matrix size / particle count")->capture_default_str();
    fluct->add_option("--Q", fl_Q)->capture_default_str();
    fluct->add_option("--q", fl_q)->capture_default_str();
    fluct->add_option("--replicas", fl_replicas)->capture_default_str();
    fluct->add_option("--seed", fl_seed, "RNG seed")->required();
    fluct->add_option("--stat", fl_stat, "catalog statistic name")->capture_default_str();
    fluct->add_option("--poly", fl_poly,
                      "polynomial coefficients in s (overrides --stat)");

    // figure ------------------------------------------------------------------
    auto* figure = app.add_subcommand("figure", "sphere-lifted scatter with annulus edges");
    int g_M = 10, g_Ncols = 20, g_n = 20, g_replicas = 1000;
    std::uint64_t g_seed = 0;
    figure->add_option("--M", g_M)->capture_default_str();
    figure->add_option("--N-cols", g_Ncols)->capture_default_str();
    figure->add_option("--n", g_n)->capture_default_str();
    figure->add_option("--replicas", g_replicas)->capture_default_str();
    figure->add_option("--seed", g_seed, "RNG seed")->required();

    // verify ------------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "run the acceptance criteria");
    std::vector<std::string> v_only;
    verify->add_option("--only", v_only, "criterion ids or name substrings");

    // let --format/--out appear after the subcommand name
    for (auto* sc : app.get_subcommands(std::function<bool(CLI::App*)>{}))
        sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const auto t0 = std::chrono::steady_clock::now();
    try {
        if (*sample) {
            const annulus::MatrixDims dims{s_M, s_Ncols, s_n};
            OutputRecord rec;
            rec.command = "sample";
            rec.config = {{"M", std::to_string(s_M)}, {"N_cols", std::to_string(s_Ncols)},
                          {"n", std::to_string(s_n)},
                          {"replicas", std::to_string(s_replicas)},
                          {"seed", std::to_string(s_seed)}, {"format", format}};
            rec.columns = {"replica", "re_z", "im_z"};
            for (const auto& smp : annulus::ensemble::sample_eigenvalues(dims, s_replicas, s_seed))
                for (const Complex z : smp.points)
                    rec.rows.push_back({static_cast<long long>(smp.replica_id),
                                        z.real(), z.imag()});
            emit(rec, format, out, t0);
        } else if (*density) {
            const annulus::ModelParams p{d_N, d_Q, d_q, 0.5};
            const annulus::kernel::KernelEvaluator ev(p);
            const auto geo = annulus::plasma::geometry(p);
            OutputRecord rec;
            rec.command = "density";
            rec.config = {{"N", std::to_string(d_N)}, {"Q", fmt(d_Q)}, {"q", fmt(d_q)},
                          {"r_min", fmt(d_rmin)}, {"r_max", fmt(d_rmax)},
                          {"points", std::to_string(d_points)}, {"format", format}};
            rec.columns = {"r", "rho1_exact", "rho_b_limit"};
            for (int i = 0; i < d_points; ++i) {
                const double r = d_rmin + (d_rmax - d_rmin) * i /
                                              std::max(1, d_points - 1);
                const double limit = (r > geo.r_Q && r < geo.r_q)
                                         ? annulus::kernel::rho_b(r, p)
                                         : 0.0;
                rec.rows.push_back({r, ev.density_rho1(r), limit});
            }
            emit(rec, format, out, t0);
        } else if (*kernelc) {
            const annulus::ModelParams p{k_N, k_Q, k_q, 0.5};
            const annulus::kernel::KernelEvaluator ev(p);
            OutputRecord rec;
            rec.command = "kernel";
            rec.config = {{"N", std::to_string(k_N)}, {"Q", fmt(k_Q)}, {"q", fmt(k_q)},
                          {"r1", fmt(k_r1)}, {"theta1", fmt(k_theta1)},
                          {"theta2", fmt(k_theta2)}, {"r2_min", fmt(k_r2min)},
                          {"r2_max", fmt(k_r2max)},
                          {"points", std::to_string(k_points)}, {"format", format}};
            rec.columns = {"r1", "theta1", "r2", "theta2", "re_K", "im_K",
                           "rho2_truncated"};
            const annulus::kernel::PlanarPoint p1{k_r1, k_theta1};
            for (int i = 0; i < k_points; ++i) {
                const double r2 = k_r2min + (k_r2max - k_r2min) * i /
                                                std::max(1, k_points - 1);
                const annulus::kernel::PlanarPoint p2{r2, k_theta2};
                const Complex K = ev.kernel_K(p1, p2);
                rec.rows.push_back({k_r1, k_theta1, r2, k_theta2, K.real(), K.imag(),
                                    annulus::kernel::rho2_truncated(p1, p2, ev)});
            }
            emit(rec, format, out, t0);
        } else if (*fe) {
            OutputRecord rec;
            rec.command = "free-energy";
            std::string nlist;
            for (int N : f_N) nlist += (nlist.empty() ? "" : " ") + std::to_string(N);
            rec.config = {{"N_list", nlist}, {"Q", fmt(f_Q)}, {"q", fmt(f_q)},
                          {"format", format}};
            rec.columns = {"N", "logZ_exact", "logZ_barnes", "asymptotic", "residual"};
            for (int N : f_N) {
                const annulus::ModelParams p{N, f_Q, f_q, 0.5};
                const double ze = annulus::plasma::log_partition_exact(p);
                const double zb = annulus::plasma::log_partition_barnes(p);
                const double as = (f_Q > 0.0 && f_q > 0.0)
                                      ? annulus::plasma::free_energy_asymptotic(p)
                                      : std::nan("");
                rec.rows.push_back({static_cast<long long>(N), ze, zb, as, ze - as});
            }
            emit(rec, format, out, t0);
        } else if (*fluct) {
            const annulus::stats::RadialStatistic stat =
                fl_poly.empty() ? annulus::stats::catalog_statistic(fl_stat)
                                : annulus::stats::polynomial_statistic(fl_poly);
            const annulus::ModelParams p{fl_M, fl_Q, fl_q, 0.5};
            const auto rep = annulus::stats::monte_carlo_fluctuations(
                stat, annulus::dims_from_params(p), fl_replicas, fl_seed);
            OutputRecord rec;
            rec.command = "fluct";
            rec.config = {{"M", std::to_string(fl_M)}, {"Q", fmt(fl_Q)},
                          {"q", fmt(fl_q)},
                          {"replicas", std::to_string(fl_replicas)},
                          {"seed", std::to_string(fl_seed)},
                          {"stat", fl_poly.empty() ? fl_stat : "polynomial"},
                          {"format", format}};
            rec.columns = {"quantity", "value"};
            rec.rows = {{std::string("mean_exact"), rep.mean_exact},
                        {std::string("mean_limit_per_particle"), rep.mean_limit_per_particle},
                        {std::string("variance_exact"), rep.variance_exact},
                        {std::string("variance_limit"), rep.variance_limit},
                        {std::string("mc_mean"), rep.mc_mean},
                        {std::string("mc_mean_stderr"), rep.mc_mean_stderr},
                        {std::string("mc_variance"), rep.mc_variance},
                        {std::string("mc_variance_stderr"), rep.mc_variance_stderr},
                        {std::string("normality_p"), rep.normality_p},
                        {std::string("replicas"), static_cast<long long>(rep.replicas)}};
            emit(rec, format, out, t0);
        } else if (*figure) {
            const annulus::MatrixDims dims{g_M, g_Ncols, g_n};
            const annulus::ModelParams p = annulus::params_from_dims(dims);
            const auto geo = annulus::plasma::geometry(p);
            OutputRecord rec;
            rec.command = "figure";
            rec.config = {{"M", std::to_string(g_M)}, {"N_cols", std::to_string(g_Ncols)},
                          {"n", std::to_string(g_n)},
                          {"replicas", std::to_string(g_replicas)},
                          {"seed", std::to_string(g_seed)}, {"format", format}};
            rec.columns = {"kind", "x", "y", "z"};
            rec.rows.push_back({std::string("circle"), 0.0, 0.0, std::cos(geo.theta_Q)});
            rec.rows.push_back({std::string("circle"), 0.0, 0.0, -std::cos(geo.theta_q)});
            for (const auto& smp :
                 annulus::ensemble::sample_eigenvalues(dims, g_replicas, g_seed))
                for (const auto& sp : annulus::ensemble::lift_to_sphere(smp))
                    rec.rows.push_back({std::string("point"), sp.x, sp.y, sp.z});
            emit(rec, format, out, t0);
        } else if (*verify) {
            const auto results = annulus::verify::run_criteria(v_only);
            std::fputs(annulus::verify::format_report(results).c_str(), stdout);
            if (out != "-" || format == "json") {
                OutputRecord rec;
                rec.command = "verify";
                std::string only;
                for (const auto& f : v_only) only += (only.empty() ? "" : " ") + f;
                rec.config = {{"only", only.empty() ? "all" : only}, {"format", format}};
                rec.columns = {"criterion", "name", "check", "measured", "tolerance",
                               "passed"};
                for (const auto& r : results)
                    for (const auto& c : r.checks)
                        rec.rows.push_back({static_cast<long long>(r.id), r.name,
                                            c.name, c.measured, c.tolerance, c.passed});
                emit(rec, format == "svg" ? "json" : format, out, t0);
            }
            return annulus::verify::all_passed(results) ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return 3;
    }
    return 0;
}
