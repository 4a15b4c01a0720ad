#include <complex>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "polydirich/csv.hpp"
#include "polydirich/dirichlet.hpp"
#include "polydirich/families.hpp"
#include "polydirich/harness.hpp"
#include "polydirich/multiplier.hpp"
#include "polydirich/series.hpp"

namespace {

using polydirich::Complex;

std::vector<double> parse_reals(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string field;
    while (std::getline(ss, field, ',')) {
        std::size_t pos = 0;
        const double v = std::stod(field, &pos);
        if (pos != field.size()) throw std::runtime_error("malformed number: " + field);
        out.push_back(v);
    }
    return out;
}

polydirich::WeightVector parse_weights(const std::string& s) {
    const auto v = parse_reals(s);
    if (v.size() != 2) throw std::runtime_error("weight vector must be a1,a2: " + s);
    return {v[0], v[1]};
}

Complex parse_complex(const std::string& s) {
    const auto v = parse_reals(s);
    if (v.size() == 1) return {v[0], 0.0};
    if (v.size() == 2) return {v[0], v[1]};
    throw std::runtime_error("complex scalar must be re[,im]: " + s);
}

// One token "x,y" of reals, or two tokens each "re[,im]".
std::pair<Complex, Complex> parse_point(const std::vector<std::string>& at) {
    if (at.size() == 2) return {parse_complex(at[0]), parse_complex(at[1])};
    const auto v = parse_reals(at.at(0));
    if (v.size() == 2) return {Complex{v[0], 0.0}, Complex{v[1], 0.0}};
    if (v.size() == 4) return {Complex{v[0], v[1]}, Complex{v[2], v[3]}};
    throw std::runtime_error("point must be z,w or two re[,im] scalars");
}

std::pair<long, long> parse_degrees(const std::string& s) {
    const auto v = parse_reals(s);
    if (v.empty() || v.size() > 2) throw std::runtime_error("degrees must be K[,L]: " + s);
    const long k = static_cast<long>(v[0]);
    const long l = v.size() == 2 ? static_cast<long>(v[1]) : k;
    if (k < 0 || l < 0) throw std::runtime_error("degrees must be nonnegative");
    return {k, l};
}

void print_scalar(std::ostream& os, double v) { os << std::setprecision(17) << v << "\n"; }

void print_scalar(std::ostream& os, Complex v) {
    os << std::setprecision(17) << v.real();
    if (v.imag() != 0.0) os << "," << v.imag();
    os << "\n";
}

void write_output(const std::optional<std::string>& path, const std::string& content) {
    if (!path) {
        std::cout << content;
        return;
    }
    std::ofstream os(*path);
    if (!os) throw std::runtime_error("cannot open for writing: " + *path);
    os << content;
}

int resolve_threads(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("POLYDIRICH_THREADS")) return std::atoi(env);
    return 0;
}

std::map<std::string, double> parse_check_params(const std::vector<std::string>& kvs) {
    std::map<std::string, double> out;
    for (const auto& kv : kvs) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw std::runtime_error("param must be key=value: " + kv);
        out[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
    }
    return out;
}

polydirich::HarnessConfig load_config(const std::optional<std::string>& path, long deg,
                                      long seed, int threads) {
    polydirich::HarnessConfig cfg;
    if (path) {
        std::ifstream is(*path);
        if (!is) throw std::runtime_error("cannot open config: " + *path);
        nlohmann::json j;
        is >> j;
        cfg.deg = j.value("deg", cfg.deg);
        cfg.max_dyadic_exp = j.value("max_dyadic_exp", cfg.max_dyadic_exp);
        cfg.seed = j.value("seed", cfg.seed);
        cfg.threads = j.value("threads", cfg.threads);
    }
    if (deg >= 0) cfg.deg = deg;
    if (seed >= 0) cfg.seed = static_cast<unsigned long>(seed);
    const int t = resolve_threads(threads);
    if (t > 0) cfg.threads = t;
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weighted bidisc series toolkit: norms, kernels, multiplier sections, checks"};
    app.require_subcommand(1);

    std::string series_path, alpha_str = "0,0", beta_str = "0,0", deg_str = "64",
                family_str, check_id;
    std::vector<std::string> at_tokens, param_tokens;
    std::optional<std::string> out_path, config_path;
    bool no_timestamp = false;
    long deg_flag = -1, seed_flag = -1;
    int threads_flag = 0;

    auto* cmd_norm = app.add_subcommand("norm", "Weighted coefficient norm of a CSV series");
    cmd_norm->add_option("series", series_path)->required();
    cmd_norm->add_option("--alpha", alpha_str);

    auto* cmd_eval = app.add_subcommand("eval", "Evaluate a CSV series at a point in the bidisc");
    cmd_eval->add_option("series", series_path)->required();
    cmd_eval->add_option("--at", at_tokens)->expected(1, 2)->required();

    auto* cmd_kernel = app.add_subcommand("kernel", "Reproducing kernel coefficients as CSV");
    cmd_kernel->add_option("--alpha", alpha_str);
    cmd_kernel->add_option("--at", at_tokens)->expected(1, 2)->required();
    cmd_kernel->add_option("--deg", deg_str);
    cmd_kernel->add_option("--out", out_path);

    auto* cmd_opnorm = app.add_subcommand("opnorm", "Finite-section multiplication operator norm");
    cmd_opnorm->add_option("series", series_path)->required();
    cmd_opnorm->add_option("--alpha", alpha_str);
    cmd_opnorm->add_option("--beta", beta_str);
    cmd_opnorm->add_option("--deg", deg_str);

    auto* cmd_generate = app.add_subcommand("generate", "Closed-form coefficient family as CSV");
    cmd_generate->add_option("--family", family_str)->required();
    std::optional<std::string> gen_alpha;
    cmd_generate->add_option("--alpha", gen_alpha);
    cmd_generate->add_option("--deg", deg_str);
    cmd_generate->add_option("--out", out_path);

    auto* cmd_check = app.add_subcommand("check", "Run one theorem check, report JSON");
    cmd_check->add_option("check_id", check_id)->required();
    cmd_check->add_option("--param", param_tokens);
    cmd_check->add_option("--config", config_path);
    cmd_check->add_option("--deg", deg_flag);
    cmd_check->add_option("--seed", seed_flag);
    cmd_check->add_option("--threads", threads_flag);
    cmd_check->add_option("--out", out_path);

    auto* cmd_suite = app.add_subcommand("suite", "Run the whole check catalog, report JSON");
    cmd_suite->add_option("--config", config_path);
    cmd_suite->add_option("--deg", deg_flag);
    cmd_suite->add_option("--seed", seed_flag);
    cmd_suite->add_option("--threads", threads_flag);
    cmd_suite->add_option("--out", out_path);
    cmd_suite->add_flag("--no-timestamp", no_timestamp);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (cmd_norm->parsed()) {
            const auto f = polydirich::read_csv_file(series_path);
            print_scalar(std::cout, polydirich::norm(f, parse_weights(alpha_str)));
        } else if (cmd_eval->parsed()) {
            const auto f = polydirich::read_csv_file(series_path);
            const auto [z, w] = parse_point(at_tokens);
            print_scalar(std::cout, f.evaluate(z, w));
        } else if (cmd_kernel->parsed()) {
            const auto [z0, w0] = parse_point(at_tokens);
            const auto [dk, dl] = parse_degrees(deg_str);
            const auto k = polydirich::kernel_series(parse_weights(alpha_str), z0, w0, dk, dl);
            std::ostringstream os;
            polydirich::write_csv(os, k);
            write_output(out_path, os.str());
        } else if (cmd_opnorm->parsed()) {
            const auto h = polydirich::read_csv_file(series_path);
            const auto [dk, dl] = parse_degrees(deg_str);
            const auto est = polydirich::operator_norm(polydirich::finite_section(
                h, parse_weights(alpha_str), parse_weights(beta_str), dk, dl));
            print_scalar(std::cout, est.value);
            if (!est.converged) {
                std::cerr << "warning: estimate not converged after " << est.iterations
                          << " iterations\n";
            }
        } else if (cmd_generate->parsed()) {
            const auto [dk, dl] = parse_degrees(deg_str);
            polydirich::FamilyParams params;
            if (gen_alpha) params.alpha = parse_weights(*gen_alpha);
            const auto f =
                polydirich::generate(polydirich::family_from_string(family_str), params, dk, dl);
            std::ostringstream os;
            polydirich::write_csv(os, f);
            write_output(out_path, os.str());
        } else if (cmd_check->parsed()) {
            const auto cfg = load_config(config_path, deg_flag, seed_flag, threads_flag);
            const auto report =
                polydirich::run_check(check_id, cfg, parse_check_params(param_tokens));
            write_output(out_path, polydirich::to_json(report) + "\n");
            return report.verdict == polydirich::Verdict::fail ? 1 : 0;
        } else if (cmd_suite->parsed()) {
            const auto cfg = load_config(config_path, deg_flag, seed_flag, threads_flag);
            const auto report = polydirich::full_suite(cfg);
            write_output(out_path, polydirich::to_json(report, !no_timestamp) + "\n");
            return report.failed > 0 ? 1 : 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
