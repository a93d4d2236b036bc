// Command-line surface: multiples, approx, scan, verify, transform.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "ratgeom/cli_core.hpp"

namespace {

using ratgeom::BigRat;
using ratgeom::CommandResult;
using ratgeom::Json;

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    Json j;
    in >> j;
    return j;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << text;
}

int finish(const CommandResult& result, const std::string& out_path, const std::string& out_text) {
    if (!out_path.empty() && result.status != CommandResult::Status::error)
        write_file(out_path, out_text);
    std::cout << result.envelope().dump(2) << "\n";
    return result.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact rational curve family and rational-polygon approximation toolkit"};
    app.require_subcommand(1);

    std::string m_str = "1", n_str = "2";
    int kmax = 11;
    auto* multiples = app.add_subcommand("multiples", "Exact multiples k*P1(m, n)");
    multiples->add_option("--m", m_str, "parameter m (rational, e.g. 1 or 4/3)");
    multiples->add_option("--n", n_str, "parameter n (rational)");
    multiples->add_option("--kmax", kmax, "largest multiple to print");

    std::string shape, points_path, eps_str = "0.1", out_path;
    int kbudget = 120;
    double time_budget = 60.0;
    auto* approx = app.add_subcommand("approx", "Rational polygon approximation");
    approx->add_option("shape", shape, "triangle|parallelogram|quad")->required();
    approx->add_option("points", points_path, "JSON file with labeled points")->required();
    approx->add_option("--eps", eps_str, "target labeled max-distance");
    approx->add_option("--kbudget", kbudget, "multiples-search depth (default 120)");
    approx->add_option("--time-budget", time_budget, "advisory wall-clock seconds, 0 = off");
    approx->add_option("--out", out_path, "write the bare certificate JSON here");

    std::string mmin = "-2", mmax = "2", nmin = "-2", nmax = "2";
    int msteps = 5, nsteps = 5;
    auto* scan = app.add_subcommand("scan", "Grid scan of the (m, n) family (CSV)");
    scan->add_option("--m-min", mmin);
    scan->add_option("--m-max", mmax);
    scan->add_option("--m-steps", msteps);
    scan->add_option("--n-min", nmin);
    scan->add_option("--n-max", nmax);
    scan->add_option("--n-steps", nsteps);
    scan->add_option("--out", out_path, "write the CSV here");

    std::string cert_path;
    auto* verify = app.add_subcommand("verify", "Verify a certificate file exactly");
    verify->add_option("certificate", cert_path, "certificate JSON file")->required();

    std::string direction, x_str, y_str, U_str, W_str;
    auto* transform = app.add_subcommand("transform", "Quartic <-> cubic birational transform");
    transform->add_option("direction", direction, "q2c|c2q")->required();
    transform->add_option("--m", m_str);
    transform->add_option("--n", n_str);
    transform->add_option("--x", x_str);
    transform->add_option("--y", y_str);
    transform->add_option("--U", U_str);
    transform->add_option("--W", W_str);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*multiples) {
            auto r = ratgeom::cmd_multiples(BigRat::parse(m_str), BigRat::parse(n_str), kmax);
            std::cout << r.envelope().dump(2) << "\n";
            return r.exit_code();
        }
        if (*approx) {
            ratgeom::SearchBudget budget{kbudget, time_budget};
            auto r = ratgeom::cmd_approx(shape, load_json(points_path), ratgeom::Real(eps_str),
                                         budget);
            return finish(r, out_path, r.payload.dump(2) + "\n");
        }
        if (*scan) {
            auto r = ratgeom::cmd_scan(BigRat::parse(mmin), BigRat::parse(mmax), msteps,
                                       BigRat::parse(nmin), BigRat::parse(nmax), nsteps);
            if (r.status == CommandResult::Status::ok) {
                std::string csv = r.payload["csv"].get<std::string>();
                if (!out_path.empty())
                    write_file(out_path, csv);
                else
                    std::cout << csv;
                return 0;
            }
            std::cout << r.envelope().dump(2) << "\n";
            return r.exit_code();
        }
        if (*verify) {
            auto r = ratgeom::cmd_verify(load_json(cert_path));
            std::cout << r.envelope().dump(2) << "\n";
            return r.exit_code();
        }
        if (*transform) {
            auto opt = [](const std::string& s) -> std::optional<BigRat> {
                if (s.empty()) return std::nullopt;
                return BigRat::parse(s);
            };
            auto r = ratgeom::cmd_transform(direction, BigRat::parse(m_str), BigRat::parse(n_str),
                                            opt(x_str), opt(y_str), opt(U_str), opt(W_str));
            std::cout << r.envelope().dump(2) << "\n";
            return r.exit_code();
        }
    } catch (const std::exception& e) {
        Json j;
        j["status"] = "error";
        j["payload"] = Json::object();
        j["diagnostics"] = {e.what()};
        std::cout << j.dump(2) << "\n";
        return 1;
    }
    return 1;
}
