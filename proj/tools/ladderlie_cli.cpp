// Command-line front end: exact evaluation of bracket expressions, the
// standard-module action, truncated matrices, Hopf-algebra queries,
// Virasoro commutator checks and the verification suites.
#include "ladderlie/fock.hpp"
#include "ladderlie/hopf.hpp"
#include "ladderlie/parser.hpp"
#include "ladderlie/serialize.hpp"
#include "ladderlie/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace ladderlie;

constexpr int exit_ok = 0;
constexpr int exit_verification_failure = 1;
constexpr int exit_usage_error = 2;

int cmd_eval(const std::string& expr, const std::string& fmt)
{
    EvalResult r = eval(parse(expr));
    if (auto* lie = std::get_if<LieElement>(&r))
        std::cout << (fmt == "json" ? to_json(*lie).dump() : format(*lie)) << "\n";
    else if (auto* gl = std::get_if<GlElement>(&r))
        std::cout << (fmt == "json" ? to_json(*gl).dump() : format(*gl)) << "\n";
    else
        std::cout << (fmt == "json" ? to_json(std::get<SVector>(r)).dump()
                                    : format(std::get<SVector>(r)))
                  << "\n";
    return exit_ok;
}

int cmd_act(const std::string& expr, const std::string& vec, const std::string& fmt)
{
    LieElement x = eval_lie(parse(expr));
    SVector v = eval_vector(parse(vec));
    SVector img = act(x, v);
    std::cout << (fmt == "json" ? to_json(img).dump() : format(img)) << "\n";
    return exit_ok;
}

int cmd_matrix(const std::string& expr, Index size, const std::string& fmt)
{
    TruncatedMatrix m = matrix(eval_lie(parse(expr)), size);
    if (fmt == "json")
        std::cout << to_json(m).dump() << "\n";
    else if (fmt == "csv")
        std::cout << to_csv(m);
    else {
        for (const auto& row : m.entries) {
            for (std::size_t c = 0; c < row.size(); ++c)
                std::cout << (c ? " " : "") << scalar_to_string(row[c]);
            std::cout << "\n";
        }
    }
    return exit_ok;
}

int cmd_hopf(const std::string& what, Index m, const std::string& fmt)
{
    if (what == "coproduct") {
        TensorElement t = coproduct(HopfElement::generator(m));
        if (fmt == "json") {
            json terms = json::array();
            for (const auto& [key, c] : t.terms())
                terms.push_back({{"left", key.first},
                                 {"right", key.second},
                                 {"coeff", scalar_to_string(c)}});
            std::cout << json{{"terms", terms}}.dump() << "\n";
        } else {
            bool first = true;
            for (const auto& [key, c] : t.terms()) {
                std::cout << (first ? "" : " + ")
                          << format(HopfElement::monomial(key.first, c)) << " (x) "
                          << format(HopfElement::monomial(key.second));
                first = false;
            }
            std::cout << "\n";
        }
        return exit_ok;
    }
    HopfElement r = what == "antipode" ? antipode(HopfElement::generator(m)) : s_star_y(m);
    std::cout << (fmt == "json" ? to_json(r).dump() : format(r)) << "\n";
    return exit_ok;
}

int cmd_virasoro(Index n, Index m, const std::string& mu, const std::string& lambda,
                 Index max_degree)
{
    FockConfig cfg{Scalar(rational_from_string(mu)), Scalar(rational_from_string(lambda))};
    std::vector<std::vector<Index>> monomials;
    {
        std::vector<Index> cur;
        std::function<void(Index, Index)> rec = [&](Index remaining, Index max_part) {
            monomials.push_back(cur);
            for (Index p = 1; p <= std::min(remaining, max_part); ++p) {
                cur.push_back(p);
                rec(remaining - p, p);
                cur.pop_back();
            }
        };
        rec(max_degree, max_degree);
    }
    bool all_pass = true;
    for (const auto& mon : monomials) {
        FockVector v = FockVector::monomial(mon);
        FockVector r = virasoro_residual(cfg, n, m, v);
        json line{{"suite", "virasoro"},
                  {"n", n},
                  {"m", m},
                  {"mu", mu},
                  {"lambda", lambda},
                  {"degree", monomial_degree(mon)},
                  {"pass", r.is_zero()}};
        if (!r.is_zero()) {
            line["residual"] = to_json(r);
            all_pass = false;
        }
        std::cout << line.dump() << "\n";
    }
    return all_pass ? exit_ok : exit_verification_failure;
}

int cmd_verify(const std::string& suite, const SuiteOptions& opts, const std::string& path)
{
    std::vector<SuiteReport> reports = run_suite(suite, opts);
    std::ofstream file;
    if (!path.empty()) {
        file.open(path);
        if (!file)
            throw std::runtime_error("cannot open report file '" + path + "'");
    }
    bool all_pass = true;
    for (const auto& report : reports) {
        std::string line = report_to_json_line(report);
        std::cout << line << "\n";
        if (file)
            file << line << "\n";
        all_pass = all_pass && report.pass();
    }
    return all_pass ? exit_ok : exit_verification_failure;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact computer algebra for the ladder insertion-elimination Lie algebra"};
    app.require_subcommand(1);

    std::string expr, vec, fmt = "text", mu = "0", lambda = "0", report_path, suite;
    Index size = 10, hopf_m = 0, vn = 0, vm = 0, max_degree = 6;
    SuiteOptions opts;

    auto* eval_cmd = app.add_subcommand("eval", "evaluate a bracket expression");
    eval_cmd->add_option("expr", expr)->required();
    eval_cmd->add_option("--format", fmt)->check(CLI::IsMember({"json", "text"}));

    auto* act_cmd = app.add_subcommand("act", "apply a Lie element to a module vector");
    act_cmd->add_option("expr", expr)->required();
    act_cmd->add_option("--vector", vec)->required();
    act_cmd->add_option("--format", fmt)->check(CLI::IsMember({"json", "text"}));

    auto* matrix_cmd = app.add_subcommand("matrix", "truncated action matrix");
    matrix_cmd->add_option("expr", expr)->required();
    matrix_cmd->add_option("--size", size)->required()->check(CLI::PositiveNumber);
    matrix_cmd->add_option("--format", fmt)->check(CLI::IsMember({"json", "csv", "text"}));

    auto* hopf_cmd = app.add_subcommand("hopf", "ladder Hopf algebra queries");
    hopf_cmd->require_subcommand(1);
    for (const char* sub : {"coproduct", "antipode", "sy"}) {
        auto* c = hopf_cmd->add_subcommand(sub);
        c->add_option("m", hopf_m)->required()->check(CLI::NonNegativeNumber);
        c->add_option("--format", fmt)->check(CLI::IsMember({"json", "text"}));
    }

    auto* vir_cmd = app.add_subcommand("virasoro", "Virasoro commutator checks");
    auto* vir_bracket = vir_cmd->add_subcommand("bracket");
    vir_bracket->add_option("n", vn)->required();
    vir_bracket->add_option("m", vm)->required();
    vir_bracket->add_option("--mu", mu);
    vir_bracket->add_option("--lambda", lambda);
    vir_bracket->add_option("--max-degree", max_degree)->check(CLI::NonNegativeNumber);

    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("suite", suite)->required();
    verify_cmd->add_option("--trials", opts.trials)->check(CLI::PositiveNumber);
    verify_cmd->add_option("--seed", opts.seed);
    verify_cmd->add_option("--max-index", opts.max_index)->check(CLI::PositiveNumber);
    verify_cmd->add_option("--report", report_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage_error;
    }

    try {
        if (eval_cmd->parsed())
            return cmd_eval(expr, fmt);
        if (act_cmd->parsed())
            return cmd_act(expr, vec, fmt);
        if (matrix_cmd->parsed())
            return cmd_matrix(expr, size, fmt);
        if (hopf_cmd->parsed()) {
            const std::string what = hopf_cmd->get_subcommands().front()->get_name();
            return cmd_hopf(what, hopf_m, fmt);
        }
        if (vir_cmd->parsed())
            return cmd_virasoro(vn, vm, mu, lambda, max_degree);
        if (verify_cmd->parsed())
            return cmd_verify(suite, opts, report_path);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_usage_error;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_verification_failure;
    }
    return exit_usage_error;
}
