// Command-line surface over the finite-space library. One command per
// process; all output is line-oriented plain text.
//
// Exit codes: 0 success, 1 check-suite failure, 2 input error.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "fintop/checks.hpp"
#include "fintop/errors.hpp"
#include "fintop/enumeration.hpp"
#include "fintop/homotopy.hpp"
#include "fintop/qsym.hpp"
#include "fintop/space_algebra.hpp"
#include "fintop/text_format.hpp"

namespace {

using namespace fintop;

std::string read_input(const std::string& arg) {
    if (!arg.empty() && arg != "-") return arg;
    std::string line;
    if (!std::getline(std::cin, line)) throw Error("no input on stdin");
    return line;
}

FiniteSpace input_space(const std::string& arg) {
    return parse_space_or_preorder(read_input(arg));
}

void print_report(const CheckReport& report) {
    for (const CheckResult& r : report.results) {
        if (r.passed) {
            std::cout << "[PASS] " << r.name << " (" << r.cases << " cases)\n";
        } else {
            std::cout << "[FAIL] " << r.name << ": " << r.counterexample << "\n";
        }
    }
    std::cout << (report.all_passed() ? "all checks passed" : "CHECK FAILURES") << "\n";
}

void print_counts(int max_n, bool allow_large, Exec exec) {
    int outer_cap = allow_large ? large_cap : space_cap;
    if (max_n < 1 || max_n > outer_cap)
        throw Unsupported("counts size " + std::to_string(max_n) +
                          " above supported cap " + std::to_string(outer_cap));
    // the topology column stops earlier than the space-family columns
    int t_cap = std::min(max_n, allow_large ? large_cap : topology_count_cap);
    int f_cap = max_n;

    std::cout << "n  ";
    for (int n = 1; n <= t_cap; ++n) std::cout << "\t" << n;
    std::cout << "\nt_n";
    for (int n = 1; n <= t_cap; ++n)
        std::cout << "\t" << count_topologies(n, exec, allow_large);
    std::cout << "\n\n";

    std::cout << "n  ";
    for (int n = 1; n <= f_cap; ++n) std::cout << "\t" << n;
    std::cout << "\nf_n";
    for (int n = 1; n <= f_cap; ++n)
        std::cout << "\t" << enumerate_spaces(n, exec, allow_large).size();
    std::cout << "\n\n";

    std::vector<FamilyCounts> fams;
    for (int n = 1; n <= f_cap; ++n) fams.push_back(count_families(n, exec, allow_large));
    std::cout << "n  ";
    for (int n = 1; n <= f_cap; ++n) std::cout << "\t" << n;
    std::cout << "\np_n";
    for (const FamilyCounts& f : fams) std::cout << "\t" << f.connected;
    std::cout << "\nq_n";
    for (const FamilyCounts& f : fams) std::cout << "\t" << f.join_indecomposable;
    std::cout << "\nr_n";
    for (const FamilyCounts& f : fams) std::cout << "\t" << f.irreducible;
    std::cout << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite topological spaces: canonical forms, products, "
                 "invariants, enumeration and verification"};
    app.require_subcommand(1);
    app.fallthrough();  // accept global flags after the subcommand too

#ifdef _OPENMP
    if (const char* threads = std::getenv("FINTOP_THREADS"))
        omp_set_num_threads(std::max(1, std::atoi(threads)));
#endif

    bool serial = false;
    app.add_flag("--serial", serial, "run kernels on one thread");

    std::string in_a, in_b;
    std::string eval_q;
    int opt_n = 0;
    int max_n = -1;
    std::uint64_t seed = 1;
    bool allow_large = false;
    std::string kind = "spaces";
    std::string suite;

    CLI::App* canon = app.add_subcommand("canon", "canonical form of a space/preorder");
    canon->add_option("input", in_a, "PRE or FS text (default: stdin)");

    CLI::App* dual_cmd = app.add_subcommand("dual", "order-reversed space");
    dual_cmd->add_option("input", in_a);

    CLI::App* product = app.add_subcommand("product", "disjoint sum of two spaces");
    product->add_option("first", in_a);
    product->add_option("second", in_b);

    CLI::App* join = app.add_subcommand("join", "join of two spaces (first below)");
    join->add_option("first", in_a);
    join->add_option("second", in_b);

    CLI::App* coproduct_cmd =
        app.add_subcommand("coproduct", "open-set extraction coproduct");
    coproduct_cmd->add_option("input", in_a);

    CLI::App* antipode_cmd = app.add_subcommand("antipode", "Hopf antipode");
    antipode_cmd->add_option("input", in_a);

    CLI::App* phi = app.add_subcommand("phi", "quasi-symmetric image");
    phi->add_option("input", in_a);
    phi->add_option("--eval-q", eval_q, "evaluate coefficients at a rational q");

    CLI::App* zeta = app.add_subcommand("zeta", "q to the number of strict pairs");
    zeta->add_option("input", in_a);

    CLI::App* core_cmd = app.add_subcommand("core", "beat point reduction");
    core_cmd->add_option("input", in_a);

    CLI::App* euler = app.add_subcommand("euler", "Euler characteristic");
    euler->add_option("input", in_a);

    CLI::App* complex_cmd =
        app.add_subcommand("complex", "order complex facets, one per line");
    complex_cmd->add_option("input", in_a);

    CLI::App* enumerate_cmd = app.add_subcommand("enumerate", "stream a family");
    enumerate_cmd->add_option("--n", opt_n, "size")->required();
    enumerate_cmd
        ->add_option("--kind", kind,
                     "topologies|spaces|connected|join-indec|irreducible")
        ->check(CLI::IsMember(
            {"topologies", "spaces", "connected", "join-indec", "irreducible"}));
    enumerate_cmd->add_flag("--unsafe-large", allow_large, "lift the default size cap");

    CLI::App* check = app.add_subcommand("check", "run a verification suite");
    check->add_option("--suite", suite, "hopf|infinitesimal|tensor|qsym|homotopy")
        ->required()
        ->check(CLI::IsMember({"hopf", "infinitesimal", "tensor", "qsym", "homotopy"}));
    check->add_option("--max-n", max_n, "size bound (default per suite)");
    check->add_option("--seed", seed, "seed for randomized sweeps");

    CLI::App* counts = app.add_subcommand("counts", "count tables");
    counts->add_option("--max-n", max_n, "largest size")->required();
    counts->add_flag("--unsafe-large", allow_large, "lift the default size caps");

    CLI11_PARSE(app, argc, argv);
    Exec exec = serial ? Exec::Serial : Exec::Parallel;

    try {
        if (canon->parsed()) {
            std::cout << to_text(input_space(in_a)) << "\n";
        } else if (dual_cmd->parsed()) {
            std::cout << to_text(dual(input_space(in_a))) << "\n";
        } else if (product->parsed()) {
            std::cout << to_text(space_product(input_space(in_a), input_space(in_b)))
                      << "\n";
        } else if (join->parsed()) {
            std::cout << to_text(space_join(input_space(in_a), input_space(in_b)))
                      << "\n";
        } else if (coproduct_cmd->parsed()) {
            std::cout << to_text(coproduct_basis(input_space(in_a))) << "\n";
        } else if (antipode_cmd->parsed()) {
            std::cout << to_text(antipode(FVector::basis(input_space(in_a)))) << "\n";
        } else if (phi->parsed()) {
            QSymElement image = phi_q_basis(input_space(in_a));
            if (eval_q.empty()) {
                std::cout << to_text(image) << "\n";
            } else {
                std::cout << to_text_eval(image, parse_rational(eval_q)) << "\n";
            }
        } else if (zeta->parsed()) {
            std::cout << to_text(zeta_q(FVector::basis(input_space(in_a)))) << "\n";
        } else if (core_cmd->parsed()) {
            std::cout << to_text(core(input_space(in_a))) << "\n";
        } else if (euler->parsed()) {
            std::cout << euler_characteristic(input_space(in_a)) << "\n";
        } else if (complex_cmd->parsed()) {
            std::string text = to_text(order_complex(input_space(in_a)));
            if (!text.empty()) std::cout << text << "\n";
        } else if (enumerate_cmd->parsed()) {
            if (kind == "topologies") {
                stream_preorders(
                    opt_n, [](const Preorder& p) { std::cout << to_text(p) << "\n"; },
                    allow_large);
            } else {
                for (const FiniteSpace& x : enumerate_spaces(opt_n, exec, allow_large)) {
                    if (kind == "connected" && !is_connected_space(x)) continue;
                    if (kind == "join-indec" && !is_join_indecomposable(x)) continue;
                    if (kind == "irreducible" && !is_irreducible(x)) continue;
                    std::cout << to_text(x) << "\n";
                }
            }
        } else if (check->parsed()) {
            CheckReport report;
            if (suite == "hopf") {
                report = check_hopf(max_n < 0 ? 4 : max_n, exec);
            } else if (suite == "infinitesimal") {
                report = check_infinitesimal(max_n < 0 ? 4 : max_n, exec);
            } else if (suite == "tensor") {
                report = check_tensor(max_n < 0 ? 5 : max_n, exec);
            } else if (suite == "qsym") {
                report = check_qsym(max_n < 0 ? 4 : max_n, seed, exec);
            } else {
                report = check_homotopy(max_n < 0 ? 6 : max_n, seed, exec);
            }
            print_report(report);
            return report.all_passed() ? 0 : 1;
        } else if (counts->parsed()) {
            print_counts(max_n, allow_large, exec);
        }
    } catch (const fintop::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
