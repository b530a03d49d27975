#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "cy4/conditions.hpp"
#include "cy4/euler.hpp"
#include "cy4/json_io.hpp"
#include "cy4/mat3.hpp"
#include "cy4/search.hpp"
#include "cy4/torus.hpp"

namespace {

// Exit codes: 0 success, 1 domain rejection, 2 input/IO/usage error.
constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitInput = 2;

int env_workers() {
    const char* v = std::getenv("CY4_WORKERS");
    if (!v || !*v) return 0;
    try {
        std::size_t used = 0;
        int n = std::stoi(v, &used);
        if (used != std::string(v).size() || n < 0) throw std::invalid_argument(v);
        return n;
    } catch (const std::exception&) {
        throw cy4::ParseError("CY4_WORKERS must be a non-negative integer");
    }
}

void emit(const nlohmann::json& j, bool pretty) {
    std::cout << (pretty ? j.dump(2) : j.dump()) << '\n';
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic toolkit for involution pairs on the triple product of the"
                 " hexagonal elliptic curve: admissibility checks, Euler numbers, and a"
                 " bounded pair search."};
    app.require_subcommand(1);
    app.fallthrough();
    bool pretty = false;
    app.add_flag("--pretty", pretty, "indent JSON output");

    std::string matrix_arg, a1_arg, a2_arg, out_arg, checkpoint_arg, in_arg;
    int bound = 1, workers = 0, grid = 0;
    bool no_dedup = false, sub_identity = false;

    CLI::App* analyze = app.add_subcommand("analyze", "report the admissibility conditions for one matrix");
    analyze->add_option("--matrix", matrix_arg, "matrix (text form, json, or a file path)")->required();

    CLI::App* verify = app.add_subcommand("verify-pair", "report both matrices, the product order, and the"
                                                         " pair verdict; exit 1 if the pair is not admissible");
    verify->add_option("--a1", a1_arg, "first matrix")->required();
    verify->add_option("--a2", a2_arg, "second matrix")->required();

    CLI::App* euler = app.add_subcommand("euler", "Euler number breakdown for an admissible pair");
    euler->add_option("--a1", a1_arg, "first matrix")->required();
    euler->add_option("--a2", a2_arg, "second matrix")->required();

    CLI::App* search = app.add_subcommand("search", "enumerate admissible pairs up to a coefficient bound"
                                                    " and write one JSONL record per pair");
    search->add_option("--bound", bound, "entry coefficient bound")->check(CLI::Range(1, 3));
    search->add_option("--out", out_arg, "JSONL output path")->required();
    CLI::Option* workers_opt =
        search->add_option("--workers", workers, "worker threads (default: CY4_WORKERS or all cores)")
            ->check(CLI::Range(1, 4096));
    search->add_option("--checkpoint", checkpoint_arg, "checkpoint path; resumes if the file exists");
    search->add_flag("--no-dedup", no_dedup, "emit every admissible pair, not one per dedup key");

    CLI::App* oracle = app.add_subcommand("oracle", "compare the brute-force torsion-grid fixed point count"
                                                    " against the Smith form prediction; exit 1 on mismatch");
    oracle->add_option("--matrix", matrix_arg, "matrix (text form, json, or a file path)")->required();
    oracle->add_option("--grid", grid, "grid denominator")->required()->check(CLI::Range(1, 6));
    oracle->add_flag("--sub-identity", sub_identity, "subtract the identity before counting");

    CLI::App* report = app.add_subcommand("report", "aggregate a JSONL record file and flag counterexamples");
    report->add_option("--in", in_arg, "JSONL records path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (app.got_subcommand(analyze)) {
            cy4::MatrixReport rep = cy4::check_matrix(cy4::parse_matrix(matrix_arg));
            emit(cy4::to_json(rep), pretty);
            return kExitOk;
        }
        if (app.got_subcommand(verify)) {
            cy4::PairReport rep = cy4::check_pair(cy4::parse_matrix(a1_arg), cy4::parse_matrix(a2_arg));
            emit(cy4::to_json(rep), pretty);
            return rep.pair_admissible ? kExitOk : kExitDomain;
        }
        if (app.got_subcommand(euler)) {
            cy4::EulerBreakdown b = cy4::euler_breakdown(cy4::parse_matrix(a1_arg), cy4::parse_matrix(a2_arg));
            emit(cy4::to_json(b), pretty);
            return kExitOk;
        }
        if (app.got_subcommand(search)) {
            cy4::SearchConfig config;
            config.coeff_bound = bound;
            config.workers = workers_opt->count() > 0 ? workers : env_workers();
            config.output_path = out_arg;
            config.checkpoint_path = checkpoint_arg;
            config.dedup = !no_dedup;
            cy4::SearchSummary summary = cy4::run_search(config);
            emit(cy4::to_json(summary), pretty);
            return kExitOk;
        }
        if (app.got_subcommand(oracle)) {
            cy4::Mat3 m = cy4::parse_matrix(matrix_arg);
            if (sub_identity) m = m - cy4::Mat3::identity();
            std::int64_t brute = cy4::brute_force_fixed_count(m, grid, env_workers());
            std::int64_t predicted = cy4::fixed_count_from_snf(m, grid);
            bool match = brute == predicted;
            emit(nlohmann::json{{"brute", brute},
                                {"predicted", predicted},
                                {"match", match},
                                {"verdict", match ? "MATCH" : "MISMATCH"}},
                 pretty);
            return match ? kExitOk : kExitDomain;
        }
        if (app.got_subcommand(report)) {
            cy4::ConjectureReport rep = cy4::conjecture_report(cy4::load_records(in_arg));
            emit(cy4::to_json(rep), pretty);
            return kExitOk;
        }
    } catch (const cy4::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::overflow_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}
