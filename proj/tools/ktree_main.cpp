// ktree — k-descending trees, row-length sequences and rigorous rho(k)
// enclosures over exact arithmetic.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "ktree/errors.hpp"
#include "ktree/formats.hpp"
#include "ktree/indicator.hpp"
#include "ktree/rho.hpp"
#include "ktree/rows.hpp"
#include "ktree/tree.hpp"

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInvalidParams = 3;
constexpr int kExitPrecisionExhausted = 4;
constexpr int kExitSizeLimit = 5;

// Rational CLI argument: "p/q", an integer, or a decimal literal (taken at
// face value as the exact rational it denotes).
ktree::BigRat parse_rational_arg(const std::string& text) {
    try {
        const auto slash = text.find('/');
        if (slash != std::string::npos) {
            const ktree::BigInt num = ktree::bigint_from_decimal(text.substr(0, slash));
            const ktree::BigInt den = ktree::bigint_from_decimal(text.substr(slash + 1));
            if (den == 0) throw ktree::InvalidParams("denominator must be nonzero");
            return ktree::BigRat(num, den);
        }
        const auto dot = text.find('.');
        if (dot != std::string::npos) {
            const std::string ip = text.substr(0, dot);
            const std::string fp = text.substr(dot + 1);
            const ktree::BigInt scale = ktree::pow10(static_cast<unsigned>(fp.size()));
            ktree::BigInt units =
                ktree::bigint_from_decimal(ip.empty() || ip == "-" ? "0" : ip) * scale;
            const ktree::BigInt frac = ktree::bigint_from_decimal(fp);
            units = abs(units) + frac;
            if (text.front() == '-') units = -units;
            return ktree::BigRat(units, scale);
        }
        return ktree::BigRat(ktree::bigint_from_decimal(text), 1);
    } catch (const std::invalid_argument& e) {
        throw ktree::ParseError("expected a rational or decimal number, got \"" + text +
                                "\"");
    }
}

void write_output(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw ktree::Error("cannot open output file: " + out_path);
    file << content;
}

struct TreeArgs {
    std::string k_spec;
    int depth = 0;
    std::string format = "text";
    std::string out;
    std::uint64_t max_nodes = ktree::kDefaultNodeCap;
    bool meta = false;
};

struct RowsArgs {
    std::string k_spec;
    int depth = 0;
    std::string format = "csv";
    std::string out;
    bool meta = false;
};

struct RhoArgs {
    std::string k_spec;
    int iters = 40;
    unsigned digits = ktree::kDefaultCsvDigits;
    std::string out;
};

struct SweepArgs {
    std::string kmin, kmax;
    int points = 0;
    int iters = 40;
    unsigned digits = ktree::kDefaultCsvDigits;
    std::string out;
    bool meta = false;
};

struct IndicatorArgs {
    long long a = 0, b = 0;
    bool have_ab = false;
    std::string k_spec;
    int samples = 512;
    long nmax = 500;
    unsigned digits = ktree::kDefaultCsvDigits;
    std::string out;
    bool meta = false;
};

struct VerifyArgs {
    long long a = 0, b = 0;
    int depth = 30;
    int iters = 60;
    unsigned digits = ktree::kDefaultCsvDigits;
    std::string out;
};

struct JosephusArgs {
    long long q = 2;
    std::vector<std::string> eps;
    int iters = 200;
    unsigned digits = ktree::kDefaultCsvDigits;
    std::string out;
};

int run(int argc, char** argv) {
    CLI::App app{"k-descending trees, row-length sequences and rigorous rho(k) enclosures"};
    app.require_subcommand(1);

    TreeArgs tree_args;
    auto* cmd_tree = app.add_subcommand("tree", "Enumerate a tree slice (dot/text/json)");
    cmd_tree->add_option("k", tree_args.k_spec, "k-spec: p/q, quad:(p,q,D,r), golden:a,b, or a decimal")
        ->required();
    cmd_tree->add_option("--depth", tree_args.depth, "maximum depth")->required();
    cmd_tree->add_option("--format", tree_args.format, "dot, text or json")
        ->check(CLI::IsMember({"dot", "text", "json"}));
    cmd_tree->add_option("--max-nodes", tree_args.max_nodes, "node cap (default 10^7)");
    cmd_tree->add_option("--out", tree_args.out, "output file (default stdout)");
    cmd_tree->add_flag("--meta", tree_args.meta, "include a metadata header comment");

    RowsArgs rows_args;
    auto* cmd_rows = app.add_subcommand("rows", "Leftmost sequence f_d and row lengths r_d");
    cmd_rows->add_option("k", rows_args.k_spec, "k-spec")->required();
    cmd_rows->add_option("--depth", rows_args.depth, "last depth to compute")->required();
    cmd_rows->add_option("--format", rows_args.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd_rows->add_option("--out", rows_args.out, "output file (default stdout)");
    cmd_rows->add_flag("--meta", rows_args.meta, "include a metadata header comment");

    RhoArgs rho_args;
    auto* cmd_rho = app.add_subcommand("rho", "Enclosure of c(k) and rho(k) at one k");
    cmd_rho->add_option("k", rho_args.k_spec, "k-spec")->required();
    cmd_rho->add_option("--iters", rho_args.iters, "f-sequence iterations (default 40)");
    cmd_rho->add_option("--digits", rho_args.digits, "decimal digits in the report");
    cmd_rho->add_option("--out", rho_args.out, "output file (default stdout)");

    SweepArgs sweep_args;
    auto* cmd_sweep = app.add_subcommand("sweep", "Enclosures on a rational grid, CSV");
    cmd_sweep->add_option("--kmin", sweep_args.kmin, "grid start (rational or decimal)")->required();
    cmd_sweep->add_option("--kmax", sweep_args.kmax, "grid end")->required();
    cmd_sweep->add_option("--points", sweep_args.points, "number of grid points")->required();
    cmd_sweep->add_option("--iters", sweep_args.iters, "f-sequence iterations (default 40)");
    cmd_sweep->add_option("--digits", sweep_args.digits, "decimal digits in the CSV");
    cmd_sweep->add_option("--out", sweep_args.out, "output file (default stdout)");
    cmd_sweep->add_flag("--meta", sweep_args.meta, "include a metadata header comment");

    IndicatorArgs ind_args;
    auto* cmd_ind = app.add_subcommand(
        "indicators", "Child-count indicator lines (--a/--b) or empirical scatter (--k)");
    auto* opt_a = cmd_ind->add_option("--a", ind_args.a, "golden parameter a");
    auto* opt_b = cmd_ind->add_option("--b", ind_args.b, "golden parameter b");
    auto* opt_k = cmd_ind->add_option("--k", ind_args.k_spec, "k-spec for scatter mode");
    cmd_ind->add_option("--samples", ind_args.samples, "x resolution for line mode (default 512)");
    cmd_ind->add_option("--nmax", ind_args.nmax, "largest node for scatter mode (default 500)");
    cmd_ind->add_option("--digits", ind_args.digits, "decimal digits in the CSV");
    cmd_ind->add_option("--out", ind_args.out, "output file (default stdout)");
    cmd_ind->add_flag("--meta", ind_args.meta, "include a metadata header comment");
    opt_a->needs(opt_b);
    opt_b->needs(opt_a);
    opt_k->excludes(opt_a);

    VerifyArgs verify_args;
    auto* cmd_verify = app.add_subcommand(
        "verify", "Recurrence, closed-form rows and closed rho for golden parameters");
    cmd_verify->add_option("--a", verify_args.a, "golden parameter a")->required();
    cmd_verify->add_option("--b", verify_args.b, "golden parameter b")->required();
    cmd_verify->add_option("--depth", verify_args.depth, "recurrence depth (default 30)");
    cmd_verify->add_option("--iters", verify_args.iters, "enclosure iterations (default 60)");
    cmd_verify->add_option("--digits", verify_args.digits, "decimal digits in the report");
    cmd_verify->add_option("--out", verify_args.out, "output file (default stdout)");

    JosephusArgs jos_args;
    auto* cmd_jos = app.add_subcommand("josephus", "Probe c(k) around a Josephus point q/(q-1)");
    cmd_jos->add_option("--q", jos_args.q, "defines the point q/(q-1)")->required();
    cmd_jos->add_option("--eps", jos_args.eps, "offsets (rational or decimal, repeatable)")
        ->required();
    cmd_jos->add_option("--iters", jos_args.iters, "f-sequence iterations (default 200)");
    cmd_jos->add_option("--digits", jos_args.digits, "decimal digits in the report");
    cmd_jos->add_option("--out", jos_args.out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << ktree::error_to_json("usage", e.what());
        return kExitUsage;
    }

    if (cmd_tree->parsed()) {
        const ktree::KValue k = ktree::KValue::parse(tree_args.k_spec);
        const ktree::TreeSlice slice = ktree::build_slice(k, tree_args.depth, tree_args.max_nodes);
        if (tree_args.format == "dot")
            write_output(ktree::tree_to_dot(slice, tree_args.meta), tree_args.out);
        else if (tree_args.format == "json")
            write_output(ktree::tree_to_json(slice), tree_args.out);
        else
            write_output(ktree::tree_to_text(slice), tree_args.out);
        return 0;
    }

    if (cmd_rows->parsed()) {
        const ktree::KValue k = ktree::KValue::parse(rows_args.k_spec);
        const ktree::RowTable table = ktree::make_row_table(k, rows_args.depth);
        if (rows_args.format == "json")
            write_output(ktree::row_table_to_json(table), rows_args.out);
        else
            write_output(ktree::row_table_to_csv(table, rows_args.meta), rows_args.out);
        return 0;
    }

    if (cmd_rho->parsed()) {
        const ktree::KValue k = ktree::KValue::parse(rho_args.k_spec);
        const ktree::RhoEnclosure enc = ktree::enclose_c(k, rho_args.iters);
        write_output(ktree::enclosure_to_json(enc, rho_args.digits), rho_args.out);
        return 0;
    }

    if (cmd_sweep->parsed()) {
        const ktree::BigRat kmin = parse_rational_arg(sweep_args.kmin);
        const ktree::BigRat kmax = parse_rational_arg(sweep_args.kmax);
        if (!(1 < kmin && kmin < kmax) || sweep_args.points < 2) {
            std::cerr << ktree::error_to_json(
                "usage", "sweep needs 1 < kmin < kmax and at least 2 points");
            return kExitUsage;
        }
        std::cerr << "sweeping " << sweep_args.points << " points in [" << kmin << ", "
                  << kmax << "] at " << sweep_args.iters << " iterations\n";
        const auto points = ktree::sweep(kmin, kmax, sweep_args.points, sweep_args.iters);
        write_output(
            ktree::sweep_to_csv(points, sweep_args.iters, sweep_args.digits, sweep_args.meta),
            sweep_args.out);
        std::cerr << "swept " << points.size() << " points\n";
        return 0;
    }

    if (cmd_ind->parsed()) {
        if (!ind_args.k_spec.empty()) {
            const ktree::KValue k = ktree::KValue::parse(ind_args.k_spec);
            write_output(
                ktree::scatter_to_csv(k, ind_args.nmax, ind_args.digits, ind_args.meta),
                ind_args.out);
            return 0;
        }
        if (opt_a->count() == 0)
            throw ktree::InvalidParams("indicators: provide either --a/--b or --k");
        const ktree::GoldenParams params{ind_args.a, ind_args.b};
        write_output(ktree::cci_lines_to_csv(params, ind_args.samples, ind_args.digits,
                                             ind_args.meta),
                     ind_args.out);
        return 0;
    }

    if (cmd_verify->parsed()) {
        const ktree::GoldenParams params{verify_args.a, verify_args.b};
        const ktree::VerifyBundle bundle =
            ktree::run_verify(params, verify_args.depth, verify_args.iters);
        write_output(ktree::verify_to_json(bundle, verify_args.digits), verify_args.out);
        return bundle.pass ? 0 : kExitVerifyFailed;
    }

    if (cmd_jos->parsed()) {
        std::vector<ktree::BigRat> eps;
        eps.reserve(jos_args.eps.size());
        for (const std::string& text : jos_args.eps) eps.push_back(parse_rational_arg(text));
        const ktree::JosephusReport report =
            ktree::josephus_probe(jos_args.q, eps, jos_args.iters);
        write_output(ktree::josephus_to_json(report, jos_args.digits), jos_args.out);
        return 0;
    }

    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ktree::ParseError& e) {
        std::cerr << ktree::error_to_json("parse", e.what());
        return kExitUsage;
    } catch (const ktree::InvalidParams& e) {
        std::cerr << ktree::error_to_json("invalid_params", e.what());
        return kExitInvalidParams;
    } catch (const ktree::UnsupportedRepresentation& e) {
        std::cerr << ktree::error_to_json("unsupported_representation", e.what());
        return kExitInvalidParams;
    } catch (const ktree::PrecisionExhausted& e) {
        std::cerr << ktree::error_to_json("precision_exhausted", e.what());
        return kExitPrecisionExhausted;
    } catch (const ktree::SizeLimit& e) {
        std::cerr << ktree::error_to_json("size_limit", e.what());
        return kExitSizeLimit;
    } catch (const ktree::Error& e) {
        std::cerr << ktree::error_to_json("error", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::cerr << ktree::error_to_json("internal", e.what());
        return 1;
    }
}
