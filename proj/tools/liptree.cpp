// liptree: norms, multiplication-operator diagnostics, and verification
// suites for iterated logarithmic Lipschitz spaces on truncated rooted trees.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "liptree/report.hpp"
#include "liptree/verify.hpp"

namespace {

using nlohmann::json;

struct TreeOptions {
    int branching = 2;
    std::vector<int> branching_per_level;
    int depth = 8;
    std::size_t vertex_cap = liptree::TreeTruncation::kDefaultVertexCap;

    liptree::TreeShape shape() const {
        return branching_per_level.empty() ? liptree::TreeShape::uniform(branching)
                                           : liptree::TreeShape::per_level(branching_per_level);
    }

    liptree::TreeTruncation build() const {
        return liptree::TreeTruncation::build(shape(), depth, vertex_cap);
    }
};

void add_tree_options(CLI::App* cmd, TreeOptions& opts) {
    cmd->add_option("--branching", opts.branching, "Uniform child count (default 2)");
    cmd->add_option("--branching-per-level", opts.branching_per_level,
                    "Comma-separated child counts per level; last entry repeats")
        ->delimiter(',');
    cmd->add_option("--depth", opts.depth, "Truncation depth D (default 8)");
    cmd->add_option("--vertex-cap", opts.vertex_cap, "Maximum vertex count")
        ->envname("LIPTREE_VERTEX_CAP");
}

struct SymbolOptions {
    std::string file;
    std::string expr;

    liptree::Symbol load() const {
        if (!file.empty()) {
            std::ifstream in(file);
            if (!in) throw std::invalid_argument("cannot open symbol file: " + file);
            json j;
            in >> j;
            return liptree::Symbol::from_json(j);
        }
        if (!expr.empty()) return liptree::Symbol::radial(expr);
        throw std::invalid_argument("a symbol is required: --symbol file.json or --symbol-expr");
    }
};

void add_symbol_options(CLI::App* cmd, SymbolOptions& opts) {
    auto* f = cmd->add_option("--symbol", opts.file, "Symbol JSON file");
    cmd->add_option("--symbol-expr", opts.expr, "Radial symbol expression in x = |v|")
        ->excludes(f);
}

void emit(const json& j, const std::string& out_path) {
    std::string text = j.dump(2);
    if (out_path.empty()) {
        std::cout << text << '\n';
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
        out << text << '\n';
    }
}

void emit_csv(const liptree::MuNuProfile& p, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open CSV file: " + path);
    out << "depth,mu_max,nu_max\n";
    out.precision(17);
    for (int j = 1; j <= p.depth; ++j)
        out << j << ',' << p.mu_by_depth[static_cast<std::size_t>(j)] << ','
            << p.nu_by_depth[static_cast<std::size_t>(j)] << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"liptree: iterated logarithmic Lipschitz spaces on truncated rooted trees"};
    app.require_subcommand(1);

    // weights
    int w_k = 4;
    double w_x = 1.0;
    std::string w_out;
    auto* weights_cmd = app.add_subcommand("weights", "Print ell_0..ell_K and Lambda_0..Lambda_K at x");
    weights_cmd->add_option("--k", w_k, "Largest index K")->required();
    weights_cmd->add_option("--x", w_x, "Argument x >= 1")->required();
    weights_cmd->add_option("--out", w_out, "Write JSON here instead of stdout");

    // testfn
    TreeOptions tf_tree;
    std::string tf_kind, tf_vertex = "o", tf_out;
    int tf_m = 0;
    auto* testfn_cmd = app.add_subcommand("testfn", "Emit a canonical test function as JSON");
    testfn_cmd->add_option("--kind", tf_kind, "chi|f_v|g_radial|g_k|h_k|half_chi_o|one")->required();
    testfn_cmd->add_option("--vertex", tf_vertex, "Target vertex path, e.g. 0/1/0");
    testfn_cmd->add_option("--m", tf_m, "Space index m");
    testfn_cmd->add_option("--out", tf_out, "Write JSON here instead of stdout");
    add_tree_options(testfn_cmd, tf_tree);

    // analyze
    TreeOptions an_tree;
    SymbolOptions an_sym;
    std::optional<int> an_m, an_n, an_k;
    bool an_exact = false;
    std::string an_out, an_csv;
    liptree::TailConfig an_tail;
    auto* analyze_cmd = app.add_subcommand("analyze", "mu/nu profile, bounds, tails, isometry defect");
    analyze_cmd->add_option("--m", an_m, "Source space index");
    analyze_cmd->add_option("--n", an_n, "Target space index");
    analyze_cmd->add_option("--k", an_k, "Same-space index (sets m = n = k)");
    analyze_cmd->add_flag("--exact", an_exact, "Also compute the exact truncation norm");
    analyze_cmd->add_option("--out", an_out, "Write JSON here instead of stdout");
    analyze_cmd->add_option("--csv", an_csv, "Write per-depth mu/nu maxima as CSV");
    analyze_cmd->add_option("--eps-tail", an_tail.eps_tail, "Tail smallness threshold");
    add_symbol_options(analyze_cmd, an_sym);
    add_tree_options(analyze_cmd, an_tree);

    // exact-norm
    TreeOptions ex_tree;
    SymbolOptions ex_sym;
    int ex_m = 0, ex_n = 0, ex_trials = 0;
    std::uint64_t ex_seed = 1;
    std::string ex_out;
    auto* exact_cmd = app.add_subcommand("exact-norm", "Exact truncation operator norm with witness");
    exact_cmd->add_option("--m", ex_m, "Source space index")->required();
    exact_cmd->add_option("--n", ex_n, "Target space index")->required();
    exact_cmd->add_option("--trials", ex_trials, "Random-search oracle trials (0 = skip)");
    exact_cmd->add_option("--seed", ex_seed, "Oracle seed");
    exact_cmd->add_option("--out", ex_out, "Write JSON here instead of stdout");
    add_symbol_options(exact_cmd, ex_sym);
    add_tree_options(exact_cmd, ex_tree);

    // verify
    TreeOptions vf_tree;
    std::string vf_suite, vf_out;
    liptree::VerifyOptions vf_opts;
    auto* verify_cmd = app.add_subcommand("verify", "Run a property-verification suite");
    verify_cmd->add_option("--suite", vf_suite,
                           "weights|embedding|pointbound|testfns|sandwich|isometry|tails")
        ->required();
    verify_cmd->add_option("--trials", vf_opts.trials, "Trial count");
    verify_cmd->add_option("--seed", vf_opts.seed, "Seed (printed in the report)");
    verify_cmd->add_option("--eps-tail", vf_opts.tail.eps_tail, "Tail smallness threshold");
    verify_cmd->add_option("--out", vf_out, "Write JSON here instead of stdout");
    add_tree_options(verify_cmd, vf_tree);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*weights_cmd) {
            if (w_x < 1.0) throw std::invalid_argument("--x must be >= 1");
            json j;
            j["x"] = w_x;
            std::vector<double> ells, lambdas;
            for (int i = 0; i <= w_k; ++i) {
                ells.push_back(liptree::ell(i, w_x));
                lambdas.push_back(liptree::lambda_weight(i, w_x));
            }
            j["ell"] = ells;
            j["Lambda"] = lambdas;
            emit(j, w_out);
            return 0;
        }
        if (*testfn_cmd) {
            auto t = tf_tree.build();
            liptree::TestFunctionSpec spec{tf_kind, liptree::VertexId::from_string(tf_vertex),
                                           tf_m};
            emit(liptree::to_json(liptree::make_test_function(spec, t)), tf_out);
            return 0;
        }
        if (*analyze_cmd) {
            if (an_k && (an_m || an_n))
                throw std::invalid_argument("--k excludes --m/--n");
            int m = an_k ? *an_k : an_m.value_or(0);
            int n = an_k ? *an_k : an_n.value_or(0);
            if (!an_k && (!an_m || !an_n))
                throw std::invalid_argument("provide --m and --n, or --k");
            auto t = an_tree.build();
            auto psi = an_sym.load();
            auto report = liptree::analyze(psi, m, n, t, an_exact, an_tail);
            if (!an_csv.empty()) emit_csv(report.profile, an_csv);
            emit(liptree::to_json(report), an_out);
            return 0;
        }
        if (*exact_cmd) {
            auto t = ex_tree.build();
            auto psi = ex_sym.load();
            auto sol = liptree::exact_operator_norm(psi, ex_m, ex_n, t);
            json j = liptree::to_json(sol);
            j["m"] = ex_m;
            j["n"] = ex_n;
            j["depth"] = t.depth();
            if (ex_trials > 0) {
                j["oracle_trials"] = ex_trials;
                j["oracle_seed"] = ex_seed;
                j["oracle_value"] =
                    liptree::random_search_lower_bound(psi, ex_m, ex_n, t, ex_trials, ex_seed);
            }
            emit(j, ex_out);
            return 0;
        }
        if (*verify_cmd) {
            vf_opts.branching = vf_tree.branching;
            vf_opts.depth = vf_tree.depth;
            vf_opts.vertex_cap = vf_tree.vertex_cap;
            auto result = liptree::run_suite(vf_suite, vf_opts);
            emit(result.report, vf_out);
            return result.pass ? 0 : 1;
        }
    } catch (const json::exception& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const liptree::ParseError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const liptree::EvalError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const liptree::CapacityError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
