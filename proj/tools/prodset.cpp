#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "prodset/bounds.hpp"
#include "prodset/certificate.hpp"
#include "prodset/decomposition.hpp"
#include "prodset/errors.hpp"
#include "prodset/format.hpp"
#include "prodset/parallel.hpp"
#include "prodset/rational_set.hpp"
#include "prodset/rng.hpp"
#include "prodset/search.hpp"
#include "prodset/tau.hpp"

namespace {

using namespace prodset;

RationalSet read_set(const std::string& path) {
    if (path == "-") return read_rational_set(std::cin);
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open input file: " + path);
    return read_rational_set(in);
}

struct Options {
    std::string a_path, b_path;
    double q = 1, qprime = 1;
    std::uint32_t n = 1, n_max = 0;
    std::uint64_t m = 1;
    double x = 1;
    std::size_t k = 1, count = 10, iters = 1000, restarts = 8;
    std::size_t max_k = 200;
    std::uint64_t seed = 0;
    std::string format = "json";
    std::string objective = "quotient";
    std::string method = "local";
    bool symmetric = false;
    bool do_validate = false;
    bool with_product = false;
};

int cmd_enumerate(const Options& o) {
    write_rational_set(std::cout, enumerate_farey(FareyParams(o.q, o.qprime)));
    return 0;
}

int cmd_setop(const Options& o, bool divide) {
    RationalSet a = read_set(o.a_path);
    RationalSet b = read_set(o.b_path);
    write_rational_set(std::cout, divide ? quotient_set(a, b) : product_set(a, b));
    return 0;
}

int cmd_decompose(const Options& o) {
    DecompositionTable t = decompose(read_set(o.a_path), read_set(o.b_path));
    std::cout << "r,s,count_a,count_b,count_m\n";
    for (const auto& [cls, counts] : t.realized())
        std::cout << cls.r << ',' << cls.s << ',' << counts.count_a << ','
                  << counts.count_b << ',' << counts.count_m << '\n';
    return 0;
}

int cmd_tau(const Options& o) {
    std::cout << TauTable::build(o.m).tau(o.m) << '\n';
    return 0;
}

int cmd_tmax(const Options& o) {
    auto limit = static_cast<std::uint64_t>(o.x);
    std::cout << TauTable::build(std::max<std::uint64_t>(limit, 1)).tau_max(o.x) << '\n';
    return 0;
}

int cmd_bounds(const Options& o) {
    FareyParams p(o.q, o.qprime);
    RationalSet a = read_set(o.a_path);
    RationalSet b = read_set(o.b_path);
    TauTable table = TauTable::build(static_cast<std::uint64_t>(p.qq()));
    std::uint32_t n_max = o.n_max ? o.n_max : default_n_max(p);
    BoundReport rep = compare_actual(a, b, p, table, n_max, o.with_product);
    if (o.format == "csv")
        std::cout << BoundReport::csv_header(n_max) << '\n' << rep.to_csv_row() << '\n';
    else
        std::cout << rep.to_json() << '\n';
    return 0;
}

int cmd_certify(const Options& o) {
    FareyParams p(o.q, o.qprime);
    RationalSet a = read_set(o.a_path);
    RationalSet b = read_set(o.b_path);
    TauTable table = TauTable::build(static_cast<std::uint64_t>(p.qq()));
    CertificateNode cert = certify(a, b, p, o.n, table);
    std::cout << cert.to_json() << '\n';
    if (o.do_validate) {
        std::vector<std::string> diag;
        bool ok = validate(cert, a, b, table, &diag);
        std::cout << "validation: " << (ok ? "true" : "false") << '\n';
        for (const auto& line : diag) std::cerr << line << '\n';
        if (!ok) return 3;
    }
    return 0;
}

int cmd_search(const Options& o) {
    FareyParams p(o.q, o.qprime);
    Objective obj = o.objective == "product" ? Objective::Product : Objective::Quotient;
    SearchResult result =
        o.method == "exhaustive"
            ? exhaustive_min(p, o.k, obj, o.symmetric)
            : local_search_min(p, o.k, obj, o.iters, o.seed, o.restarts);
    std::cout << result.to_json() << '\n';
    return 0;
}

int cmd_report(const Options& o) {
    FareyParams p(o.q, o.qprime);
    RationalSet universe = enumerate_farey(p);
    TauTable table = TauTable::build(static_cast<std::uint64_t>(p.qq()));
    std::uint32_t n_max = o.n_max ? o.n_max : default_n_max(p);
    std::size_t k_cap = std::min(o.max_k, universe.size());

    std::vector<std::string> rows(o.count);
    // Per-instance seeds come from the master seed alone, so rows are
    // identical for any worker count; emission is buffered in order.
    parallel_chunks(o.count, [&](std::size_t, std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            auto rng = make_rng(subtask_seed(o.seed, i));
            std::uniform_int_distribution<std::size_t> pick_k(1, k_cap);
            RationalSet a = random_subset(p, pick_k(rng), subtask_seed(o.seed, 2 * i + 1));
            RationalSet b = random_subset(p, pick_k(rng), subtask_seed(o.seed, 2 * i + 2));
            rows[i] = compare_actual(a, b, p, table, n_max).to_csv_row();
        }
    });
    std::cout << BoundReport::csv_header(n_max) << '\n';
    for (const auto& row : rows) std::cout << row << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact product/quotient sets of bounded-height rationals"};
    app.require_subcommand(1);
    Options o;

    auto add_params = [&](CLI::App* cmd) {
        cmd->add_option("--q", o.q, "height bound Q")->required();
        cmd->add_option("--qprime", o.qprime, "height bound Q'")->required();
    };
    auto add_sets = [&](CLI::App* cmd) {
        cmd->add_option("--a", o.a_path, "file with set A ('-' for stdin)")->required();
        cmd->add_option("--b", o.b_path, "file with set B ('-' for stdin)")->required();
    };

    auto* enumerate = app.add_subcommand("enumerate", "list F_{Q,Q'}");
    add_params(enumerate);

    auto* product = app.add_subcommand("product-set", "elementwise products of two sets");
    add_sets(product);
    auto* quotient = app.add_subcommand("quotient-set", "elementwise quotients of two sets");
    add_sets(quotient);

    auto* decomp = app.add_subcommand("decompose", "gcd-class pair counts as CSV");
    add_sets(decomp);

    auto* tau_cmd = app.add_subcommand("tau", "divisor count of m");
    tau_cmd->add_option("--m", o.m, "argument")->required();
    auto* tmax_cmd = app.add_subcommand("tmax", "running divisor maximum T(x)");
    tmax_cmd->add_option("--x", o.x, "argument")->required();

    auto* bounds = app.add_subcommand("bounds", "evaluate all bounds against exact sizes");
    add_sets(bounds);
    add_params(bounds);
    bounds->add_option("--n-max", o.n_max, "bound-level scan ceiling (default: ceil(ln QQ'))");
    bounds->add_option("--format", o.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    bounds->add_flag("--with-product", o.with_product, "also report |AB|");

    auto* certify_cmd = app.add_subcommand("certify", "trace the inductive bound");
    add_sets(certify_cmd);
    add_params(certify_cmd);
    certify_cmd->add_option("--n", o.n, "induction level")->required();
    certify_cmd->add_flag("--validate", o.do_validate, "re-check every node");

    auto* search = app.add_subcommand("search", "look for small product/quotient sets");
    add_params(search);
    search->add_option("--k", o.k, "subset size")->required();
    search->add_option("--objective", o.objective, "quotient or product")
        ->check(CLI::IsMember({"quotient", "product"}));
    search->add_option("--method", o.method, "exhaustive or local")
        ->check(CLI::IsMember({"exhaustive", "local"}));
    search->add_flag("--symmetric", o.symmetric, "restrict to A = B (exhaustive)");
    search->add_option("--iters", o.iters, "local-search iterations per restart");
    search->add_option("--restarts", o.restarts, "local-search restarts");
    search->add_option("--seed", o.seed, "RNG seed");

    auto* report = app.add_subcommand("report", "batch bound reports over random instances");
    add_params(report);
    report->add_option("--count", o.count, "number of instances");
    report->add_option("--max-k", o.max_k, "largest subset size to sample");
    report->add_option("--seed", o.seed, "RNG seed");
    report->add_option("--n-max", o.n_max, "bound-level scan ceiling");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 64;
    }

    try {
        if (*enumerate) return cmd_enumerate(o);
        if (*product) return cmd_setop(o, false);
        if (*quotient) return cmd_setop(o, true);
        if (*decomp) return cmd_decompose(o);
        if (*tau_cmd) return cmd_tau(o);
        if (*tmax_cmd) return cmd_tmax(o);
        if (*bounds) return cmd_bounds(o);
        if (*certify_cmd) return cmd_certify(o);
        if (*search) return cmd_search(o);
        if (*report) return cmd_report(o);
    } catch (const certification_error& e) {
        std::cerr << "certification failure: " << e.what() << '\n';
        return 3;
    } catch (const capacity_error& e) {
        std::cerr << "capacity error: " << e.what() << '\n';
        return 2;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
