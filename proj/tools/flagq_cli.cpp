#include <CLI11.hpp>
#include <json.hpp>

#include "flagq/checks.hpp"
#include "flagq/grobner.hpp"
#include "flagq/permutation.hpp"
#include "flagq/polynomial.hpp"
#include "flagq/quadratic.hpp"
#include "flagq/quantize.hpp"
#include "flagq/schubert.hpp"

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using json = nlohmann::json;

std::vector<int> parse_degrees(const std::string& text, int n) {
    std::vector<int> d;
    std::stringstream in(text);
    std::string piece;
    while (std::getline(in, piece, ','))
        d.push_back(std::stoi(piece));
    if (static_cast<int>(d.size()) != n - 1)
        throw std::invalid_argument("expected " + std::to_string(n - 1) + " comma-separated degrees");
    for (int v : d)
        if (v < 0)
            throw std::invalid_argument("degrees must be nonnegative");
    return d;
}

std::string degrees_to_string(const std::vector<int>& d) {
    std::string out;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(d[i]);
    }
    return out;
}

json permutation_json(const flagq::Permutation& w) {
    json out = json::array();
    for (int v : w.images())
        out.push_back(v);
    return out;
}

json gw_record(int n, const flagq::Permutation& u, const flagq::Permutation& v,
               const flagq::Permutation& w, const std::vector<int>& d, const mpz_class& value,
               const std::string& method) {
    json rec;
    rec["n"] = n;
    rec["u"] = permutation_json(u);
    rec["v"] = permutation_json(v);
    rec["w"] = permutation_json(w);
    rec["d"] = d;
    rec["value"] = value.fits_slong_p() ? json(value.get_si()) : json(value.get_str());
    rec["method"] = method;
    return rec;
}

struct Options {
    int n = 3;
    std::string perm, poly, f, g, u, v, w, on, d, max_d;
    std::string method = "groebner";
    std::string format = "plain";
    int deg = 0;
    long bound = 3;
    int max_support = 6;
    unsigned seed = 0x5eed;
};

int run(int argc, char** argv) {
    CLI::App app{"exact Schubert calculus and quantum cohomology of the flag manifold"};
    app.require_subcommand(1);
    Options opt;

    auto add_n = [&](CLI::App* cmd) { cmd->add_option("--n", opt.n, "ring size n")->required(); };
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "plain|json|tsv")
            ->check(CLI::IsMember({"plain", "json", "tsv"}));
    };

    CLI::App* schubert = app.add_subcommand("schubert", "classical Schubert polynomial of w");
    add_n(schubert);
    schubert->add_option("--perm", opt.perm, "permutation (one-line or word form)")->required();

    CLI::App* qschubert = app.add_subcommand("qschubert", "quantum Schubert polynomial of w");
    add_n(qschubert);
    qschubert->add_option("--perm", opt.perm)->required();

    CLI::App* quantize = app.add_subcommand("quantize", "quantization of a polynomial");
    add_n(quantize);
    quantize->add_option("--poly", opt.poly, "polynomial, e.g. \"x1^2*x2 + q1*x1\"")->required();

    CLI::App* qmul = app.add_subcommand("qmul", "quantum product of two polynomials");
    add_n(qmul);
    qmul->add_option("--f", opt.f)->required();
    qmul->add_option("--g", opt.g)->required();

    CLI::App* nf = app.add_subcommand("nf", "normal form modulo the quantized ideal");
    add_n(nf);
    nf->add_option("--poly", opt.poly)->required();

    CLI::App* gw = app.add_subcommand("gw", "3-point Gromov-Witten invariant");
    add_n(gw);
    gw->add_option("--u", opt.u)->required();
    gw->add_option("--v", opt.v)->required();
    gw->add_option("--w", opt.w)->required();
    gw->add_option("--d", opt.d, "degree vector, e.g. \"1,0\"")->required();
    gw->add_option("--method", opt.method, "groebner|bruhat")
        ->check(CLI::IsMember({"groebner", "bruhat"}));
    add_format(gw);

    CLI::App* gw_table_cmd = app.add_subcommand("gw-table", "all invariants up to a degree bound");
    add_n(gw_table_cmd);
    gw_table_cmd->add_option("--max-d", opt.max_d, "componentwise degree bound, e.g. \"2,2\"")
        ->required();
    add_format(gw_table_cmd);

    CLI::App* dunkl = app.add_subcommand("dunkl", "evaluate a polynomial at the Dunkl elements");
    add_n(dunkl);
    dunkl->add_option("--poly", opt.poly)->required();
    dunkl->add_option("--on", opt.on, "permutation the result acts on")->required();

    CLI::App* en_dim = app.add_subcommand("en-dim", "graded component dimension of the quadratic algebra");
    add_n(en_dim);
    en_dim->add_option("--deg", opt.deg)->required();

    CLI::App* nonneg = app.add_subcommand("nonneg", "nonnegative word certificate for S_w at the Dunkl elements");
    add_n(nonneg);
    nonneg->add_option("--perm", opt.perm)->required();
    nonneg->add_option("--bound", opt.bound, "largest coefficient searched");
    nonneg->add_option("--max-support", opt.max_support, "largest certificate support searched");

    CLI::App* verify = app.add_subcommand("verify", "run the full invariant suite");
    add_n(verify);
    verify->add_option("--seed", opt.seed, "seed for the randomized checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (schubert->parsed()) {
            const flagq::SchubertTable table(opt.n);
            std::cout << flagq::to_string(table.poly(flagq::parse_permutation(opt.perm, opt.n)))
                      << "\n";
        } else if (qschubert->parsed()) {
            const flagq::QSchubertTable table(opt.n);
            std::cout << flagq::to_string(table.poly(flagq::parse_permutation(opt.perm, opt.n)))
                      << "\n";
        } else if (quantize->parsed()) {
            flagq::Quantizer quantizer(opt.n);
            std::cout << flagq::to_string(
                             quantizer.quantize(flagq::parse_polynomial(opt.poly, opt.n)))
                      << "\n";
        } else if (qmul->parsed()) {
            flagq::Quantizer quantizer(opt.n);
            std::cout << flagq::to_string(
                             quantizer.quantum_multiply(flagq::parse_polynomial(opt.f, opt.n),
                                                        flagq::parse_polynomial(opt.g, opt.n)))
                      << "\n";
        } else if (nf->parsed()) {
            const flagq::GroebnerBasis basis(opt.n);
            std::cout << flagq::to_string(basis.normal_form(flagq::parse_polynomial(opt.poly, opt.n)))
                      << "\n";
        } else if (gw->parsed()) {
            const auto u = flagq::parse_permutation(opt.u, opt.n);
            const auto v = flagq::parse_permutation(opt.v, opt.n);
            const auto w = flagq::parse_permutation(opt.w, opt.n);
            const auto d = parse_degrees(opt.d, opt.n);
            mpz_class value;
            if (opt.method == "bruhat") {
                const flagq::QSchubertTable table(opt.n);
                value = flagq::gw_via_bruhat(u, v, w, d, table);
            } else {
                const flagq::GwContext ctx(opt.n);
                value = flagq::gw_invariant({u, v, w}, d, ctx);
            }
            if (opt.format == "json") {
                std::cout << gw_record(opt.n, u, v, w, d, value, opt.method).dump() << "\n";
            } else if (opt.format == "tsv") {
                std::cout << "u\tv\tw\td\tvalue\tmethod\n"
                          << flagq::to_string(u) << '\t' << flagq::to_string(v) << '\t'
                          << flagq::to_string(w) << '\t' << degrees_to_string(d) << '\t'
                          << value.get_str() << '\t' << opt.method << "\n";
            } else {
                std::cout << value.get_str() << "\n";
            }
        } else if (gw_table_cmd->parsed()) {
            const flagq::GwContext ctx(opt.n);
            const auto table = flagq::gw_table(ctx, parse_degrees(opt.max_d, opt.n));
            if (opt.format == "json") {
                json out = json::array();
                for (const auto& r : table)
                    out.push_back(gw_record(opt.n, r.u, r.v, r.w, r.d, r.value, "groebner"));
                std::cout << out.dump() << "\n";
            } else if (opt.format == "tsv") {
                std::cout << "u\tv\tw\td\tvalue\tmethod\n";
                for (const auto& r : table)
                    std::cout << flagq::to_string(r.u) << '\t' << flagq::to_string(r.v) << '\t'
                              << flagq::to_string(r.w) << '\t' << degrees_to_string(r.d) << '\t'
                              << r.value.get_str() << "\tgroebner\n";
            } else {
                for (const auto& r : table)
                    std::cout << "(" << flagq::to_string(r.u) << ") (" << flagq::to_string(r.v)
                              << ") (" << flagq::to_string(r.w) << ") d=" << degrees_to_string(r.d)
                              << "  " << r.value.get_str() << "\n";
            }
        } else if (dunkl->parsed()) {
            const auto f = flagq::parse_polynomial(opt.poly, opt.n);
            const auto on = flagq::parse_permutation(opt.on, opt.n);
            std::cout << flagq::to_string(
                             flagq::eval_at_dunkl(f, flagq::GroupAlgebraElement::unit(on)))
                      << "\n";
        } else if (en_dim->parsed()) {
            const flagq::EnComponent comp(opt.n, opt.deg);
            std::cout << comp.dimension() << "\n";
        } else if (nonneg->parsed()) {
            const auto w = flagq::parse_permutation(opt.perm, opt.n);
            flagq::NonnegOptions options;
            options.coefficient_bound = opt.bound;
            options.max_support = opt.max_support;
            const auto cert = flagq::nonneg_decompose(w, opt.n, options);
            if (!cert) {
                std::cout << "no certificate within bounds\n";
                return 1;
            }
            flagq::NCElement sum(opt.n >= 2 ? opt.n : 2);
            for (const auto& [word, c] : *cert)
                sum.add_term(word, c);
            std::cout << flagq::to_string(sum) << "\n";
        } else if (verify->parsed()) {
            const auto results = flagq::checks::run_all(opt.n, opt.seed);
            bool all_ok = true;
            for (const auto& r : results) {
                std::cout << (r.passed ? "ok   " : "FAIL ") << r.name;
                if (!r.passed && !r.detail.empty())
                    std::cout << "  [" << r.detail << "]";
                std::cout << "\n";
                all_ok = all_ok && r.passed;
            }
            std::cout << (all_ok ? "all checks passed" : "CHECKS FAILED") << "\n";
            if (!all_ok)
                return 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::cerr << app.help() << "\n";
        return 2;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    return run(argc, argv);
}
