#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "schurq/amenability.hpp"
#include "schurq/canonical.hpp"
#include "schurq/classification.hpp"
#include "schurq/errors.hpp"
#include "schurq/expansion.hpp"
#include "schurq/sweep.hpp"

namespace {

using namespace schurq;

void print_expansion_machine(const QExpansion& e, std::ostream& out) {
    if (e.zero) {
        out << "ZERO\n";
        return;
    }
    for (const auto& [nu, coeff] : e.terms) out << coeff << ' ' << nu.str() << '\n';
}

void print_expansion(const QExpansion& e, bool machine, std::ostream& out) {
    if (machine) {
        print_expansion_machine(e, out);
    } else {
        out << to_string(e) << '\n';
    }
}

void print_monomials(const MonomialPoly& poly, std::ostream& out) {
    for (const auto& [expo, coeff] : poly.terms) {
        out << coeff;
        for (int e : expo) out << ' ' << e;
        out << '\n';
    }
}

int run(int argc, char** argv) {
    CLI::App app{"Exact Schur Q-function expansions of skew shifted shapes"};
    app.require_subcommand(1);

    std::string shape_arg, nu_arg, lambda_arg;
    bool machine = false;
    bool monomials = false;
    int variables = 0;
    int strip = 0;
    int max_cells = 6;
    int jobs = 1;

    CLI::App* cmd_expand = app.add_subcommand(
        "expand", "Expand Q of a skew shape in the basis {Q_nu}");
    cmd_expand->add_option("shape", shape_arg, "shape literal, e.g. 6,5,2,1/4,3")->required();
    cmd_expand->add_flag("--machine", machine, "one 'coeff partition' line per term");
    cmd_expand->add_flag("--monomials", monomials, "print the raw monomial expansion instead");
    cmd_expand->add_option("--variables", variables, "variable count for --monomials");

    CLI::App* cmd_coeff = app.add_subcommand(
        "coeff", "Count amenable fillings of a shape with a given content");
    cmd_coeff->add_option("shape", shape_arg, "shape literal")->required();
    cmd_coeff->add_option("nu", nu_arg, "content partition literal")->required();

    CLI::App* cmd_classify = app.add_subcommand(
        "classify", "Decide whether Q of the shape is a single basis term");
    cmd_classify->add_option("shape", shape_arg, "shape literal")->required();

    CLI::App* cmd_canonical = app.add_subcommand(
        "canonical", "Print the band filling realizing the lex-largest content");
    cmd_canonical->add_option("shape", shape_arg, "shape literal")->required();

    CLI::App* cmd_ot = app.add_subcommand("ot", "Orthogonal transpose of a shape");
    cmd_ot->add_option("shape", shape_arg, "shape literal")->required();

    CLI::App* cmd_decompose = app.add_subcommand(
        "decompose", "Expand Q_lambda/(n) from the border of lambda");
    cmd_decompose->add_option("lambda", lambda_arg, "straight shape literal")->required();
    cmd_decompose->add_option("n", strip, "row strip size")->required();
    cmd_decompose->add_flag("--machine", machine, "one 'coeff partition' line per term");

    CLI::App* cmd_witness = app.add_subcommand(
        "witness", "Show a second-content amenable filling when one is constructed");
    cmd_witness->add_option("shape", shape_arg, "shape literal")->required();

    CLI::App* cmd_sweep = app.add_subcommand(
        "sweep", "Cross-validate all rules against brute force up to a size bound");
    cmd_sweep->add_option("--max-cells", max_cells, "cell-count bound (default 6)");
    cmd_sweep->add_option("--jobs", jobs, "worker threads (default 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (cmd_expand->parsed()) {
        SkewShape shape = SkewShape::parse(shape_arg);
        if (monomials) {
            if (variables <= 0) throw OutOfRange("--monomials needs --variables >= 1");
            print_monomials(monomial_oracle(shape, variables), std::cout);
        } else {
            print_expansion(expand(shape), machine, std::cout);
        }
    } else if (cmd_coeff->parsed()) {
        SkewShape shape = SkewShape::parse(shape_arg);
        if (!shape.is_valid()) throw InvalidShape("inner partition is not contained in the outer");
        std::cout << lr_coefficient(shape, StrictPartition::parse(nu_arg)) << '\n';
    } else if (cmd_classify->parsed()) {
        ClassificationResult res = classify(SkewShape::parse(shape_arg));
        if (res.zero) {
            std::cout << "ZERO\n";
        } else if (res.homogeneous) {
            std::cout << "HOMOGENEOUS k=" << res.hom->coefficient << " nu=" << res.hom->nu.str()
                      << " family=" << family_name(res.hom->family) << '\n';
        } else {
            std::cout << "NOT_HOMOGENEOUS";
            if (res.witness) {
                std::cout << " second_content=" << res.witness->content().to_strict_partition().str()
                          << '\n'
                          << res.witness->text();
            } else {
                std::cout << " (connected shape with connected bands; no witness constructed)\n";
            }
        }
    } else if (cmd_canonical->parsed()) {
        SkewShape shape = SkewShape::parse(shape_arg);
        if (!shape.is_valid()) throw InvalidShape("inner partition is not contained in the outer");
        BandTableau canon = canonical_tableau(shape);
        std::cout << canon.tableau.text();
        std::cout << "content=" << lex_max_content(shape.cells()).str() << '\n';
        std::cout << "coefficient=" << leading_coefficient(shape.cells()) << '\n';
    } else if (cmd_ot->parsed()) {
        SkewShape shape = SkewShape::parse(shape_arg);
        if (!shape.is_valid()) throw InvalidShape("inner partition is not contained in the outer");
        std::cout << orthogonal_transpose(shape).str() << '\n';
    } else if (cmd_decompose->parsed()) {
        print_expansion(decompose_row_strip(StrictPartition::parse(lambda_arg), strip), machine,
                        std::cout);
    } else if (cmd_witness->parsed()) {
        ClassificationResult res = classify(SkewShape::parse(shape_arg));
        if (res.witness) {
            std::cout << res.witness->text();
        } else {
            std::cout << "NONE\n";
        }
    } else if (cmd_sweep->parsed()) {
        bool all_ok = true;
        for (const CheckResult& r : run_sweep(max_cells, jobs)) {
            if (r.ok) {
                std::cout << "PASS " << r.name << " cases=" << r.cases << '\n';
            } else {
                std::cout << "FAIL " << r.name << ": " << r.detail << '\n';
                all_ok = false;
            }
        }
        if (!all_ok) throw InternalError("sweep found disagreements");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const schurq::InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    } catch (const schurq::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
}
