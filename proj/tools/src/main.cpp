#include "opcoact/cli.hpp"
#include "opcoact/operad.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"opcoact: universal coacting bialgebras of algebras over operads"};
    app.require_subcommand(1);

    opcoact::RunConfig cfg;
    std::string order = "degrevlex";
    std::string format = "json";
    std::size_t max_steps = cfg.budget.max_reduction_steps;
    std::size_t max_basis = cfg.budget.max_basis_size;

    auto add_common = [&](CLI::App* sub, bool needs_algebra) {
        sub->add_option("--operad", cfg.operad,
                        "operad preset name (e.g. lie, ass, tass3) or presentation file");
        if (needs_algebra) sub->add_option("--algebra", cfg.algebra, "algebra JSON file");
        sub->add_option("--algebra-b", cfg.algebra_b, "second algebra file for C(a,b)");
        sub->add_option("--order", order, "monomial order: degrevlex|lex");
        sub->add_option("--output", cfg.output, "write the report to a file");
        sub->add_option("--format", format, "report format: json|text");
        sub->add_option("--max-steps", max_steps, "Groebner reduction step cap");
        sub->add_option("--max-basis", max_basis, "Groebner basis size cap");
    };

    std::vector<std::pair<std::string, std::string>> commands = {
        {"check-axioms", "verify the algebra satisfies the operad relations"},
        {"polys", "emit the universal polynomials / presentation of C(a)"},
        {"graded-polys", "emit the graded universal polynomials of C(A)"},
        {"groebner", "reduced Groebner basis of the defining ideal (or an ideal file)"},
        {"verify-eta", "check that the coaction eta is a P-algebra morphism"},
        {"verify-t52", "certify generation by generator-arity polynomials"},
        {"bialgebra-check", "verify the bialgebra laws on C(a)"},
        {"kpoint-check", "is the matrix an algebra map C(a) -> K?"},
        {"aut-check", "is the matrix an algebra automorphism (invertible K-point)?"},
        {"grading-check", "verify a group grading of the algebra"},
        {"grading-to-morphism", "convert a grading to a bialgebra map C(a) -> K[G]"},
        {"morphism-to-grading", "recover the grading of a bialgebra map C(a) -> K[G]"},
        {"morphism-check", "verify a bialgebra map C(a) -> K[G]"},
        {"conjugate", "conjugate a morphism by an invertible K-point"},
    };
    for (auto& [name, desc] : commands) {
        CLI::App* sub = app.add_subcommand(name, desc);
        add_common(sub, true);
        if (name == "verify-t52")
            sub->add_option("--max-arity", cfg.max_arity, "largest composite arity to certify");
        if (name == "groebner")
            sub->add_option("--ideal", cfg.ideal, "ideal JSON file (generators + order)");
        if (name == "kpoint-check" || name == "aut-check" || name == "conjugate")
            sub->add_option("--matrix", cfg.matrix, "inline JSON matrix");
        if (name == "grading-check" || name == "grading-to-morphism")
            sub->add_option("--grading", cfg.grading, "grading JSON file");
        if (name == "morphism-to-grading" || name == "conjugate" || name == "morphism-check")
            sub->add_option("--morphism", cfg.morphism, "morphism JSON file");
    }

    CLI11_PARSE(app, argc, argv);

    try {
        cfg.order = opcoact::order_from_name(order);
        if (format == "text") cfg.format = opcoact::RunConfig::Format::Text;
        else if (format != "json") throw std::invalid_argument("--format must be json or text");
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return opcoact::ExitInputError;
    }
    cfg.budget.max_reduction_steps = max_steps;
    cfg.budget.max_basis_size = max_basis;
    cfg.command = app.get_subcommands().front()->get_name();

    opcoact::RunResult res = opcoact::dispatch(cfg);
    if (cfg.output.empty()) std::cout << res.report;
    return res.exit_code;
}
