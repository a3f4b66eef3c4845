#include "commands.hpp"

#include "condinfo/expr.hpp"
#include "condinfo/json_io.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace condinfo::cli;

namespace {

void add_common(CLI::App* cmd, CommonOptions& common, bool with_source)
{
    cmd->add_option("--out", common.out, "Output file (default: stdout)");
    cmd->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    if (with_source) {
        cmd->add_option("--cap", common.cap, "Largest q built by enumeration")->capture_default_str();
        cmd->add_flag("--closed-form", common.closed_form, "Use closed-form fiber counts instead of enumeration");
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact entropy vectors, Shannon-cone derivability and the line/parabola construction"};
    app.require_subcommand(1);

    ConstructJob construct;
    auto* c = app.add_subcommand("construct", "Enumerate the line/parabola distribution over F_q");
    c->add_option("--q", construct.q, "Odd prime field size")->required();
    c->add_option("--cap", construct.common.cap, "Largest q built by enumeration")->capture_default_str();
    c->add_option("--out", construct.common.out, "Output file (default: stdout)");

    EntropyJob entropy;
    auto* e = app.add_subcommand("entropy", "Entropy vector of a distribution file or of the construction");
    e->add_option("input", entropy.input, "Distribution JSON file");
    e->add_option("--q", entropy.q, "Use the construction over F_q instead of a file");
    add_common(e, entropy.common, true);

    EvalJob eval;
    auto* v = app.add_subcommand("eval", "Evaluate an information expression on an entropy vector");
    v->add_option("input", eval.input, "Entropy-vector JSON file");
    v->add_option("--q", eval.q, "Use the construction over F_q instead of a file");
    v->add_option("--expr", eval.expr, "Expression, e.g. \"I(C;D|A)\"")->required();
    add_common(v, eval.common, true);

    CheckJob check;
    auto* k = app.add_subcommand("check", "Decide whether an expression is >= 0 by the Shannon inequalities");
    k->add_option("--expr", check.expr, "Expression that should be nonnegative");
    k->add_option("--eq", check.eqs, "Expression assumed to vanish (repeatable)");
    k->add_option("--kappa", check.kappa, "Check the star functional with this kappa");
    k->add_option("--vars", check.vars, "Variable letters (default: ABCD when they suffice)");
    k->add_option("--out", check.common.out, "Output file (default: stdout)");

    KappaScanJob scan;
    auto* s = app.add_subcommand("kappa-scan", "Least kappa for the construction across primes q");
    s->add_option("--q-list", scan.q_list, "Comma-separated primes")->delimiter(',');
    s->add_option("--kappa", scan.kappas, "Also search for a prime whose least kappa exceeds this (repeatable)");
    s->add_option("--q-max", scan.q_max, "Search bound for --kappa")->capture_default_str();
    scan.common.format = "csv";
    add_common(s, scan.common, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int code = app.exit(err);
        return code == 0 ? kSuccess : kUsageError;
    }

    try {
        if (*c)
            return run_construct(construct);
        if (*e)
            return run_entropy(entropy);
        if (*v)
            return run_eval(eval);
        if (*k)
            return run_check(check);
        return run_kappa_scan(scan);
    } catch (const condinfo::ParseError& err) {
        std::cerr << "error: expression " << err.what() << '\n';
        return kFormatError;
    } catch (const condinfo::FormatError& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kFormatError;
    } catch (const nlohmann::json::exception& err) {
        std::cerr << "error: malformed JSON: " << err.what() << '\n';
        return kFormatError;
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kUsageError;
    } catch (const std::out_of_range& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kUsageError;
    }
}
