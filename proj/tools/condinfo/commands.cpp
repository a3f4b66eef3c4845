#include "commands.hpp"

#include "condinfo/derivability.hpp"
#include "condinfo/entropy.hpp"
#include "condinfo/expr.hpp"
#include "condinfo/geometry.hpp"
#include "condinfo/json_io.hpp"
#include "condinfo/kappa.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace condinfo::cli {

namespace {

void write_output(const std::string& path, const std::string& text)
{
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::invalid_argument("cannot open '" + path + "' for writing");
    out << text;
}

std::string dump(const Json& j)
{
    return j.dump(2) + "\n";
}

Json load_json(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw FormatError("cannot read '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError("'" + path + "' is not valid JSON: " + e.what());
    }
}

std::string float12(double x)
{
    std::ostringstream out;
    out << std::setprecision(12) << x;
    return out.str();
}

struct SourcedVector {
    EntropyVector vector;
    bool auto_closed_form;
};

// Enumeration up to the cap unless --closed-form; closed form beyond it.
SourcedVector construction_vector(std::uint64_t q, const CommonOptions& common)
{
    const FieldSize field(q);
    if (common.closed_form)
        return {closed_form_vector(field), false};
    if (q > common.cap)
        return {closed_form_vector(field), true};
    return {entropy_vector(build_joint(field, common.cap)), false};
}

std::string oracle_notice(std::uint64_t q, std::uint64_t cap)
{
    return "closed-form path selected for q=" + std::to_string(q) + " above enumeration cap " +
           std::to_string(cap) + "; oracle-validated up to q=" + std::to_string(kOracleValidatedUpTo);
}

EntropyVector vector_input(const std::string& input, const std::optional<std::uint64_t>& q,
                           const CommonOptions& common, Json* meta)
{
    if (q && !input.empty())
        throw std::invalid_argument("give either an input file or --q, not both");
    if (q) {
        auto sourced = construction_vector(*q, common);
        if (sourced.auto_closed_form) {
            std::cerr << "note: " << oracle_notice(*q, common.cap) << '\n';
            if (meta)
                (*meta)["notice"] = oracle_notice(*q, common.cap);
        }
        return std::move(sourced.vector);
    }
    if (input.empty())
        throw std::invalid_argument("an input file or --q is required");
    const auto doc = load_json(input);
    if (doc.contains("entropies"))
        return entropy_vector_from_json(doc);
    return entropy_vector(distribution_from_json(doc));
}

std::string alphabet_of(const std::vector<std::string>& variables)
{
    std::string out;
    for (const auto& v : variables) {
        if (v.size() != 1)
            throw FormatError("expressions need single-letter variable names, got '" + v + "'");
        out += v;
    }
    return out;
}

}  // namespace

int run_construct(const ConstructJob& job)
{
    const FieldSize field(*job.q);
    const auto dist = build_joint(field, job.common.cap);
    Json doc{{"construction", to_json(construction_info(field))}};
    doc.update(to_json(dist));
    write_output(job.common.out, dump(doc));
    return kSuccess;
}

int run_entropy(const EntropyJob& job)
{
    Json meta = Json::object();
    const auto v = vector_input(job.input, job.q, job.common, &meta);
    if (job.common.format == "csv") {
        std::ostringstream out;
        out << "subset,exact,float\n";
        for (std::uint32_t mask = 1; mask < v.entries().size(); ++mask) {
            const auto& h = v.at(VarSet(mask));
            out << format_varset(VarSet(mask), v.variables()) << ',' << h.to_string() << ','
                << float12(h.to_double()) << '\n';
        }
        write_output(job.common.out, out.str());
        return kSuccess;
    }
    Json doc = to_json(v);
    if (!meta.empty())
        doc["metadata"] = meta;
    write_output(job.common.out, dump(doc));
    return kSuccess;
}

int run_eval(const EvalJob& job)
{
    const auto v = vector_input(job.input, job.q, job.common, nullptr);
    const auto alphabet = alphabet_of(v.variables());
    const auto m = parse_measure(job.expr, alphabet);
    const auto value = eval_measure(v, m);
    if (job.common.format == "csv") {
        write_output(job.common.out, "expression,exact,float\n\"" + job.expr + "\"," + value.to_string() + "," +
                                         float12(value.to_double()) + "\n");
        return kSuccess;
    }
    Json doc{{"expression", job.expr}, {"canonical", m.to_string()}, {"value", to_json(value)}};
    write_output(job.common.out, dump(doc));
    return kSuccess;
}

int run_check(const CheckJob& job)
{
    std::string text = job.expr;
    if (job.kappa) {
        if (!text.empty())
            throw std::invalid_argument("--expr and --kappa are exclusive");
        const auto kappa = parse_rational(*job.kappa);
        if (kappa < 0)
            throw std::invalid_argument("kappa must be nonnegative");
        text = star_expression_text(kappa);
    }
    if (text.empty())
        throw std::invalid_argument("check needs --expr or --kappa");

    std::string alphabet = job.vars;
    if (alphabet.empty()) {
        std::string used = letters_used(parse_expression(text));
        for (const auto& eq : job.eqs)
            used += letters_used(parse_expression(eq));
        std::sort(used.begin(), used.end());
        used.erase(std::unique(used.begin(), used.end()), used.end());
        const bool abcd_letters =
            std::all_of(used.begin(), used.end(), [](char ch) { return ch >= 'A' && ch <= 'D'; });
        alphabet = abcd_letters ? "ABCD" : used;
        if (alphabet.size() == 1)
            alphabet += alphabet[0] == 'A' ? 'B' : 'A';
    }

    const auto m = parse_measure(text, alphabet);
    std::vector<MeasureExpression> eqs;
    for (const auto& eq : job.eqs)
        eqs.push_back(parse_measure(eq, alphabet));

    const auto verdict = implied_with_equalities(m, eqs);
    Json doc{{"expression", text}, {"equalities", job.eqs}};
    doc.update(to_json(verdict));
    write_output(job.common.out, dump(doc));
    return verdict.implied() ? kSuccess : kNotImplied;
}

int run_kappa_scan(const KappaScanJob& job)
{
    struct Row {
        std::uint64_t q;
        MinKappa kappa;
        LogReal lhs;
        LogReal premise_sum;
        std::string source;
    };
    std::vector<Row> rows;
    bool auto_selected = false;

    auto add_row = [&](std::uint64_t q, const EntropyVector& v, std::string source) {
        const auto vars = default_variable_names(4);
        const auto lhs = eval_measure(v, mutual_term(vars, VarSet::single(2), VarSet::single(3)));
        rows.push_back({q, min_kappa(v), lhs, premise_residuals(v).sum, std::move(source)});
    };

    for (auto q : job.q_list) {
        auto sourced = construction_vector(q, job.common);
        auto_selected = auto_selected || sourced.auto_closed_form;
        const bool closed = job.common.closed_form || sourced.auto_closed_form;
        add_row(q, sourced.vector, closed ? "closed-form" : "enumeration");
    }
    for (const auto& text : job.kappas) {
        const auto kappa = parse_rational(text);
        const auto hit = find_prime_exceeding(kappa, job.q_max);
        if (!hit)
            throw std::out_of_range("no prime q <= " + std::to_string(job.q_max) + " has min_kappa > " + text);
        add_row(hit->q, closed_form_vector(FieldSize(hit->q)), "closed-form");
    }
    if (auto_selected)
        std::cerr << "note: closed-form path used above enumeration cap " << job.common.cap
                  << "; oracle-validated up to q=" << kOracleValidatedUpTo << '\n';

    if (job.common.format == "json") {
        Json doc = Json::array();
        for (const auto& r : rows)
            doc.push_back(Json{{"q", r.q},
                               {"source", r.source},
                               {"kappa_min_exact", r.kappa.to_string()},
                               {"kappa_min_float", r.kappa.to_double()},
                               {"lhs", to_json(r.lhs)},
                               {"six_term_sum", to_json(r.premise_sum)}});
        write_output(job.common.out, dump(doc));
        return kSuccess;
    }

    std::ostringstream out;
    out << "q,kappa_min_exact,kappa_min_float,lhs,six_term_sum\n";
    for (const auto& r : rows)
        out << r.q << ',' << r.kappa.to_string() << ',' << float12(r.kappa.to_double()) << ','
            << r.lhs.to_string() << ',' << r.premise_sum.to_string() << '\n';
    write_output(job.common.out, out.str());
    return kSuccess;
}

}  // namespace condinfo::cli
