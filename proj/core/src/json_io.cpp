#include "condinfo/json_io.hpp"

#include "condinfo/field.hpp"

#include <limits>

namespace condinfo {

namespace {

Rational rational_field(const Json& j, const char* what)
{
    if (!j.is_string())
        throw FormatError(std::string(what) + " must be a rational string");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string(what) + ": " + e.what());
    }
}

const Json& member(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw FormatError(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::vector<std::string> variables_field(const Json& j)
{
    const auto& vars = member(j, "variables");
    if (!vars.is_array())
        throw FormatError("'variables' must be an array");
    std::vector<std::string> out;
    for (const auto& v : vars) {
        if (!v.is_string() || v.get<std::string>().empty())
            throw FormatError("variable names must be nonempty strings");
        out.push_back(v.get<std::string>());
    }
    if (out.empty() || out.size() > kMaxVariables)
        throw FormatError("between 1 and 5 variables are supported");
    return out;
}

std::uint64_t unsigned_field(const Json& j, const char* what)
{
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
        throw FormatError(std::string(what) + " must be a nonnegative integer");
    return j.get<std::uint64_t>();
}

}  // namespace

Json to_json(const LogReal& x)
{
    Json logs = Json::object();
    for (const auto& [prime, coeff] : x.log_coeffs())
        logs[std::to_string(prime)] = to_string(coeff);
    return Json{{"rational", to_string(x.rational_part())}, {"logs", std::move(logs)}, {"float", x.to_double()}};
}

LogReal log_real_from_json(const Json& j)
{
    LogReal out(rational_field(member(j, "rational"), "'rational'"));
    const auto& logs = member(j, "logs");
    if (!logs.is_object())
        throw FormatError("'logs' must be an object");
    for (const auto& [key, value] : logs.items()) {
        std::uint64_t prime = 0;
        try {
            std::size_t used = 0;
            prime = std::stoull(key, &used);
            if (used != key.size())
                throw std::invalid_argument(key);
        } catch (const std::exception&) {
            throw FormatError("log key '" + key + "' is not an integer");
        }
        if (prime == 2 || !is_prime(prime))
            throw FormatError("log key " + key + " must be an odd prime");
        const auto coeff = rational_field(value, "log coefficient");
        if (coeff == 0)
            throw FormatError("zero log coefficient for " + key);
        out += LogReal::log2_of(prime) * coeff;
    }
    return out;
}

Json to_json(const JointDistribution& dist)
{
    Json outcomes = Json::array();
    for (std::size_t i = 0; i < dist.size(); ++i) {
        const auto row = dist.row(i);
        outcomes.push_back(Json{{"v", std::vector<ValueId>(row.begin(), row.end())}, {"n", dist.count(i)}});
    }
    return Json{{"variables", dist.variables()}, {"total", dist.total()}, {"outcomes", std::move(outcomes)}};
}

JointDistribution distribution_from_json(const Json& j)
{
    auto variables = variables_field(j);
    const auto& outcomes = member(j, "outcomes");
    if (!outcomes.is_array())
        throw FormatError("'outcomes' must be an array");

    std::vector<ValueId> values;
    std::vector<std::uint64_t> counts;
    for (const auto& o : outcomes) {
        const auto& v = member(o, "v");
        if (!v.is_array() || v.size() != variables.size())
            throw FormatError("each outcome needs one value per variable");
        for (const auto& x : v) {
            const auto id = unsigned_field(x, "value id");
            if (id > std::numeric_limits<ValueId>::max())
                throw FormatError("value id out of range");
            values.push_back(static_cast<ValueId>(id));
        }
        counts.push_back(unsigned_field(member(o, "n"), "'n'"));
    }

    try {
        JointDistribution dist(std::move(variables), std::move(values), std::move(counts));
        if (j.contains("total") && unsigned_field(j.at("total"), "'total'") != dist.total())
            throw FormatError("'total' does not equal the sum of outcome counts");
        return dist;
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    } catch (const std::overflow_error& e) {
        throw FormatError(e.what());
    }
}

Json to_json(const EntropyVector& v)
{
    Json entropies = Json::object();
    for (std::uint32_t mask = 1; mask < v.entries().size(); ++mask)
        entropies[format_varset(VarSet(mask), v.variables())] = to_json(v.at(VarSet(mask)));
    return Json{{"variables", v.variables()}, {"entropies", std::move(entropies)}};
}

EntropyVector entropy_vector_from_json(const Json& j)
{
    auto variables = variables_field(j);
    const auto& entropies = member(j, "entropies");
    std::vector<LogReal> entries(std::size_t{1} << variables.size());
    for (std::uint32_t mask = 1; mask < entries.size(); ++mask) {
        const auto key = format_varset(VarSet(mask), variables);
        entries[mask] = log_real_from_json(member(entropies, key.c_str()));
    }
    return EntropyVector(std::move(variables), std::move(entries));
}

Json to_json(const ConstructionInfo& info)
{
    return Json{{"q", info.q},
                {"total", info.total},
                {"lines", info.lines},
                {"parabolas_per_line", info.parabolas_per_line}};
}

Json to_json(const DerivabilityVerdict& v)
{
    Json out{{"status", v.implied() ? "implied" : "not-implied"},
             {"scope", "Shannon cone (elemental inequalities) only"},
             {"variables", v.variables}};
    Json certificate = Json::object();
    for (const auto& [id, lambda] : v.certificate)
        certificate[id] = to_string(lambda);
    out["certificate"] = std::move(certificate);
    Json multipliers = Json::array();
    for (const auto& mu : v.multipliers)
        multipliers.push_back(to_string(mu));
    out["multipliers"] = std::move(multipliers);
    if (v.witness) {
        Json witness = Json::array();
        for (const auto& h : *v.witness)
            witness.push_back(to_string(h));
        out["witness"] = std::move(witness);
    } else {
        out["witness"] = nullptr;
    }
    return out;
}

}  // namespace condinfo
