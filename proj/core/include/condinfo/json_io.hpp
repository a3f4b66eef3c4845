#pragma once

#include "condinfo/derivability.hpp"
#include "condinfo/distribution.hpp"
#include "condinfo/entropy.hpp"
#include "condinfo/geometry.hpp"
#include "condinfo/log_real.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>

namespace condinfo {

using Json = nlohmann::ordered_json;

// Malformed or schema-violating input document.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// {"rational": "a/b", "logs": {"3": "c/d", ...}, "float": x}
Json to_json(const LogReal& x);
LogReal log_real_from_json(const Json& j);

// {"variables": [...], "total": T, "outcomes": [{"v": [...], "n": k}, ...]}
Json to_json(const JointDistribution& dist);
JointDistribution distribution_from_json(const Json& j);

// {"variables": [...], "entropies": {"A": <LogReal>, "B": ..., "AB": ..., ...}}
// with subsets in mask order.
Json to_json(const EntropyVector& v);
EntropyVector entropy_vector_from_json(const Json& j);

// {"q": q, "total": T, "lines": L, "parabolas_per_line": P}
Json to_json(const ConstructionInfo& info);

// {"status": "implied"|"not-implied", "scope": ..., "variables": [...],
//  "certificate": {id: "a/b"}, "multipliers": ["a/b"], "witness": ["a/b", ...]}
Json to_json(const DerivabilityVerdict& v);

}  // namespace condinfo
