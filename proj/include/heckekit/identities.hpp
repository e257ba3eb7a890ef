#pragma once

#include "json.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace heckekit {

enum class ParamKind { INT, REAL, COMPLEX, INT_LIST, REAL_LIST, COMPLEX_LIST };

struct ParamSpec {
    std::string name;
    ParamKind kind;
    nlohmann::json default_value;  // null means "sweep the documented grid"
    std::string help;
};

struct IdentityInfo {
    std::string id;
    std::string description;
    std::vector<ParamSpec> schema;  // every id also accepts N and tol
    std::int64_t default_N = 0;
    double default_tol = 0;
};

struct VerificationReport {
    std::string id;
    nlohmann::json params;  // resolved, defaults filled in
    std::int64_t N = 0;
    double tol = 0;
    double max_abs_error = 0;
    bool pass = false;
    std::uint64_t seed = 0;
    double wall_ms = 0;
    std::vector<std::string> notes;

    nlohmann::json to_json() const;
};

// Stable order; ids are upper snake case.
const std::vector<IdentityInfo>& list_identities();

// Throws UnknownIdentity or InvalidParameters. Complex values are [re, im] or plain numbers.
VerificationReport verify(const std::string& id, const nlohmann::json& params = nlohmann::json::object(),
                          std::uint64_t seed = 0);

} // namespace heckekit
