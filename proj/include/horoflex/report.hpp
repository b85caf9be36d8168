#pragma once

#include <json.hpp>
#include <map>
#include <string>

#include "horoflex/horospherical.hpp"

namespace horoflex {

struct InputDocument {
    GroupSpec group;
    IntMat generators;           // ambient weight coordinates
    std::map<std::string, Int> bounds;  // optional overrides by name
};

InputDocument parse_input(const nlohmann::json& j);  // Errc::BadInput on schema errors
nlohmann::json input_to_json(const InputDocument& in);

// bounds from the input document plus command-line overrides on top of defaults
Bounds resolve_bounds(const HoroVariety& h, const InputDocument& in,
                      const std::map<std::string, Int>& overrides);

struct ReportOptions {
    bool with_orbits = true;
    bool with_holes = false;
    bool with_roots = false;
    bool with_lnd = false;
    bool oracle_check = false;
};

// runs the analysis and emits the replayable report document
nlohmann::json analyze_document(const InputDocument& in,
                                const std::map<std::string, Int>& bound_overrides,
                                const ReportOptions& opt);

struct VerifyOutcome {
    std::vector<std::pair<std::string, bool>> checks;
    bool ok = true;
};

// replays every certificate of a report against the embedded input
VerifyOutcome verify_report(const nlohmann::json& report);

std::string render_text(const nlohmann::json& report);

nlohmann::json int_to_json(const Int& v);
Int json_to_int(const nlohmann::json& j);
nlohmann::json vec_to_json(const IntVec& v);
IntVec json_to_vec(const nlohmann::json& j);
nlohmann::json mat_to_json(const IntMat& m);
IntMat json_to_mat(const nlohmann::json& j);

}  // namespace horoflex
