#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "mbraid/kitaev.hpp"
#include "mbraid/representations.hpp"
#include "mbraid/verifiers.hpp"

namespace mbraid {

inline constexpr const char* kToolVersion = MBRAID_VERSION;

using Json = nlohmann::json;

/// {"rows": r, "cols": c, "entries": [[re, im], ...]} in row-major order.
Json matrix_to_json(const CMatrix& m);
/// Accepts the flat format above, or "entries" given as a list of rows.
/// Throws std::invalid_argument on anything malformed.
CMatrix matrix_from_json(const Json& j);

Json to_json(const VerificationReport& r);
Json to_json(const UnitaryRep& rep);
Json to_json(const GapRecord& g);

/// Columns: theta1_dot,theta2_dot,gap,N,boundary
std::string gap_records_csv(const std::vector<GapRecord>& records);

/// Stable text form: sorted keys, 2-space indent, trailing newline.
std::string dump(const Json& j);

}  // namespace mbraid
