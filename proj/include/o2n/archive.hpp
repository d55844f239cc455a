#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "o2n/highest_weight.hpp"
#include "o2n/pattern.hpp"
#include "o2n/representation.hpp"
#include "o2n/sparse.hpp"
#include "o2n/verify.hpp"

namespace o2n {

using Json = nlohmann::ordered_json;

inline constexpr int kArchiveFormatVersion = 1;

Json to_json(const HighestWeight& hw);
HighestWeight highest_weight_from_json(const Json& j);
Json to_json(const Pattern& p);
Pattern pattern_from_json(const Json& j);
Json to_json(const SparseOperator& op);
SparseOperator operator_from_json(const Json& j);
Json to_json(const VerifyReport& r);
Json to_json(const BranchingTable& t);
std::string mu_label(const std::vector<std::int64_t>& mu);  // "(0)", "(-1/2,1/2)"

// Serialized bytes are a pure function of the representation (and reports).
std::string serialize_archive(const Representation& rep, const std::vector<VerifyReport>& reports = {});
// ArchiveError on unknown version, schema problems, or a pattern list that
// is not the enumeration of the stored highest weight.
Representation parse_archive(std::string_view text);

}  // namespace o2n
