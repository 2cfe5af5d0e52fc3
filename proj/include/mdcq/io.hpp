#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"
#include "mdcq/code.hpp"
#include "mdcq/distance.hpp"
#include "mdcq/graph.hpp"
#include "mdcq/iso.hpp"
#include "mdcq/search.hpp"

namespace mdcq {

using Json = nlohmann::ordered_json;

/// Malformed input file; the message names the offending line or field.
class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Graph spec file:
///   {"N": [..], "S": {"compact": [[..], ..]} | {"full": [[..], ..]}, "close_negation": bool}
struct GraphSpec {
  DimVector dim{std::vector<int>{2}};
  std::variant<CompactConnectionSet, std::vector<GroupElement>> connection;
  bool close_negation = true;

  friend bool operator==(const GraphSpec&, const GraphSpec&) = default;
};

GraphSpec parse_graph_spec(std::string_view text);
Json to_json(const GraphSpec& spec);
ConnectionSet resolve(const GraphSpec& spec);

/// One JSON object per non-blank line:
///   {"name": .., "N": [..], "S_compact": [[..]], "close_negation": bool,
///    "expect": {"valency": int, "type": "I"|"II", "d": int|null, "d_at_least": int|null, "W": {"12": 28764}|null}}
std::vector<ManifestEntry> parse_manifest(std::string_view text);

Json to_json(const DimVector& dim);
Json to_json(const ConnectionSet& set);
Json to_json(const CompactConnectionSet& compact);
Json to_json(const DistanceReport& report);
Json to_json(const WeightDistribution& wd);
Json to_json(const ClassificationRow& row);
Json to_json(const SearchRecord& record);
Json to_json(const ManifestResult& result);
Json to_json(const CirculantSpec& spec);
Json to_json(const MetacirculantSpec& spec);
Json to_json(const DimClass& cls);

/// 64-bit FNV-1a, rendered as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);

/// Hash of the code's Z block rows (the code is determined by them).
std::string code_fingerprint(const GraphCode& code);

/// Row-per-line 0/1 dump in lexicographic vertex order.
std::string adjacency_text(const BitMatrix& bits);

}  // namespace mdcq
