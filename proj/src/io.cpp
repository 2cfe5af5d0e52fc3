#include "mdcq/io.hpp"

#include <cstdio>

namespace mdcq {

namespace {

std::vector<int> int_list(const Json& j, const std::string& field) {
  if (!j.is_array()) throw SpecError("field '" + field + "' must be an array of integers");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer())
      throw SpecError("field '" + field + "[" + std::to_string(i) + "]' must be an integer");
    out.push_back(j[i].get<int>());
  }
  return out;
}

std::vector<std::vector<int>> nested_int_list(const Json& j, const std::string& field) {
  if (!j.is_array()) throw SpecError("field '" + field + "' must be an array of integer arrays");
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(int_list(j[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

DimVector dim_field(const Json& j, const std::string& field) {
  if (!j.contains(field)) throw SpecError("missing field '" + field + "'");
  try {
    return DimVector(int_list(j.at(field), field));
  } catch (const std::invalid_argument& e) {
    throw SpecError("field '" + field + "': " + e.what());
  }
}

Json parse_json(std::string_view text, const std::string& where) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SpecError(where + ": " + e.what());
  }
}

}  // namespace

GraphSpec parse_graph_spec(std::string_view text) {
  const Json j = parse_json(text, "graph spec");
  if (!j.is_object()) throw SpecError("graph spec must be a JSON object");
  GraphSpec spec;
  spec.dim = dim_field(j, "N");
  if (!j.contains("S") || !j["S"].is_object()) throw SpecError("missing object field 'S'");
  const auto& s = j["S"];
  if (s.contains("compact") == s.contains("full"))
    throw SpecError("field 'S' must contain exactly one of 'compact' or 'full'");
  if (s.contains("compact")) {
    spec.connection = CompactConnectionSet{nested_int_list(s["compact"], "S.compact")};
  } else {
    std::vector<GroupElement> full;
    for (auto& coords : nested_int_list(s["full"], "S.full")) full.push_back({std::move(coords)});
    spec.connection = std::move(full);
  }
  if (j.contains("close_negation")) {
    if (!j["close_negation"].is_boolean()) throw SpecError("field 'close_negation' must be a boolean");
    spec.close_negation = j["close_negation"].get<bool>();
  }
  return spec;
}

Json to_json(const GraphSpec& spec) {
  Json j;
  j["N"] = std::vector<int>(spec.dim.moduli().begin(), spec.dim.moduli().end());
  if (const auto* compact = std::get_if<CompactConnectionSet>(&spec.connection)) {
    j["S"]["compact"] = compact->rows;
  } else {
    Json rows = Json::array();
    for (const auto& g : std::get<std::vector<GroupElement>>(spec.connection)) rows.push_back(g.coords);
    j["S"]["full"] = rows;
  }
  j["close_negation"] = spec.close_negation;
  return j;
}

ConnectionSet resolve(const GraphSpec& spec) {
  const auto policy = spec.close_negation ? NegationPolicy::close : NegationPolicy::strict;
  if (const auto* compact = std::get_if<CompactConnectionSet>(&spec.connection))
    return expand_compact(spec.dim, *compact, policy);
  return validate_connection_set(spec.dim, std::get<std::vector<GroupElement>>(spec.connection), policy);
}

std::vector<ManifestEntry> parse_manifest(std::string_view text) {
  std::vector<ManifestEntry> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    const auto line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    const std::string where = "manifest line " + std::to_string(line_no);
    try {
      const Json j = parse_json(line, where);
      if (!j.is_object()) throw SpecError("entry must be a JSON object");
      ManifestEntry e{.name = j.value("name", "entry " + std::to_string(line_no)),
                      .dim = dim_field(j, "N"),
                      .compact = {},
                      .close_negation = false,
                      .valency = {},
                      .type = {},
                      .d = {},
                      .d_at_least = {},
                      .weights = {}};
      if (!j.contains("S_compact")) throw SpecError("missing field 'S_compact'");
      e.compact.rows = nested_int_list(j["S_compact"], "S_compact");
      if (j.contains("close_negation")) e.close_negation = j["close_negation"].get<bool>();
      if (j.contains("expect") && !j["expect"].is_null()) {
        const auto& x = j["expect"];
        if (!x.is_object()) throw SpecError("field 'expect' must be an object");
        auto opt_int = [&](const char* key) -> std::optional<int> {
          if (!x.contains(key) || x[key].is_null()) return std::nullopt;
          if (!x[key].is_number_integer()) throw SpecError(std::string("field 'expect.") + key + "' must be an integer");
          return x[key].get<int>();
        };
        e.valency = opt_int("valency");
        e.d = opt_int("d");
        e.d_at_least = opt_int("d_at_least");
        if (x.contains("type") && !x["type"].is_null()) {
          const auto t = x["type"].get<std::string>();
          if (t == "I") {
            e.type = CodeType::I;
          } else if (t == "II") {
            e.type = CodeType::II;
          } else {
            throw SpecError("field 'expect.type' must be \"I\" or \"II\"");
          }
        }
        if (x.contains("W") && !x["W"].is_null()) {
          for (const auto& [key, value] : x["W"].items()) {
            int w = 0;
            try {
              w = std::stoi(key);
            } catch (const std::exception&) {
              throw SpecError("field 'expect.W' key '" + key + "' is not a weight");
            }
            e.weights.emplace_back(w, value.get<std::uint64_t>());
          }
        }
      }
      out.push_back(std::move(e));
    } catch (const SpecError& err) {
      const std::string msg = err.what();
      throw SpecError(msg.rfind(where, 0) == 0 ? msg : where + ": " + msg);
    } catch (const Json::exception& err) {
      throw SpecError(where + ": " + err.what());
    }
  }
  return out;
}

Json to_json(const DimVector& dim) { return std::vector<int>(dim.moduli().begin(), dim.moduli().end()); }

Json to_json(const ConnectionSet& set) {
  Json rows = Json::array();
  for (const auto& g : set.elements()) rows.push_back(g.coords);
  return rows;
}

Json to_json(const CompactConnectionSet& compact) { return compact.rows; }

Json to_json(const DistanceReport& r) {
  Json j;
  j["lower"] = r.lower;
  j["upper"] = r.upper;
  j["exact"] = r.exact;
  j["radius"] = r.radius;
  j["work"] = r.work;
  j["sampled"] = r.sampled;
  j["budget_exhausted"] = r.budget_exhausted;
  if (r.witness) j["witness"] = *r.witness;
  return j;
}

Json to_json(const WeightDistribution& wd) { return wd.counts; }

Json to_json(const ClassificationRow& row) {
  Json j;
  j["n"] = row.dim.order();
  j["N"] = to_json(row.dim);
  j["d_max"] = row.d_max;
  j["count"] = row.count;
  j["d_max_type_I"] = row.d_max_type1;
  j["d_max_type_II"] = row.d_max_type2;
  j["sets"] = row.sets;
  j["work"] = row.work;
  j["partial"] = row.partial;
  j["elapsed"] = row.elapsed_seconds;
  return j;
}

Json to_json(const SearchRecord& rec) {
  Json j;
  j["iteration"] = rec.iteration;
  j["N"] = to_json(rec.set.dim());
  j["S_compact"] = to_json(rec.compact);
  j["valency"] = rec.valency;
  j["type"] = to_string(rec.type);
  j["distance"] = to_json(rec.distance);
  j["fingerprint"] = rec.fingerprint;
  return j;
}

Json to_json(const ManifestResult& result) {
  Json j;
  j["name"] = result.name;
  j["passed"] = result.passed();
  j["budget_exhausted"] = result.budget_exhausted;
  Json checks = Json::array();
  for (const auto& c : result.checks) checks.push_back({{"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  j["checks"] = checks;
  return j;
}

Json to_json(const CirculantSpec& spec) { return {{"order", spec.order}, {"S", spec.connection}}; }

Json to_json(const MetacirculantSpec& spec) {
  return {{"m", spec.m}, {"n", spec.n}, {"alpha", spec.alpha}, {"S_parts", spec.parts}};
}

Json to_json(const DimClass& cls) {
  return {{"prime_powers", cls.prime_powers}, {"representatives", cls.representatives}};
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string code_fingerprint(const GraphCode& code) { return fnv1a_hex(adjacency_text(code.z_block())); }

std::string adjacency_text(const BitMatrix& bits) {
  std::string out;
  out.reserve(bits.order() * (bits.order() + 1));
  for (const auto& row : bits.rows()) out += row.to_string() + "\n";
  return out;
}

}  // namespace mdcq
