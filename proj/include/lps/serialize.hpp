#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "lps/circulation.hpp"
#include "lps/models.hpp"

namespace lps {

using json = nlohmann::json;

/// A stream or a (possibly non-cosheaf) precirculation read from a file.
using Document = std::variant<Stream, Precirculation>;

/// Throws ParseError carrying line and column.
json parse_json(std::string_view text);
/// Sorted keys, two-space indent, trailing newline.
std::string canonical_dump(const json& j);

json relation_to_json(const Relation& r);
Relation relation_from_json(const json& j, const UniversePtr& u);
json space_to_json(const FiniteSpace& s);
FiniteSpace space_from_json(const json& j);
json stream_to_json(const Stream& s);
Stream stream_from_json(const json& j);
/// Stores every open when the space has at most 4096 of them (exact);
/// otherwise only minimal opens.
json precirculation_to_json(const Precirculation& pc);
Precirculation precirculation_from_json(const json& j);

json document_to_json(const Document& d);
Document document_from_json(const json& j);

/// {"name": "name", ...} from source points to target points.
PointMap point_map_from_json(const json& j, const FiniteSpace& source, const FiniteSpace& target);
json point_map_to_json(const PointMap& f, const FiniteSpace& source, const FiniteSpace& target);
PointSet subset_from_json(const json& j, const FiniteSpace& space);
std::vector<PointSet> partition_from_json(const json& j, const FiniteSpace& space);

/// {"builder": name, ...parameters}. Builders: directed_interval {n},
/// directed_circle {n}, directed_square {n, m}, boundary_square {n},
/// poset {carrier, pairs}, explicit {space, generators?}, trivial {space},
/// specialization {space}, atlas {space, charts: [{open, pairs}]},
/// pathology (the square), pathology_pullback (a precirculation).
/// A stream or precirculation document is accepted as-is.
Document build_from_spec(const json& spec);

/// Specialization order in solid black; each star's strict generator pairs
/// in a colour of its own.
std::string to_dot(const Stream& s);

}  // namespace lps
