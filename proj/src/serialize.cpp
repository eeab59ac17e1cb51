#include "lps/serialize.hpp"

#include <algorithm>
#include <sstream>

#include "lps/error.hpp"

namespace lps {

namespace {

constexpr const char* kStreamFormat = "lps-stream";
constexpr const char* kPrecirculationFormat = "lps-precirculation";
constexpr int kVersion = 1;

json names_json(const Universe& u, PointSet s) { return json(u.names_of(s)); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) throw Error(ErrorCode::ParseError, std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

std::vector<std::string> string_list(const json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, std::string(what) + " must be a list of point names");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw Error(ErrorCode::ParseError, std::string(what) + " must contain strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

Relation pairs_on(const json& pairs, const UniversePtr& u, PointSet carrier) {
  if (!pairs.is_array()) throw Error(ErrorCode::ParseError, "pairs must be a list");
  Relation r(u, carrier);
  for (const auto& p : pairs) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
      throw Error(ErrorCode::ParseError, "each pair must be [\"x\", \"y\"]");
    r.add(u->index_of(p[0].get<std::string>()), u->index_of(p[1].get<std::string>()));
  }
  return r;
}

json pairs_json(const Relation& r) {
  json out = json::array();
  const auto& u = *r.universe();
  for (auto [x, y] : r.pairs()) out.push_back(json::array({u.name(x), u.name(y)}));
  return out;
}

Stream explicit_stream(const json& spec) {
  FiniteSpace space = space_from_json(field(spec, "space"));
  const auto& u = space.universe();
  std::vector<Preorder> gen;
  for (PointIndex x = 0; x < space.size(); ++x) gen.push_back(Preorder::identity(u, space.min_open(x)));
  if (spec.contains("generators")) {
    const json& g = spec.at("generators");
    if (!g.is_object()) throw Error(ErrorCode::ParseError, "generators must map points to pair lists");
    for (auto it = g.begin(); it != g.end(); ++it) {
      PointIndex x = u->index_of(it.key());
      gen[x] = transitive_reflexive_closure(pairs_on(it.value(), u, space.min_open(x)));
    }
  }
  return Stream(Circulation::from_generators(std::move(space), std::move(gen)));
}

}  // namespace

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
  }
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

json relation_to_json(const Relation& r) {
  return {{"carrier", names_json(*r.universe(), r.carrier())}, {"pairs", pairs_json(r)}};
}

Relation relation_from_json(const json& j, const UniversePtr& u) {
  auto carrier = string_list(field(j, "carrier"), "carrier");
  return pairs_on(field(j, "pairs"), u, u->set_of(carrier));
}

json space_to_json(const FiniteSpace& s) {
  json table = json::object();
  for (PointIndex x = 0; x < s.size(); ++x) table[s.name(x)] = names_json(*s.universe(), s.min_open(x));
  return {{"points", s.universe()->names()}, {"min_open", table}};
}

FiniteSpace space_from_json(const json& j) {
  auto points = string_list(field(j, "points"), "points");
  const json& table = field(j, "min_open");
  if (!table.is_object()) throw Error(ErrorCode::ParseError, "min_open must map points to point lists");
  std::vector<std::pair<std::string, std::vector<std::string>>> entries;
  for (auto it = table.begin(); it != table.end(); ++it) entries.push_back({it.key(), string_list(it.value(), "min_open entry")});
  return FiniteSpace::from_named(std::move(points), entries);
}

json stream_to_json(const Stream& s) {
  json gen = json::object();
  const Circulation& c = s.circulation();
  for (PointIndex x = 0; x < s.size(); ++x) gen[s.space().name(x)] = pairs_json(c.on_min_open(x).relation());
  return {{"format", kStreamFormat}, {"version", kVersion}, {"space", space_to_json(s.space())}, {"generators", gen}};
}

Stream stream_from_json(const json& j) {
  if (!j.is_object() || j.value("format", "") != kStreamFormat)
    throw Error(ErrorCode::UnknownFormat, std::string("expected a document with format '") + kStreamFormat + "'");
  return explicit_stream(j);
}

json precirculation_to_json(const Precirculation& pc) {
  const FiniteSpace& space = pc.space();
  std::vector<PointSet> opens;
  bool exact = pc.exact();
  try {
    opens = space.opens(4096);
  } catch (const Error&) {
    exact = false;
    for (PointIndex x = 0; x < space.size(); ++x) opens.push_back(space.min_open(x));
    std::sort(opens.begin(), opens.end());
    opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  }
  json values = json::array();
  for (PointSet u : opens) {
    if (u.empty()) continue;
    values.push_back({{"open", names_json(*space.universe(), u)}, {"pairs", pairs_json(pc.assign(u).relation())}});
  }
  return {{"format", kPrecirculationFormat}, {"version", kVersion}, {"space", space_to_json(space)},
          {"values", values}, {"exact", exact}};
}

Precirculation precirculation_from_json(const json& j) {
  if (!j.is_object() || j.value("format", "") != kPrecirculationFormat)
    throw Error(ErrorCode::UnknownFormat, std::string("expected a document with format '") + kPrecirculationFormat + "'");
  FiniteSpace space = space_from_json(field(j, "space"));
  const auto& u = space.universe();
  std::vector<std::pair<PointSet, Preorder>> table;
  const json& values = field(j, "values");
  if (!values.is_array()) throw Error(ErrorCode::ParseError, "values must be a list");
  for (const auto& entry : values) {
    PointSet open = u->set_of(string_list(field(entry, "open"), "open"));
    table.push_back({open, transitive_reflexive_closure(pairs_on(field(entry, "pairs"), u, open))});
  }
  return Precirculation::from_table(std::move(space), std::move(table));
}

json document_to_json(const Document& d) {
  return std::visit(
      [](const auto& v) -> json {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, Stream>) return stream_to_json(v);
        else return precirculation_to_json(v);
      },
      d);
}

Document document_from_json(const json& j) {
  try {
    std::string format = j.is_object() ? j.value("format", "") : "";
    if (format == kStreamFormat) return stream_from_json(j);
    if (format == kPrecirculationFormat) return precirculation_from_json(j);
    throw Error(ErrorCode::UnknownFormat, "document format '" + format + "' is not recognised");
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

PointMap point_map_from_json(const json& j, const FiniteSpace& source, const FiniteSpace& target) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "map must be an object from source to target names");
  PointMap f(source.size(), kMaxPoints);
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!it.value().is_string()) throw Error(ErrorCode::ParseError, "map values must be point names");
    f[source.universe()->index_of(it.key())] = target.universe()->index_of(it.value().get<std::string>());
  }
  for (PointIndex x = 0; x < f.size(); ++x)
    if (f[x] == kMaxPoints) throw Error(ErrorCode::MissingPoint, "map has no image for '" + source.name(x) + "'");
  return f;
}

json point_map_to_json(const PointMap& f, const FiniteSpace& source, const FiniteSpace& target) {
  json out = json::object();
  for (PointIndex x = 0; x < f.size(); ++x) out[source.name(x)] = target.name(f[x]);
  return out;
}

PointSet subset_from_json(const json& j, const FiniteSpace& space) {
  auto names = string_list(j, "subset");
  for (const auto& n : names)
    if (!space.universe()->find(n)) throw Error(ErrorCode::InvalidSubset, "'" + n + "' is not a point of the space");
  return space.universe()->set_of(names);
}

std::vector<PointSet> partition_from_json(const json& j, const FiniteSpace& space) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "partition must be a list of classes");
  std::vector<PointSet> classes;
  for (const auto& c : j) {
    auto names = string_list(c, "partition class");
    for (const auto& n : names)
      if (!space.universe()->find(n)) throw Error(ErrorCode::InvalidPartition, "'" + n + "' is not a point of the space");
    classes.push_back(space.universe()->set_of(names));
  }
  return classes;
}

Document build_from_spec(const json& spec) {
  try {
    if (spec.is_object() && spec.contains("format")) return document_from_json(spec);
    const json& b = field(spec, "builder");
    if (!b.is_string()) throw Error(ErrorCode::ParseError, "builder must be a string");
    const std::string builder = b.get<std::string>();
    if (builder == "directed_interval") return directed_interval(int_field(spec, "n"));
    if (builder == "directed_circle") return directed_circle(int_field(spec, "n"));
    if (builder == "directed_square") return directed_square(int_field(spec, "n"), int_field(spec, "m"));
    if (builder == "boundary_square") return boundary_square(int_field(spec, "n"));
    if (builder == "explicit") return explicit_stream(spec);
    if (builder == "trivial") return Stream(trivial_circulation(space_from_json(field(spec, "space"))));
    if (builder == "specialization") return Stream(specialization_circulation(space_from_json(field(spec, "space"))));
    if (builder == "poset") {
      auto u = Universe::make(string_list(field(spec, "carrier"), "carrier"));
      return stream_from_poset(transitive_reflexive_closure(pairs_on(field(spec, "pairs"), u, u->all())));
    }
    if (builder == "atlas") {
      FiniteSpace space = space_from_json(field(spec, "space"));
      std::vector<Chart> charts;
      const json& list = field(spec, "charts");
      if (!list.is_array()) throw Error(ErrorCode::ParseError, "charts must be a list");
      for (const auto& c : list) {
        PointSet open = space.universe()->set_of(string_list(field(c, "open"), "chart open"));
        Relation r = pairs_on(field(c, "pairs"), space.universe(), open);
        charts.push_back({open, transitive_reflexive_closure(std::move(r))});
      }
      return stream_from_atlas(space, charts);
    }
    if (builder == "pathology") return pathology_fixture().square;
    if (builder == "pathology_pullback") return pathology_fixture().pullback;
    throw Error(ErrorCode::InvalidArgument, "unknown builder '" + builder + "'");
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

std::string to_dot(const Stream& s) {
  static constexpr const char* kColors[] = {"red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan"};
  const FiniteSpace& space = s.space();
  std::ostringstream out;
  auto quoted = [](const std::string& n) {
    std::string q = "\"";
    for (char c : n) {
      if (c == '"' || c == '\\') q += '\\';
      q += c;
    }
    return q + "\"";
  };
  out << "digraph stream {\n";
  for (PointIndex x = 0; x < space.size(); ++x) out << "  " << quoted(space.name(x)) << ";\n";
  for (PointIndex x = 0; x < space.size(); ++x)
    for (PointIndex y : space.min_open(x) - PointSet::singleton(x))
      out << "  " << quoted(space.name(x)) << " -> " << quoted(space.name(y)) << " [style=solid, color=black];\n";
  std::size_t star = 0;
  for (PointIndex x = 0; x < space.size(); ++x) {
    const Preorder& g = s.circulation().on_min_open(x);
    bool any = false;
    for (auto [a, b] : g.pairs()) {
      if (a == b) continue;
      any = true;
      out << "  " << quoted(space.name(a)) << " -> " << quoted(space.name(b)) << " [color=" << kColors[star % 8]
          << ", label=" << quoted("star " + space.name(x)) << "];\n";
    }
    if (any) ++star;
  }
  out << "}\n";
  return out.str();
}

}  // namespace lps
