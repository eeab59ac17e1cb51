#include "lps/lps.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "lps/corpus.hpp"
#include "lps/error.hpp"
#include "lps/serialize.hpp"
#include "lps/stream_cat.hpp"

struct lps_object {
  lps::Document doc;
};

namespace {

using lps::json;

thread_local std::string g_last_error;

struct WrongKind : std::runtime_error {
  using std::runtime_error::runtime_error;
};

lps_status status_of(lps::ErrorCode code) { return static_cast<lps_status>(static_cast<int>(code) + 1); }

template <typename F>
lps_status guarded(F&& body) {
  g_last_error.clear();
  try {
    body();
    return LPS_OK;
  } catch (const lps::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const WrongKind& e) {
    g_last_error = std::string("WrongKind: ") + e.what();
    return LPS_ERR_WRONG_KIND;
  } catch (const std::bad_alloc&) {
    g_last_error = "OutOfMemory: allocation failed";
    return LPS_ERR_OUT_OF_MEMORY;
  } catch (const std::exception& e) {
    g_last_error = std::string("Internal: ") + e.what();
    return LPS_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw lps::Error(lps::ErrorCode::InvalidArgument, what);
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

const lps::Stream& stream_of(const lps_object* obj) {
  require(obj != nullptr, "object is null");
  if (const auto* s = std::get_if<lps::Stream>(&obj->doc)) return *s;
  throw WrongKind("operation needs a stream, got a precirculation");
}

lps_object* wrap(lps::Document d) { return new lps_object{std::move(d)}; }

json open_json(const lps::FiniteSpace& space, lps::PointSet u) { return space.universe()->names_of(u); }

json cosheaf_report(const lps::FiniteSpace& space, const lps::CosheafCheck& c) {
  json entry = {{"name", "circulation"}, {"passed", c.holds}};
  if (!c.holds) {
    json coll = json::array();
    for (auto w : c.collection) coll.push_back(open_json(space, w));
    entry["witness"] = {{"collection", coll},
                        {"pair", {space.name(c.x), space.name(c.y)}},
                        {"pair_in_union", c.pair_in_union}};
  }
  return entry;
}

json interval_report(const lps::FiniteSpace& space, const lps::IntervalCheck& c) {
  json entry = {{"name", "intervals"}, {"passed", c.holds}};
  if (!c.holds)
    entry["witness"] = {{"pair", {space.name(c.x), space.name(c.y)}}, {"interval", open_json(space, c.interval)}};
  return entry;
}

lps::PointSet parse_open(const lps::FiniteSpace& space, const char* text) {
  require(text != nullptr, "open set is null");
  std::string s(text);
  if (s == "global") return space.points();
  std::vector<std::string> names;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t comma = s.find(',', start);
    if (comma == std::string::npos) comma = s.size();
    std::string item = s.substr(start, comma - start);
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) names.push_back(item.substr(b, e - b + 1));
    start = comma + 1;
  }
  lps::PointSet u;
  for (const auto& n : names) u.insert(space.universe()->index_of(n));
  space.require_open(u);
  return u;
}

json arg(const json& args, const char* key) {
  if (!args.is_object() || !args.contains(key))
    throw lps::Error(lps::ErrorCode::InvalidArgument, std::string("operation needs argument '") + key + "'");
  return args.at(key);
}

lps::StreamDiagram diagram_from(const std::vector<lps::Stream>& objects, const json& args) {
  lps::StreamDiagram d{objects, {}};
  json arrows = args.is_object() && args.contains("arrows") ? args.at("arrows") : json::array();
  if (!arrows.is_array()) throw lps::Error(lps::ErrorCode::ParseError, "arrows must be a list");
  for (const auto& a : arrows) {
    if (!a.is_object() || !a.contains("source") || !a.contains("target") || !a.contains("map") ||
        !a.at("source").is_number_unsigned() || !a.at("target").is_number_unsigned())
      throw lps::Error(lps::ErrorCode::ParseError, "each arrow needs integer source, target and a map");
    std::size_t src = a.at("source").get<std::size_t>();
    std::size_t tgt = a.at("target").get<std::size_t>();
    if (src >= objects.size() || tgt >= objects.size())
      throw lps::Error(lps::ErrorCode::IllTypedDiagram, "arrow refers to a missing object");
    d.arrows.push_back({src, tgt, lps::point_map_from_json(a.at("map"), objects[src].space(), objects[tgt].space())});
  }
  return d;
}

lps::Document combine(const std::string& op, const std::vector<const lps_object*>& inputs, const json& args,
                      bool verify, bool& verified) {
  using namespace lps;
  verified = true;
  auto streams = [&] {
    std::vector<Stream> out;
    for (const auto* in : inputs) out.push_back(stream_of(in));
    return out;
  };
  auto need = [&](std::size_t lo, std::size_t hi) {
    if (inputs.size() < lo || inputs.size() > hi)
      throw Error(ErrorCode::InvalidArgument, "operation '" + op + "' got " + std::to_string(inputs.size()) + " inputs");
  };

  if (op == "product") {
    need(2, 64);
    auto ss = streams();
    Stream acc = ss[0];
    for (std::size_t i = 1; i < ss.size(); ++i) {
      ProductStream p = product_stream(acc, ss[i]);
      if (verify) {
        std::vector<ConeLeg> legs{{acc, p.first}, {ss[i], p.second}};
        verified = verified && is_stream_map(p.stream, acc, p.first) && is_stream_map(p.stream, ss[i], p.second) &&
                   initial_structure(p.stream.space(), legs) == p.stream;
      }
      acc = p.stream;
    }
    return acc;
  }
  if (op == "quotient") {
    need(1, 1);
    const Stream& s = stream_of(inputs[0]);
    auto classes = partition_from_json(arg(args, "partition"), s.space());
    QuotientStream q = quotient_stream(s, classes);
    if (verify) {
      std::vector<CoconeLeg> legs{{s, q.projection}};
      verified = is_stream_map(s, q.stream, q.projection) && final_structure(q.stream.space(), legs) == q.stream;
    }
    return q.stream;
  }
  if (op == "substream") {
    need(1, 1);
    const Stream& s = stream_of(inputs[0]);
    SubstreamResult r = substream(s, subset_from_json(arg(args, "subset"), s.space()));
    if (verify) {
      std::vector<ConeLeg> legs{{s, r.inclusion}};
      verified = is_stream_map(r.stream, s, r.inclusion) && initial_structure(r.stream.space(), legs) == r.stream;
    }
    return r.stream;
  }
  if (op == "join") {
    need(1, 64);
    std::vector<Circulation> circs;
    for (const auto& s : streams()) circs.push_back(s.circulation());
    Stream j(join_circulations(circs));
    if (verify)
      for (const auto* in : inputs)
        verified = verified && is_stream_map(stream_of(in), j, identity_point_map(j.size()));
    return j;
  }
  if (op == "pushforward") {
    need(1, 1);
    const Stream& s = stream_of(inputs[0]);
    FiniteSpace target = space_from_json(arg(args, "space"));
    PointMap f = point_map_from_json(arg(args, "map"), s.space(), target);
    Stream out(pushforward(s, f, target));
    if (verify) verified = is_stream_map(s, out, f) && is_circulation(Precirculation::of(out.circulation())).holds;
    return out;
  }
  if (op == "pullback-cosheafify") {
    need(1, 1);
    const Stream& t = stream_of(inputs[0]);
    FiniteSpace source = space_from_json(arg(args, "space"));
    PointMap f = point_map_from_json(arg(args, "map"), source, t.space());
    Stream out(cosheafify(pullback(Precirculation::of(t.circulation()), f, source)));
    if (verify) {
      std::vector<ConeLeg> legs{{t, f}};
      verified = is_stream_map(out, t, f) && initial_structure(source, legs) == out;
    }
    return out;
  }
  if (op == "cosheafify") {
    need(1, 1);
    require(inputs[0] != nullptr, "input is null");
    const Document& d = inputs[0]->doc;
    Precirculation pc = std::holds_alternative<Stream>(d) ? Precirculation::of(std::get<Stream>(d).circulation())
                                                          : std::get<Precirculation>(d);
    Stream out(cosheafify(pc));
    if (verify) verified = is_circulation(Precirculation::of(out.circulation())).holds;
    return out;
  }
  if (op == "limit" || op == "colimit") {
    need(1, 64);
    StreamDiagram d = diagram_from(streams(), args);
    bool is_limit = op == "limit";
    ConeResult r = is_limit ? limit(d) : colimit(d);
    if (verify) {
      for (std::size_t i = 0; i < d.objects.size(); ++i)
        verified = verified && (is_limit ? is_stream_map(r.apex, d.objects[i], r.legs[i])
                                         : is_stream_map(d.objects[i], r.apex, r.legs[i]));
      for (const auto& a : d.arrows)
        verified = verified && (is_limit ? lps::compose(a.map, r.legs[a.source]) == r.legs[a.target]
                                         : lps::compose(r.legs[a.target], a.map) == r.legs[a.source]);
    }
    return r.apex;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown operation '" + op + "'");
}

}  // namespace

extern "C" {

const char* lps_last_error(void) { return g_last_error.c_str(); }

const char* lps_status_name(lps_status status) {
  if (status == LPS_OK) return "Ok";
  if (status == LPS_ERR_WRONG_KIND) return "WrongKind";
  if (status == LPS_ERR_OUT_OF_MEMORY) return "OutOfMemory";
  if (status == LPS_ERR_INTERNAL) return "Internal";
  if (status > LPS_OK && status < LPS_ERR_WRONG_KIND)
    return lps::error_code_name(static_cast<lps::ErrorCode>(static_cast<int>(status) - 1));
  return "Unknown";
}

void lps_string_free(char* s) { std::free(s); }

lps_status lps_object_from_json(const char* text, lps_object** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = wrap(lps::document_from_json(lps::parse_json(text)));
  });
}

lps_status lps_object_build(const char* spec_json, lps_object** out) {
  return guarded([&] {
    require(spec_json && out, "null argument");
    *out = wrap(lps::build_from_spec(lps::parse_json(spec_json)));
  });
}

lps_status lps_object_get_kind(const lps_object* obj, lps_kind* out) {
  return guarded([&] {
    require(obj && out, "null argument");
    *out = std::holds_alternative<lps::Stream>(obj->doc) ? LPS_KIND_STREAM : LPS_KIND_PRECIRCULATION;
  });
}

void lps_object_free(lps_object* obj) { delete obj; }

lps_status lps_object_to_json(const lps_object* obj, char** out) {
  return guarded([&] {
    require(obj && out, "null argument");
    *out = dup_string(lps::canonical_dump(lps::document_to_json(obj->doc)));
  });
}

lps_status lps_object_to_dot(const lps_object* obj, char** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = dup_string(lps::to_dot(stream_of(obj)));
  });
}

lps_status lps_object_check(const lps_object* obj, const char* which, lps_mode mode, int* passed,
                            char** report_json) {
  return guarded([&] {
    require(obj && which && passed, "null argument");
    const std::string w(which);
    if (w != "all" && w != "circulation" && w != "intervals" && w != "antisymmetry" && w != "monotone")
      throw lps::Error(lps::ErrorCode::InvalidArgument, "unknown check '" + w + "'");
    const lps::Mode m = mode == LPS_MODE_EXHAUSTIVE ? lps::Mode::Exhaustive : lps::Mode::Fast;
    const auto* stream = std::get_if<lps::Stream>(&obj->doc);
    lps::Precirculation pc = stream ? lps::Precirculation::of(stream->circulation()) : std::get<lps::Precirculation>(obj->doc);
    const lps::FiniteSpace& space = pc.space();
    json checks = json::array();
    bool all = w == "all";
    if (all || w == "monotone") checks.push_back({{"name", "monotone"}, {"passed", lps::is_precirculation(pc)}});
    if (all || w == "circulation") checks.push_back(cosheaf_report(space, lps::is_circulation(pc, m)));
    if (all || w == "intervals") checks.push_back(interval_report(space, lps::check_connected_intervals(pc)));
    if (all || w == "antisymmetry") {
      if (stream) {
        auto a = lps::check_antisymmetry(*stream);
        checks.push_back({{"name", "antisymmetry"},
                          {"passed", a.holds()},
                          {"t0", a.t0},
                          {"convex_neighborhoods", a.convex_neighborhoods},
                          {"antisymmetric", a.antisymmetric}});
      } else if (!all) {
        throw WrongKind("antisymmetry check needs a stream");
      }
    }
    bool ok = true;
    for (const auto& c : checks) ok = ok && c.at("passed").get<bool>();
    *passed = ok ? 1 : 0;
    if (report_json)
      *report_json = dup_string(lps::canonical_dump(
          {{"kind", stream ? "stream" : "precirculation"},
           {"mode", m == lps::Mode::Fast ? "fast" : "exhaustive"},
           {"checks", checks},
           {"passed", ok}}));
  });
}

lps_status lps_stream_query(const lps_object* obj, const char* open_a, const char* open_b, const char* x,
                            const char* y, int max_steps, int* related, char** witness_json) {
  return guarded([&] {
    require(obj && x && y && related, "null argument");
    const lps::Stream& s = stream_of(obj);
    const lps::FiniteSpace& space = s.space();
    lps::PointSet u = parse_open(space, open_a);
    lps::PointSet v = open_b ? parse_open(space, open_b) : lps::PointSet();
    lps::PointIndex px = space.universe()->index_of(x);
    lps::PointIndex py = space.universe()->index_of(y);
    lps::PointSet whole = u | v;
    if (!whole.contains(px) || !whole.contains(py))
      throw lps::Error(lps::ErrorCode::UnknownPoint, "query points must lie in the open set");
    bool rel = s.on_open(whole).related(px, py);
    *related = rel ? 1 : 0;
    if (!witness_json) return;
    json w = {{"related", rel}, {"x", x}, {"y", y}, {"open", open_json(space, whole)}};
    if (rel) {
      std::vector<lps::PointIndex> points;
      json steps = json::array();
      if (open_b) {
        auto chain = lps::alternating_witness(s, u, v, px, py);
        points = chain.points;
        for (int label : chain.labels) steps.push_back(label == 0 ? "U" : "V");
        w["kind"] = "alternating";
      } else {
        auto chain = lps::star_chain_witness(s, u, px, py);
        points = chain.points;
        for (auto star : chain.step_star) steps.push_back(space.name(star));
        w["kind"] = "star_chain";
      }
      std::size_t length = steps.size();
      bool truncated = max_steps > 0 && length > static_cast<std::size_t>(max_steps);
      if (truncated) {
        steps.erase(steps.begin() + max_steps, steps.end());
        points.resize(static_cast<std::size_t>(max_steps) + 1);
      }
      json names = json::array();
      for (auto p : points) names.push_back(space.name(p));
      w["points"] = names;
      w["steps"] = steps;
      w["length"] = length;
      w["truncated"] = truncated;
    }
    *witness_json = dup_string(lps::canonical_dump(w));
  });
}

lps_status lps_combine(const char* op, const lps_object* const* inputs, int input_count, const char* args_json,
                       int verify, int* verified, lps_object** out) {
  return guarded([&] {
    require(op && out && input_count >= 0 && (inputs || input_count == 0), "null argument");
    std::vector<const lps_object*> in(inputs, inputs + input_count);
    json args = args_json ? lps::parse_json(args_json) : json::object();
    bool ok = true;
    lps::Document d = combine(op, in, args, verify != 0, ok);
    if (verified) *verified = ok ? 1 : 0;
    *out = wrap(std::move(d));
  });
}

lps_status lps_selfcheck(unsigned long long seed, int count, int max_points, int* passed, char** report_json) {
  return guarded([&] {
    require(passed && count >= 0 && max_points >= 0 && max_points <= 8, "count >= 0 and 0 <= max_points <= 8 required");
    lps::Rng rng(seed);
    std::uniform_int_distribution<std::size_t> size(0, static_cast<std::size_t>(max_points));
    json failures = json::array();
    int skipped_exhaustive = 0;
    for (int i = 0; i < count; ++i) {
      lps::Stream s = lps::random_stream(rng, size(rng));
      lps::FiniteSpace target = lps::random_space(rng, size(rng));
      if (target.size() == 0 && s.size() > 0) target = lps::FiniteSpace::discrete(lps::numbered_universe(1));
      lps::PointMap f = lps::random_continuous_map(rng, s.space(), target);
      auto fail = [&](const char* what) { failures.push_back({{"instance", i}, {"check", what}}); };
      lps::Precirculation pc = lps::Precirculation::of(s.circulation());
      bool fast = lps::is_circulation(pc, lps::Mode::Fast).holds;
      if (!fast) fail("circulation");
      try {
        if (lps::is_circulation(pc, lps::Mode::Exhaustive).holds != fast) fail("fast_equals_exhaustive");
      } catch (const lps::Error& e) {
        if (e.code() != lps::ErrorCode::CapacityExceeded) throw;
        ++skipped_exhaustive;
      }
      if (!(lps::cosheafify(pc) == s.circulation())) fail("cosheafify_fixes_circulations");
      if (!lps::check_connected_intervals(s).holds) fail("intervals");
      if (!lps::check_antisymmetry(s).holds()) fail("antisymmetry");
      lps::Stream pushed(lps::pushforward(s, f, target));
      if (!lps::is_circulation(lps::Precirculation::of(pushed.circulation())).holds) fail("pushforward");
      if (!lps::is_stream_map(s, pushed, f)) fail("pushforward_map");
    }
    *passed = failures.empty() ? 1 : 0;
    if (report_json)
      *report_json = dup_string(lps::canonical_dump({{"seed", seed},
                                                     {"count", count},
                                                     {"max_points", max_points},
                                                     {"exhaustive_skipped", skipped_exhaustive},
                                                     {"failures", failures},
                                                     {"passed", failures.empty()}}));
  });
}

}  // extern "C"
