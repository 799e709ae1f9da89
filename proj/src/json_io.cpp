#include "pseudoknot/json_io.hpp"

#include "pseudoknot/error.hpp"

namespace pk {
namespace {

template <class T>
T field(const Json& j, const char* name) {
  if (!j.is_object()) throw ParseError("expected a JSON object", 0);
  const auto it = j.find(name);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + name + "\"", 0);
  try {
    return it->get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError(std::string("field \"") + name + "\" has the wrong type", 0);
  }
}

const Json& array_field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name) || !j.at(name).is_array()) {
    throw ParseError(std::string("missing array field \"") + name + "\"", 0);
  }
  return j.at(name);
}

std::string vertex_kind(const Vertex& v) {
  if (v.is_precrossing()) return "P";
  return v.sign > 0 ? "X+" : "X-";
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte == 0 ? 0 : e.byte - 1);
  }
}

Json to_json(const PseudoPD& d) {
  Json vs = Json::array();
  for (const Vertex& v : d.vertices()) {
    vs.push_back({{"id", v.id}, {"kind", vertex_kind(v)}, {"edges", v.edges}});
  }
  return {{"vertices", vs}, {"pd", d.to_string()}};
}

PseudoPD pd_from_json(const Json& j) {
  std::vector<Vertex> vs;
  for (const Json& x : array_field(j, "vertices")) {
    Vertex v;
    v.id = field<int>(x, "id");
    const auto kind = field<std::string>(x, "kind");
    if (kind == "P") {
      v.kind = VertexKind::precrossing;
    } else if (kind == "X+" || kind == "X-") {
      v.kind = VertexKind::classical;
      v.sign = kind == "X+" ? 1 : -1;
    } else {
      throw ParseError("unknown vertex kind \"" + kind + "\"", 0);
    }
    v.edges = field<std::array<int, 4>>(x, "edges");
    vs.push_back(v);
  }
  return PseudoPD(std::move(vs));
}

Json to_json(const PseudoGaussDiagram& g) {
  Json ts = Json::array();
  for (const GaussToken& t : g.tokens()) {
    const char* kind = t.precrossing ? (t.head ? "Ph" : "Pt") : (t.head ? "U" : "O");
    ts.push_back({{"id", t.id}, {"kind", kind}, {"sign", t.sign}});
  }
  return {{"tokens", ts}, {"code", g.to_string()}};
}

PseudoGaussDiagram gauss_from_json(const Json& j) {
  if (j.is_object() && j.contains("code")) return parse_gauss(field<std::string>(j, "code"));
  std::vector<GaussToken> ts;
  for (const Json& x : array_field(j, "tokens")) {
    GaussToken t;
    t.id = field<int>(x, "id");
    const auto kind = field<std::string>(x, "kind");
    if (kind == "O" || kind == "U") {
      t.head = kind == "U";
      t.sign = field<int>(x, "sign");
    } else if (kind == "Pt" || kind == "Ph") {
      t.precrossing = true;
      t.head = kind == "Ph";
    } else {
      throw ParseError("unknown token kind \"" + kind + "\"", 0);
    }
    ts.push_back(t);
  }
  return PseudoGaussDiagram(std::move(ts));
}

Json to_json(const DecoratedChordDiagram& c) {
  Json chords = Json::array();
  for (const auto& ch : c.chords()) chords.push_back({ch.a, ch.b, ch.decoration});
  return {{"endpoints", c.endpoint_count()}, {"chords", chords}, {"canonical", to_hex(canonical_form(c))}};
}

DecoratedChordDiagram chord_diagram_from_json(const Json& j) {
  const auto n = field<std::size_t>(j, "endpoints");
  std::vector<DecoratedChordDiagram::Chord> chords;
  for (const Json& x : array_field(j, "chords")) {
    if (!x.is_array() || x.size() != 3) throw ParseError("a chord is [a, b, decoration]", 0);
    try {
      auto a = x[0].get<std::size_t>();
      auto b = x[1].get<std::size_t>();
      if (a > b) std::swap(a, b);
      chords.push_back({a, b, x[2].get<std::int64_t>()});
    } catch (const nlohmann::json::exception&) {
      throw ParseError("chord entries must be integers", 0);
    }
  }
  return DecoratedChordDiagram(n, std::move(chords));
}

Json to_json(const LaurentPolynomial& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({e, c});
  return {{"terms", terms}, {"text", p.to_string("t")}};
}

LaurentPolynomial laurent_from_json(const Json& j) {
  std::vector<std::pair<int, LaurentPolynomial::Coefficient>> terms;
  for (const Json& x : array_field(j, "terms")) {
    if (!x.is_array() || x.size() != 2) throw ParseError("a term is [exponent, coefficient]", 0);
    try {
      terms.emplace_back(x[0].get<int>(), x[1].get<LaurentPolynomial::Coefficient>());
    } catch (const nlohmann::json::exception&) {
      throw ParseError("term entries must be integers", 0);
    }
  }
  return LaurentPolynomial::from_terms(terms);
}

Json to_json(const WereSet& w) {
  Json entries = Json::array();
  for (const auto& [name, n] : w.counts) {
    entries.push_back({{"knot", name.to_string()}, {"count", n}, {"probability", WereSet::probability(n, w.precrossings)}});
  }
  Json unknown = Json::array();
  for (const auto& [poly, n] : w.unknown) {
    unknown.push_back({{"jones", to_json(poly)}, {"count", n}, {"probability", WereSet::probability(n, w.precrossings)}});
  }
  return {{"precrossings", w.precrossings}, {"total", w.total()}, {"entries", entries}, {"unknown", unknown}};
}

WereSet wereset_from_json(const Json& j) {
  WereSet w;
  w.precrossings = field<std::size_t>(j, "precrossings");
  if (w.precrossings >= 64) throw ValidationError("too many precrossings");
  for (const Json& x : array_field(j, "entries")) {
    w.counts[KnotName::parse(field<std::string>(x, "knot"))] += field<std::uint64_t>(x, "count");
  }
  if (j.contains("unknown")) {
    for (const Json& x : array_field(j, "unknown")) {
      if (!x.contains("jones")) throw ParseError("missing field \"jones\"", 0);
      w.unknown[laurent_from_json(x.at("jones"))] += field<std::uint64_t>(x, "count");
    }
  }
  std::uint64_t sum = 0;
  for (const auto& [name, n] : w.counts) sum += n;
  for (const auto& [poly, n] : w.unknown) sum += n;
  if (sum != w.total()) throw ValidationError("were-set counts do not add up to 2^k");
  return w;
}

Json to_json(const KnotTable& t) {
  Json entries = Json::array();
  for (const KnotEntry& e : t.entries()) {
    entries.push_back({{"name", e.name.to_string()},
                       {"crossing_number", e.crossing_number},
                       {"amphichiral", e.amphichiral},
                       {"jones", to_json(e.jones)}});
  }
  return {{"entries", entries}};
}

KnotTable knot_table_from_json(const Json& j) {
  std::vector<KnotEntry> entries;
  for (const Json& x : array_field(j, "entries")) {
    KnotEntry e;
    e.name = KnotName::parse(field<std::string>(x, "name"));
    e.crossing_number = field<int>(x, "crossing_number");
    e.amphichiral = field<bool>(x, "amphichiral");
    if (!x.contains("jones")) throw ParseError("missing field \"jones\"", 0);
    e.jones = laurent_from_json(x.at("jones"));
    entries.push_back(std::move(e));
  }
  return KnotTable(std::move(entries));
}

Json to_json(const FlypeSite& s) {
  return {{"crossing", s.crossing}, {"tangle", s.tangle}, {"first_leg_slot", s.first_leg_slot}, {"boundary", s.boundary}};
}

FlypeSite flype_site_from_json(const Json& j) {
  FlypeSite s;
  s.crossing = field<int>(j, "crossing");
  s.tangle = field<std::vector<int>>(j, "tangle");
  s.first_leg_slot = field<int>(j, "first_leg_slot");
  s.boundary = field<std::array<int, 4>>(j, "boundary");
  return s;
}

Json to_json(const ChordFlypeSite& s) {
  return {{"chord", s.chord},
          {"a", {{"start", s.a.start}, {"length", s.a.length}}},
          {"b", {{"start", s.b.start}, {"length", s.b.length}}},
          {"type", s.type == FlypeType::I ? "I" : "II"}};
}

ChordFlypeSite chord_flype_site_from_json(const Json& j) {
  ChordFlypeSite s;
  s.chord = field<std::size_t>(j, "chord");
  const auto arc = [&](const char* name) {
    if (!j.contains(name)) throw ParseError(std::string("missing field \"") + name + "\"", 0);
    return Arc{field<std::size_t>(j.at(name), "start"), field<std::size_t>(j.at(name), "length")};
  };
  s.a = arc("a");
  s.b = arc("b");
  const auto type = field<std::string>(j, "type");
  if (type != "I" && type != "II") throw ParseError("flype type must be \"I\" or \"II\"", 0);
  s.type = type == "I" ? FlypeType::I : FlypeType::II;
  return s;
}

Json to_json(const MoveSite& s) {
  return {{"kind", to_string(s.kind)},
          {"at", s.at},
          {"sign", s.sign},
          {"head_first", s.head_first},
          {"antiparallel", s.antiparallel}};
}

MoveSite move_site_from_json(const Json& j) {
  MoveSite s;
  s.kind = move_kind_from_string(field<std::string>(j, "kind"));
  s.at = field<std::vector<std::size_t>>(j, "at");
  if (j.contains("sign")) s.sign = field<int>(j, "sign");
  if (j.contains("head_first")) s.head_first = field<bool>(j, "head_first");
  if (j.contains("antiparallel")) s.antiparallel = field<bool>(j, "antiparallel");
  return s;
}

}  // namespace pk
