#include "vhc/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace vhc::io {

namespace {

using Json = nlohmann::ordered_json;

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

template <class T>
T get(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const Json::exception&) {
    throw ParseError(std::string("field \"") + what + "\" has the wrong type");
  }
}

std::uint32_t get_natural(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0 || j.get<std::int64_t>() > UINT32_MAX) {
    throw ParseError(std::string("field \"") + what + "\" must be a natural number");
  }
  return j.get<std::uint32_t>();
}

OrientedEdge signed_edge(const Json& j) {
  if (!j.is_number_integer() || j.get<std::int64_t>() == 0) throw ParseError("edge references are nonzero integers");
  return OrientedEdge::from_signed_id(j.get<std::int64_t>());
}

Json word_json(const EdgeWord& w) {
  Json a = Json::array();
  for (OrientedEdge o : w) a.push_back(o.signed_id());
  return a;
}

EdgeWord parse_edge_word(const Json& j) {
  if (!j.is_array()) throw ParseError("edge word must be an array");
  EdgeWord w;
  for (const Json& e : j) w.push_back(signed_edge(e));
  return w;
}

Json path_json(const EdgePath& p) {
  Json j;
  j["start"] = p.start;
  j["word"] = word_json(p.word);
  return j;
}

EdgePath path_from(const Json& j) {
  return {get_natural(field(j, "start"), "start"), parse_edge_word(field(j, "word"))};
}

Json letters_json(const Word& w) {
  Json a = Json::array();
  for (Letter l : w) a.push_back(l);
  return a;
}

Word letters_from(const Json& j) {
  if (!j.is_array()) throw ParseError("word must be an array of letters");
  Word w;
  for (const Json& l : j) {
    if (!l.is_number_integer() || l.get<std::int64_t>() == 0) throw ParseError("letters are nonzero integers");
    w.push_back(l.get<Letter>());
  }
  return w;
}

Json perm_json(const Permutation& p) { return Json(p.images()); }

Permutation perm_from(const Json& j, std::size_t degree) {
  auto images = get<std::vector<std::uint32_t>>(j, "perm");
  if (images.size() != degree) throw ParseError("permutation has the wrong degree");
  try {
    return Permutation(std::move(images));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

const char* kind_name(SquareImage::Kind k) {
  switch (k) {
    case SquareImage::Kind::Square: return "square";
    case SquareImage::Kind::Collapse: return "collapse";
    case SquareImage::Kind::Disc: return "disc";
    case SquareImage::Kind::Region: return "region";
  }
  return "";
}

}  // namespace

std::string read_text(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw ParseError("cannot read " + p.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_text(const std::filesystem::path& p, std::string_view text) {
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  out << text;
}

SquareComplex parse_complex(std::string_view text) {
  const Json j = parse_json(text);
  SquareComplex x;
  x.vertex_count = get_natural(field(j, "vertices"), "vertices");
  const Json& edges = field(j, "edges");
  if (!edges.is_array()) throw ParseError("\"edges\" must be an array");
  x.edges.resize(edges.size());
  std::vector<bool> seen(edges.size(), false);
  for (const Json& e : edges) {
    const std::uint32_t id = get_natural(field(e, "id"), "id");
    if (id == 0 || id > edges.size() || seen[id - 1]) throw ParseError("edge ids must be exactly 1..n");
    seen[id - 1] = true;
    Edge& out = x.edges[id - 1];
    out.tail = get_natural(field(e, "tail"), "tail");
    out.head = get_natural(field(e, "head"), "head");
    const auto label = get<std::string>(field(e, "label"), "label");
    if (label != "V" && label != "H") throw ParseError("edge label must be \"V\" or \"H\"");
    out.label = label == "V" ? Label::V : Label::H;
  }
  const Json& squares = field(j, "squares");
  if (!squares.is_array()) throw ParseError("\"squares\" must be an array");
  for (const Json& s : squares) x.squares.push_back(parse_edge_word(s));
  return x;
}

std::string format_complex(const SquareComplex& x) {
  Json j;
  j["vertices"] = x.vertex_count;
  j["edges"] = Json::array();
  for (EdgeId e = 0; e < x.edges.size(); ++e) {
    j["edges"].push_back({{"id", e + 1},
                          {"tail", x.edges[e].tail},
                          {"head", x.edges[e].head},
                          {"label", x.edges[e].label == Label::V ? "V" : "H"}});
  }
  j["squares"] = Json::array();
  for (const EdgeWord& s : x.squares) j["squares"].push_back(word_json(s));
  return dump(j);
}

SquareComplex read_complex(const std::filesystem::path& p) { return parse_complex(read_text(p)); }

EdgePath parse_path(std::string_view text) { return path_from(parse_json(text)); }
std::string format_path(const EdgePath& p) { return dump(path_json(p)); }

GroupPresentation parse_presentation(std::string_view text) {
  const Json j = parse_json(text);
  const auto gens = get<std::vector<std::string>>(field(j, "generators"), "generators");
  const auto rels = get<std::vector<std::string>>(field(j, "relators"), "relators");
  try {
    return GroupPresentation(gens, rels);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string format_presentation(const GroupPresentation& p) {
  Json j;
  j["generators"] = p.generators();
  j["relators"] = Json::array();
  for (const Word& r : p.relators()) j["relators"].push_back(p.format_word(r));
  return dump(j);
}

Cover parse_cover(std::string_view text, std::shared_ptr<const SquareComplex> base) {
  const Json j = parse_json(text);
  const std::uint32_t d = get_natural(field(j, "degree"), "degree");
  if (d == 0) throw ParseError("degree must be positive");
  Cover c = Cover::trivial(std::move(base), d);
  const Json& perm = field(j, "perm");
  if (!perm.is_object()) throw ParseError("\"perm\" must be an object");
  for (const auto& [key, value] : perm.items()) {
    std::size_t id = 0;
    try {
      id = std::stoul(key);
    } catch (const std::exception&) {
      throw ParseError("perm keys are edge ids");
    }
    if (id == 0 || id > c.perm.size()) throw ParseError("perm key out of range");
    c.perm[id - 1] = perm_from(value, d);
  }
  return c;
}

std::string format_cover(const Cover& c, std::string_view base_ref) {
  Json j;
  j["base"] = base_ref;
  j["degree"] = c.degree;
  j["perm"] = Json::object();
  for (EdgeId e = 0; e < c.perm.size(); ++e) j["perm"][std::to_string(e + 1)] = perm_json(c.perm[e]);
  return dump(j);
}

std::string format_map(const CellularMap& f) {
  Json j;
  j["vertices"] = f.vertex_map;
  j["edges"] = Json::array();
  for (const EdgeWord& w : f.edge_map) j["edges"].push_back(word_json(w));
  j["squares"] = Json::array();
  for (const SquareImage& s : f.square_map) {
    Json q;
    q["kind"] = kind_name(s.kind);
    if (s.kind == SquareImage::Kind::Square || s.kind == SquareImage::Kind::Disc) q["index"] = s.index;
    if (s.kind == SquareImage::Kind::Region) q["region"] = s.region;
    j["squares"].push_back(q);
  }
  j["discs"] = Json::array();
  for (const EdgePath& p : f.discs) j["discs"].push_back(path_json(p));
  return dump(j);
}

CellularMap parse_map(std::string_view text) {
  const Json j = parse_json(text);
  CellularMap f;
  f.vertex_map = get<std::vector<VertexId>>(field(j, "vertices"), "vertices");
  for (const Json& w : field(j, "edges")) f.edge_map.push_back(parse_edge_word(w));
  for (const Json& q : field(j, "squares")) {
    const auto kind = get<std::string>(field(q, "kind"), "kind");
    if (kind == "square") {
      f.square_map.push_back(SquareImage::square(get_natural(field(q, "index"), "index")));
    } else if (kind == "collapse") {
      f.square_map.push_back(SquareImage::collapse());
    } else if (kind == "disc") {
      f.square_map.push_back(SquareImage::disc(get_natural(field(q, "index"), "index")));
    } else if (kind == "region") {
      f.square_map.push_back(SquareImage::of_region(get<std::vector<SquareId>>(field(q, "region"), "region")));
    } else {
      throw ParseError("unknown square image kind \"" + kind + "\"");
    }
  }
  for (const Json& p : field(j, "discs")) f.discs.push_back(path_from(p));
  return f;
}

std::string format_report(const CleanlinessReport& r) {
  Json j;
  j["hyperplane"] = r.hyperplane;
  j["two_sided"] = r.two_sided;
  j["self_crossing"] = r.self_crossing;
  j["osculation_witnesses"] = Json::array();
  for (const OsculationWitness& w : r.osculation_witnesses) {
    Json o;
    o["side"] = w.side;
    if (w.kind == OsculationWitness::Kind::Vertex) {
      o["kind"] = "vertex";
      o["edges"] = {w.edge_a + 1, w.edge_b + 1};
      o["vertex"] = w.image;
    } else {
      o["kind"] = "edge";
      o["midcubes"] = {{w.midcube_a.square + 1, w.midcube_a.pair}, {w.midcube_b.square + 1, w.midcube_b.pair}};
      o["edge"] = w.image + 1;
    }
    j["osculation_witnesses"].push_back(o);
  }
  j["clean"] = r.clean;
  return dump(j);
}

std::string format_manifest(const Manifest& m) {
  Json j;
  j["kind"] = m.kind;
  j["complex"] = m.complex;
  j["basepoint"] = m.basepoint;
  j["vertical"] = Json::array();
  for (EdgeId e : m.vertical) j["vertical"].push_back(e + 1);
  if (m.alpha) j["alpha"] = *m.alpha + 1;
  if (m.gamma) j["gamma"] = path_json(*m.gamma);
  j["annulus"] = Json::array();
  for (SquareId s : m.annulus) j["annulus"].push_back(s + 1);
  if (m.y) j["y"] = *m.y;
  j["npc"] = m.npc;
  return dump(j);
}

Manifest parse_manifest(std::string_view text) {
  const Json j = parse_json(text);
  Manifest m;
  m.kind = get<std::string>(field(j, "kind"), "kind");
  m.complex = get<std::string>(field(j, "complex"), "complex");
  m.basepoint = get_natural(field(j, "basepoint"), "basepoint");
  for (const Json& e : field(j, "vertical")) m.vertical.push_back(get_natural(e, "vertical") - 1);
  if (j.contains("alpha")) m.alpha = get_natural(j["alpha"], "alpha") - 1;
  if (j.contains("gamma")) m.gamma = path_from(j["gamma"]);
  if (j.contains("annulus")) {
    for (const Json& s : j["annulus"]) m.annulus.push_back(get_natural(s, "annulus") - 1);
  }
  if (j.contains("y")) m.y = get_natural(j["y"], "y");
  if (j.contains("npc")) m.npc = get<bool>(j["npc"], "npc");
  return m;
}

Manifest jp_manifest(const JpBuild& b, std::string_view complex_ref) {
  Manifest m;
  m.kind = "jp";
  m.complex = complex_ref;
  m.basepoint = b.pair.basepoint;
  m.vertical = b.pair.vertical;
  for (const JpCopy& c : b.copies) m.annulus.insert(m.annulus.end(), c.cylinder.begin(), c.cylinder.end());
  m.npc = b.npc;
  return m;
}

Manifest xn_manifest(const DoubledComplex& d, std::string_view complex_ref) {
  Manifest m;
  m.kind = "xn";
  m.complex = complex_ref;
  m.basepoint = d.basepoint(0);
  for (EdgeId e : d.extended.pair.vertical) m.vertical.push_back(d.copy[0].edge + e);
  m.alpha = d.copy[0].edge + d.extended.alpha;
  EdgePath g = d.gamma;
  g.start += d.copy[0].vertex;
  for (OrientedEdge& o : g.word) o.edge += d.copy[0].edge;
  m.gamma = g;
  m.annulus = d.annulus;
  m.y = d.y.id();
  m.npc = d.npc;
  return m;
}

std::string format_witness(const SearchOutcome& o, const WordPresentation* presentation,
                           const std::optional<EdgePath>& loop, std::string_view base_ref) {
  Json j;
  j["status"] = o.found() ? "FOUND" : "EXHAUSTED";
  j["kind"] = o.cover || !presentation ? "cover" : "quotient";
  if (o.quotient) {
    const QuotientWitness& q = *o.quotient;
    j["degree"] = q.degree;
    j["images"] = Json::object();
    for (std::size_t g = 0; g < q.images.size(); ++g) j["images"][std::to_string(g + 1)] = perm_json(q.images[g]);
    Json cert;
    if (loop) cert["loop"] = path_json(*loop);
    cert["word"] = letters_json(q.word);
    cert["image"] = perm_json(q.word_image);
    j["certified"] = cert;
  } else if (o.cover) {
    const CoverWitness& c = *o.cover;
    j["degree"] = c.cover.degree;
    j["base"] = base_ref;
    j["images"] = Json::object();
    for (EdgeId e = 0; e < c.cover.perm.size(); ++e) j["images"][std::to_string(e + 1)] = perm_json(c.cover.perm[e]);
    Json cert;
    cert["hyperplane"] = c.hyperplane;
    cert["mode"] = c.mode == CleanMode::Some ? "some" : "each";
    cert["checked_degree"] = c.checked.degree;
    cert["clean_components"] = c.clean_components;
    j["certified"] = cert;
  }
  if (presentation) {
    Json p;
    p["generators"] = presentation->generators;
    p["relators"] = Json::array();
    for (const Word& r : presentation->relators) p["relators"].push_back(letters_json(r));
    j["presentation"] = p;
  }
  Json b;
  b["max_degree"] = o.budget.max_degree;
  b["max_nodes"] = o.budget.max_nodes ? Json(*o.budget.max_nodes) : Json(nullptr);
  b["deterministic"] = o.budget.deterministic;
  b["homs_tried"] = o.stats.homs_tried;
  b["nodes"] = o.stats.nodes;
  b["covers_realized"] = o.stats.covers_realized;
  b["degree_reached"] = o.stats.degree_reached;
  b["truncated"] = o.stats.truncated;
  j["budget"] = b;
  return dump(j);
}

bool verify_witness(std::string_view text, const SquareComplex* base) {
  const Json j = parse_json(text);
  if (get<std::string>(field(j, "status"), "status") != "FOUND") return false;
  const auto kind = get<std::string>(field(j, "kind"), "kind");
  const std::uint32_t d = get_natural(field(j, "degree"), "degree");
  const Json& images = field(j, "images");
  const Json& cert = field(j, "certified");

  if (kind == "quotient") {
    const Json& pj = field(j, "presentation");
    WordPresentation p;
    p.generators = get_natural(field(pj, "generators"), "generators");
    for (const Json& r : field(pj, "relators")) p.relators.push_back(letters_from(r));
    QuotientWitness q;
    q.degree = d;
    for (std::size_t g = 1; g <= p.generators; ++g) q.images.push_back(perm_from(field(images, std::to_string(g).c_str()), d));
    q.word = letters_from(field(cert, "word"));
    q.word_image = perm_from(field(cert, "image"), d);
    if (!verify_quotient_witness(p, q)) return false;
    if (cert.contains("loop")) {
      if (!base) return false;
      const EdgePath loop = path_from(cert["loop"]);
      if (!is_based_loop(*base, loop)) return false;
      const Pi1Presentation pi1 = pi1_presentation(*base, loop.start);
      if (!(pi1.words == p) || pi1.rewrite(loop) != q.word) return false;
      const Cover c = cover_from_images(std::make_shared<const SquareComplex>(*base), pi1, q.images, d);
      if (!validate_cover(c)) return false;
      return !word_permutation(c, loop.word).is_identity();
    }
    return true;
  }
  if (kind == "cover") {
    if (!base) return false;
    auto shared = std::make_shared<const SquareComplex>(*base);
    CoverWitness w;
    w.cover = Cover::trivial(shared, d);
    for (EdgeId e = 0; e < base->edges.size(); ++e) w.cover.perm[e] = perm_from(field(images, std::to_string(e + 1).c_str()), d);
    w.hyperplane = get_natural(field(cert, "hyperplane"), "hyperplane");
    const auto mode = get<std::string>(field(cert, "mode"), "mode");
    w.mode = mode == "each" ? CleanMode::Each : CleanMode::Some;
    w.checked = w.mode == CleanMode::Each ? regular_closure(w.cover) : w.cover;
    if (w.checked.degree != get_natural(field(cert, "checked_degree"), "checked_degree")) return false;
    w.clean_components = get<std::vector<std::uint32_t>>(field(cert, "clean_components"), "clean_components");
    return verify_cover_witness(*base, w);
  }
  throw ParseError("unknown witness kind \"" + kind + "\"");
}

}  // namespace vhc::io
