#include "sk/json_io.hpp"

#include <limits>

#include "sk/group_spec.hpp"

namespace sk {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) bad("expected a JSON object");
  const auto it = j.find(name);
  if (it == j.end()) bad(std::string("missing field '") + name + "'");
  return *it;
}

Vertex vertex_from_json(const Json& j) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    bad("vertex labels must be nonnegative integers");
  const auto v = j.get<std::uint64_t>();
  if (v > std::numeric_limits<Vertex>::max()) throw Error(ErrorCode::IndexOutOfRange, "vertex label too large");
  return static_cast<Vertex>(v);
}

template <std::size_t N>
std::array<Vertex, N> tuple_from_json(const Json& j) {
  if (!j.is_array() || j.size() != N) bad("expected an array of " + std::to_string(N) + " vertices");
  std::array<Vertex, N> out{};
  for (std::size_t i = 0; i < N; ++i) out[i] = vertex_from_json(j[i]);
  return out;
}

Json vertices_json(const std::vector<Vertex>& v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

Json mpz_list(const std::vector<mpz_class>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(mpz_json(x));
  return a;
}

}  // namespace

Json mpz_json(const mpz_class& v) {
  if (mpz_fits_slong_p(v.get_mpz_t())) return Json(static_cast<std::int64_t>(v.get_si()));
  return Json(v.get_str());
}

mpz_class mpz_from_json(const Json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<std::int64_t>()));
  if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<std::uint64_t>()));
  if (j.is_string()) {
    mpz_class v;
    if (v.set_str(j.get<std::string>(), 10) != 0) bad("not an integer: " + j.get<std::string>());
    return v;
  }
  bad("expected an integer");
}

Json interval_json(const Interval& v) {
  Json j;
  j["lo"] = v.lo_string();
  j["hi"] = v.hi_string();
  return j;
}

Json complex_json(const MarkedComplex& x) {
  Json j;
  j["vertex_count"] = x.complex.vertex_count();
  Json tris = Json::array();
  for (const auto& t : x.complex.triangles()) tris.push_back({t[0], t[1], t[2]});
  j["triangles"] = std::move(tris);
  Json extra = Json::array();
  for (const auto& e : x.complex.extra_edges()) extra.push_back({e[0], e[1]});
  j["extra_edges"] = std::move(extra);
  Json vs = Json::object(), ls = Json::object();
  for (const auto& [name, v] : x.marked_vertices) vs[name] = v;
  for (const auto& [name, l] : x.marked_loops) ls[name] = vertices_json(l);
  j["marks"] = {{"vertices", std::move(vs)}, {"loops", std::move(ls)}};
  return j;
}

MarkedComplex complex_from_json(const Json& j) {
  const Json& n = field(j, "vertex_count");
  if (!n.is_number_integer() || n.get<std::int64_t>() < 0) bad("vertex_count must be a nonnegative integer");
  const Json& tj = field(j, "triangles");
  if (!tj.is_array()) bad("triangles must be an array");
  std::vector<Triangle> tris;
  for (const auto& t : tj) tris.push_back(tuple_from_json<3>(t));
  std::vector<Edge> extra;
  if (j.contains("extra_edges")) {
    const Json& ej = j["extra_edges"];
    if (!ej.is_array()) bad("extra_edges must be an array");
    for (const auto& e : ej) extra.push_back(tuple_from_json<2>(e));
  }
  MarkedComplex x;
  x.complex = Simplex2Complex::validate(n.get<std::size_t>(), std::move(tris), std::move(extra));
  if (j.contains("marks")) {
    const Json& m = j["marks"];
    if (!m.is_object()) bad("marks must be an object");
    if (m.contains("vertices")) {
      if (!m["vertices"].is_object()) bad("marks.vertices must be an object");
      for (const auto& [name, v] : m["vertices"].items()) x.marked_vertices[name] = vertex_from_json(v);
    }
    if (m.contains("loops")) {
      if (!m["loops"].is_object()) bad("marks.loops must be an object");
      for (const auto& [name, l] : m["loops"].items()) {
        if (!l.is_array()) bad("loop '" + name + "' must be an array");
        std::vector<Vertex> loop;
        for (const auto& v : l) loop.push_back(vertex_from_json(v));
        x.marked_loops[name] = std::move(loop);
      }
    }
    x.check_marks();
  }
  return x;
}

Json invariants_json(const Simplex2Complex& x) {
  const auto st = stats(x);
  const auto h = homology_summary(x);
  Json j;
  j["s0"] = st.s0;
  j["s1"] = st.s1;
  j["s2"] = st.s2;
  j["euler"] = st.euler;
  j["betti"] = {h.betti[0], h.betti[1], h.betti[2]};
  j["torsion"] = mpz_list(h.h1_torsion_factors);
  return j;
}

Json colored_graph_json(const ColoredGraph& g) {
  Json j;
  j["black"] = g.black();
  j["green"] = g.green();
  j["red"] = g.red();
  Json a = Json::array(), b = Json::array();
  for (const auto& r : g.a_rows()) a.push_back({r[0], r[1]});
  for (const auto& r : g.b_rows()) b.push_back({r[0], r[1], r[2]});
  j["A"] = std::move(a);
  j["B"] = std::move(b);
  return j;
}

ColoredGraph colored_graph_from_json(const Json& j) {
  const Json& bj = field(j, "black");
  if (!bj.is_number_integer() || bj.get<std::int64_t>() < 0) bad("black must be a nonnegative integer");
  const Json& aj = field(j, "A");
  const Json& brj = field(j, "B");
  if (!aj.is_array() || !brj.is_array()) bad("A and B must be arrays");
  std::vector<std::array<std::uint32_t, 2>> a;
  for (const auto& r : aj) {
    const auto t = tuple_from_json<2>(r);
    a.push_back({t[0], t[1]});
  }
  std::vector<std::array<std::uint32_t, 3>> b;
  for (const auto& r : brj) {
    const auto t = tuple_from_json<3>(r);
    b.push_back({t[0], t[1], t[2]});
  }
  const std::size_t g = a.size();
  return ColoredGraph::make(bj.get<std::size_t>(), std::move(a), g, std::move(b));
}

Json certificate_json(const BoundCertificate& c) {
  Json j;
  j["spec"] = format_group_spec(c.spec);
  Json k;
  k["lo"] = mpz_json(c.kappa.lo);
  k["lo_reason"] = c.kappa.lo_reason;
  k["hi"] = mpz_json(c.kappa.hi);
  k["hi_witness"] = c.kappa.hi_witness;
  if (c.kappa.exact) k["exact"] = *c.kappa.exact;
  j["kappa"] = std::move(k);
  if (c.sigma) {
    Json s;
    s["lo"] = interval_json(c.sigma->lo);
    s["lo_reason"] = c.sigma->lo_reason;
    s["hi"] = interval_json(c.sigma->hi);
    s["hi_reason"] = c.sigma->hi_reason;
    j["sigma"] = std::move(s);
  }
  j["notes"] = c.notes;
  return j;
}

Json census_entry_json(const CensusEntry& e) {
  Json j;
  Json tris = Json::array();
  for (const auto& t : e.canonical_triangles) tris.push_back({t[0], t[1], t[2]});
  j["canonical_triangles"] = std::move(tris);
  j["s0"] = e.s0;
  j["s1"] = e.s1;
  j["s2"] = e.s2;
  j["euler"] = e.euler;
  j["betti"] = {e.betti[0], e.betti[1], e.betti[2]};
  j["torsion"] = mpz_list(e.torsion);
  return j;
}

Json systole_json(const SystoleResult& s) {
  Json j;
  j["ring"] = s.ring == 0 ? std::string("Z") : "Z/" + std::to_string(s.ring);
  j["rational_length"] = s.rational_length.get_str();
  j["length"] = interval_json(s.length);
  j["witness_cycle"] = vertices_json(s.witness_cycle);
  return j;
}

Json error_json(const Error& e) {
  Json j;
  j["error"] = {{"code", std::string(e.code_name())}, {"message", e.what()}};
  return j;
}

}  // namespace sk
