#include "sk/complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "sk/error.hpp"

namespace sk {

namespace {

std::string show(const Triangle& t) {
  return "[" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
         std::to_string(t[2]) + "]";
}

std::string show(const Edge& e) {
  return "[" + std::to_string(e[0]) + "," + std::to_string(e[1]) + "]";
}

// Union-find over vertex indices.
class Classes {
 public:
  explicit Classes(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t find(std::size_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }
  void merge(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

Triangle make_triangle(Vertex a, Vertex b, Vertex c) {
  Triangle t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

std::array<Edge, 3> triangle_edges(const Triangle& t) {
  return {Edge{t[0], t[1]}, Edge{t[0], t[2]}, Edge{t[1], t[2]}};
}

std::size_t edge_index(std::span<const Edge> sorted_edges, const Edge& e) {
  auto it = std::lower_bound(sorted_edges.begin(), sorted_edges.end(), e);
  if (it == sorted_edges.end() || *it != e) return static_cast<std::size_t>(-1);
  return static_cast<std::size_t>(it - sorted_edges.begin());
}

Simplex2Complex Simplex2Complex::validate(std::size_t vertex_count,
                                          std::vector<Triangle> triangles,
                                          std::vector<Edge> extra_edges) {
  for (auto& t : triangles) {
    for (Vertex v : t) {
      if (v >= vertex_count)
        throw Error(ErrorCode::IndexOutOfRange,
                    "triangle " + show(t) + " uses a vertex >= " +
                        std::to_string(vertex_count));
    }
    std::sort(t.begin(), t.end());
    if (t[0] == t[1] || t[1] == t[2])
      throw Error(ErrorCode::DegenerateSimplex,
                  "triangle " + show(t) + " repeats a vertex");
  }
  for (auto& e : extra_edges) {
    for (Vertex v : e) {
      if (v >= vertex_count)
        throw Error(ErrorCode::IndexOutOfRange,
                    "edge " + show(e) + " uses a vertex >= " +
                        std::to_string(vertex_count));
    }
    if (e[0] == e[1])
      throw Error(ErrorCode::DegenerateSimplex,
                  "edge " + show(e) + " repeats a vertex");
    if (e[1] < e[0]) std::swap(e[0], e[1]);
  }
  std::sort(triangles.begin(), triangles.end());
  if (auto it = std::adjacent_find(triangles.begin(), triangles.end());
      it != triangles.end())
    throw Error(ErrorCode::DuplicateSimplex,
                "triangle " + show(*it) + " listed twice");
  std::sort(extra_edges.begin(), extra_edges.end());
  if (auto it = std::adjacent_find(extra_edges.begin(), extra_edges.end());
      it != extra_edges.end())
    throw Error(ErrorCode::DuplicateSimplex,
                "edge " + show(*it) + " listed twice");

  std::vector<Edge> face_edges;
  face_edges.reserve(3 * triangles.size());
  for (const auto& t : triangles)
    for (const auto& e : triangle_edges(t)) face_edges.push_back(e);
  std::sort(face_edges.begin(), face_edges.end());
  for (const auto& e : extra_edges) {
    if (std::binary_search(face_edges.begin(), face_edges.end(), e))
      throw Error(ErrorCode::DuplicateSimplex,
                  "extra edge " + show(e) + " is already a triangle edge");
  }

  Simplex2Complex x;
  x.vertex_count_ = vertex_count;
  x.triangles_ = std::move(triangles);
  x.extra_edges_ = std::move(extra_edges);
  return x;
}

std::vector<Edge> Simplex2Complex::edges() const {
  std::vector<Edge> out;
  out.reserve(3 * triangles_.size() + extra_edges_.size());
  for (const auto& t : triangles_)
    for (const auto& e : triangle_edges(t)) out.push_back(e);
  out.insert(out.end(), extra_edges_.begin(), extra_edges_.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool Simplex2Complex::has_triangle(const Triangle& t) const {
  return std::binary_search(triangles_.begin(), triangles_.end(), t);
}

bool Simplex2Complex::has_edge(Vertex a, Vertex b) const {
  if (a == b) return false;
  const Edge e = make_edge(a, b);
  if (std::binary_search(extra_edges_.begin(), extra_edges_.end(), e))
    return true;
  return std::any_of(triangles_.begin(), triangles_.end(), [&](const auto& t) {
    const auto es = triangle_edges(t);
    return std::find(es.begin(), es.end(), e) != es.end();
  });
}

std::size_t component_count(const Simplex2Complex& x) {
  Classes cls(x.vertex_count());
  for (const auto& e : x.edges()) cls.merge(e[0], e[1]);
  std::size_t count = 0;
  for (std::size_t v = 0; v < x.vertex_count(); ++v)
    if (cls.find(v) == v) ++count;
  return count;
}

ComplexStats stats(const Simplex2Complex& x) {
  ComplexStats st;
  const auto edges = x.edges();
  st.s0 = x.vertex_count();
  st.s1 = edges.size();
  st.s2 = x.triangles().size();
  st.euler = static_cast<std::int64_t>(st.s0) - static_cast<std::int64_t>(st.s1) +
             static_cast<std::int64_t>(st.s2);
  st.edge_face_degrees.assign(edges.size(), 0);
  st.vertex_face_degrees.assign(st.s0, 0);
  for (const auto& t : x.triangles()) {
    for (Vertex v : t) ++st.vertex_face_degrees[v];
    for (const auto& e : triangle_edges(t)) ++st.edge_face_degrees[edge_index(edges, e)];
  }
  st.connected = component_count(x) == 1;
  return st;
}

MinimalityReport is_minimal_candidate(const Simplex2Complex& x) {
  const auto st = stats(x);
  const auto edges = x.edges();
  MinimalityReport rep;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (st.edge_face_degrees[i] < 2) rep.edges_in_fewer_than_two.push_back(edges[i]);
  for (Vertex v = 0; v < st.s0; ++v)
    if (st.vertex_face_degrees[v] < 4) rep.vertices_in_fewer_than_four.push_back(v);
  rep.minimal_candidate =
      rep.edges_in_fewer_than_two.empty() && rep.vertices_in_fewer_than_four.empty();
  return rep;
}

Subdivision barycentric_subdivide(const Simplex2Complex& x) {
  const auto edges = x.edges();
  const auto n0 = static_cast<Vertex>(x.vertex_count());
  const auto n1 = static_cast<Vertex>(edges.size());
  const auto n2 = static_cast<Vertex>(x.triangles().size());
  auto edge_vertex = [&](const Edge& e) {
    return n0 + static_cast<Vertex>(edge_index(edges, e));
  };

  std::vector<Triangle> tris;
  tris.reserve(6 * n2);
  for (Vertex f = 0; f < n2; ++f) {
    const auto& t = x.triangles()[f];
    const Vertex red = n0 + n1 + f;
    for (const auto& e : triangle_edges(t)) {
      const Vertex green = edge_vertex(e);
      tris.push_back(make_triangle(e[0], green, red));
      tris.push_back(make_triangle(e[1], green, red));
    }
  }
  std::vector<Edge> extra;
  for (const auto& e : x.extra_edges()) {
    const Vertex green = edge_vertex(e);
    extra.push_back(make_edge(e[0], green));
    extra.push_back(make_edge(e[1], green));
  }

  Subdivision sd;
  sd.complex = Simplex2Complex::validate(n0 + n1 + n2, std::move(tris), std::move(extra));
  sd.colors.assign(n0, Color::Black);
  sd.colors.insert(sd.colors.end(), n1, Color::Green);
  sd.colors.insert(sd.colors.end(), n2, Color::Red);
  return sd;
}

Quotient identify(const Simplex2Complex& x,
                  const std::vector<std::vector<Vertex>>& classes) {
  Classes cls(x.vertex_count());
  for (const auto& c : classes) {
    for (Vertex v : c)
      if (v >= x.vertex_count())
        throw Error(ErrorCode::IndexOutOfRange,
                    "identify: vertex " + std::to_string(v) + " out of range");
    for (std::size_t i = 1; i < c.size(); ++i) cls.merge(c[0], c[i]);
  }
  Quotient q;
  q.vertex_map.assign(x.vertex_count(), 0);
  Vertex next = 0;
  std::vector<Vertex> rep_label(x.vertex_count(), static_cast<Vertex>(-1));
  for (std::size_t v = 0; v < x.vertex_count(); ++v) {
    const auto r = cls.find(v);
    if (rep_label[r] == static_cast<Vertex>(-1)) rep_label[r] = next++;
    q.vertex_map[v] = rep_label[r];
  }

  std::vector<Triangle> tris;
  tris.reserve(x.triangles().size());
  for (const auto& t : x.triangles()) {
    const Triangle image =
        make_triangle(q.vertex_map[t[0]], q.vertex_map[t[1]], q.vertex_map[t[2]]);
    if (image[0] == image[1] || image[1] == image[2])
      throw Error(ErrorCode::QuotientNotSimplicial,
                  "identify: triangle " + show(t) + " degenerates");
    tris.push_back(image);
  }
  std::sort(tris.begin(), tris.end());
  if (std::adjacent_find(tris.begin(), tris.end()) != tris.end())
    throw Error(ErrorCode::QuotientNotSimplicial, "identify: two triangles collide");

  std::set<Edge> face_edges;
  for (const auto& t : tris)
    for (const auto& e : triangle_edges(t)) face_edges.insert(e);
  std::set<Edge> extra;
  for (const auto& e : x.extra_edges()) {
    const Vertex a = q.vertex_map[e[0]];
    const Vertex b = q.vertex_map[e[1]];
    if (a == b)
      throw Error(ErrorCode::QuotientNotSimplicial,
                  "identify: edge " + show(e) + " degenerates");
    const Edge img = make_edge(a, b);
    if (!face_edges.contains(img)) extra.insert(img);
  }
  q.complex = Simplex2Complex::validate(next, std::move(tris),
                                        std::vector<Edge>(extra.begin(), extra.end()));
  return q;
}

Simplex2Complex disjoint_union(const Simplex2Complex& a, const Simplex2Complex& b) {
  const auto off = static_cast<Vertex>(a.vertex_count());
  std::vector<Triangle> tris = a.triangles();
  for (auto t : b.triangles()) {
    for (auto& v : t) v += off;
    tris.push_back(t);
  }
  std::vector<Edge> extra = a.extra_edges();
  for (auto e : b.extra_edges()) extra.push_back(Edge{e[0] + off, e[1] + off});
  return Simplex2Complex::validate(a.vertex_count() + b.vertex_count(), std::move(tris),
                                   std::move(extra));
}

Simplex2Complex relabel(const Simplex2Complex& x, std::span<const Vertex> perm) {
  std::vector<Triangle> tris;
  tris.reserve(x.triangles().size());
  for (const auto& t : x.triangles())
    tris.push_back(make_triangle(perm[t[0]], perm[t[1]], perm[t[2]]));
  std::vector<Edge> extra;
  for (const auto& e : x.extra_edges()) extra.push_back(make_edge(perm[e[0]], perm[e[1]]));
  return Simplex2Complex::validate(x.vertex_count(), std::move(tris), std::move(extra));
}

Attachment attach(const Simplex2Complex& base, const Simplex2Complex& piece,
                  const std::vector<LoopGluing>& gluings) {
  constexpr Vertex kUnset = static_cast<Vertex>(-1);
  std::vector<Vertex> map(piece.vertex_count(), kUnset);
  std::set<Edge> glued_piece_edges;
  const auto base_edges = base.edges();
  const auto piece_edges = piece.edges();

  for (const auto& g : gluings) {
    if (g.piece_loop.size() != g.base_loop.size() || g.piece_loop.empty())
      throw Error(ErrorCode::QuotientNotSimplicial, "attach: loop lengths differ");
    const std::size_t len = g.piece_loop.size();
    for (std::size_t i = 0; i < len; ++i) {
      const Vertex p = g.piece_loop[i];
      const Vertex b = g.base_loop[i];
      if (p >= piece.vertex_count() || b >= base.vertex_count())
        throw Error(ErrorCode::IndexOutOfRange, "attach: loop vertex out of range");
      if (map[p] != kUnset && map[p] != b)
        throw Error(ErrorCode::QuotientNotSimplicial,
                    "attach: piece vertex " + std::to_string(p) +
                        " glued to two base vertices");
      map[p] = b;
    }
    if (len == 1) continue;
    for (std::size_t i = 0; i < len; ++i) {
      const Vertex p0 = g.piece_loop[i], p1 = g.piece_loop[(i + 1) % len];
      const Vertex b0 = g.base_loop[i], b1 = g.base_loop[(i + 1) % len];
      if (edge_index(piece_edges, make_edge(p0, p1)) == static_cast<std::size_t>(-1))
        throw Error(ErrorCode::QuotientNotSimplicial, "attach: piece loop is not an edge path");
      if (edge_index(base_edges, make_edge(b0, b1)) == static_cast<std::size_t>(-1))
        throw Error(ErrorCode::QuotientNotSimplicial, "attach: base loop is not an edge path");
      glued_piece_edges.insert(make_edge(p0, p1));
    }
  }

  Vertex next = static_cast<Vertex>(base.vertex_count());
  for (auto& v : map)
    if (v == kUnset) v = next++;

  std::set<Edge> known(base_edges.begin(), base_edges.end());
  std::set<Edge> glued_images;
  for (const auto& e : glued_piece_edges) glued_images.insert(make_edge(map[e[0]], map[e[1]]));
  for (const auto& e : piece_edges) {
    const Vertex a = map[e[0]], b = map[e[1]];
    if (a == b)
      throw Error(ErrorCode::QuotientNotSimplicial,
                  "attach: piece edge " + show(e) + " degenerates");
    const Edge img = make_edge(a, b);
    if (glued_piece_edges.contains(e)) continue;
    if (known.contains(img) || glued_images.contains(img))
      throw Error(ErrorCode::QuotientNotSimplicial,
                  "attach: piece edge " + show(e) + " collides with an existing edge");
    known.insert(img);
  }

  std::vector<Triangle> tris = base.triangles();
  for (const auto& t : piece.triangles()) {
    const Triangle img = make_triangle(map[t[0]], map[t[1]], map[t[2]]);
    if (img[0] == img[1] || img[1] == img[2])
      throw Error(ErrorCode::QuotientNotSimplicial,
                  "attach: piece triangle " + show(t) + " degenerates");
    tris.push_back(img);
  }
  std::sort(tris.begin(), tris.end());
  if (std::adjacent_find(tris.begin(), tris.end()) != tris.end())
    throw Error(ErrorCode::QuotientNotSimplicial, "attach: two triangles collide");

  std::set<Edge> face_edges;
  for (const auto& t : tris)
    for (const auto& e : triangle_edges(t)) face_edges.insert(e);
  std::set<Edge> extra;
  for (const auto& e : base.extra_edges())
    if (!face_edges.contains(e)) extra.insert(e);
  for (const auto& e : piece.extra_edges()) {
    const Edge img = make_edge(map[e[0]], map[e[1]]);
    if (!face_edges.contains(img)) extra.insert(img);
  }

  Attachment out;
  out.complex = Simplex2Complex::validate(next, std::move(tris),
                                          std::vector<Edge>(extra.begin(), extra.end()));
  out.piece_map = std::move(map);
  return out;
}

void MarkedComplex::check_marks() const {
  for (const auto& [name, v] : marked_vertices)
    if (v >= complex.vertex_count())
      throw Error(ErrorCode::InvalidMark, "mark '" + name + "' out of range");
  for (const auto& [name, loop] : marked_loops) {
    if (loop.size() < 2)
      throw Error(ErrorCode::InvalidMark, "loop '" + name + "' is too short");
    for (std::size_t i = 0; i < loop.size(); ++i) {
      const Vertex a = loop[i], b = loop[(i + 1) % loop.size()];
      if (a >= complex.vertex_count() || b >= complex.vertex_count() ||
          !complex.has_edge(a, b))
        throw Error(ErrorCode::InvalidMark,
                    "loop '" + name + "' is not a closed edge path");
    }
  }
}

Vertex MarkedComplex::vertex(const std::string& name) const {
  auto it = marked_vertices.find(name);
  if (it == marked_vertices.end())
    throw Error(ErrorCode::InvalidMark, "no marked vertex '" + name + "'");
  return it->second;
}

const std::vector<Vertex>& MarkedComplex::loop(const std::string& name) const {
  auto it = marked_loops.find(name);
  if (it == marked_loops.end())
    throw Error(ErrorCode::InvalidMark, "no marked loop '" + name + "'");
  return it->second;
}

MarkedComplex unmarked(Simplex2Complex x) { return MarkedComplex{std::move(x), {}, {}}; }

MarkedComplex remap_marks(const MarkedComplex& m, Simplex2Complex image,
                          std::span<const Vertex> vertex_map) {
  MarkedComplex out;
  out.complex = std::move(image);
  for (const auto& [name, v] : m.marked_vertices) out.marked_vertices[name] = vertex_map[v];
  for (const auto& [name, loop] : m.marked_loops) {
    std::vector<Vertex> l;
    l.reserve(loop.size());
    for (Vertex v : loop) l.push_back(vertex_map[v]);
    out.marked_loops[name] = std::move(l);
  }
  return out;
}

MarkedComplex wedge(const MarkedComplex& a, const MarkedComplex& b,
                    const std::string& at_a, const std::string& at_b) {
  const Vertex pa = a.vertex(at_a);
  const Vertex pb = b.vertex(at_b);
  auto att = attach(a.complex, b.complex, {LoopGluing{{pb}, {pa}}});
  MarkedComplex out = a;
  out.complex = std::move(att.complex);
  for (const auto& [name, v] : b.marked_vertices) {
    const Vertex img = att.piece_map[v];
    auto [it, inserted] = out.marked_vertices.emplace(name, img);
    if (!inserted && it->second != img)
      throw Error(ErrorCode::InvalidMark, "wedge: vertex mark '" + name + "' used twice");
  }
  for (const auto& [name, loop] : b.marked_loops) {
    std::vector<Vertex> l;
    for (Vertex v : loop) l.push_back(att.piece_map[v]);
    if (!out.marked_loops.emplace(name, std::move(l)).second)
      throw Error(ErrorCode::InvalidMark, "wedge: loop mark '" + name + "' used twice");
  }
  return out;
}

Attachment glue_triangle_map(const Simplex2Complex& a, const Triangle& ta,
                             const Simplex2Complex& b, const Triangle& tb) {
  const Triangle sa = make_triangle(ta[0], ta[1], ta[2]);
  const Triangle sb = make_triangle(tb[0], tb[1], tb[2]);
  if (!a.has_triangle(sa))
    throw Error(ErrorCode::NotATriangle, "glue_triangle: " + show(sa) + " not in first complex");
  if (!b.has_triangle(sb))
    throw Error(ErrorCode::NotATriangle, "glue_triangle: " + show(sb) + " not in second complex");

  // Drop the shared triangle from b; its edges survive as faces or extra
  // edges, and the copy in a stays.
  std::vector<Triangle> rest;
  for (const auto& t : b.triangles())
    if (t != sb) rest.push_back(t);
  std::set<Edge> covered;
  for (const auto& t : rest)
    for (const auto& e : triangle_edges(t)) covered.insert(e);
  std::vector<Edge> extra = b.extra_edges();
  for (const auto& e : triangle_edges(sb))
    if (!covered.contains(e)) extra.push_back(e);
  const auto piece = Simplex2Complex::validate(b.vertex_count(), std::move(rest), std::move(extra));
  return attach(a, piece, {LoopGluing{{sb[0], sb[1], sb[2]}, {sa[0], sa[1], sa[2]}}});
}

Simplex2Complex glue_triangle(const Simplex2Complex& a, const Triangle& ta,
                              const Simplex2Complex& b, const Triangle& tb) {
  return glue_triangle_map(a, ta, b, tb).complex;
}

}  // namespace sk
