#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace sk {

using Vertex = std::uint32_t;
using Triangle = std::array<Vertex, 3>;
using Edge = std::array<Vertex, 2>;

/// A finite 2-dimensional simplicial complex.
///
/// Stored as strictly increasing vertex triples plus the edges that are not
/// faces of any triangle. Lower-dimensional faces are derived on demand. Both
/// lists are kept sorted, so structural equality is label equality.
class Simplex2Complex {
 public:
  Simplex2Complex() = default;

  /// Canonicalizes and checks a candidate description. Triples and pairs are
  /// sorted internally and as lists; duplicates are reported, never merged.
  static Simplex2Complex validate(std::size_t vertex_count,
                                  std::vector<Triangle> triangles,
                                  std::vector<Edge> extra_edges = {});

  std::size_t vertex_count() const { return vertex_count_; }
  const std::vector<Triangle>& triangles() const { return triangles_; }
  const std::vector<Edge>& extra_edges() const { return extra_edges_; }

  /// Every edge: triangle edges and extra edges, sorted.
  std::vector<Edge> edges() const;
  bool has_triangle(const Triangle& t) const;
  bool has_edge(Vertex a, Vertex b) const;

  bool operator==(const Simplex2Complex&) const = default;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Triangle> triangles_;
  std::vector<Edge> extra_edges_;
};

Edge make_edge(Vertex a, Vertex b);
Triangle make_triangle(Vertex a, Vertex b, Vertex c);
std::array<Edge, 3> triangle_edges(const Triangle& t);

/// Index of an edge in a sorted edge list, or npos.
std::size_t edge_index(std::span<const Edge> sorted_edges, const Edge& e);

struct ComplexStats {
  std::size_t s0 = 0;
  std::size_t s1 = 0;
  std::size_t s2 = 0;
  std::int64_t euler = 0;
  std::vector<std::size_t> edge_face_degrees;    // aligned with edges()
  std::vector<std::size_t> vertex_face_degrees;  // per vertex
  bool connected = false;
};

ComplexStats stats(const Simplex2Complex& x);

std::size_t component_count(const Simplex2Complex& x);

struct MinimalityReport {
  bool minimal_candidate = false;
  std::vector<Edge> edges_in_fewer_than_two;
  std::vector<Vertex> vertices_in_fewer_than_four;
};

/// Checks the necessary conditions satisfied by a minimal complex of a
/// group with zero free index: every edge in at least two triangles and
/// every vertex in at least four.
MinimalityReport is_minimal_candidate(const Simplex2Complex& x);

enum class Color { Black, Green, Red };

struct Subdivision {
  Simplex2Complex complex;
  std::vector<Color> colors;  // vertex colour in the subdivision
};

/// Barycentric subdivision. New vertex numbering: original vertices first,
/// then one barycenter per edge (in edges() order), then one per triangle.
Subdivision barycentric_subdivide(const Simplex2Complex& x);

struct Quotient {
  Simplex2Complex complex;
  std::vector<Vertex> vertex_map;  // old vertex -> new vertex
};

/// Merges each class of vertices into a single vertex. Classes may overlap;
/// overlapping classes are merged transitively. Fails with
/// QuotientNotSimplicial if a triangle or an extra edge degenerates or if two
/// triangles collide.
Quotient identify(const Simplex2Complex& x,
                  const std::vector<std::vector<Vertex>>& classes);

/// Vertices of b are shifted by a.vertex_count().
Simplex2Complex disjoint_union(const Simplex2Complex& a,
                               const Simplex2Complex& b);

/// Applies a vertex bijection (perm[old] = new).
Simplex2Complex relabel(const Simplex2Complex& x, std::span<const Vertex> perm);

/// A closed vertex sequence of `piece` glued onto a closed vertex sequence
/// of the base, position by position. A length-1 loop glues a single point.
struct LoopGluing {
  std::vector<Vertex> piece_loop;
  std::vector<Vertex> base_loop;
};

struct Attachment {
  Simplex2Complex complex;
  std::vector<Vertex> piece_map;  // piece vertex -> result vertex
};

/// Glues `piece` to `base` along the given loops. Base vertices keep their
/// labels; unglued piece vertices are appended in increasing order. The only
/// edges allowed to coincide after gluing are the loop edges themselves; any
/// other edge or triangle collision, or a degenerate image, raises
/// QuotientNotSimplicial.
Attachment attach(const Simplex2Complex& base, const Simplex2Complex& piece,
                  const std::vector<LoopGluing>& gluings);

/// A complex with named vertices and named closed edge paths.
struct MarkedComplex {
  Simplex2Complex complex;
  std::map<std::string, Vertex> marked_vertices;
  std::map<std::string, std::vector<Vertex>> marked_loops;

  /// Throws InvalidMark unless every mark is in range and every loop is a
  /// closed edge path of length at least two.
  void check_marks() const;

  Vertex vertex(const std::string& name) const;
  const std::vector<Vertex>& loop(const std::string& name) const;
};

/// Unmarked complex wrapper.
MarkedComplex unmarked(Simplex2Complex x);

/// Re-indexes marks through a vertex map.
MarkedComplex remap_marks(const MarkedComplex& m, Simplex2Complex image,
                          std::span<const Vertex> vertex_map);

/// One-point union: the disjoint union with base vertices identified. Marks
/// of both operands are kept; a name used by both raises InvalidMark unless
/// it names the shared base vertex.
MarkedComplex wedge(const MarkedComplex& a, const MarkedComplex& b,
                    const std::string& at_a, const std::string& at_b);

/// Identifies triangle ta of a with triangle tb of b (vertex i of the sorted
/// triple ta with vertex i of tb); the shared triangle appears once.
Simplex2Complex glue_triangle(const Simplex2Complex& a, const Triangle& ta,
                              const Simplex2Complex& b, const Triangle& tb);

// Same gluing, also reporting where the vertices of b went.
Attachment glue_triangle_map(const Simplex2Complex& a, const Triangle& ta,
                             const Simplex2Complex& b, const Triangle& tb);

}  // namespace sk
