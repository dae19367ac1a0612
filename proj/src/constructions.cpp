#include "sk/constructions.hpp"

#include <algorithm>

#include "sk/error.hpp"
#include "sk/presentation.hpp"

namespace sk {

namespace {

// Adds the marks of b (seen through piece_map) to out, renaming clashes.
void merge_marks(MarkedComplex& out, const MarkedComplex& b, const std::vector<Vertex>& piece_map) {
  auto fresh = [](const auto& taken, std::string name) {
    while (taken.contains(name)) name += "_2";
    return name;
  };
  for (const auto& [name, v] : b.marked_vertices) {
    const Vertex img = piece_map[v];
    auto it = out.marked_vertices.find(name);
    if (it != out.marked_vertices.end() && it->second == img) continue;
    out.marked_vertices[fresh(out.marked_vertices, name)] = img;
  }
  for (const auto& [name, loop] : b.marked_loops) {
    std::vector<Vertex> l;
    for (Vertex v : loop) l.push_back(piece_map[v]);
    out.marked_loops[fresh(out.marked_loops, name)] = std::move(l);
  }
}

Vertex base_point(const MarkedComplex& m) {
  auto it = m.marked_vertices.find("P");
  return it == m.marked_vertices.end() ? 0 : it->second;
}

// Attaches a piece and carries its marks along.
MarkedComplex attach_marked(const MarkedComplex& base, const MarkedComplex& piece,
                            const std::vector<LoopGluing>& gluings) {
  auto att = attach(base.complex, piece.complex, gluings);
  MarkedComplex out = base;
  out.complex = std::move(att.complex);
  merge_marks(out, piece, att.piece_map);
  return out;
}

const std::vector<Triangle> kRp2Triangles = {
    {0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
    {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5},
};

}  // namespace

Simplex2Complex ring_disk(std::size_t rim, const std::vector<std::size_t>& starts) {
  const std::size_t k = starts.size();
  if (rim < 3 || k == 0 || k > rim)
    throw Error(ErrorCode::DomainError, "ring_disk: need rim >= 3 and 1..rim arcs");
  for (std::size_t i = 0; i < k; ++i)
    if (starts[i] >= rim || (i > 0 && starts[i] <= starts[i - 1]))
      throw Error(ErrorCode::DomainError, "ring_disk: arc starts must increase within the rim");
  auto c = [&](std::size_t i) { return static_cast<Vertex>(rim + i % k); };
  auto b = [&](std::size_t j) { return static_cast<Vertex>(j % rim); };

  std::vector<Triangle> tris;
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t from = starts[i];
    const std::size_t to = k == 1 ? from + rim : (i + 1 < k ? starts[i + 1] : starts[0] + rim);
    for (std::size_t j = from; j < to; ++j) tris.push_back(make_triangle(c(i), b(j), b(j + 1)));
  }
  if (k >= 2)
    for (std::size_t i = 0; i < k; ++i) tris.push_back(make_triangle(c(i), c(i + 1), b(starts[(i + 1) % k])));
  for (std::size_t j = 1; j + 1 < k; ++j) tris.push_back(make_triangle(c(0), c(j), c(j + 1)));
  return Simplex2Complex::validate(rim + k, std::move(tris));
}

MarkedComplex minimal_rp2() {
  MarkedComplex m;
  m.complex = Simplex2Complex::validate(6, kRp2Triangles);
  m.marked_vertices["P"] = 0;
  m.marked_loops["alpha"] = {0, 3, 5};
  return m;
}

MarkedComplex minimal_torus() {
  std::vector<Triangle> tris;
  for (Vertex i = 0; i < 7; ++i) {
    tris.push_back(make_triangle(i, (i + 1) % 7, (i + 3) % 7));
    tris.push_back(make_triangle(i, (i + 2) % 7, (i + 3) % 7));
  }
  MarkedComplex m;
  m.complex = Simplex2Complex::validate(7, std::move(tris));
  m.marked_vertices["P"] = 0;
  m.marked_loops["alpha1"] = {0, 3, 6};
  m.marked_loops["alpha2"] = {0, 1, 2};
  return m;
}

MarkedComplex moebius_strip() {
  std::vector<Triangle> tris(kRp2Triangles.begin() + 1, kRp2Triangles.end());
  MarkedComplex m;
  m.complex = Simplex2Complex::validate(6, std::move(tris));
  m.marked_vertices["P"] = 0;
  m.marked_loops["gamma"] = {0, 3, 5};
  m.marked_loops["boundary"] = {0, 2, 1};
  return m;
}

MarkedComplex moebius_telescope(std::size_t n) {
  if (n < 1) throw Error(ErrorCode::DomainError, "telescope height must be >= 1");
  const auto strip = moebius_strip();
  MarkedComplex t;
  t.complex = strip.complex;
  t.marked_vertices["P"] = 0;
  t.marked_loops["gamma0"] = strip.loop("gamma");
  t.marked_loops["boundary"] = strip.loop("boundary");
  for (std::size_t k = 1; k < n; ++k) {
    const auto rim = t.loop("boundary");
    auto att = attach(t.complex, strip.complex, {LoopGluing{strip.loop("gamma"), rim}});
    t.complex = std::move(att.complex);
    t.marked_loops["gamma" + std::to_string(k)] = rim;
    std::vector<Vertex> bd;
    for (Vertex v : strip.loop("boundary")) bd.push_back(att.piece_map[v]);
    t.marked_loops["boundary"] = std::move(bd);
  }
  return t;
}

CyclicTarget cyclic_target(const mpz_class& m) {
  if (m < 2) throw Error(ErrorCode::DomainError, "cyclic order must be >= 2");
  CyclicTarget c;
  c.m = m;
  c.n = mpz_sizeinbase(m.get_mpz_t(), 2) - 1;
  for (std::size_t e = 0; e <= c.n; ++e)
    if (mpz_tstbit(m.get_mpz_t(), e)) c.exponents.push_back(e);
  return c;
}

MarkedComplex complex_for_cyclic(const mpz_class& m) {
  const auto target = cyclic_target(m);
  if (target.n > 100000) throw Error(ErrorCode::TooLarge, "cyclic order too large to build");
  auto t = moebius_telescope(target.n);
  const Vertex p = t.vertex("P");

  // Every loop is (P, x, y) with x, y private to it.
  std::vector<Vertex> xi;
  for (std::size_t i = 0; i + 1 < target.exponents.size(); ++i) {
    const auto& g = t.loop("gamma" + std::to_string(target.exponents[i]));
    xi.insert(xi.end(), g.begin(), g.end());
  }
  const auto& bd = t.loop("boundary");
  xi.insert(xi.end(), bd.begin(), bd.end());

  const std::size_t s = target.exponents.size();
  std::vector<std::size_t> starts;
  for (std::size_t i = 0; i < s; ++i) starts.push_back(3 * i + 1);
  const auto disk = ring_disk(xi.size(), starts);
  std::vector<Vertex> rim(xi.size());
  for (std::size_t i = 0; i < rim.size(); ++i) rim[i] = static_cast<Vertex>(i);

  MarkedComplex x;
  x.complex = attach(t.complex, disk, {LoopGluing{rim, xi}}).complex;
  x.marked_vertices["P"] = p;
  x.marked_loops["alpha"] = t.loop("gamma0");
  x.marked_loops["xi"] = std::move(xi);
  return x;
}

MarkedComplex free_group_complex(std::size_t n) {
  return presentation_to_complex(Presentation::make(n, {}));
}

MarkedComplex complex_for_abelian(std::size_t rank, const std::vector<mpz_class>& chain) {
  GroupSpec::abelian(rank, chain).validate();
  MarkedComplex x;
  x.complex = Simplex2Complex::validate(1, {});
  x.marked_vertices["P"] = 0;
  std::vector<std::vector<Vertex>> alphas;
  auto add = [&](const MarkedComplex& piece, const std::vector<Vertex>& loop) {
    auto att = attach(x.complex, piece.complex, {LoopGluing{{piece.vertex("P")}, {x.vertex("P")}}});
    x.complex = std::move(att.complex);
    std::vector<Vertex> a;
    for (Vertex v : loop) a.push_back(att.piece_map[v]);
    alphas.push_back(std::move(a));
  };
  const auto circle = free_group_complex(1);
  for (std::size_t i = 0; i < rank; ++i) add(circle, circle.loop("a1"));
  for (const auto& n : chain) {
    const auto c = complex_for_cyclic(n);
    add(c, c.loop("alpha"));
  }

  const auto torus = minimal_torus();
  for (std::size_t k = 0; k < alphas.size(); ++k)
    for (std::size_t l = k + 1; l < alphas.size(); ++l)
      x.complex = attach(x.complex, torus.complex,
                         {LoopGluing{torus.loop("alpha1"), alphas[k]},
                          LoopGluing{torus.loop("alpha2"), alphas[l]}})
                      .complex;
  for (std::size_t k = 0; k < alphas.size(); ++k)
    x.marked_loops["alpha" + std::to_string(k + 1)] = alphas[k];
  return x;
}

MarkedComplex surface_witness(std::size_t genus) {
  if (genus < 1) throw Error(ErrorCode::DomainError, "genus must be >= 1");
  const auto torus = minimal_torus();
  const Triangle in_hole{0, 1, 3}, out_hole{2, 4, 5};

  std::vector<Triangle> rest;
  for (const auto& t : torus.complex.triangles())
    if (t != in_hole) rest.push_back(t);
  const auto piece = Simplex2Complex::validate(7, std::move(rest));

  MarkedComplex s;
  s.complex = torus.complex;
  s.marked_vertices["P"] = 0;
  std::vector<Vertex> map{0, 1, 2, 3, 4, 5, 6};
  auto record_loops = [&](std::size_t j) {
    for (const char* name : {"alpha1", "alpha2"}) {
      std::vector<Vertex> l;
      for (Vertex v : torus.loop(name)) l.push_back(map[v]);
      s.marked_loops[std::string(name) + "_" + std::to_string(j)] = std::move(l);
    }
  };
  record_loops(1);
  for (std::size_t j = 2; j <= genus; ++j) {
    const Triangle hole = make_triangle(map[out_hole[0]], map[out_hole[1]], map[out_hole[2]]);
    std::vector<Triangle> tris;
    for (const auto& t : s.complex.triangles())
      if (t != hole) tris.push_back(t);
    const auto base = Simplex2Complex::validate(s.complex.vertex_count(), std::move(tris));
    auto att = attach(base, piece,
                      {LoopGluing{{in_hole[0], in_hole[1], in_hole[2]},
                                  {map[out_hole[0]], map[out_hole[1]], map[out_hole[2]]}}});
    s.complex = std::move(att.complex);
    map = std::move(att.piece_map);
    record_loops(j);
  }
  return s;
}

SurfaceBounds surface_bounds(std::size_t genus) {
  if (genus < 1) throw Error(ErrorCode::DomainError, "genus must be >= 1");
  SurfaceBounds b;
  b.kappa_lo = (4 * genus + 2) / 3;
  if (genus == 2) {
    b.kappa_hi = 24;
    return b;
  }
  // ceil((7 + sqrt(1 + 48 l)) / 2), exactly.
  const mpz_class d = 1 + 48 * mpz_class(static_cast<unsigned long>(genus));
  mpz_class q;
  mpz_sqrt(q.get_mpz_t(), d.get_mpz_t());
  mpz_class c;
  if (q * q == d)
    c = (7 + q + 1) / 2;
  else
    c = (7 + q) / 2 + 1;
  b.kappa_hi = 4 * (genus - 1) + 2 * c.get_ui();
  return b;
}

MarkedComplex free_product_complex(const MarkedComplex& a, const MarkedComplex& b) {
  if (a.complex.triangles().empty() || b.complex.triangles().empty()) {
    auto out = attach_marked(a, b, {LoopGluing{{base_point(b)}, {base_point(a)}}});
    return out;
  }
  auto att = glue_triangle_map(a.complex, a.complex.triangles().front(), b.complex,
                               b.complex.triangles().front());
  MarkedComplex out = a;
  out.complex = std::move(att.complex);
  merge_marks(out, b, att.piece_map);
  return out;
}

MarkedComplex build_named(const std::string& name) {
  if (name == "rp2") return minimal_rp2();
  if (name == "torus") return minimal_torus();
  if (name == "moebius") return moebius_strip();
  if (name.rfind("telescope:", 0) == 0) {
    const std::string arg = name.substr(10);
    if (arg.empty() || !std::all_of(arg.begin(), arg.end(), [](char ch) { return ch >= '0' && ch <= '9'; }) ||
        arg.size() > 6)
      throw Error(ErrorCode::ParseError, "telescope expects a positive height");
    return moebius_telescope(std::stoul(arg));
  }
  if (name.rfind("freeprod:", 0) == 0) {
    std::string inner = name.substr(9);
    if (inner.size() < 2 || inner.front() != '(' || inner.back() != ')')
      throw Error(ErrorCode::ParseError, "freeprod expects (name;name;...)");
    inner = inner.substr(1, inner.size() - 2);
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char ch : inner) {
      if (ch == '(') ++depth;
      if (ch == ')') --depth;
      if (ch == ';' && depth == 0) {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    parts.push_back(cur);
    MarkedComplex acc = build_named(parts.front());
    for (std::size_t i = 1; i < parts.size(); ++i) acc = free_product_complex(acc, build_named(parts[i]));
    return acc;
  }

  const GroupSpec g = parse_group_spec(name);
  switch (g.kind) {
    case GroupSpec::Kind::Trivial:
      return free_group_complex(0);
    case GroupSpec::Kind::Free:
      return free_group_complex(g.rank);
    case GroupSpec::Kind::Cyclic:
      return complex_for_cyclic(g.chain[0]);
    case GroupSpec::Kind::FiniteAbelian:
      return complex_for_abelian(0, g.chain);
    case GroupSpec::Kind::Abelian:
      return complex_for_abelian(g.rank, g.chain);
    case GroupSpec::Kind::Surface:
      return surface_witness(g.genus);
    case GroupSpec::Kind::FreeProduct:
      break;
  }
  throw Error(ErrorCode::UnsupportedSpec, "cannot build '" + name + "'");
}

}  // namespace sk
