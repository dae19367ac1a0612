#include "sk/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "sk/constructions.hpp"
#include "sk/error.hpp"
#include "sk/smith.hpp"

namespace sk {

Presentation Presentation::make(std::size_t generator_count, std::vector<Word> relators) {
  Presentation p;
  p.generator_count = generator_count;
  for (auto& r : relators) {
    for (auto x : r) {
      if (x == 0 || static_cast<std::size_t>(std::abs(x)) > generator_count)
        throw Error(ErrorCode::InvalidPresentation,
                    "letter " + std::to_string(x) + " outside the generator range");
    }
    if (!r.empty()) p.relators.push_back(std::move(r));
  }
  return p;
}

PresentationStats presentation_stats(const Presentation& p) {
  PresentationStats s;
  for (const auto& r : p.relators) {
    s.length += r.size();
    if (r.size() > 2) s.t_upper += r.size() - 2;
  }
  s.c_upper = s.length;
  return s;
}

Word free_reduce(const Word& w) {
  Word out;
  for (auto x : w) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t i = 0, j = r.size();
  while (j - i >= 2 && r[i] == -r[j - 1]) {
    ++i;
    --j;
  }
  return Word(r.begin() + static_cast<std::ptrdiff_t>(i), r.begin() + static_cast<std::ptrdiff_t>(j));
}

Word inverse(const Word& w) {
  Word r(w.rbegin(), w.rend());
  for (auto& x : r) x = -x;
  return r;
}

Presentation triangularize(const Presentation& p) {
  std::size_t next = p.generator_count;
  std::vector<Word> rels;
  for (const auto& r : p.relators) {
    if (r.size() <= 3) {
      rels.push_back(r);
      continue;
    }
    // y1 = x1 x2, y_{k+1} = y_k x_{k+2}, and finally y_last x_{L-1} x_L = 1.
    auto prev = r[0];
    for (std::size_t i = 1; i + 2 < r.size(); ++i) {
      const auto y = static_cast<std::int32_t>(++next);
      rels.push_back({prev, r[i], -y});
      prev = y;
    }
    rels.push_back({prev, r[r.size() - 2], r[r.size() - 1]});
  }
  return Presentation::make(next, std::move(rels));
}

MarkedComplex presentation_to_complex(const Presentation& p) {
  for (const auto& r : p.relators) {
    if (free_reduce(r).size() != r.size())
      throw Error(ErrorCode::UnreducedRelator, "relator is not freely reduced");
    if (r.size() == 1)
      throw Error(ErrorCode::UnreducedRelator, "relator of length one; kill its generator first");
    if (cyclic_reduce(r).size() != r.size())
      throw Error(ErrorCode::NotCyclicallyReduced, "relator is not cyclically reduced");
    if (r.size() == 2 && r[0] != r[1])
      throw Error(ErrorCode::BadLengthTwoRelator, "length-two relator must be a square");
  }

  // P = 0; generator i runs P -> 2i+1 -> 2i+2 -> P.
  const auto n = static_cast<Vertex>(p.generator_count);
  std::vector<Edge> circles;
  MarkedComplex base;
  base.marked_vertices["P"] = 0;
  for (Vertex i = 0; i < n; ++i) {
    const Vertex u = 2 * i + 1, v = 2 * i + 2;
    circles.push_back({0, u});
    circles.push_back({u, v});
    circles.push_back({0, v});
    base.marked_loops["a" + std::to_string(i + 1)] = {0, u, v};
  }
  base.complex = Simplex2Complex::validate(1 + 2 * n, {}, std::move(circles));

  for (const auto& r : p.relators) {
    std::vector<Vertex> path;
    for (auto x : r) {
      const auto g = static_cast<Vertex>(std::abs(x) - 1);
      const Vertex u = 2 * g + 1, v = 2 * g + 2;
      path.push_back(0);
      if (x > 0) {
        path.push_back(u);
        path.push_back(v);
      } else {
        path.push_back(v);
        path.push_back(u);
      }
    }
    std::vector<std::size_t> starts;
    for (std::size_t i = 0; i < path.size(); i += 2) starts.push_back(i);
    const auto disk = ring_disk(path.size(), starts);
    std::vector<Vertex> rim(path.size());
    for (std::size_t i = 0; i < rim.size(); ++i) rim[i] = static_cast<Vertex>(i);
    base.complex = attach(base.complex, disk, {LoopGluing{rim, path}}).complex;
  }
  base.check_marks();
  return base;
}

Presentation complex_to_presentation(const Simplex2Complex& x) {
  if (x.vertex_count() == 0) return {};
  if (component_count(x) != 1) throw Error(ErrorCode::Disconnected, "complex is not connected");
  const auto edges = x.edges();
  std::vector<std::vector<Vertex>> adj(x.vertex_count());
  for (const auto& e : edges) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  std::vector<std::uint8_t> seen(x.vertex_count(), 0);
  std::set<Edge> tree;
  std::deque<Vertex> queue{0};
  seen[0] = 1;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : adj[v]) {
      if (seen[w]) continue;
      seen[w] = 1;
      tree.insert(make_edge(v, w));
      queue.push_back(w);
    }
  }

  std::vector<std::int32_t> gen(edges.size(), 0);
  std::int32_t count = 0;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (!tree.contains(edges[i])) gen[i] = ++count;

  std::vector<Word> rels;
  for (const auto& t : x.triangles()) {
    Word w;
    auto push = [&](Vertex a, Vertex b, bool forward) {
      const auto g = gen[edge_index(edges, {a, b})];
      if (g != 0) w.push_back(forward ? g : -g);
    };
    push(t[0], t[1], true);
    push(t[1], t[2], true);
    push(t[0], t[2], false);
    rels.push_back(std::move(w));
  }
  return Presentation::make(static_cast<std::size_t>(count), std::move(rels));
}

namespace {

Word canonical_cyclic(const Word& w) {
  Word best = w;
  for (const Word& base : {w, inverse(w)}) {
    Word rot = base;
    for (std::size_t i = 0; i < base.size(); ++i) {
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      if (rot < best) best = rot;
    }
  }
  return best;
}

void substitute(std::vector<Word>& rels, std::int32_t g, const Word& image) {
  for (auto& r : rels) {
    Word out;
    for (auto x : r) {
      if (x == g) {
        out.insert(out.end(), image.begin(), image.end());
      } else if (x == -g) {
        const Word inv = inverse(image);
        out.insert(out.end(), inv.begin(), inv.end());
      } else {
        out.push_back(x);
      }
    }
    r = std::move(out);
  }
}

}  // namespace

Presentation tietze_simplify(const Presentation& p) {
  std::vector<Word> rels = p.relators;
  std::vector<std::uint8_t> alive(p.generator_count + 1, 1);

  for (bool changed = true; changed;) {
    changed = false;
    std::vector<Word> next;
    for (auto& r : rels) {
      Word c = cyclic_reduce(r);
      if (c.size() != r.size()) changed = true;
      if (c.empty()) continue;
      next.push_back(std::move(c));
    }
    rels = std::move(next);

    auto unit = std::find_if(rels.begin(), rels.end(), [](const Word& r) { return r.size() == 1; });
    if (unit != rels.end()) {
      const std::int32_t g = std::abs((*unit)[0]);
      substitute(rels, g, {});
      alive[static_cast<std::size_t>(g)] = 0;
      changed = true;
      continue;
    }

    std::set<Word> keys;
    std::vector<Word> uniq;
    for (auto& r : rels) {
      if (keys.insert(canonical_cyclic(r)).second)
        uniq.push_back(std::move(r));
      else
        changed = true;
    }
    rels = std::move(uniq);

    for (std::size_t i = 0; i < rels.size(); ++i) {
      const Word r = rels[i];
      if (r.size() != 2 || std::abs(r[0]) == std::abs(r[1])) continue;
      // x y = 1 gives x = y^-1.
      const std::int32_t g = std::abs(r[0]);
      const Word image = r[0] > 0 ? Word{-r[1]} : Word{r[1]};
      rels.erase(rels.begin() + static_cast<std::ptrdiff_t>(i));
      substitute(rels, g, image);
      alive[static_cast<std::size_t>(g)] = 0;
      changed = true;
      break;
    }
  }

  std::vector<std::int32_t> index(p.generator_count + 1, 0);
  std::int32_t count = 0;
  for (std::size_t g = 1; g <= p.generator_count; ++g)
    if (alive[g]) index[g] = ++count;
  for (auto& r : rels)
    for (auto& x : r) x = x > 0 ? index[static_cast<std::size_t>(x)] : -index[static_cast<std::size_t>(-x)];
  return Presentation::make(static_cast<std::size_t>(count), std::move(rels));
}

AbelianInvariants abelianization(const Presentation& p) {
  IntMatrix m(p.relators.size(), p.generator_count);
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    for (auto x : p.relators[i]) m(i, static_cast<std::size_t>(std::abs(x)) - 1) += x > 0 ? 1 : -1;
  const auto snf = smith_normal_form(m);
  AbelianInvariants a;
  a.rank = p.generator_count - snf.rank;
  for (const auto& f : snf.invariant_factors)
    if (f > 1) a.torsion.push_back(f);
  return a;
}

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
  std::string body = trim(text);
  if (body.size() < 2 || body.front() != '<' || body.back() != '>')
    throw Error(ErrorCode::ParseError, "presentation must be written <generators | relators>");
  body = body.substr(1, body.size() - 2);
  const auto bar = body.find('|');
  const std::string gens = trim(body.substr(0, bar));
  const std::string rels = bar == std::string::npos ? "" : trim(body.substr(bar + 1));

  std::map<std::string, std::int32_t> index;
  std::int32_t n = 0;
  if (!gens.empty()) {
    for (const auto& g : split(gens, ',')) {
      if (!is_identifier(g)) throw Error(ErrorCode::ParseError, "bad generator name '" + g + "'");
      if (!index.emplace(g, ++n).second)
        throw Error(ErrorCode::ParseError, "generator '" + g + "' listed twice");
    }
  }

  std::vector<Word> words;
  if (!rels.empty()) {
    for (const auto& r : split(rels, ',')) {
      if (r.empty()) continue;
      Word w;
      std::istringstream ts(r);
      std::string tok;
      while (ts >> tok) {
        std::string name = tok;
        long exp = 1;
        if (const auto caret = tok.find('^'); caret != std::string::npos) {
          name = tok.substr(0, caret);
          const std::string e = tok.substr(caret + 1);
          std::size_t used = 0;
          try {
            exp = std::stol(e, &used);
          } catch (const std::exception&) {
            used = 0;
          }
          if (used == 0 || used != e.size())
            throw Error(ErrorCode::ParseError, "bad exponent in '" + tok + "'");
        }
        auto it = index.find(name);
        if (it == index.end()) throw Error(ErrorCode::ParseError, "unknown generator '" + name + "'");
        if (exp > 100000 || exp < -100000) throw Error(ErrorCode::TooLarge, "exponent too large");
        for (long k = 0; k < std::abs(exp); ++k) w.push_back(exp > 0 ? it->second : -it->second);
      }
      words.push_back(std::move(w));
    }
  }
  return Presentation::make(static_cast<std::size_t>(n), std::move(words));
}

std::string format_presentation(const Presentation& p) {
  std::string out = "<";
  for (std::size_t i = 1; i <= p.generator_count; ++i) {
    if (i > 1) out += ", ";
    out += "a" + std::to_string(i);
  }
  out += " |";
  for (std::size_t k = 0; k < p.relators.size(); ++k) {
    out += k == 0 ? " " : ", ";
    const auto& r = p.relators[k];
    for (std::size_t i = 0; i < r.size();) {
      std::size_t j = i;
      while (j < r.size() && r[j] == r[i]) ++j;
      const long e = static_cast<long>(j - i) * (r[i] > 0 ? 1 : -1);
      if (i > 0) out += ' ';
      out += "a" + std::to_string(std::abs(r[i]));
      if (e != 1) out += "^" + std::to_string(e);
      i = j;
    }
  }
  out += ">";
  return out;
}

}  // namespace sk
