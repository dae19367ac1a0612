#include "sk/group_spec.hpp"

#include <algorithm>
#include <cctype>

#include "sk/error.hpp"
#include "sk/smith.hpp"

namespace sk {

GroupSpec GroupSpec::trivial() { return {}; }

GroupSpec GroupSpec::free(std::size_t n) {
  GroupSpec g;
  g.kind = Kind::Free;
  g.rank = n;
  return g;
}

GroupSpec GroupSpec::cyclic(const mpz_class& m) {
  GroupSpec g;
  g.kind = Kind::Cyclic;
  g.chain = {m};
  return g;
}

GroupSpec GroupSpec::finite_abelian(std::vector<mpz_class> chain) {
  GroupSpec g;
  g.kind = Kind::FiniteAbelian;
  g.chain = std::move(chain);
  return g;
}

GroupSpec GroupSpec::abelian(std::size_t r, std::vector<mpz_class> chain) {
  GroupSpec g;
  g.kind = Kind::Abelian;
  g.rank = r;
  g.chain = std::move(chain);
  return g;
}

GroupSpec GroupSpec::surface(std::size_t genus) {
  GroupSpec g;
  g.kind = Kind::Surface;
  g.genus = genus;
  return g;
}

GroupSpec GroupSpec::free_product(std::vector<GroupSpec> factors) {
  GroupSpec g;
  g.kind = Kind::FreeProduct;
  g.factors = std::move(factors);
  return g;
}

namespace {

void check_chain(const std::vector<mpz_class>& chain) {
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (chain[i] < 2) throw Error(ErrorCode::UnsupportedSpec, "invariant factors must be >= 2");
    if (i > 0 && chain[i] % chain[i - 1] != 0)
      throw Error(ErrorCode::UnsupportedSpec, "invariant factors must form a divisibility chain");
  }
}

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

mpz_class parse_int(const std::string& s) {
  const std::string t = trim(s);
  if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw Error(ErrorCode::ParseError, "expected a nonnegative integer, got '" + s + "'");
  return mpz_class(t, 10);
}

std::size_t parse_size(const std::string& s) {
  const auto z = parse_int(s);
  if (!z.fits_ulong_p() || z > 1000000) throw Error(ErrorCode::TooLarge, "value too large: " + s);
  return z.get_ui();
}

std::vector<mpz_class> parse_chain(std::string s) {
  s = trim(s);
  if (!s.empty() && s.front() == '(') {
    if (s.back() != ')') throw Error(ErrorCode::ParseError, "unbalanced parenthesis");
    s = s.substr(1, s.size() - 2);
  }
  std::vector<mpz_class> out;
  if (trim(s).empty()) return out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = s.find(',', start);
    out.push_back(parse_int(s.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (depth != 0) throw Error(ErrorCode::ParseError, "unbalanced parenthesis");
  out.push_back(trim(cur));
  return out;
}

std::string join_chain(const std::vector<mpz_class>& c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i > 0) out += ',';
    out += c[i].get_str();
  }
  return out;
}

}  // namespace

void GroupSpec::validate() const {
  switch (kind) {
    case Kind::Trivial:
    case Kind::Free:
      return;
    case Kind::Cyclic:
      if (chain.size() != 1) throw Error(ErrorCode::UnsupportedSpec, "cyclic spec needs one order");
      check_chain(chain);
      return;
    case Kind::FiniteAbelian:
      if (chain.empty()) throw Error(ErrorCode::UnsupportedSpec, "finite abelian spec needs a chain");
      check_chain(chain);
      return;
    case Kind::Abelian:
      check_chain(chain);
      return;
    case Kind::Surface:
      if (genus < 1) throw Error(ErrorCode::UnsupportedSpec, "surface genus must be >= 1");
      return;
    case Kind::FreeProduct:
      if (factors.empty()) throw Error(ErrorCode::UnsupportedSpec, "free product needs factors");
      for (const auto& f : factors) f.validate();
      return;
  }
}

GroupSpec parse_group_spec(const std::string& text) {
  const std::string s = trim(text);
  const auto colon = s.find(':');
  const std::string head = s.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : s.substr(colon + 1);
  GroupSpec g;
  if (head == "trivial" && colon == std::string::npos) {
    g = GroupSpec::trivial();
  } else if (head == "free") {
    g = GroupSpec::free(parse_size(rest));
  } else if (head == "cyclic") {
    g = GroupSpec::cyclic(parse_int(rest));
  } else if (head == "finite_abelian") {
    g = GroupSpec::finite_abelian(parse_chain(rest));
  } else if (head == "abelian") {
    const auto c2 = rest.find(':');
    const std::size_t r = parse_size(rest.substr(0, c2));
    g = GroupSpec::abelian(r, c2 == std::string::npos ? std::vector<mpz_class>{}
                                                      : parse_chain(rest.substr(c2 + 1)));
  } else if (head == "surface") {
    g = GroupSpec::surface(parse_size(rest));
  } else if (head == "freeprod") {
    std::string inner = trim(rest);
    if (inner.size() < 2 || inner.front() != '(' || inner.back() != ')')
      throw Error(ErrorCode::ParseError, "freeprod expects (spec;spec;...)");
    inner = inner.substr(1, inner.size() - 2);
    std::vector<GroupSpec> fs;
    for (const auto& part : split_top(inner, ';')) fs.push_back(parse_group_spec(part));
    g = GroupSpec::free_product(std::move(fs));
  } else {
    throw Error(ErrorCode::ParseError, "unknown group spec '" + s + "'");
  }
  g.validate();
  return g;
}

std::string format_group_spec(const GroupSpec& g) {
  switch (g.kind) {
    case GroupSpec::Kind::Trivial:
      return "trivial";
    case GroupSpec::Kind::Free:
      return "free:" + std::to_string(g.rank);
    case GroupSpec::Kind::Cyclic:
      return "cyclic:" + g.chain.at(0).get_str();
    case GroupSpec::Kind::FiniteAbelian:
      return "finite_abelian:" + join_chain(g.chain);
    case GroupSpec::Kind::Abelian:
      if (g.chain.empty()) return "abelian:" + std::to_string(g.rank);
      return "abelian:" + std::to_string(g.rank) + ":(" + join_chain(g.chain) + ")";
    case GroupSpec::Kind::Surface:
      return "surface:" + std::to_string(g.genus);
    case GroupSpec::Kind::FreeProduct: {
      std::string out = "freeprod:(";
      for (std::size_t i = 0; i < g.factors.size(); ++i) {
        if (i > 0) out += ';';
        out += format_group_spec(g.factors[i]);
      }
      return out + ")";
    }
  }
  return "";
}

AbelianInvariants abelian_invariants(const GroupSpec& g) {
  AbelianInvariants a;
  switch (g.kind) {
    case GroupSpec::Kind::Trivial:
      return a;
    case GroupSpec::Kind::Free:
      a.rank = g.rank;
      return a;
    case GroupSpec::Kind::Cyclic:
    case GroupSpec::Kind::FiniteAbelian:
      a.torsion = g.chain;
      return a;
    case GroupSpec::Kind::Abelian:
      a.rank = g.rank;
      a.torsion = g.chain;
      return a;
    case GroupSpec::Kind::Surface:
      a.rank = 2 * g.genus;
      return a;
    case GroupSpec::Kind::FreeProduct: {
      std::vector<mpz_class> all;
      for (const auto& f : g.factors) {
        const auto fa = abelian_invariants(f);
        a.rank += fa.rank;
        all.insert(all.end(), fa.torsion.begin(), fa.torsion.end());
      }
      for (auto& d : normalize_diagonal(std::move(all)))
        if (d > 1) a.torsion.push_back(d);
      return a;
    }
  }
  return a;
}

bool is_free(const GroupSpec& g) {
  switch (g.kind) {
    case GroupSpec::Kind::Trivial:
    case GroupSpec::Kind::Free:
      return true;
    case GroupSpec::Kind::FreeProduct:
      return std::all_of(g.factors.begin(), g.factors.end(), [](const GroupSpec& f) { return is_free(f); });
    case GroupSpec::Kind::Abelian:
      return g.chain.empty() && g.rank <= 1;
    default:
      return false;
  }
}

bool has_z2_free_factor(const GroupSpec& g) {
  switch (g.kind) {
    case GroupSpec::Kind::Cyclic:
    case GroupSpec::Kind::FiniteAbelian:
      return g.chain.size() == 1 && g.chain[0] == 2;
    case GroupSpec::Kind::Abelian:
      return g.rank == 0 && g.chain.size() == 1 && g.chain[0] == 2;
    case GroupSpec::Kind::FreeProduct:
      return std::any_of(g.factors.begin(), g.factors.end(),
                         [](const GroupSpec& f) { return has_z2_free_factor(f); });
    default:
      return false;
  }
}

std::vector<mpz_class> finite_chain(const GroupSpec& g) {
  switch (g.kind) {
    case GroupSpec::Kind::Cyclic:
    case GroupSpec::Kind::FiniteAbelian:
    case GroupSpec::Kind::Abelian:
      return g.chain;
    default:
      return {};
  }
}

}  // namespace sk
