#include "sk/canonical.hpp"

#include <algorithm>

namespace sk {

namespace {

std::size_t choose2(std::size_t n) { return n * (n - 1) / 2; }
std::size_t choose3(std::size_t n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }

class Search {
 public:
  explicit Search(const Simplex2Complex& x) : n_(x.vertex_count()) {
    tri_.assign(n_ * n_ * n_, 0);
    for (const auto& t : x.triangles()) {
      const Vertex vs[3] = {t[0], t[1], t[2]};
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          if (i != j) tri_[(vs[i] * n_ + vs[j]) * n_ + vs[3 - i - j]] = 1;
    }
    edge_.assign(n_ * n_, 0);
    for (const auto& e : x.extra_edges()) {
      edge_[e[0] * n_ + e[1]] = 1;
      edge_[e[1] * n_ + e[0]] = 1;
    }
    offset_.assign(n_ + 1, 0);
    for (std::size_t l = 0; l < n_; ++l) offset_[l + 1] = offset_[l] + choose2(l) + l;
    sigma_.assign(n_, 0);
    used_.assign(n_, 0);
    cur_.assign(offset_[n_], 0);
  }

  std::vector<Vertex> run() {
    rec(0, false);
    std::vector<Vertex> labeling(n_);
    for (std::size_t l = 0; l < n_; ++l) labeling[best_sigma_[l]] = static_cast<Vertex>(l);
    return labeling;
  }

 private:
  void rec(std::size_t level, bool greater) {
    if (level == n_) {
      if (!have_best_ || greater) {
        best_ = cur_;
        best_sigma_ = sigma_;
        have_best_ = true;
      }
      return;
    }
    for (Vertex v = 0; v < n_; ++v) {
      if (used_[v]) continue;
      sigma_[level] = v;
      fill_block(level);
      bool g = greater;
      if (have_best_ && !greater) {
        const int c = compare_block(level);
        if (c < 0) continue;
        g = c > 0;
      }
      used_[v] = 1;
      rec(level + 1, g);
      used_[v] = 0;
    }
  }

  void fill_block(std::size_t level) {
    const Vertex w = sigma_[level];
    std::size_t pos = offset_[level];
    for (std::size_t b = 1; b < level; ++b)
      for (std::size_t a = 0; a < b; ++a)
        cur_[pos++] = tri_[(sigma_[a] * n_ + sigma_[b]) * n_ + w];
    for (std::size_t a = 0; a < level; ++a) cur_[pos++] = edge_[sigma_[a] * n_ + w];
  }

  int compare_block(std::size_t level) const {
    for (std::size_t i = offset_[level]; i < offset_[level + 1]; ++i)
      if (cur_[i] != best_[i]) return cur_[i] > best_[i] ? 1 : -1;
    return 0;
  }

  std::size_t n_;
  std::vector<std::uint8_t> tri_, edge_;
  std::vector<std::size_t> offset_;
  std::vector<Vertex> sigma_;
  std::vector<std::uint8_t> used_;
  std::vector<std::uint8_t> cur_, best_;
  std::vector<Vertex> best_sigma_;
  bool have_best_ = false;
};

}  // namespace

std::size_t colex_rank(const Triangle& t) { return choose3(t[2]) + choose2(t[1]) + t[0]; }

CanonicalForm canonical_form(const Simplex2Complex& x) {
  CanonicalForm cf;
  cf.labeling = Search(x).run();
  cf.complex = relabel(x, cf.labeling);
  return cf;
}

bool isomorphic(const Simplex2Complex& a, const Simplex2Complex& b) {
  if (a.vertex_count() != b.vertex_count() || a.triangles().size() != b.triangles().size() ||
      a.extra_edges().size() != b.extra_edges().size())
    return false;
  return canonical_form(a).complex == canonical_form(b).complex;
}

}  // namespace sk
