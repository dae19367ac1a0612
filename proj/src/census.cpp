#include "sk/census.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

#include "sk/error.hpp"
#include "sk/homology.hpp"

namespace sk {

namespace {

using Mask = unsigned __int128;

std::size_t pair_bit(std::size_t a, std::size_t b) { return b * (b - 1) / 2 + a; }

// Triangle set on labels 0..n-1 with the counters the pruning rules need.
class State {
 public:
  explicit State(std::size_t n) : n_(n), tri_(n * n, 0), block_(n, 0), deg_(n, 0), edge_(n * n, 0) {}

  void add(const Triangle& t) {
    flip(t, +1);
    chosen_.push_back(t);
  }
  void pop() {
    flip(chosen_.back(), -1);
    chosen_.pop_back();
  }

  std::size_t size() const { return chosen_.size(); }
  const std::vector<Triangle>& chosen() const { return chosen_; }
  std::size_t vertex_deficit() const { return vdef_; }
  std::size_t open_edges() const { return open_; }

  bool connected() const {
    std::uint32_t used = 0;
    for (std::size_t v = 0; v < n_; ++v)
      if (deg_[v] > 0) used |= 1u << v;
    if (used == 0) return false;
    std::uint32_t seen = used & (~used + 1);
    for (bool grew = true; grew;) {
      grew = false;
      for (std::size_t u = 0; u < n_; ++u) {
        if (!(seen >> u & 1)) continue;
        for (std::size_t v = 0; v < n_; ++v)
          if (edge_[u * n_ + v] > 0 && !(seen >> v & 1)) {
            seen |= 1u << v;
            grew = true;
          }
      }
    }
    return seen == used;
  }

  std::size_t used_vertices() const {
    return static_cast<std::size_t>(std::count_if(deg_.begin(), deg_.end(), [](int d) { return d > 0; }));
  }

  // Branch and bound over labelings sigma (label -> vertex), assigning
  // labels in increasing order; returns false as soon as a labeling beats
  // the identity.
  bool canonical() const {
    std::vector<std::size_t> sigma(n_);
    return canon_rec(0, sigma, 0);
  }

 private:
  void flip(const Triangle& t, int s) {
    const std::size_t a = t[0], b = t[1], c = t[2];
    tri_[a * n_ + b] ^= 1u << c;
    tri_[b * n_ + a] ^= 1u << c;
    tri_[a * n_ + c] ^= 1u << b;
    tri_[c * n_ + a] ^= 1u << b;
    tri_[b * n_ + c] ^= 1u << a;
    tri_[c * n_ + b] ^= 1u << a;
    block_[c] ^= Mask{1} << pair_bit(a, b);
    for (std::size_t v : {a, b, c}) {
      if (deg_[v] > 0 && deg_[v] < 4) vdef_ -= static_cast<std::size_t>(4 - deg_[v]);
      deg_[v] += s;
      if (deg_[v] > 0 && deg_[v] < 4) vdef_ += static_cast<std::size_t>(4 - deg_[v]);
    }
    for (auto [u, v] : {std::pair{a, b}, std::pair{a, c}, std::pair{b, c}}) {
      int& e = edge_[u * n_ + v];
      if (e == 1) --open_;
      e += s;
      if (e == 1) ++open_;
      edge_[v * n_ + u] = e;
    }
  }

  bool canon_rec(std::size_t level, std::vector<std::size_t>& sigma, std::uint32_t used) const {
    if (level == n_) return true;
    for (std::size_t v = 0; v < n_; ++v) {
      if (used >> v & 1) continue;
      sigma[level] = v;
      Mask x = 0;
      for (std::size_t b = 1; b < level; ++b) {
        const std::uint32_t* row = &tri_[sigma[b] * n_];
        for (std::size_t a = 0; a < b; ++a)
          if (row[sigma[a]] >> v & 1) x |= Mask{1} << pair_bit(a, b);
      }
      const Mask y = block_[level];
      if (x != y) {
        const Mask d = x ^ y;
        if (x & d & (~d + 1)) return false;
        continue;
      }
      if (!canon_rec(level + 1, sigma, used | (1u << v))) return false;
    }
    return true;
  }

  std::size_t n_;
  std::vector<std::uint32_t> tri_;  // (u, v) -> set of w with {u, v, w} chosen
  std::vector<Mask> block_;         // label c -> pairs (a, b) with {a, b, c} chosen
  std::vector<int> deg_;
  std::vector<int> edge_;
  std::vector<Triangle> chosen_;
  std::size_t vdef_ = 0;
  std::size_t open_ = 0;
};

struct Shared {
  std::size_t max_t;
  std::uint64_t budget_nodes;
  double budget_seconds;
  std::chrono::steady_clock::time_point start;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};
  std::mutex reason_mutex;
  std::string reason;

  void halt(const std::string& why) {
    std::lock_guard lock(reason_mutex);
    if (reason.empty()) reason = why;
    stop = true;
  }

  bool tick() {
    const auto k = ++nodes;
    if (budget_nodes != 0 && k > budget_nodes) {
      halt("node budget of " + std::to_string(budget_nodes) + " exhausted");
      return false;
    }
    if (budget_seconds > 0 && (k & 1023) == 0) {
      const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
      if (dt.count() > budget_seconds) {
        halt("time budget of " + std::to_string(budget_seconds) + " s exhausted");
        return false;
      }
    }
    return !stop;
  }
};

CensusEntry make_entry(const State& s) {
  std::vector<Triangle> tris = s.chosen();
  std::sort(tris.begin(), tris.end());
  Vertex top = 0;
  for (const auto& t : tris) top = std::max(top, t[2]);
  auto x = Simplex2Complex::validate(top + 1, tris);
  const auto st = stats(x);
  const auto h = homology_summary(x);
  CensusEntry e;
  e.canonical_triangles = x.triangles();
  e.s0 = st.s0;
  e.s1 = st.s1;
  e.s2 = st.s2;
  e.euler = st.euler;
  e.betti = h.betti;
  e.torsion = h.h1_torsion_factors;
  return e;
}

class Search {
 public:
  Search(std::size_t n, const std::vector<Triangle>& triples, Shared& shared)
      : triples_(triples), shared_(shared), state_(n) {}

  State& state() { return state_; }

  // Visits the node for the current state, then its canonical children
  // with rank > last. Nodes at depth == split_depth are handed to `frontier`
  // instead when it is non-null.
  void dfs(std::size_t last, std::vector<CensusEntry>& out, std::size_t split_depth,
           std::vector<std::pair<std::size_t, std::vector<Triangle>>>* frontier) {
    if (frontier && state_.size() == split_depth) {
      frontier->push_back({last, state_.chosen()});
      return;
    }
    if (!shared_.tick()) return;
    if (state_.size() > 0 && state_.vertex_deficit() == 0 && state_.open_edges() == 0 &&
        state_.connected() && state_.used_vertices() >= 1)
      out.push_back(make_entry(state_));
    if (state_.size() == shared_.max_t) return;
    for (std::size_t i = last; i < triples_.size(); ++i) {
      state_.add(triples_[i]);
      const std::size_t rest = 3 * (shared_.max_t - state_.size());
      if (state_.vertex_deficit() <= rest && state_.open_edges() <= rest && state_.canonical())
        dfs(i + 1, out, split_depth, frontier);
      state_.pop();
      if (shared_.stop) return;
    }
  }

 private:
  const std::vector<Triangle>& triples_;
  Shared& shared_;
  State state_;
};

bool entry_less(const CensusEntry& a, const CensusEntry& b) {
  if (a.s2 != b.s2) return a.s2 < b.s2;
  return a.canonical_triangles < b.canonical_triangles;
}

}  // namespace

bool is_canonical_set(std::size_t n, const std::vector<Triangle>& triangles) {
  if (n > 32) throw Error(ErrorCode::TooLarge, "canonicity test supports at most 32 labels");
  State s(n);
  for (const auto& t : triangles) s.add(make_triangle(t[0], t[1], t[2]));
  return s.canonical();
}

CensusResult census(const CensusOptions& options) {
  if (options.ceiling > kCensusHardCeiling)
    throw Error(ErrorCode::TooLarge, "census ceiling above the hard maximum of " +
                                         std::to_string(kCensusHardCeiling));
  if (options.max_t > options.ceiling)
    throw Error(ErrorCode::TooLarge, "census T = " + std::to_string(options.max_t) +
                                         " exceeds the configured ceiling " + std::to_string(options.ceiling));

  const std::size_t n = 3 * options.max_t / 4;
  std::vector<Triangle> triples;
  for (Vertex c = 2; c < n; ++c)
    for (Vertex b = 1; b < c; ++b)
      for (Vertex a = 0; a < b; ++a) triples.push_back({a, b, c});

  Shared shared;
  shared.max_t = options.max_t;
  shared.budget_nodes = options.budget_nodes;
  shared.budget_seconds = options.budget_seconds;
  shared.start = std::chrono::steady_clock::now();

  CensusResult result;
  if (n >= 3) {
    constexpr std::size_t kSplitDepth = 3;
    std::vector<CensusEntry> head;
    std::vector<std::pair<std::size_t, std::vector<Triangle>>> frontier;
    {
      Search root(n, triples, shared);
      root.dfs(0, head, kSplitDepth, &frontier);
    }
    std::vector<std::vector<CensusEntry>> parts(frontier.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (;;) {
        const std::size_t k = next++;
        if (k >= frontier.size() || shared.stop) return;
        Search s(n, triples, shared);
        for (const auto& t : frontier[k].second) s.state().add(t);
        s.dfs(frontier[k].first, parts[k], 0, nullptr);
      }
    };
    const unsigned w = std::max(1u, options.workers);
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < w; ++i) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    result.entries = std::move(head);
    for (auto& p : parts) result.entries.insert(result.entries.end(), p.begin(), p.end());
  }
  std::sort(result.entries.begin(), result.entries.end(), entry_less);
  result.nodes = shared.nodes;
  result.complete = !shared.stop;
  result.stop_reason = shared.reason;
  return result;
}

}  // namespace sk
