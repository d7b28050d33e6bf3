// Exhaustive solution enumeration.  Each problem family gets a pruned
// backtracking search (clause propagation for CNF kinds, conflict pruning for
// selection kinds, path extension for Hamiltonian kinds, canonical frontier
// growth for Steiner trees, bound pruning for number kinds, first-uncovered
// branching for exact covers), all metered by a shared node budget.  A
// generic 2^|U| fallback cross-checks the pruned searches in tests.
#include <algorithm>
#include <functional>
#include <limits>
#include <queue>

#include "sspforge/problems.hpp"

namespace sspforge {

namespace detail {
bool restricted_acyclic_for_enum(std::size_t nv,
                                 const std::vector<std::array<int, 2>>& arcs,
                                 const std::vector<bool>* drop_vertex,
                                 const std::vector<bool>* drop_arc);
}

namespace {

struct Emit {
  SolutionSet* out;
  std::size_t limit;
  bool truncated = false;

  // returns false when the caller should stop searching
  bool operator()(Solution s) {
    out->insert(std::move(s));
    if (out->items.size() >= limit) {
      truncated = true;
      return false;
    }
    return true;
  }
};

// ---------------------------------------------------------------------------
// CNF: assign variables in order, propagating clause satisfaction counts.

class CnfSearch {
 public:
  CnfSearch(const CnfData& d, ProblemId kind, Budget& budget, Emit& emit)
      : d_(d), exact_one_(kind == ProblemId::osat), budget_(budget),
        emit_(emit), occurrences_(d.vars.size()),
        true_count_(d.clauses.size(), 0),
        unassigned_(d.clauses.size()) {
    for (std::size_t c = 0; c < d.clauses.size(); ++c) {
      unassigned_[c] = static_cast<int>(d.clauses[c].size());
      for (int lit : d.clauses[c]) {
        std::size_t v = static_cast<std::size_t>(lit > 0 ? lit : -lit) - 1;
        occurrences_[v].push_back({static_cast<int>(c), lit > 0});
      }
    }
    mask_ = Solution(2 * d.vars.size());
  }

  bool run() { return rec(0); }

 private:
  bool clause_viable(int c) const {
    if (exact_one_) {
      if (true_count_[c] > 1) return false;
      if (unassigned_[c] == 0 && true_count_[c] != 1) return false;
    } else {
      if (unassigned_[c] == 0 && true_count_[c] == 0) return false;
    }
    return true;
  }

  bool rec(std::size_t var) {
    budget_.tick();
    if (var == d_.vars.size()) return emit_(mask_);
    for (int polarity = 0; polarity < 2; ++polarity) {
      bool value = polarity == 0;  // try "true" first: canonical order is
                                   // restored by SolutionSet anyway
      std::size_t bit = 2 * var + (value ? 0 : 1);
      mask_.set(bit, true);
      bool ok = true;
      for (auto [c, pos] : occurrences_[var]) {
        --unassigned_[c];
        if (pos == value) ++true_count_[c];
        if (!clause_viable(c)) ok = false;
      }
      if (ok && !rec(var + 1)) return false;
      for (auto [c, pos] : occurrences_[var]) {
        ++unassigned_[c];
        if (pos == value) --true_count_[c];
      }
      mask_.set(bit, false);
    }
    return true;
  }

  const CnfData& d_;
  bool exact_one_;
  Budget& budget_;
  Emit& emit_;
  std::vector<std::vector<std::pair<int, bool>>> occurrences_;
  std::vector<int> true_count_;
  std::vector<int> unassigned_;
  Solution mask_;
};

// ---------------------------------------------------------------------------
// Selection kinds: lexicographic include/exclude over universe indices with a
// kind-specific deadness test after each decision and a final acceptance call
// into verify_solution.

struct SelectionHooks {
  // exact size (selection must end at exactly k); -1 for at-most-k kinds
  long long exact_k = -1;
  long long max_k = std::numeric_limits<long long>::max();
  // may element `i` be added given the current selection?
  std::function<bool(std::size_t)> can_take;
  // after deciding element `i` (taken or skipped), is the branch still alive?
  std::function<bool(std::size_t)> still_alive;
  // called when taking / untaking element i, to update incremental state
  std::function<void(std::size_t)> on_take, on_untake;
};

class SelectionSearch {
 public:
  SelectionSearch(const Instance& inst, SelectionHooks hooks, Budget& budget,
                  Emit& emit)
      : inst_(inst), hooks_(std::move(hooks)), budget_(budget), emit_(emit),
        n_(universe_size(inst)), mask_(n_) {}

  bool run() { return rec(0, 0); }

 private:
  bool rec(std::size_t i, long long taken) {
    budget_.tick();
    if (taken > hooks_.max_k) return true;
    if (hooks_.exact_k >= 0 &&
        taken + static_cast<long long>(n_ - i) < hooks_.exact_k)
      return true;  // not enough elements left
    if (i == n_) {
      if (hooks_.exact_k >= 0 && taken != hooks_.exact_k) return true;
      if (verify_solution(inst_, mask_)) return emit_(mask_);
      return true;
    }
    // take i
    if (taken < hooks_.max_k && (!hooks_.can_take || hooks_.can_take(i))) {
      mask_.set(i, true);
      if (hooks_.on_take) hooks_.on_take(i);
      bool alive = !hooks_.still_alive || hooks_.still_alive(i);
      if (alive && !rec(i + 1, taken + 1)) return false;
      if (hooks_.on_untake) hooks_.on_untake(i);
      mask_.set(i, false);
    }
    // skip i
    bool alive = !hooks_.still_alive || hooks_.still_alive(i);
    if (alive && !rec(i + 1, taken)) return false;
    return true;
  }

  const Instance& inst_;
  SelectionHooks hooks_;
  Budget& budget_;
  Emit& emit_;
  std::size_t n_;
  Solution mask_;
};

// The selection search needs to expose its working selection to the hook
// lambdas; a shadow bit vector updated through on_take/on_untake keeps the
// classes decoupled.
struct ShadowMask {
  explicit ShadowMask(std::size_t n) : bits(n, false) {}
  std::vector<bool> bits;
};

// ---------------------------------------------------------------------------
// Hamiltonian kinds

class DirectedPathSearch {
 public:
  DirectedPathSearch(std::size_t nv,
                     const std::vector<std::array<int, 2>>& arcs, int s, int t,
                     bool cycle, Budget& budget, Emit& emit)
      : nv_(nv), s_(s), t_(t), cycle_(cycle), budget_(budget), emit_(emit),
        out_(nv), mask_(arcs.size()), visited_(nv, false) {
    for (std::size_t a = 0; a < arcs.size(); ++a)
      out_[arcs[a][0]].push_back({arcs[a][1], static_cast<int>(a)});
  }

  void run() {
    if (nv_ == 0) return;
    visited_[s_] = true;
    rec(s_, 1);
  }

 private:
  bool rec(int cur, std::size_t depth) {
    budget_.tick();
    if (depth == nv_) {
      if (!cycle_) return emit_(mask_);
      for (auto [w, a] : out_[cur])
        if (w == s_) {
          mask_.set(a, true);
          bool cont = emit_(mask_);
          mask_.set(a, false);
          if (!cont) return false;
        }
      return true;
    }
    for (auto [w, a] : out_[cur]) {
      if (visited_[w]) continue;
      // an s-t path may only touch t as its final vertex
      if (!cycle_ && w == t_ && depth + 1 != nv_) continue;
      visited_[w] = true;
      mask_.set(a, true);
      bool cont = rec(w, depth + 1);
      mask_.set(a, false);
      visited_[w] = false;
      if (!cont) return false;
    }
    return true;
  }

  std::size_t nv_;
  int s_, t_;
  bool cycle_;
  Budget& budget_;
  Emit& emit_;
  std::vector<std::vector<std::pair<int, int>>> out_;
  Solution mask_;
  std::vector<bool> visited_;
};

class UndirectedPathSearch {
 public:
  UndirectedPathSearch(std::size_t nv,
                       const std::vector<std::array<int, 2>>& edges, int s,
                       int t, bool cycle, long long weight_cap,
                       const std::vector<long long>* weights, Budget& budget,
                       Emit& emit)
      : nv_(nv), s_(s), t_(t), cycle_(cycle), cap_(weight_cap),
        weights_(weights), budget_(budget), emit_(emit), adj_(nv),
        mask_(edges.size()), visited_(nv, false) {
    for (std::size_t e = 0; e < edges.size(); ++e) {
      adj_[edges[e][0]].push_back({edges[e][1], static_cast<int>(e)});
      adj_[edges[e][1]].push_back({edges[e][0], static_cast<int>(e)});
    }
  }

  void run() {
    if (nv_ == 0 || (cycle_ && nv_ < 3)) return;
    int start = cycle_ ? 0 : s_;
    visited_[start] = true;
    rec(start, start, 1, 0);
  }

 private:
  bool rec(int start, int cur, std::size_t depth, long long weight) {
    budget_.tick();
    if (depth == nv_) {
      if (!cycle_) return emit_(mask_);
      for (auto [w, e] : adj_[cur])
        if (w == start && !mask_.test(e)) {
          long long total = weight + (weights_ ? (*weights_)[e] : 0);
          if (total <= cap_) {
            mask_.set(e, true);
            bool cont = emit_(mask_);  // set dedupes the two traversal
            mask_.set(e, false);       // directions of each cycle
            if (!cont) return false;
          }
        }
      return true;
    }
    for (auto [w, e] : adj_[cur]) {
      if (visited_[w]) continue;
      if (!cycle_ && w == t_ && depth + 1 != nv_) continue;
      long long nw = weight + (weights_ ? (*weights_)[e] : 0);
      if (nw > cap_) continue;
      visited_[w] = true;
      mask_.set(e, true);
      bool cont = rec(start, w, depth + 1, nw);
      mask_.set(e, false);
      visited_[w] = false;
      if (!cont) return false;
    }
    return true;
  }

  std::size_t nv_;
  int s_, t_;
  bool cycle_;
  long long cap_;
  const std::vector<long long>* weights_;
  Budget& budget_;
  Emit& emit_;
  std::vector<std::vector<std::pair<int, int>>> adj_;
  Solution mask_;
  std::vector<bool> visited_;
};

// ---------------------------------------------------------------------------
// Steiner trees: canonical enumeration of all subtrees containing the first
// terminal.  At each step the lowest-index frontier edge (one endpoint in the
// tree, one outside) is either included or permanently excluded; every
// subtree is reached by exactly one decision sequence.  A shortest-path lower
// bound on connecting the uncovered terminals prunes hopeless branches.

class SteinerSearch {
 public:
  SteinerSearch(const SttData& d, Budget& budget, Emit& emit)
      : d_(d), budget_(budget), emit_(emit), mask_(d.edges.size()),
        in_tree_(d.vertices.size(), false), excluded_(d.edges.size(), false),
        incident_(d.vertices.size()) {
    for (std::size_t e = 0; e < d.edges.size(); ++e) {
      incident_[d_.edges[e][0]].push_back(static_cast<int>(e));
      incident_[d_.edges[e][1]].push_back(static_cast<int>(e));
    }
    // per-terminal single-source shortest distances for the lower bound
    dist_.assign(d.terminals.size(), {});
    for (std::size_t ti = 0; ti < d.terminals.size(); ++ti)
      dist_[ti] = dijkstra(d.terminals[ti]);
  }

  void run() {
    int root = d_.terminals[0];
    in_tree_[root] = true;
    tree_vertices_.push_back(root);
    rec(0);
  }

 private:
  std::vector<long long> dijkstra(int src) const {
    const long long inf = std::numeric_limits<long long>::max() / 4;
    std::vector<long long> dist(d_.vertices.size(), inf);
    dist[src] = 0;
    using Item = std::pair<long long, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    pq.push({0, src});
    while (!pq.empty()) {
      auto [dv, v] = pq.top();
      pq.pop();
      if (dv > dist[v]) continue;
      for (int e : incident_[v]) {
        int w = d_.edges[e][0] == v ? d_.edges[e][1] : d_.edges[e][0];
        long long nd = dv + d_.weights[e];
        if (nd < dist[w]) {
          dist[w] = nd;
          pq.push({nd, w});
        }
      }
    }
    return dist;
  }

  // max over uncovered terminals of distance to the current tree
  long long remaining_bound() const {
    long long bound = 0;
    for (std::size_t ti = 0; ti < d_.terminals.size(); ++ti) {
      if (in_tree_[d_.terminals[ti]]) continue;
      long long best = std::numeric_limits<long long>::max() / 4;
      for (int v : tree_vertices_) best = std::min(best, dist_[ti][v]);
      bound = std::max(bound, best);
    }
    return bound;
  }

  bool rec(long long weight) {
    budget_.tick();
    if (weight + remaining_bound() > d_.k) return true;
    bool all_covered = true;
    for (int t : d_.terminals)
      if (!in_tree_[t]) all_covered = false;
    if (all_covered && !emit_(mask_)) return false;
    // lowest-index frontier edge
    int cand = -1, outside = -1;
    for (std::size_t e = 0; e < d_.edges.size(); ++e) {
      if (mask_.test(e) || excluded_[e]) continue;
      bool a = in_tree_[d_.edges[e][0]], b = in_tree_[d_.edges[e][1]];
      if (a == b) continue;  // both inside would close a cycle; both outside
                             // is not yet reachable
      cand = static_cast<int>(e);
      outside = a ? d_.edges[e][1] : d_.edges[e][0];
      break;
    }
    if (cand < 0) return true;
    // exclude branch
    excluded_[cand] = true;
    if (!rec(weight)) return false;
    excluded_[cand] = false;
    // include branch
    if (weight + d_.weights[cand] <= d_.k) {
      mask_.set(cand, true);
      in_tree_[outside] = true;
      tree_vertices_.push_back(outside);
      bool cont = rec(weight + d_.weights[cand]);
      tree_vertices_.pop_back();
      in_tree_[outside] = false;
      mask_.set(cand, false);
      if (!cont) return false;
    }
    return true;
  }

  const SttData& d_;
  Budget& budget_;
  Emit& emit_;
  Solution mask_;
  std::vector<bool> in_tree_;
  std::vector<bool> excluded_;
  std::vector<int> tree_vertices_;
  std::vector<std::vector<int>> incident_;
  std::vector<std::vector<long long>> dist_;
};

// ---------------------------------------------------------------------------
// Number kinds: subset DFS with prefix/suffix sum bounds.

class NumberSearch {
 public:
  // mode: 0 = sum == target (ss, p), 1 = knapsack, 2 = two-machine
  NumberSearch(const Instance& inst, Budget& budget, Emit& emit)
      : inst_(inst), budget_(budget), emit_(emit) {}

  void run_subset_sum(const std::vector<BigInt>& numbers, const BigInt& target,
                      bool force_last) {
    numbers_ = &numbers;
    suffix_.assign(numbers.size() + 1, 0);
    for (std::size_t i = numbers.size(); i > 0; --i)
      suffix_[i - 1] = suffix_[i] + numbers[i - 1];
    mask_ = Solution(numbers.size());
    force_last_ = force_last;
    target_ = target;
    rec_sum(0, 0);
  }

  void run_knapsack(const KsData& d) {
    mask_ = Solution(d.prices.size());
    suffix_.assign(d.prices.size() + 1, 0);
    for (std::size_t i = d.prices.size(); i > 0; --i)
      suffix_[i - 1] = suffix_[i] + d.prices[i - 1];
    rec_ks(d, 0, 0, 0);
  }

  void run_two_machine(const TmsData& d) {
    mask_ = Solution(d.jobs.size());
    suffix_.assign(d.jobs.size() + 1, 0);
    BigInt total = 0;
    for (std::size_t i = d.jobs.size(); i > 0; --i)
      suffix_[i - 1] = suffix_[i] + d.jobs[i - 1];
    total = suffix_[0];
    // selected sum must land in [total - bound, bound]
    lo_ = total - d.bound;
    target_ = d.bound;
    rec_tms(d, 0, 0);
  }

 private:
  bool rec_sum(std::size_t i, const BigInt& sum) {
    budget_.tick();
    if (sum > target_) return true;
    if (sum + suffix_[i] < target_) return true;
    if (i == numbers_->size()) {
      if (sum == target_) return emit_(mask_);
      return true;
    }
    bool must_take = force_last_ && i + 1 == numbers_->size();
    mask_.set(i, true);
    if (!rec_sum(i + 1, sum + (*numbers_)[i])) return false;
    mask_.set(i, false);
    if (!must_take && !rec_sum(i + 1, sum)) return false;
    return true;
  }

  bool rec_ks(const KsData& d, std::size_t i, const BigInt& price,
              const BigInt& weight) {
    budget_.tick();
    if (weight > d.max_weight) return true;
    if (price + suffix_[i] < d.min_price) return true;
    if (i == d.prices.size()) {
      if (price >= d.min_price) return emit_(mask_);
      return true;
    }
    mask_.set(i, true);
    if (!rec_ks(d, i + 1, price + d.prices[i], weight + d.weights[i]))
      return false;
    mask_.set(i, false);
    if (!rec_ks(d, i + 1, price, weight)) return false;
    return true;
  }

  bool rec_tms(const TmsData& d, std::size_t i, const BigInt& sum) {
    budget_.tick();
    if (sum > target_) return true;            // machine one overloaded
    if (sum + suffix_[i] < lo_) return true;   // machine two overloaded
    if (i == d.jobs.size()) {
      if (sum >= lo_ && mask_.test(d.jobs.size() - 1)) return emit_(mask_);
      return true;
    }
    bool must_take = i + 1 == d.jobs.size();
    mask_.set(i, true);
    if (!rec_tms(d, i + 1, sum + d.jobs[i])) return false;
    mask_.set(i, false);
    if (!must_take && !rec_tms(d, i + 1, sum)) return false;
    return true;
  }

  const Instance& inst_;
  Budget& budget_;
  Emit& emit_;
  const std::vector<BigInt>* numbers_ = nullptr;
  std::vector<BigInt> suffix_;
  Solution mask_;
  BigInt target_, lo_;
  bool force_last_ = false;
};

// ---------------------------------------------------------------------------
// Exact covers (odm, dm): branch on the options covering the first uncovered
// ground element; each exact cover is generated exactly once.

class ExactCoverSearch {
 public:
  // ground elements 0..ng-1; options given as element lists
  ExactCoverSearch(std::size_t ng, std::vector<std::vector<int>> options,
                   Budget& budget, Emit& emit)
      : options_(std::move(options)), budget_(budget), emit_(emit),
        covered_(ng, false), by_element_(ng), mask_(options_.size()) {
    for (std::size_t o = 0; o < options_.size(); ++o)
      for (int e : options_[o]) by_element_[e].push_back(static_cast<int>(o));
  }

  void run() { rec(); }

 private:
  bool rec() {
    budget_.tick();
    std::size_t e = 0;
    while (e < covered_.size() && covered_[e]) ++e;
    if (e == covered_.size()) return emit_(mask_);
    for (int o : by_element_[e]) {
      bool clash = false;
      for (int x : options_[o])
        if (covered_[x]) clash = true;
      if (clash) continue;
      for (int x : options_[o]) covered_[x] = true;
      mask_.set(o, true);
      bool cont = rec();
      mask_.set(o, false);
      for (int x : options_[o]) covered_[x] = false;
      if (!cont) return false;
    }
    return true;
  }

  std::vector<std::vector<int>> options_;
  Budget& budget_;
  Emit& emit_;
  std::vector<bool> covered_;
  std::vector<std::vector<int>> by_element_;
  Solution mask_;
};

// ---------------------------------------------------------------------------
// Selection-kind drivers (the per-kind glue shares SelectionSearch but owns
// its incremental state here to keep the lambdas readable).

SolutionSet enumerate_selection(const Instance& inst, Budget& budget,
                                std::size_t limit) {
  SolutionSet out;
  std::size_t n = universe_size(inst);
  ShadowMask shadow(n);
  SelectionHooks h;

  auto track = [&shadow](SelectionHooks& hooks) {
    auto prev_take = hooks.on_take;
    hooks.on_take = [&shadow, prev_take](std::size_t i) {
      shadow.bits[i] = true;
      if (prev_take) prev_take(i);
    };
    auto prev_untake = hooks.on_untake;
    hooks.on_untake = [&shadow, prev_untake](std::size_t i) {
      shadow.bits[i] = false;
      if (prev_untake) prev_untake(i);
    };
  };

  switch (inst.kind) {
    case ProblemId::vc:
    case ProblemId::mvc:
    case ProblemId::vcv: {
      const std::vector<std::array<int, 2>>* edges;
      long long k;
      bool exact = inst.kind != ProblemId::vc;
      if (inst.kind == ProblemId::vcv) {
        const auto& d = std::get<VcvData>(inst.data);
        edges = &d.edges;
        k = d.k;
      } else {
        const auto& d = std::get<GraphKData>(inst.data);
        edges = &d.edges;
        k = d.k;
      }
      std::vector<std::vector<int>> by_max(n);
      for (std::size_t e = 0; e < edges->size(); ++e)
        by_max[std::max((*edges)[e][0], (*edges)[e][1])].push_back(
            static_cast<int>(e));
      if (exact) h.exact_k = k;
      h.max_k = k;
      h.still_alive = [&, edges](std::size_t i) {
        for (int e : by_max[i])
          if (!shadow.bits[(*edges)[e][0]] && !shadow.bits[(*edges)[e][1]])
            return false;
        return true;
      };
      track(h);
      Emit em{&out, limit};
      SelectionSearch(inst, std::move(h), budget, em).run();
      out.complete = !em.truncated;
      return out;
    }
    case ProblemId::ds:
    case ProblemId::mds: {
      const auto& d = std::get<GraphKData>(inst.data);
      std::vector<std::vector<int>> closed(n);
      for (std::size_t v = 0; v < n; ++v) closed[v].push_back(static_cast<int>(v));
      for (auto [u, v] : d.edges) {
        closed[u].push_back(v);
        closed[v].push_back(u);
      }
      std::vector<std::vector<int>> by_last(n);  // vertices whose last
                                                 // dominator index is i
      for (std::size_t v = 0; v < n; ++v) {
        int last = *std::max_element(closed[v].begin(), closed[v].end());
        by_last[last].push_back(static_cast<int>(v));
      }
      if (inst.kind == ProblemId::mds) h.exact_k = d.k;
      h.max_k = d.k;
      h.still_alive = [&, &closed = closed, &by_last = by_last](std::size_t i) {
        for (int v : by_last[i]) {
          bool dominated = false;
          for (int w : closed[v])
            if (shadow.bits[w]) dominated = true;
          if (!dominated) return false;
        }
        return true;
      };
      track(h);
      Emit em{&out, limit};
      SelectionSearch(inst, std::move(h), budget, em).run();
      out.complete = !em.truncated;
      return out;
    }
    case ProblemId::mis: {
      const auto& d = std::get<GraphKData>(inst.data);
      std::vector<std::vector<int>> adj(n);
      for (auto [u, v] : d.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
      }
      h.exact_k = d.k;
      h.max_k = d.k;
      h.can_take = [&, &adj = adj](std::size_t i) {
        for (int w : adj[i])
          if (shadow.bits[w]) return false;
        return true;
      };
      track(h);
      Emit em{&out, limit};
      SelectionSearch(inst, std::move(h), budget, em).run();
      out.complete = !em.truncated;
      return out;
    }
    case ProblemId::cq: {
      const auto& d = std::get<GraphKData>(inst.data);
      std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
      for (auto [u, v] : d.edges) adj[u][v] = adj[v][u] = true;
      h.exact_k = d.k;
      h.max_k = d.k;
      h.can_take = [&, &adj = adj](std::size_t i) {
        for (std::size_t w = 0; w < adj.size(); ++w)
          if (shadow.bits[w] && !adj[i][w]) return false;
        return true;
      };
      track(h);
      Emit em{&out, limit};
      SelectionSearch(inst, std::move(h), budget, em).run();
      out.complete = !em.truncated;
      return out;
    }
    case ProblemId::sp: {
      const auto& d = std::get<SetSystemData>(inst.data);
      std::vector<int> used(d.ground.size(), 0);
      h.exact_k = d.k;
      h.max_k = d.k;
      h.can_take = [&d, &used](std::size_t i) {
        for (int e : d.sets[i])
          if (used[e]) return false;
        return true;
      };
      h.on_take = [&d, &used](std::size_t i) {
        for (int e : d.sets[i]) ++used[e];
      };
      h.on_untake = [&d, &used](std::size_t i) {
        for (int e : d.sets[i]) --used[e];
      };
      track(h);
      Emit em{&out, limit};
      SelectionSearch(inst, std::move(h), budget, em).run();
      out.complete = !em.truncated;
      return out;
    }
    case ProblemId::sc: {
      const auto& d = std::get<SetSystemData>(inst.data);
      // last set covering each ground element
      std::vector<int> last(d.ground.size(), -1);
      for (std::size_t s = 0; s < d.sets.size(); ++s)
        for (int e : d.sets[s]) last[e] = static_cast<int>(s);
      std::vector<std::vector<int>> by_last(n);
      for (std::size_t e = 0; e < last.size(); ++e) {
        if (last[e] < 0)
          // element never coverable: no solutions at all
          return out;
        by_last[last[e]].push_back(static_cast<int>(e));
      }
      std::vector<int> covered(d.ground.size(), 0);
      if (d.exact) h.exact_k = d.k;
      h.max_k = d.k;
      h.on_take = [&d, &covered](std::size_t i) {
        for (int e : d.sets[i]) ++covered[e];
      };
      h.on_untake = [&d, &covered](std::size_t i) {
        for (int e : d.sets[i]) --covered[e];
      };
      h.still_alive = [&, &by_last = by_last, &covered = covered](std::size_t i) {
        for (int e : by_last[i])
          if (!covered[e]) return false;
        return true;
      };
      track(h);
      Emit em{&out, limit};
      SelectionSearch(inst, std::move(h), budget, em).run();
      out.complete = !em.truncated;
      return out;
    }
    case ProblemId::hs: {
      const auto& d = std::get<SetSystemData>(inst.data);
      std::vector<std::vector<int>> by_last(n);
      for (std::size_t s = 0; s < d.sets.size(); ++s) {
        if (d.sets[s].empty())
          // a set with no elements can never be hit
          return out;
        int last = *std::max_element(d.sets[s].begin(), d.sets[s].end());
        by_last[last].push_back(static_cast<int>(s));
      }
      if (d.exact) h.exact_k = d.k;
      h.max_k = d.k;
      h.still_alive = [&, &by_last = by_last](std::size_t i) {
        for (int s : by_last[i]) {
          bool hit = false;
          for (int e : d.sets[s])
            if (shadow.bits[e]) hit = true;
          if (!hit) return false;
        }
        return true;
      };
      track(h);
      Emit em{&out, limit};
      SelectionSearch(inst, std::move(h), budget, em).run();
      out.complete = !em.truncated;
      return out;
    }
    case ProblemId::fvs:
    case ProblemId::fas: {
      const auto& d = std::get<DigraphKData>(inst.data);
      bool vertex_mode = inst.kind == ProblemId::fvs;
      std::size_t nv = d.vertices.size();
      h.exact_k = d.k;
      h.max_k = d.k;
      // Deadness: a cycle confined to already-decided, unselected elements can
      // never be broken by future picks.
      h.still_alive = [&, vertex_mode, nv](std::size_t i) {
        if (vertex_mode) {
          std::vector<bool> drop(nv, false);
          for (std::size_t v = 0; v < nv; ++v)
            drop[v] = v > i || shadow.bits[v];
          return detail::restricted_acyclic_for_enum(nv, d.arcs, &drop,
                                                     nullptr);
        }
        std::vector<bool> drop(d.arcs.size(), false);
        for (std::size_t a = 0; a < d.arcs.size(); ++a)
          drop[a] = a > i || shadow.bits[a];
        return detail::restricted_acyclic_for_enum(nv, d.arcs, nullptr, &drop);
      };
      track(h);
      Emit em{&out, limit};
      SelectionSearch(inst, std::move(h), budget, em).run();
      out.complete = !em.truncated;
      return out;
    }
    case ProblemId::ufl: {
      h.max_k = static_cast<long long>(n);
      Emit em{&out, limit};
      SelectionSearch(inst, std::move(h), budget, em).run();
      out.complete = !em.truncated;
      return out;
    }
    case ProblemId::pcen:
    case ProblemId::pmed: {
      const auto& d = std::get<CenterData>(inst.data);
      h.exact_k = d.p;
      h.max_k = d.p;
      Emit em{&out, limit};
      SelectionSearch(inst, std::move(h), budget, em).run();
      out.complete = !em.truncated;
      return out;
    }
    default:
      throw SspError(ErrorCode::internal_error,
                     "enumerate_selection: unsupported kind");
  }
}

}  // namespace

// ---------------------------------------------------------------------------

SolutionSet enumerate_solutions(const Instance& inst, Budget& budget,
                                std::size_t limit) {
  SolutionSet out;
  Emit emit{&out, limit};
  switch (inst.kind) {
    case ProblemId::sat:
    case ProblemId::tsat:
    case ProblemId::esat:
    case ProblemId::osat: {
      CnfSearch(std::get<CnfData>(inst.data), inst.kind, budget, emit).run();
      break;
    }
    case ProblemId::vc:
    case ProblemId::mvc:
    case ProblemId::vcv:
    case ProblemId::ds:
    case ProblemId::mds:
    case ProblemId::mis:
    case ProblemId::cq:
    case ProblemId::sp:
    case ProblemId::sc:
    case ProblemId::hs:
    case ProblemId::fvs:
    case ProblemId::fas:
    case ProblemId::ufl:
    case ProblemId::pcen:
    case ProblemId::pmed:
      return enumerate_selection(inst, budget, limit);
    case ProblemId::dhp: {
      const auto& d = std::get<DhpData>(inst.data);
      DirectedPathSearch(d.vertices.size(), d.arcs, d.s, d.t, false, budget,
                         emit)
          .run();
      break;
    }
    case ProblemId::dhc: {
      const auto& d = std::get<DhcData>(inst.data);
      DirectedPathSearch(d.vertices.size(), d.arcs, 0, 0, true, budget, emit)
          .run();
      break;
    }
    case ProblemId::uhp: {
      const auto& d = std::get<UhpData>(inst.data);
      UndirectedPathSearch(d.vertices.size(), d.edges, d.s, d.t, false,
                           std::numeric_limits<long long>::max(), nullptr,
                           budget, emit)
          .run();
      break;
    }
    case ProblemId::uhc: {
      const auto& d = std::get<UhcData>(inst.data);
      UndirectedPathSearch(d.vertices.size(), d.edges, 0, 0, true,
                           std::numeric_limits<long long>::max(), nullptr,
                           budget, emit)
          .run();
      break;
    }
    case ProblemId::tsp: {
      const auto& d = std::get<TspData>(inst.data);
      UndirectedPathSearch(d.vertices.size(), d.edges, 0, 0, true, d.k,
                           &d.weights, budget, emit)
          .run();
      break;
    }
    case ProblemId::stt: {
      SteinerSearch(std::get<SttData>(inst.data), budget, emit).run();
      break;
    }
    case ProblemId::ss: {
      const auto& d = std::get<SsData>(inst.data);
      NumberSearch(inst, budget, emit).run_subset_sum(d.numbers, d.target,
                                                      false);
      break;
    }
    case ProblemId::p: {
      const auto& d = std::get<PartData>(inst.data);
      BigInt total = 0;
      for (const auto& v : d.numbers) total += v;
      if (total % 2 != 0) break;  // odd total: no balanced split exists
      NumberSearch(inst, budget, emit).run_subset_sum(d.numbers, total / 2,
                                                      true);
      break;
    }
    case ProblemId::ks:
      NumberSearch(inst, budget, emit).run_knapsack(std::get<KsData>(inst.data));
      break;
    case ProblemId::tms:
      NumberSearch(inst, budget, emit)
          .run_two_machine(std::get<TmsData>(inst.data));
      break;
    case ProblemId::odm: {
      const auto& d = std::get<OdmData>(inst.data);
      std::size_t nx = d.xs.size(), ny = d.ys.size(), nz = d.zs.size();
      std::vector<std::vector<int>> options;
      for (auto [x, y, z] : d.triples)
        options.push_back({x, static_cast<int>(nx) + y,
                           static_cast<int>(nx + ny) + z});
      for (int s : d.singletons) options.push_back({s});
      ExactCoverSearch(nx + ny + nz, std::move(options), budget, emit).run();
      break;
    }
    case ProblemId::dm: {
      const auto& d = std::get<DmData>(inst.data);
      std::size_t nx = d.xs.size(), ny = d.ys.size(), nz = d.zs.size();
      std::vector<std::vector<int>> options;
      for (auto [x, y, z] : d.triples)
        options.push_back({x, static_cast<int>(nx) + y,
                           static_cast<int>(nx + ny) + z});
      ExactCoverSearch(nx + ny + nz, std::move(options), budget, emit).run();
      break;
    }
  }
  out.complete = !emit.truncated;
  return out;
}

SolutionSet enumerate_solutions_generic(const Instance& inst, Budget& budget) {
  std::size_t n = universe_size(inst);
  if (n > 26)
    throw SspError(ErrorCode::unsupported_shape,
                   "generic enumeration limited to universes of at most 26 "
                   "elements");
  SolutionSet out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    budget.tick();
    Solution s(n);
    for (std::size_t i = 0; i < n; ++i)
      if ((bits >> i) & 1) s.set(i);
    if (verify_solution(inst, s)) out.insert(std::move(s));
  }
  out.complete = true;
  return out;
}

long long minimum_cardinality(const Instance& inst, Budget& budget) {
  long long n = static_cast<long long>(universe_size(inst));
  auto exists_at = [&](long long k) {
    Instance probe = inst;
    switch (probe.kind) {
      case ProblemId::mvc:
      case ProblemId::mds:
      case ProblemId::mis:
      case ProblemId::cq:
        std::get<GraphKData>(probe.data).k = k;
        break;
      case ProblemId::vcv:
        std::get<VcvData>(probe.data).k = k;
        break;
      case ProblemId::fvs:
      case ProblemId::fas:
        std::get<DigraphKData>(probe.data).k = k;
        break;
      default:
        throw SspError(ErrorCode::kind_mismatch,
                       "minimum_cardinality supports mvc, mds, mis, cq, fvs, "
                       "fas and vcv only");
    }
    return enumerate_solutions(probe, budget, 1).size() > 0;
  };
  if (inst.kind == ProblemId::mis || inst.kind == ProblemId::cq) {
    for (long long k = n; k >= 0; --k)
      if (exists_at(k)) return k;
    throw SspError(ErrorCode::internal_error,
                   "maximization found no feasible size");
  }
  // Probe the smallest k first so the optimum is found without wasted work.
  for (long long k = 0; k <= n; ++k)
    if (exists_at(k)) return k;
  throw SspError(ErrorCode::unsupported_shape,
                 "no feasible cardinality exists for this instance");
}

}  // namespace sspforge
