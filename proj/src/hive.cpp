#include "hivelab/hive.hpp"

#include "hivelab/errors.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <numeric>
#include <thread>

namespace hivelab {

HiveOptions& default_hive_options() {
  static HiveOptions opts;
  return opts;
}

namespace {

constexpr Count kFlushEvery = 1 << 12;

class NodeBudget {
public:
  explicit NodeBudget(Count limit) : limit_(limit) {}

  void add(Count nodes) {
    Count total = used_.fetch_add(nodes, std::memory_order_relaxed) + nodes;
    if (total > limit_)
      throw ResourceLimit("backtracking exceeded " + std::to_string(limit_) + " nodes");
  }

private:
  Count limit_;
  std::atomic<Count> used_{0};
};

} // namespace

HivePolytope::HivePolytope(const IntPartition& alpha, const IntPartition& beta,
                           const IntPartition& gamma)
    : n_(static_cast<int>(alpha.size())) {
  if (beta.size() != alpha.size() || gamma.size() != alpha.size())
    throw RankMismatch("partitions of different lengths");
  const int n = n_;
  row_offset_.resize(n + 1);
  int total = 0;
  for (int i = 0; i <= n; ++i) {
    row_offset_[i] = total;
    total += n - i + 1;
  }
  boundary_.assign(total, 0);

  Int a_sum = std::accumulate(alpha.begin(), alpha.end(), Int{0});
  Int b_sum = std::accumulate(beta.begin(), beta.end(), Int{0});
  Int g_sum = std::accumulate(gamma.begin(), gamma.end(), Int{0});
  trace_ok_ = (g_sum == a_sum + b_sum);

  Int acc = 0;
  for (int j = 1; j <= n; ++j) boundary_[index(0, j)] = acc += alpha[j - 1];
  acc = a_sum;
  for (int i = 1; i <= n; ++i) boundary_[index(i, n - i)] = acc += beta[i - 1];
  acc = 0;
  for (int i = 1; i < n; ++i) boundary_[index(i, 0)] = acc += gamma[i - 1];

  // Interior points in row-major fill order.
  std::vector<int> order(total, -1);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; i + j <= n - 1; ++j) {
      order[index(i, j)] = static_cast<int>(vars_.size());
      vars_.push_back(Var{index(i, j), {}, {}});
    }

  auto add = [&](int p1, int p2, int q1, int q2) {
    Rhombus r{p1, p2, q1, q2};
    all_rhombi_.push_back(r);
    int last = std::max({order[p1], order[p2], order[q1], order[q2]});
    if (last < 0) {
      fixed_rhombi_.push_back(r);
      return;
    }
    Var& v = vars_[last];
    int pt = v.point;
    if (p1 == pt) v.lower.push_back({q1, q2, p2});
    else if (p2 == pt) v.lower.push_back({q1, q2, p1});
    else if (q1 == pt) v.upper.push_back({p1, p2, q2});
    else v.upper.push_back({p1, p2, q1});
  };
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) {
      if (i + j + 2 <= n) add(index(i + 1, j), index(i, j + 1), index(i, j), index(i + 1, j + 1));
      if (j >= 1 && i + j + 1 <= n)
        add(index(i, j), index(i + 1, j), index(i, j + 1), index(i + 1, j - 1));
      if (i >= 1 && i + j + 1 <= n)
        add(index(i, j), index(i, j + 1), index(i + 1, j), index(i - 1, j + 1));
    }
  for (const Var& v : vars_)
    if (v.lower.empty() || v.upper.empty())
      throw ValidationFailure("hive variable without a two-sided bound");
}

bool HivePolytope::boundary_feasible(bool strict) const {
  if (!trace_ok_) return false;
  const Int slack = strict ? 1 : 0;
  for (const Rhombus& r : fixed_rhombi_)
    if (boundary_[r.p1] + boundary_[r.p2] - boundary_[r.q1] - boundary_[r.q2] < slack) return false;
  return true;
}

Hive HivePolytope::to_hive(const std::vector<Int>& h) const {
  Hive out;
  out.n = n_;
  out.entries.resize(n_ + 1);
  for (int i = 0; i <= n_; ++i)
    out.entries[i].assign(h.begin() + row_offset_[i], h.begin() + row_offset_[i] + (n_ - i + 1));
  return out;
}

struct HivePolytope::Worker {
  const HivePolytope& poly;
  NodeBudget& budget;
  std::vector<Int> h;
  Int slack;
  Count pending = 0;

  Worker(const HivePolytope& p, NodeBudget& b, bool strict)
      : poly(p), budget(b), h(p.boundary_), slack(strict ? 1 : 0) {}

  void tick() {
    if (++pending == kFlushEvery) flush();
  }
  void flush() {
    budget.add(pending);
    pending = 0;
  }

  void interval(int k, Int& lo, Int& hi) const {
    const Var& v = poly.vars_[k];
    lo = std::numeric_limits<Int>::min();
    hi = std::numeric_limits<Int>::max();
    for (const Bound& b : v.lower) lo = std::max(lo, h[b.plus1] + h[b.plus2] - h[b.minus]);
    for (const Bound& b : v.upper) hi = std::min(hi, h[b.plus1] + h[b.plus2] - h[b.minus]);
    lo += slack;
    hi -= slack;
  }

  Count count_from(int k) {
    tick();
    Int lo, hi;
    interval(k, lo, hi);
    if (lo > hi) return 0;
    const int last = static_cast<int>(poly.vars_.size()) - 1;
    if (k == last) return static_cast<Count>(hi - lo + 1);
    Count total = 0;
    const int pt = poly.vars_[k].point;
    for (Int x = lo; x <= hi; ++x) {
      h[pt] = x;
      total += count_from(k + 1);
    }
    return total;
  }

  void enumerate_from(int k, std::vector<Hive>& out) {
    if (k == static_cast<int>(poly.vars_.size())) {
      out.push_back(poly.to_hive(h));
      return;
    }
    tick();
    Int lo, hi;
    interval(k, lo, hi);
    const int pt = poly.vars_[k].point;
    for (Int x = lo; x <= hi; ++x) {
      h[pt] = x;
      enumerate_from(k + 1, out);
    }
  }
};

Count HivePolytope::count(const HiveOptions& opts) const {
  if (!boundary_feasible(opts.strict)) return 0;
  if (vars_.empty()) return 1;
  NodeBudget budget(opts.node_limit);
  if (opts.threads <= 1 || vars_.size() < 2) {
    Worker w(*this, budget, opts.strict);
    Count c = w.count_from(0);
    w.flush();
    return c;
  }

  Worker probe(*this, budget, opts.strict);
  Int lo, hi;
  probe.interval(0, lo, hi);
  if (lo > hi) return 0;
  std::atomic<Int> next{lo};
  std::atomic<Count> total{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto run = [&] {
    try {
      Worker w(*this, budget, opts.strict);
      Count local = 0;
      for (Int x = next.fetch_add(1); x <= hi; x = next.fetch_add(1)) {
        w.h[vars_[0].point] = x;
        local += w.count_from(1);
      }
      w.flush();
      total += local;
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = hi + 1;
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < opts.threads; ++t) pool.emplace_back(run);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return total;
}

std::vector<Hive> HivePolytope::enumerate(const HiveOptions& opts) const {
  std::vector<Hive> out;
  if (!boundary_feasible(opts.strict)) return out;
  NodeBudget budget(opts.node_limit);
  Worker w(*this, budget, opts.strict);
  w.enumerate_from(0, out);
  w.flush();
  return out;
}

bool satisfies_rhombi(const HivePolytope& p, const Hive& hive, bool strict) {
  if (hive.n != p.n_ || static_cast<int>(hive.entries.size()) != p.n_ + 1) return false;
  std::vector<Int> h(p.boundary_.size());
  for (int i = 0; i <= p.n_; ++i) {
    if (static_cast<int>(hive.entries[i].size()) != p.n_ - i + 1) return false;
    for (int j = 0; i + j <= p.n_; ++j) h[p.index(i, j)] = hive.entries[i][j];
  }
  for (int i = 0; i <= p.n_; ++i)
    for (int j = 0; i + j <= p.n_; ++j) {
      bool interior = i >= 1 && j >= 1 && i + j <= p.n_ - 1;
      if (!interior && h[p.index(i, j)] != p.boundary_[p.index(i, j)]) return false;
    }
  const Int slack = strict ? 1 : 0;
  for (const auto& r : p.all_rhombi_)
    if (h[r.p1] + h[r.p2] - h[r.q1] - h[r.q2] < slack) return false;
  return true;
}

namespace {

bool extend_or_zero(const Triple& t, UnTriple& out) {
  try {
    out = extend_to_un(t);
    return true;
  } catch (const Incompatible&) {
    return false;
  } catch (const NegativeShift&) {
    return false;
  }
}

} // namespace

Count count_hives(const Triple& t, const HiveOptions& opts) {
  UnTriple u;
  if (!extend_or_zero(t, u)) return 0;
  return HivePolytope(u.alpha, u.beta, u.gamma).count(opts);
}

std::vector<Hive> enumerate_hives(const Triple& t, const HiveOptions& opts) {
  UnTriple u;
  if (!extend_or_zero(t, u)) return {};
  return HivePolytope(u.alpha, u.beta, u.gamma).enumerate(opts);
}

namespace {

struct TableauxCounter {
  std::vector<std::pair<int, int>> cells; // reading order
  std::vector<int> right, above;          // index of neighbour cell or -1
  std::vector<int> value;
  std::vector<Int> content, cap;
  int max_value;
  Count nodes = 0, limit;

  Count run(std::size_t k) {
    if (++nodes > limit) throw ResourceLimit("LR tableau search exceeded node limit");
    if (k == cells.size()) return 1;
    int hi = right[k] >= 0 ? value[right[k]] : max_value;
    int lo = above[k] >= 0 ? value[above[k]] + 1 : 1;
    Count total = 0;
    for (int v = lo; v <= hi; ++v) {
      if (content[v] + 1 > cap[v]) continue;
      if (v > 1 && content[v] + 1 > content[v - 1]) continue;
      ++content[v];
      value[k] = v;
      total += run(k + 1);
      --content[v];
    }
    return total;
  }
};

} // namespace

Count lr_tableaux(const IntPartition& alpha, const IntPartition& beta, const IntPartition& gamma,
                  Count node_limit) {
  const std::size_t n = gamma.size();
  if (alpha.size() != n || beta.size() != n) throw RankMismatch("partitions of different lengths");
  Int a = 0, b = 0, g = 0;
  for (std::size_t r = 0; r < n; ++r) {
    if (alpha[r] > gamma[r] || alpha[r] < 0 || beta[r] < 0) return 0;
    a += alpha[r];
    b += beta[r];
    g += gamma[r];
  }
  if (g != a + b) return 0;

  TableauxCounter tc;
  tc.limit = node_limit;
  tc.max_value = static_cast<int>(n);
  std::vector<std::vector<int>> id(n);
  for (std::size_t r = 0; r < n; ++r) {
    id[r].assign(static_cast<std::size_t>(gamma[r]), -1);
    for (Int c = gamma[r] - 1; c >= alpha[r]; --c) {
      int k = static_cast<int>(tc.cells.size());
      id[r][c] = k;
      tc.cells.emplace_back(static_cast<int>(r), static_cast<int>(c));
      tc.right.push_back(c + 1 < gamma[r] ? id[r][c + 1] : -1);
      tc.above.push_back(r > 0 && c >= alpha[r - 1] ? id[r - 1][c] : -1);
    }
  }
  tc.value.assign(tc.cells.size(), 0);
  tc.content.assign(n + 1, 0);
  tc.cap.assign(n + 1, 0);
  for (std::size_t v = 1; v <= n; ++v) tc.cap[v] = beta[v - 1];
  tc.content[0] = std::numeric_limits<Int>::max();
  return tc.run(0);
}

Count lr_oracle(const Triple& t, const HiveOptions& opts) {
  UnTriple u;
  if (!extend_or_zero(t, u)) return 0;
  return lr_tableaux(u.alpha, u.beta, u.gamma, opts.node_limit);
}

std::vector<DecompositionEntry> tensor_decompose(const Weight& lam, const Weight& mu,
                                                 const HiveOptions& opts) {
  if (lam.n != mu.n) throw RankMismatch("tensor factors of different ranks");
  const int n = lam.n;
  const IntPartition alpha = ell(lam), beta = ell(mu);
  const Int target = std::accumulate(alpha.begin(), alpha.end(), Int{0}) +
                     std::accumulate(beta.begin(), beta.end(), Int{0});
  std::vector<Int> lo(n), tail_lo(n + 1, 0);
  for (int i = 0; i < n; ++i) lo[i] = std::max(alpha[i], beta[i]);
  for (int i = n - 1; i >= 0; --i) tail_lo[i] = tail_lo[i + 1] + lo[i];

  std::vector<DecompositionEntry> out;
  IntPartition gamma(n);
  auto visit = [&](auto&& self, int i, Int ceiling, Int remaining) -> void {
    if (i == n - 1) {
      if (remaining < lo[i] || remaining > ceiling) return;
      gamma[i] = remaining;
      Count c = HivePolytope(alpha, beta, gamma).count(opts);
      if (c > 0) out.push_back({weight_from_partition(gamma), c});
      return;
    }
    for (Int g = std::min(ceiling, remaining - tail_lo[i + 1]); g >= lo[i]; --g) {
      if (remaining - g > g * (n - 1 - i)) break;
      gamma[i] = g;
      self(self, i + 1, g, remaining - g);
    }
  };
  visit(visit, 0, alpha[0] + beta[0], target);
  std::sort(out.begin(), out.end(),
            [](const DecompositionEntry& x, const DecompositionEntry& y) { return x.nu < y.nu; });
  return out;
}

TensorReport tensor_polytope_report(const Weight& lam, const Weight& mu, const HiveOptions& opts) {
  TensorReport r;
  r.entries = tensor_decompose(lam, mu, opts);
  r.distinct = r.entries.size();
  for (const auto& e : r.entries) {
    r.total += e.multiplicity;
    r.max = std::max(r.max, e.multiplicity);
  }
  return r;
}

} // namespace hivelab
