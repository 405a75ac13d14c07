#include <itop/lattice.hpp>

#include <algorithm>
#include <cstddef>
#include <deque>
#include <functional>
#include <limits>
#include <stdexcept>
#include <utility>

namespace itop {

namespace {

/// Dense-matrix max flow with breadth-first augmenting paths. The networks
/// here are tiny (a handful of vertices per class), so the simple quadratic
/// representation wins over anything fancier. All capacities fit in int64.
class MaxFlowNet {
 public:
  explicit MaxFlowNet(int n)
      : n_(n), cap_(static_cast<std::size_t>(n),
                    std::vector<long long>(static_cast<std::size_t>(n), 0)) {}

  void add(int u, int v, long long c) {
    cap_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] += c;
  }

  long long max_flow(int s, int t) {
    long long flow = 0;
    for (;;) {
      std::vector<int> prev(static_cast<std::size_t>(n_), -1);
      prev[static_cast<std::size_t>(s)] = s;
      std::deque<int> queue{s};
      while (!queue.empty() && prev[static_cast<std::size_t>(t)] == -1) {
        int u = queue.front();
        queue.pop_front();
        for (int v = 0; v < n_; ++v)
          if (prev[static_cast<std::size_t>(v)] == -1 &&
              cap_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] >
                  0) {
            prev[static_cast<std::size_t>(v)] = u;
            queue.push_back(v);
          }
      }
      if (prev[static_cast<std::size_t>(t)] == -1) return flow;
      long long aug = std::numeric_limits<long long>::max();
      for (int v = t; v != s; v = prev[static_cast<std::size_t>(v)])
        aug = std::min(
            aug,
            cap_[static_cast<std::size_t>(prev[static_cast<std::size_t>(v)])]
                [static_cast<std::size_t>(v)]);
      for (int v = t; v != s; v = prev[static_cast<std::size_t>(v)]) {
        int u = prev[static_cast<std::size_t>(v)];
        cap_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] -= aug;
        cap_[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] += aug;
      }
      flow += aug;
    }
  }

 private:
  int n_;
  std::vector<std::vector<long long>> cap_;
};

/// Calls `emit` for every nonnegative integer vector bounded coordinatewise
/// by `caps` whose entries sum to `total`.
void for_each_bounded_composition(
    const std::vector<long>& caps, long total,
    const std::function<void(const std::vector<long>&)>& emit) {
  std::size_t n = caps.size();
  std::vector<long> suffix(n + 1, 0);  // suffix[i] = caps[i] + ... + caps[n-1]
  for (std::size_t i = n; i > 0; --i) suffix[i - 1] = suffix[i] + caps[i - 1];
  std::vector<long> cur(n, 0);
  std::function<void(std::size_t, long)> go = [&](std::size_t i, long left) {
    if (left > suffix[i]) return;
    if (i == n) {
      emit(cur);
      return;
    }
    for (long x = 0; x <= std::min(caps[i], left); ++x) {
      cur[i] = x;
      go(i + 1, left - x);
    }
    cur[i] = 0;
  };
  go(0, total);
}

}  // namespace

WeightSystem make_weight_system(const SignedBipartiteGraph& g,
                                std::map<std::string, Rat> weights) {
  for (const auto& [id, w] : weights) {
    if (!g.has_edge_id(id))
      throw std::invalid_argument("weight system: unknown edge id '" + id +
                                  "'");
    if (w < 0)
      throw std::invalid_argument("weight system: negative weight on edge '" +
                                  id + "'");
  }
  WeightSystem ws;
  ws.weights = std::move(weights);
  for (const auto& e : g.edges()) ws.weights.emplace(e.id, Rat(0));
  for (const auto& [id, w] : ws.weights) ws.total += w;
  return ws;
}

std::map<std::string, Rat> vertex_marginals(const SignedBipartiteGraph& g,
                                            const WeightSystem& w) {
  std::map<std::string, Rat> m;
  for (const auto& lab : g.e_vertices()) m.emplace(lab, Rat(0));
  for (const auto& lab : g.v_vertices()) m.emplace(lab, Rat(0));
  for (const auto& e : g.edges()) {
    const Rat& x = w.weights.at(e.id);
    m[e.e] += x;
    m[e.v] += x;
  }
  return m;
}

WeightSystem cycle_change(const SignedBipartiteGraph& g, const WeightSystem& w,
                          const CycleWitness& cycle, const Rat& delta) {
  WeightSystem out = w;
  for (std::size_t i = 0; i < cycle.edge_ids.size(); ++i) {
    const std::string& id = cycle.edge_ids[i];
    if (!g.has_edge_id(id))
      throw std::invalid_argument("cycle change: unknown edge id '" + id +
                                  "'");
    Rat& x = out.weights.at(id);
    x += (i % 2 == 0) ? delta : -delta;
    if (x < 0)
      throw std::invalid_argument(
          "cycle change: weight on edge '" + id + "' would become negative");
  }
  return out;
}

std::vector<LatticePoint> lattice_points(const SignedBipartiteGraph& g,
                                         long s) {
  if (s < 0) throw std::invalid_argument("lattice points: negative dilation");
  std::vector<LatticePoint> out;
  if (g.edges().empty()) return out;  // empty polytope, even at s = 0

  const auto& evs = g.e_vertices();
  const auto& vvs = g.v_vertices();
  int ne = static_cast<int>(evs.size());
  int nv = static_cast<int>(vvs.size());

  // support pairs (E index, V index), each listed once
  std::map<std::string, int> eidx, vidx;
  for (int i = 0; i < ne; ++i) eidx[evs[static_cast<std::size_t>(i)]] = i;
  for (int j = 0; j < nv; ++j) vidx[vvs[static_cast<std::size_t>(j)]] = j;
  std::vector<std::pair<int, int>> support;
  {
    std::vector<std::vector<bool>> seen(
        static_cast<std::size_t>(ne),
        std::vector<bool>(static_cast<std::size_t>(nv), false));
    for (const auto& e : g.edges()) {
      int i = eidx[e.e], j = vidx[e.v];
      if (!seen[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
        seen[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
        support.emplace_back(i, j);
      }
    }
  }

  // a vertex without incident edges can only carry marginal 0
  std::vector<long> e_caps(static_cast<std::size_t>(ne), 0);
  std::vector<long> v_caps(static_cast<std::size_t>(nv), 0);
  for (const auto& [i, j] : support) {
    e_caps[static_cast<std::size_t>(i)] = s;
    v_caps[static_cast<std::size_t>(j)] = s;
  }

  auto feasible = [&](const std::vector<long>& a, const std::vector<long>& b) {
    // source 0, E vertices 1..ne, V vertices ne+1..ne+nv, sink ne+nv+1
    int t = ne + nv + 1;
    MaxFlowNet net(t + 1);
    for (int i = 0; i < ne; ++i)
      net.add(0, 1 + i, a[static_cast<std::size_t>(i)]);
    for (int j = 0; j < nv; ++j)
      net.add(1 + ne + j, t, b[static_cast<std::size_t>(j)]);
    for (const auto& [i, j] : support) net.add(1 + i, 1 + ne + j, s + 1);
    return net.max_flow(0, t) == s;
  };

  for_each_bounded_composition(e_caps, s, [&](const std::vector<long>& a) {
    for_each_bounded_composition(v_caps, s, [&](const std::vector<long>& b) {
      if (!feasible(a, b)) return;
      LatticePoint p;
      for (int i = 0; i < ne; ++i)
        p.e_coords[evs[static_cast<std::size_t>(i)]] =
            a[static_cast<std::size_t>(i)];
      for (int j = 0; j < nv; ++j)
        p.v_coords[vvs[static_cast<std::size_t>(j)]] =
            b[static_cast<std::size_t>(j)];
      out.push_back(std::move(p));
    });
  });
  return out;
}

Int count_lattice_points(const SignedBipartiteGraph& g, long s) {
  return Int(lattice_points(g, s).size());
}

namespace {

/// Solves count(s) = sum_k a_k C(s + d - k, d) for a_0..a_d by forward
/// substitution: the evaluation matrix is lower triangular with unit
/// diagonal (C(s + d - k, d) vanishes for k > s and is 1 at k = s), so the
/// solution is exact and automatically integral for integer counts.
std::vector<Rat> solve_binomial_basis(const std::vector<Int>& counts, long d) {
  std::vector<Rat> a(static_cast<std::size_t>(d) + 1, Rat(0));
  for (long sd = 0; sd <= d; ++sd) {
    Rat acc(counts[static_cast<std::size_t>(sd)]);
    for (long k = 0; k < sd; ++k)
      acc -= a[static_cast<std::size_t>(k)] * Rat(binomial(sd + d - k, d));
    a[static_cast<std::size_t>(sd)] = acc;
  }
  return a;
}

IntPolynomial rats_to_poly(const std::vector<Rat>& a) {
  std::vector<Int> c;
  c.reserve(a.size());
  for (const auto& q : a) {
    if (boost::multiprecision::denominator(q) != 1)
      throw std::logic_error(
          "binomial-basis coefficients were expected to be integers");
    c.push_back(boost::multiprecision::numerator(q));
  }
  return IntPolynomial(std::move(c));
}

void refuse_large_negative_sets(const SignedBipartiteGraph& g) {
  if (g.negative_edge_count() > 20)
    throw std::invalid_argument(
        "signed lattice sums: more than 20 negative edges (2^" +
        std::to_string(g.negative_edge_count()) +
        " subsets would be required)");
}

}  // namespace

EhrhartData ehrhart_data(const SignedBipartiteGraph& g) {
  if (g.edges().empty())
    throw std::invalid_argument(
        "ehrhart data: graph has no edges (empty polytope has no counting "
        "polynomial)");
  EhrhartData d;
  d.degree_bound = static_cast<long>(g.vertex_count()) - 2;
  for (long s = 0; s <= d.degree_bound; ++s)
    d.counts.push_back(count_lattice_points(g, s));
  d.basis_coeffs = solve_binomial_basis(d.counts, d.degree_bound);
  rats_to_poly(d.basis_coeffs);  // integrality assertion
  return d;
}

IntPolynomial interior_via_ehrhart(const SignedBipartiteGraph& g) {
  if (g.vertex_count() == 0)
    throw std::invalid_argument("interior polynomial: graph has no vertices");
  if (g.edges().empty())
    return IntPolynomial::one_minus_x_pow(g.vertex_count() - 1);
  return rats_to_poly(ehrhart_data(g).basis_coeffs);
}

PowerSeriesTrunc ehrhart_series(const SignedBipartiteGraph& g,
                                std::size_t order) {
  std::vector<Rat> c(order + 1, Rat(0));
  c[0] = 1;  // one point in the 0-fold dilation by convention
  for (std::size_t s = 1; s <= order; ++s)
    c[s] = Rat(count_lattice_points(g, static_cast<long>(s)));
  return PowerSeriesTrunc(order, std::move(c));
}

PowerSeriesTrunc signed_ehrhart_series(const SignedBipartiteGraph& g,
                                       std::size_t order) {
  refuse_large_negative_sets(g);
  auto neg = g.negative_edge_ids();
  PowerSeriesTrunc acc(order);
  for (std::size_t mask = 0; mask < (std::size_t{1} << neg.size()); ++mask) {
    std::vector<std::string> del;
    for (std::size_t i = 0; i < neg.size(); ++i)
      if (mask & (std::size_t{1} << i)) del.push_back(neg[i]);
    auto term = ehrhart_series(delete_edges(g, del), order);
    acc = del.size() % 2 == 0 ? acc + term : acc - term;
  }
  return acc;
}

IntPolynomial signed_ehrhart_poly_coeffs(const SignedBipartiteGraph& g) {
  refuse_large_negative_sets(g);
  auto neg = g.negative_edge_ids();
  bool mixed = g.positive_edge_count() >= 1 && g.negative_edge_count() >= 1;

  if (!mixed) {
    // single-signed graphs: sum the polynomial route term by term
    IntPolynomial acc;
    for (std::size_t mask = 0; mask < (std::size_t{1} << neg.size()); ++mask) {
      std::vector<std::string> del;
      for (std::size_t i = 0; i < neg.size(); ++i)
        if (mask & (std::size_t{1} << i)) del.push_back(neg[i]);
      auto term = interior_via_ehrhart(delete_edges(g, del));
      acc = del.size() % 2 == 0 ? acc + term : acc - term;
    }
    return acc;
  }

  // one interpolation of the alternating count sums; a subset whose removal
  // leaves no edge contributes zero counts at every dilation
  long d = static_cast<long>(g.vertex_count()) - 2;
  std::vector<Int> counts(static_cast<std::size_t>(d) + 1, Int(0));
  for (std::size_t mask = 0; mask < (std::size_t{1} << neg.size()); ++mask) {
    std::vector<std::string> del;
    for (std::size_t i = 0; i < neg.size(); ++i)
      if (mask & (std::size_t{1} << i)) del.push_back(neg[i]);
    auto sub = delete_edges(g, del);
    int sgn = del.size() % 2 == 0 ? +1 : -1;
    for (long s = 0; s <= d; ++s)
      counts[static_cast<std::size_t>(s)] +=
          Int(sgn) * count_lattice_points(sub, s);
  }
  return rats_to_poly(solve_binomial_basis(counts, d));
}

}  // namespace itop
