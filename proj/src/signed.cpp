#include <itop/signed.hpp>

#include <itop/interior.hpp>

#include <bit>
#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>

namespace itop {

namespace {

void refuse_large_negative_sets(const SignedBipartiteGraph& g) {
  if (g.negative_edge_count() > 20)
    throw std::invalid_argument(
        "signed interior: full subset sum refused for more than 20 negative "
        "edges (have " + std::to_string(g.negative_edge_count()) + ")");
}

/// Full alternating sum over negative-edge subsets, visiting subsets in
/// Gray-code order (consecutive subsets differ by one edge). Interior values
/// of the unsigned remainders are cached by canonical key, so subsets whose
/// deletions leave the same labeled graph are evaluated once.
IntPolynomial gray_subset_sum(
    const SignedBipartiteGraph& g,
    const std::function<void(const std::vector<std::string>&, int,
                             const IntPolynomial&)>& row) {
  refuse_large_negative_sets(g);
  auto neg = g.negative_edge_ids();
  std::size_t n = neg.size();
  std::map<std::string, IntPolynomial> cache;
  IntPolynomial acc;
  for (std::size_t k = 0; k < (std::size_t{1} << n); ++k) {
    std::size_t mask = k ^ (k >> 1);  // Gray code
    std::vector<std::string> del;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) del.push_back(neg[i]);
    int sign = std::popcount(mask) % 2 == 0 ? +1 : -1;

    auto rest = forget_signs(delete_edges(g, del));
    std::string key = canonical_key(rest);
    auto it = cache.find(key);
    if (it == cache.end())
      it = cache.emplace(std::move(key), interior_prime(rest)).first;
    const IntPolynomial& value = it->second;

    acc = acc + value.scaled(Int(sign));
    if (row) row(del, sign, value);
  }
  return acc;
}

}  // namespace

IntPolynomial signed_interior(const SignedBipartiteGraph& g,
                              bool use_vanishing_shortcut) {
  if (use_vanishing_shortcut && find_alternating_cycle(g))
    return IntPolynomial();
  return gray_subset_sum(g, nullptr);
}

SignedInteriorTrace signed_interior_trace(const SignedBipartiteGraph& g) {
  SignedInteriorTrace t;
  t.total = gray_subset_sum(
      g, [&](const std::vector<std::string>& del, int sign,
             const IntPolynomial& value) {
        t.rows.push_back(SignedInteriorTrace::Row{del, sign, value});
      });
  return t;
}

std::pair<IntPolynomial, IntPolynomial> skein_triple_identity_check(
    const SignedBipartiteGraph& g, const std::string& edge_id) {
  if (!g.has_edge_id(edge_id))
    throw std::invalid_argument("resolution check: unknown edge id '" +
                                edge_id + "'");
  if (g.edge_by_id(edge_id).sign >= 0)
    throw std::invalid_argument("resolution check: edge '" + edge_id +
                                "' is not negative");
  IntPolynomial lhs = gray_subset_sum(g, nullptr);
  IntPolynomial rhs =
      gray_subset_sum(with_edge_sign(g, edge_id, +1), nullptr) -
      gray_subset_sum(delete_edges(g, {edge_id}), nullptr);
  return {lhs, rhs};
}

}  // namespace itop
