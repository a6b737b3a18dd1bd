#pragma once

// Sum-product variable elimination for weighted homomorphism sums
//   sum over phi: V(H) -> V(P) preserving edges of prod_v weight[phi(v)].
// Each edge of H is a 0/1 factor over the two endpoint values; vertices are
// summed out in a greedy min-degree order, so forests cost O(m |P|^2).

#include <algorithm>
#include <cstddef>
#include <set>
#include <span>
#include <stdexcept>
#include <vector>

#include "extremal/graph.hpp"

namespace extremal::detail {

// Greedy min-degree elimination order on H (ties: lowest index), with fill.
inline std::vector<Vertex> min_degree_order(const Graph& h) {
  const std::size_t m = h.order();
  std::vector<std::set<Vertex>> adj(m);
  for (const auto& [u, v] : h.edges()) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  std::vector<bool> done(m, false);
  std::vector<Vertex> order;
  order.reserve(m);
  for (std::size_t step = 0; step < m; ++step) {
    Vertex best = 0;
    std::size_t best_degree = static_cast<std::size_t>(-1);
    for (Vertex v = 0; v < m; ++v) {
      if (!done[v] && adj[v].size() < best_degree) {
        best = v;
        best_degree = adj[v].size();
      }
    }
    done[best] = true;
    order.push_back(best);
    const std::vector<Vertex> nbrs(adj[best].begin(), adj[best].end());
    for (Vertex a : nbrs) {
      adj[a].erase(best);
      for (Vertex b : nbrs)
        if (a != b) adj[a].insert(b);
    }
    adj[best].clear();
  }
  return order;
}

template <typename T>
struct Factor {
  std::vector<Vertex> scope;       // H vertices
  std::vector<std::size_t> dims;   // domain size per scope entry
  std::vector<T> table;            // row-major, last scope entry fastest
};

constexpr std::size_t kMaxTable = std::size_t{1} << 22;

// `domains[v]` lists the P vertices H-vertex v may map to; `weight[i]` is the
// weight of P vertex i.
template <typename T>
T eliminate(const Graph& h, const Graph& p, const std::vector<Vertex>& order,
            const std::vector<std::vector<Vertex>>& domains, std::span<const T> weight) {
  const std::size_t m = h.order();
  std::vector<std::size_t> position(m);
  for (std::size_t i = 0; i < m; ++i) position[order[i]] = i;

  for (Vertex v = 0; v < m; ++v)
    if (domains[v].empty()) return T(0);

  std::vector<std::vector<Factor<T>>> bucket(m);
  auto place = [&](Factor<T>&& f, T& scalar) {
    if (f.scope.empty()) {
      scalar *= f.table[0];
      return;
    }
    Vertex first = f.scope[0];
    for (Vertex s : f.scope)
      if (position[s] < position[first]) first = s;
    bucket[first].push_back(std::move(f));
  };

  T result(1);
  for (const auto& [u, v] : h.edges()) {
    Factor<T> f;
    f.scope = {u, v};
    f.dims = {domains[u].size(), domains[v].size()};
    f.table.reserve(f.dims[0] * f.dims[1]);
    for (Vertex a : domains[u])
      for (Vertex b : domains[v]) f.table.push_back(p.adjacent(a, b) ? T(1) : T(0));
    place(std::move(f), result);
  }

  std::vector<std::size_t> value;
  std::vector<std::vector<std::size_t>> strides;
  for (const Vertex v : order) {
    std::vector<Factor<T>> factors = std::move(bucket[v]);

    // Combined scope: the new factor's scope followed by v itself.
    std::vector<Vertex> scope;
    for (const auto& f : factors)
      for (Vertex s : f.scope)
        if (s != v && std::find(scope.begin(), scope.end(), s) == scope.end()) scope.push_back(s);
    std::sort(scope.begin(), scope.end());

    Factor<T> out;
    out.scope = scope;
    std::size_t cells = 1;
    for (Vertex s : scope) {
      out.dims.push_back(domains[s].size());
      cells *= domains[s].size();
      if (cells > kMaxTable) {
        throw std::length_error("pattern too wide for exact homomorphism evaluation");
      }
    }

    const std::size_t k = scope.size();
    strides.assign(factors.size(), std::vector<std::size_t>(k + 1, 0));
    for (std::size_t fi = 0; fi < factors.size(); ++fi) {
      const auto& f = factors[fi];
      std::size_t stride = 1;
      for (std::size_t j = f.scope.size(); j-- > 0;) {
        const Vertex s = f.scope[j];
        const auto it = std::find(scope.begin(), scope.end(), s);
        const std::size_t slot = it == scope.end() ? k : static_cast<std::size_t>(it - scope.begin());
        strides[fi][slot] = stride;
        stride *= f.dims[j];
      }
    }

    out.table.assign(cells, T(0));
    value.assign(k, 0);
    const auto& dom_v = domains[v];
    for (std::size_t cell = 0; cell < cells; ++cell) {
      std::vector<std::size_t> base(factors.size(), 0);
      for (std::size_t fi = 0; fi < factors.size(); ++fi)
        for (std::size_t j = 0; j < k; ++j) base[fi] += strides[fi][j] * value[j];
      T sum(0);
      for (std::size_t i = 0; i < dom_v.size(); ++i) {
        T term = weight[dom_v[i]];
        for (std::size_t fi = 0; fi < factors.size() && term != 0; ++fi)
          term *= factors[fi].table[base[fi] + strides[fi][k] * i];
        sum += term;
      }
      out.table[cell] = sum;
      for (std::size_t j = k; j-- > 0;) {
        if (++value[j] < out.dims[j]) break;
        value[j] = 0;
      }
    }
    place(std::move(out), result);
  }
  return result;
}

}  // namespace extremal::detail
