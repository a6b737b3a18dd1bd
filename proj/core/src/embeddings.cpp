#include "extremal/embeddings.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

namespace extremal {

namespace {

using Word = Bitset::Word;

// uint64 running sum that spills into a big integer before it can overflow.
class Accumulator {
 public:
  void add(std::uint64_t k) {
    if (small_ > std::numeric_limits<std::uint64_t>::max() - k) flush();
    small_ += k;
  }
  mpz_class value() const {
    mpz_class out = big_;
    out += static_cast<unsigned long>(small_);
    return out;
  }

 private:
  void flush() {
    big_ += static_cast<unsigned long>(small_);
    small_ = 0;
  }
  std::uint64_t small_ = 0;
  mpz_class big_;
};

static_assert(sizeof(unsigned long) == sizeof(std::uint64_t),
              "Accumulator assumes a 64-bit unsigned long");

struct SearchPlan {
  std::vector<Vertex> order;
  // For each position, the earlier positions holding adjacent pattern vertices.
  std::vector<std::vector<std::size_t>> back;
};

SearchPlan make_plan(const Graph& pattern) {
  SearchPlan plan;
  plan.order = embedding_search_order(pattern);
  std::vector<std::size_t> position(pattern.order());
  for (std::size_t i = 0; i < plan.order.size(); ++i) position[plan.order[i]] = i;
  plan.back.resize(plan.order.size());
  for (std::size_t i = 0; i < plan.order.size(); ++i) {
    pattern.neighbors(plan.order[i]).for_each([&](std::size_t w) {
      if (position[w] < i) plan.back[i].push_back(position[w]);
    });
    std::sort(plan.back[i].begin(), plan.back[i].end());
  }
  return plan;
}

// Depth-first extension of a partial injective map. The last position is
// never enumerated: its candidate set is counted with a popcount.
class EmbeddingSearch {
 public:
  EmbeddingSearch(const SearchPlan& plan, const Graph& host, const Bitset& allowed,
                  bool track_degrees)
      : plan_(plan),
        host_(host),
        allowed_(allowed),
        track_(track_degrees),
        used_(host.order()),
        levels_(plan.order.size(), Bitset(host.order())),
        image_(plan.order.size(), 0),
        degrees_(track_degrees ? host.order() : 0) {}

  void run_from(Vertex first) {
    image_[0] = first;
    used_.set(first);
    if (plan_.order.size() == 1) {
      total_.add(1);
      if (track_) degrees_[first].add(1);
    } else {
      extend(1);
    }
    used_.reset(first);
  }

  const Accumulator& total() const { return total_; }
  const std::vector<Accumulator>& degrees() const { return degrees_; }

 private:
  void candidates(std::size_t pos, Bitset& out) const {
    const std::size_t words = out.word_count();
    Word* dst = out.words();
    const Word* allowed = allowed_.words();
    const Word* used = used_.words();
    const auto& back = plan_.back[pos];
    if (back.empty()) {
      for (std::size_t w = 0; w < words; ++w) dst[w] = allowed[w] & ~used[w];
      return;
    }
    const Word* first = host_.neighbors(image_[back[0]]).words();
    for (std::size_t w = 0; w < words; ++w) dst[w] = first[w] & allowed[w] & ~used[w];
    for (std::size_t b = 1; b < back.size(); ++b) {
      const Word* row = host_.neighbors(image_[back[b]]).words();
      for (std::size_t w = 0; w < words; ++w) dst[w] &= row[w];
    }
  }

  void extend(std::size_t pos) {
    Bitset& cand = levels_[pos];
    candidates(pos, cand);
    if (pos + 1 == plan_.order.size()) {
      const std::size_t k = cand.count();
      if (k == 0) return;
      total_.add(k);
      if (track_) {
        for (std::size_t i = 0; i < pos; ++i) degrees_[image_[i]].add(k);
        cand.for_each([&](std::size_t v) { degrees_[v].add(1); });
      }
      return;
    }
    cand.for_each([&](std::size_t v) {
      image_[pos] = static_cast<Vertex>(v);
      used_.set(v);
      extend(pos + 1);
      used_.reset(v);
    });
  }

  const SearchPlan& plan_;
  const Graph& host_;
  const Bitset& allowed_;
  bool track_;
  Bitset used_;
  std::vector<Bitset> levels_;
  std::vector<Vertex> image_;
  Accumulator total_;
  std::vector<Accumulator> degrees_;
};

struct CountResult {
  EmbeddingCount total;
  std::vector<EmbeddingCount> degrees;
};

CountResult run_count(const Graph& pattern, const Graph& host, const Bitset& allowed,
                      bool track_degrees, unsigned workers) {
  CountResult result;
  result.total = 0;
  if (track_degrees) result.degrees.assign(host.order(), EmbeddingCount(0));
  if (pattern.order() == 0) {
    result.total = 1;
    return result;
  }
  if (pattern.order() > allowed.count()) return result;

  const SearchPlan plan = make_plan(pattern);
  const std::vector<std::size_t> roots = allowed.to_vector();
  workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(roots.size())));

  std::vector<EmbeddingSearch> searches;
  searches.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) searches.emplace_back(plan, host, allowed, track_degrees);

  std::atomic<std::size_t> next{0};
  auto work = [&](EmbeddingSearch& search) {
    for (std::size_t i = next.fetch_add(1); i < roots.size(); i = next.fetch_add(1)) {
      search.run_from(static_cast<Vertex>(roots[i]));
    }
  };
  if (workers == 1) {
    work(searches[0]);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(work, std::ref(searches[w]));
  }

  for (const auto& search : searches) {
    result.total += search.total().value();
    if (track_degrees) {
      for (std::size_t v = 0; v < host.order(); ++v) result.degrees[v] += search.degrees()[v].value();
    }
  }
  return result;
}

Bitset all_vertices(const Graph& g) {
  Bitset b(g.order());
  b.set_all();
  return b;
}

}  // namespace

std::vector<Vertex> embedding_search_order(const Graph& pattern) {
  const std::size_t m = pattern.order();
  std::vector<Vertex> order;
  order.reserve(m);
  std::vector<bool> placed(m, false);
  std::vector<std::size_t> placed_neighbors(m, 0);
  for (std::size_t step = 0; step < m; ++step) {
    Vertex best = 0;
    bool have = false;
    for (Vertex v = 0; v < m; ++v) {
      if (placed[v]) continue;
      if (!have) {
        best = v;
        have = true;
        continue;
      }
      const auto key = [&](Vertex w) { return std::pair{placed_neighbors[w], pattern.degree(w)}; };
      if (key(v) > key(best)) best = v;
    }
    placed[best] = true;
    order.push_back(best);
    pattern.neighbors(best).for_each([&](std::size_t w) { ++placed_neighbors[w]; });
  }
  return order;
}

EmbeddingCount count_embeddings(const Graph& pattern, const Graph& host,
                                CountOptions options) {
  return run_count(pattern, host, all_vertices(host), false, options.workers).total;
}

EmbeddingCount count_embeddings_within(const Graph& pattern, const Graph& host,
                                       const Bitset& allowed, CountOptions options) {
  if (allowed.size() != host.order()) {
    throw std::invalid_argument("allowed set size does not match host order");
  }
  return run_count(pattern, host, allowed, false, options.workers).total;
}

EmbeddingCount count_automorphisms(const Graph& pattern) {
  return count_embeddings(pattern, pattern);
}

EmbeddingCount count_copies(const Graph& pattern, const Graph& host, CountOptions options) {
  const EmbeddingCount embeddings = count_embeddings(pattern, host, options);
  const EmbeddingCount automorphisms = count_automorphisms(pattern);
  EmbeddingCount copies;
  EmbeddingCount remainder;
  mpz_fdiv_qr(copies.get_mpz_t(), remainder.get_mpz_t(), embeddings.get_mpz_t(),
              automorphisms.get_mpz_t());
  if (remainder != 0) {
    throw std::logic_error("embedding count " + embeddings.get_str() +
                           " is not divisible by automorphism count " +
                           automorphisms.get_str());
  }
  return copies;
}

HDegreeReport::HDegreeReport(Graph pattern, Graph host, EmbeddingCount total,
                             std::vector<EmbeddingCount> per_vertex, CountOptions options)
    : pattern_(std::move(pattern)),
      host_(std::move(host)),
      total_(std::move(total)),
      per_vertex_(std::move(per_vertex)),
      options_(options) {}

EmbeddingCount HDegreeReport::pair(Vertex u, Vertex v) const {
  if (u == v) return h(u);
  Bitset avoid_u(host_.order());
  avoid_u.set_all();
  avoid_u.reset(u);
  Bitset avoid_v(host_.order());
  avoid_v.set_all();
  avoid_v.reset(v);
  Bitset avoid_both = avoid_u;
  avoid_both.reset(v);
  return total_ - count_embeddings_within(pattern_, host_, avoid_u, options_) -
         count_embeddings_within(pattern_, host_, avoid_v, options_) +
         count_embeddings_within(pattern_, host_, avoid_both, options_);
}

HDegreeReport h_degrees(const Graph& pattern, const Graph& host, CountOptions options) {
  CountResult result = run_count(pattern, host, all_vertices(host), true, options.workers);
  return HDegreeReport(pattern, host, std::move(result.total), std::move(result.degrees),
                       options);
}

Graph clone_move(const Graph& host, Vertex u, Vertex v) {
  if (u == v) throw std::invalid_argument("clone_move needs distinct vertices");
  if (u >= host.order() || v >= host.order()) {
    throw std::invalid_argument("clone_move vertex out of range");
  }
  std::vector<Edge> edges;
  for (const auto& e : host.edges()) {
    if (e.first != u && e.second != u) edges.push_back(e);
  }
  host.neighbors(v).for_each([&](std::size_t w) {
    if (w != u) edges.emplace_back(std::min<Vertex>(u, static_cast<Vertex>(w)),
                                   std::max<Vertex>(u, static_cast<Vertex>(w)));
  });
  std::vector<std::string> labels = host.labels();
  if (!labels.empty()) labels[u] = host.label(v) + "'";
  return Graph::from_edges(host.order(), edges, std::move(labels));
}

}  // namespace extremal
