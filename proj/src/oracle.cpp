#include "cliquebench/oracle.hpp"

#include <cmath>
#include <vector>

namespace cliquebench {
namespace {

// Branch and bound over bitset candidate sets. Candidates are greedily
// colored in index order; a vertex with color c can extend the current
// clique by at most c vertices, which bounds the subtree.
class CliqueSearch {
 public:
  CliqueSearch(const Graph& g, std::size_t best_size, std::size_t stop_at)
      : g_(g), best_size_(best_size), stop_at_(stop_at) {}

  void run(const Bitset& candidates) {
    if (candidates.none()) {
      if (best_size_ == 0 && stop_at_ == 0) found_ = true;
      return;
    }
    expand(candidates);
  }

  std::size_t best_size() const { return best_size_; }
  const std::vector<Vertex>& best() const { return best_; }
  bool found() const { return found_; }

 private:
  void color_sort(const Bitset& p, std::vector<Vertex>& order, std::vector<std::size_t>& bound) {
    Bitset uncolored = p;
    std::size_t color = 0;
    while (uncolored.any()) {
      ++color;
      Bitset q = uncolored;
      for (std::size_t v = q.find_first(); v < q.size(); v = q.find_next(v + 1)) {
        q.reset(v);
        Bitset adj = q;
        adj.and_words(g_.row(static_cast<Vertex>(v)));
        q.subtract(adj);  // a color class is an independent set
        uncolored.reset(v);
        order.push_back(static_cast<Vertex>(v));
        bound.push_back(color);
      }
    }
  }

  void expand(Bitset p) {
    std::vector<Vertex> order;
    std::vector<std::size_t> bound;
    order.reserve(p.count());
    bound.reserve(order.capacity());
    color_sort(p, order, bound);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current_.size() + bound[i] <= best_size_) return;
      const Vertex v = order[i];
      current_.push_back(v);
      Bitset next = p;
      next.and_words(g_.row(v));
      if (next.none()) {
        if (current_.size() > best_size_) {
          best_size_ = current_.size();
          best_ = current_;
          if (best_size_ >= stop_at_) found_ = true;
        }
      } else {
        expand(std::move(next));
      }
      current_.pop_back();
      if (found_) return;
      p.reset(v);
    }
  }

  const Graph& g_;
  std::size_t best_size_;
  std::size_t stop_at_;
  bool found_ = false;
  std::vector<Vertex> current_;
  std::vector<Vertex> best_;
};

}  // namespace

std::size_t clique_number(const Graph& g) {
  if (g.n() == 0) return 0;
  CliqueSearch search(g, 0, kUnlimited);
  search.run(Bitset(g.n(), true));
  return search.best_size();
}

std::optional<VertexSet> find_clique_of_size(const Graph& g, const Bitset& candidates,
                                             std::size_t size) {
  if (size == 0) return VertexSet{};
  if (candidates.count() < size) return std::nullopt;
  CliqueSearch search(g, size - 1, size);
  search.run(candidates);
  if (!search.found()) return std::nullopt;
  std::vector<Vertex> members = search.best();
  members.resize(size);  // any `size` members of a larger clique still form a clique
  return VertexSet::from_unsorted(std::move(members));
}

VertexSet max_clique_exact(const Graph& g) {
  const std::size_t omega = clique_number(g);
  if (omega == 0) return {};
  // Fix members in increasing index order, keeping each vertex only if the
  // remaining slots can still be filled from higher-indexed common neighbors.
  std::vector<Vertex> chosen;
  Bitset cand(g.n(), true);
  for (std::size_t v = cand.find_first(); v < cand.size() && chosen.size() < omega;
       v = cand.find_next(v + 1)) {
    Bitset next = cand;
    next.and_words(g.row(static_cast<Vertex>(v)));
    next.clear_through(v);
    const std::size_t need = omega - chosen.size() - 1;
    if (need == 0 || find_clique_of_size(g, next, need)) {
      chosen.push_back(static_cast<Vertex>(v));
      cand = std::move(next);
      cand.set(v);  // keep the loop cursor valid; v itself is never revisited
    }
  }
  return VertexSet::from_sorted(std::move(chosen));
}

BruteForceResult brute_force_attack(const Graph& g, std::size_t k, std::uint64_t budget,
                                    const Deadline& deadline) {
  if (k > g.n()) {
    throw InputError("target size " + std::to_string(k) + " exceeds n=" + std::to_string(g.n()));
  }
  BruteForceResult result;
  if (k == 0) return BruteForceResult{VertexSet{}, 0, false};

  std::vector<Vertex> chosen;
  bool stop = false;
  auto dfs = [&](auto&& self, const Bitset& cand) -> void {
    if (chosen.size() == k) {
      result.clique = VertexSet::from_sorted(chosen);
      stop = true;
      return;
    }
    std::size_t remaining = cand.count();
    for (std::size_t v = cand.find_first(); v < cand.size(); v = cand.find_next(v + 1)) {
      if (chosen.size() + remaining < k) return;
      --remaining;
      if (result.examined >= budget ||
          ((result.examined & 0xfff) == 0 && deadline.expired())) {
        result.budget_exceeded = true;
        stop = true;
        return;
      }
      ++result.examined;
      Bitset next = cand;
      next.and_words(g.row(static_cast<Vertex>(v)));
      next.clear_through(v);
      chosen.push_back(static_cast<Vertex>(v));
      self(self, next);
      chosen.pop_back();
      if (stop) return;
    }
  };
  dfs(dfs, Bitset(g.n(), true));
  return result;
}

BigInt binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt acc = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    acc *= n - k + i;
    acc /= i;
  }
  return acc;
}

BigInt count_steps_estimate(std::size_t n, [[maybe_unused]] double p, std::size_t k) {
  return binomial(n, k);
}

double log2_big(const BigInt& value) {
  if (value <= 0) return -HUGE_VAL;
  const std::size_t msb = boost::multiprecision::msb(value);
  if (msb < 60) return std::log2(static_cast<double>(value));
  const BigInt top = value >> (msb - 52);
  return std::log2(static_cast<double>(top)) + static_cast<double>(msb - 52);
}

}  // namespace cliquebench
