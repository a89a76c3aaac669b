#include "matvol/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <string>
#include <thread>

#include "matvol/errors.hpp"

namespace matvol {

namespace {

struct Constraint {
  Subset set;
  std::int64_t rank;
};

// Constraints grouped by their largest element, so each is tested as soon as
// its coordinates are fixed. Non-flats are dropped: if rank(F+e) = rank(F)
// then x(F) <= x(F+e) bounds x(F) already.
std::vector<std::vector<Constraint>> constraints_by_last(const Matroid& m) {
  std::vector<std::vector<Constraint>> by_last(m.ground_size());
  const Subset ground = m.ground();
  for (Subset s = 1; s <= ground && s != 0; ++s) {
    const int r = m.rank_of(s);
    bool closed = true;
    for (int e = 0; e < m.ground_size() && closed; ++e) {
      if (!contains(s, e)) closed = m.rank_of(s | singleton(e)) > r;
    }
    if (!closed) continue;
    by_last[31 - __builtin_clz(s)].push_back({s, r});
  }
  return by_last;
}

class LatticePointCounter {
 public:
  LatticePointCounter(const Matroid& m, int t)
      : by_last_(constraints_by_last(m)),
        t_(t),
        size_(m.ground_size()),
        x_(m.ground_size(), 0) {
    target_ = static_cast<std::int64_t>(t) * m.rank();
  }

  std::uint64_t count() {
    if (size_ == 0) return target_ == 0 ? 1 : 0;
    return descend(0, target_);
  }

 private:
  std::uint64_t descend(int i, std::int64_t remaining) {
    const std::int64_t slots_after = static_cast<std::int64_t>(size_ - 1 - i);
    const std::int64_t low = std::max<std::int64_t>(0, remaining - slots_after * t_);
    const std::int64_t high = std::min<std::int64_t>(t_, remaining);
    std::uint64_t total = 0;
    for (std::int64_t v = low; v <= high; ++v) {
      x_[i] = v;
      if (!satisfied(i)) continue;
      total += i + 1 == size_ ? 1 : descend(i + 1, remaining - v);
    }
    return total;
  }

  bool satisfied(int i) const {
    for (const auto& c : by_last_[i]) {
      std::int64_t sum = 0;
      for (Subset es = c.set; es; es &= es - 1) sum += x_[__builtin_ctz(es)];
      if (sum > t_ * c.rank) return false;
    }
    return true;
  }

  std::vector<std::vector<Constraint>> by_last_;
  std::int64_t t_;
  int size_;
  std::int64_t target_ = 0;
  std::vector<std::int64_t> x_;
};

}  // namespace

bool contains_lattice_point(const Matroid& m, std::span<const std::int64_t> x,
                            std::int64_t t) {
  if (static_cast<int>(x.size()) != m.ground_size()) {
    throw InvalidInput("point must have one coordinate per element");
  }
  std::int64_t total = 0;
  for (auto v : x) {
    if (v < 0 || v > t) return false;
    total += v;
  }
  if (total != t * m.rank()) return false;
  const Subset ground = m.ground();
  for (Subset s = 1; s <= ground && s != 0; ++s) {
    std::int64_t sum = 0;
    for (Subset es = s; es; es &= es - 1) sum += x[__builtin_ctz(es)];
    if (sum > t * m.rank_of(s)) return false;
  }
  return true;
}

std::uint64_t ehrhart_count(const Matroid& m, int t) {
  if (t < 0) throw PreconditionError("dilation must be non-negative");
  return LatticePointCounter(m, t).count();
}

std::vector<std::uint64_t> ehrhart_counts(const Matroid& m, int max_t,
                                          int threads) {
  std::vector<std::uint64_t> counts(max_t + 1, 0);
  const int workers = std::clamp(threads, 1, max_t + 1);
  if (workers == 1) {
    for (int t = 0; t <= max_t; ++t) counts[t] = ehrhart_count(m, t);
    return counts;
  }
  // Largest dilations first; each slot is written by exactly one worker.
  std::atomic<int> next{max_t};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int t = next--; t >= 0; t = next--) counts[t] = ehrhart_count(m, t);
    });
  }
  pool.clear();
  return counts;
}

int polytope_dimension(const Matroid& m) {
  return m.ground_size() - static_cast<int>(connected_components(m).size());
}

OracleVolume oracle_volume(const Matroid& m, int budget, int threads) {
  if (m.ground_size() > budget) {
    throw BudgetExceeded("oracle budget is " + std::to_string(budget) +
                         " elements; matroid has " +
                         std::to_string(m.ground_size()));
  }
  OracleVolume result;
  result.dimension = polytope_dimension(m);
  result.counts = ehrhart_counts(m, result.dimension, threads);
  const int dim = result.dimension;
  BigInt difference = 0;
  for (int j = 0; j <= dim; ++j) {
    BigInt term = binomial(dim, j) * BigInt(result.counts[dim - j]);
    difference += (j % 2 == 0) ? term : BigInt(-term);
  }
  result.scaled = difference;
  result.volume = {Rational(difference, factorial(dim))};
  return result;
}

std::vector<std::vector<int>> vertices(const Matroid& m) {
  std::vector<std::vector<int>> out;
  out.reserve(m.bases().size());
  for (Subset b : m.bases()) {
    std::vector<int> v(m.ground_size(), 0);
    for (int e : elements_of(b)) v[e] = 1;
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace matvol
