#include "matvol/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "matvol/errors.hpp"

namespace matvol {

namespace {

// Order-preserving map of the elements of `s` (a subset of `frame`) onto
// {0, ..., |frame|-1}.
Subset compress(Subset s, Subset frame) {
  Subset out = 0;
  int next = 0;
  for (int e = 0; frame >> e; ++e) {
    if (!contains(frame, e)) continue;
    if (contains(s, e)) out |= singleton(next);
    ++next;
  }
  return out;
}

void sort_unique(std::vector<Subset>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

void check_exchange(int ground_size, const std::vector<Subset>& bases) {
  std::vector<std::uint8_t> is_basis(std::size_t{1} << ground_size, 0);
  for (Subset b : bases) is_basis[b] = 1;
  for (Subset b1 : bases) {
    for (Subset b2 : bases) {
      const Subset only1 = b1 & ~b2;
      const Subset only2 = b2 & ~b1;
      for (Subset xs = only1; xs; xs &= xs - 1) {
        const Subset x = xs & -xs;
        bool found = false;
        for (Subset ys = only2; ys && !found; ys &= ys - 1) {
          const Subset y = ys & -ys;
          found = is_basis[(b1 & ~x) | y];
        }
        if (!found) {
          throw InvalidInput("basis family violates the exchange axiom");
        }
      }
    }
  }
}

class DisjointSets {
 public:
  explicit DisjointSets(int size) : parent_(size) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

std::vector<int> elements_of(Subset s) {
  std::vector<int> out;
  for (int e = 0; s >> e; ++e) {
    if (contains(s, e)) out.push_back(e);
  }
  return out;
}

Subset subset_of(std::span<const int> elements) {
  Subset s = 0;
  for (int e : elements) {
    if (e < 0 || e >= kMaxGroundSize) {
      throw InvalidInput("element " + std::to_string(e) + " out of range");
    }
    s |= singleton(e);
  }
  return s;
}

Matroid::Matroid(int ground_size, std::vector<Subset> bases)
    : ground_size_(ground_size),
      rank_(cardinality(bases.front())),
      bases_(std::move(bases)) {
  const std::size_t count = std::size_t{1} << ground_size_;
  std::vector<std::uint8_t> independent(count, 0);
  for (Subset b : bases_) independent[b] = 1;
  // Supersets have larger masks, so a descending sweep sees them first.
  for (std::size_t s = count; s-- > 0;) {
    if (independent[s]) continue;
    for (int e = 0; e < ground_size_; ++e) {
      if (!contains(static_cast<Subset>(s), e) &&
          independent[s | singleton(e)]) {
        independent[s] = 1;
        break;
      }
    }
  }
  rank_table_.assign(count, 0);
  for (std::size_t s = 1; s < count; ++s) {
    const Subset set = static_cast<Subset>(s);
    if (independent[s]) {
      rank_table_[s] = static_cast<std::uint8_t>(cardinality(set));
      continue;
    }
    std::uint8_t best = 0;
    for (Subset es = set; es; es &= es - 1) {
      best = std::max(best, rank_table_[set & ~(es & -es)]);
    }
    rank_table_[s] = best;
  }
}

Matroid Matroid::from_bases(int ground_size, std::vector<Subset> bases,
                            bool skip_exchange_check) {
  if (ground_size < 0 || ground_size > kMaxGroundSize) {
    throw InvalidInput("ground size must lie in [0, " +
                       std::to_string(kMaxGroundSize) + "]");
  }
  if (bases.empty()) throw InvalidInput("a matroid needs at least one basis");
  const Subset ground = full_set(ground_size);
  const int r = cardinality(bases.front());
  for (Subset b : bases) {
    if (b & ~ground) throw InvalidInput("basis element out of range");
    if (cardinality(b) != r) throw InvalidInput("bases have unequal sizes");
  }
  sort_unique(bases);
  const auto pairs = static_cast<std::uint64_t>(bases.size()) * bases.size();
  if (pairs <= kExchangeCheckPairLimit || !skip_exchange_check) {
    check_exchange(ground_size, bases);
  }
  return Matroid(ground_size, std::move(bases));
}

Matroid Matroid::from_basis_lists(int ground_size,
                                  const std::vector<std::vector<int>>& bases,
                                  bool skip_exchange_check) {
  std::vector<Subset> masks;
  masks.reserve(bases.size());
  for (const auto& b : bases) {
    const Subset s = subset_of(b);
    if (cardinality(s) != static_cast<int>(b.size())) {
      throw InvalidInput("basis lists an element twice");
    }
    masks.push_back(s);
  }
  return from_bases(ground_size, std::move(masks), skip_exchange_check);
}

Subset closure(const Matroid& m, Subset s) {
  const int r = m.rank_of(s);
  Subset out = s & m.ground();
  for (int e = 0; e < m.ground_size(); ++e) {
    if (!contains(out, e) && m.rank_of(s | singleton(e)) == r) {
      out |= singleton(e);
    }
  }
  return out;
}

bool is_flat(const Matroid& m, Subset s) { return closure(m, s) == s; }

std::vector<Subset> circuits(const Matroid& m) {
  std::vector<Subset> out;
  const Subset ground = m.ground();
  for (Subset s = 1; s <= ground && s != 0; ++s) {
    if (m.is_independent(s)) continue;
    bool minimal = true;
    for (Subset es = s; es && minimal; es &= es - 1) {
      minimal = m.is_independent(s & ~(es & -es));
    }
    if (minimal) out.push_back(s);
  }
  return out;
}

Subset loops(const Matroid& m) {
  Subset any = 0;
  for (Subset b : m.bases()) any |= b;
  return m.ground() & ~any;
}

Subset coloops(const Matroid& m) {
  Subset all = m.ground();
  for (Subset b : m.bases()) all &= b;
  return all;
}

std::vector<Subset> connected_components(const Matroid& m) {
  DisjointSets sets(m.ground_size());
  for (Subset c : circuits(m)) {
    const auto elems = elements_of(c);
    for (std::size_t i = 1; i < elems.size(); ++i) {
      sets.unite(elems[0], elems[i]);
    }
  }
  std::vector<Subset> by_root(m.ground_size(), 0);
  for (int e = 0; e < m.ground_size(); ++e) {
    by_root[sets.find(e)] |= singleton(e);
  }
  std::vector<Subset> out;
  for (Subset s : by_root) {
    if (s) out.push_back(s);
  }
  return out;
}

bool is_connected(const Matroid& m) {
  return connected_components(m).size() == 1;
}

Matroid dual(const Matroid& m) {
  std::vector<Subset> bases;
  bases.reserve(m.bases().size());
  for (Subset b : m.bases()) bases.push_back(m.ground() & ~b);
  return Matroid::from_bases(m.ground_size(), std::move(bases));
}

Relabeled restriction(const Matroid& m, Subset f) {
  f &= m.ground();
  const int r = m.rank_of(f);
  std::vector<Subset> bases;
  for (Subset b : m.bases()) {
    if (cardinality(b & f) == r) bases.push_back(compress(b & f, f));
  }
  sort_unique(bases);
  return {Matroid::from_bases(cardinality(f), std::move(bases)),
          elements_of(f)};
}

Relabeled deletion(const Matroid& m, Subset s) {
  return restriction(m, m.ground() & ~s);
}

Matroid relabel(const Matroid& m, std::span<const int> perm) {
  const int size = m.ground_size();
  if (static_cast<int>(perm.size()) != size) {
    throw InvalidInput("relabelling must name every element once");
  }
  std::vector<bool> seen(size, false);
  for (int p : perm) {
    if (p < 0 || p >= size || seen[p]) {
      throw InvalidInput("relabelling is not a permutation");
    }
    seen[p] = true;
  }
  std::vector<Subset> bases;
  bases.reserve(m.bases().size());
  for (Subset b : m.bases()) {
    Subset image = 0;
    for (int e : elements_of(b)) image |= singleton(perm[e]);
    bases.push_back(image);
  }
  return Matroid::from_bases(size, std::move(bases));
}

std::vector<CyclicFlat> cyclic_flats(const Matroid& m) {
  std::vector<CyclicFlat> out;
  const Subset ground = m.ground();
  for (Subset s = 0;; ++s) {
    const int r = m.rank_of(s);
    bool cyclic = true;
    for (Subset es = s; es && cyclic; es &= es - 1) {
      cyclic = m.rank_of(s & ~(es & -es)) == r;
    }
    if (cyclic && is_flat(m, s)) out.push_back({s, r});
    if (s == ground) break;
  }
  return out;
}

bool is_circuit_hyperplane(const Matroid& m, Subset h) {
  if ((h & ~m.ground()) || cardinality(h) != m.rank()) return false;
  if (m.rank_of(h) != m.rank() - 1) return false;
  for (Subset es = h; es; es &= es - 1) {
    if (!m.is_independent(h & ~(es & -es))) return false;
  }
  return is_flat(m, h);
}

std::vector<Subset> circuit_hyperplanes(const Matroid& m) {
  std::vector<Subset> out;
  const Subset ground = m.ground();
  for (Subset s = 0;; ++s) {
    if (cardinality(s) == m.rank() && is_circuit_hyperplane(m, s)) {
      out.push_back(s);
    }
    if (s == ground) break;
  }
  return out;
}

Matroid relax(const Matroid& m, Subset h) {
  if (!is_circuit_hyperplane(m, h)) {
    throw PreconditionError("relaxation needs a circuit-hyperplane");
  }
  std::vector<Subset> bases = m.bases();
  bases.push_back(h);
  return Matroid::from_bases(m.ground_size(), std::move(bases));
}

bool is_sparse_paving(const Matroid& m) {
  const Subset ground = m.ground();
  for (Subset s = 0;; ++s) {
    if (cardinality(s) == m.rank() && !m.is_independent(s) &&
        !is_circuit_hyperplane(m, s)) {
      return false;
    }
    if (s == ground) break;
  }
  return true;
}

Matroid uniform(int rank, int ground_size) {
  if (ground_size < 0 || ground_size > kMaxGroundSize || rank < 0 ||
      rank > ground_size) {
    throw InvalidInput("uniform matroid needs 0 <= rank <= ground size <= " +
                       std::to_string(kMaxGroundSize));
  }
  std::vector<Subset> bases;
  const Subset ground = full_set(ground_size);
  for (Subset s = 0;; ++s) {
    if (cardinality(s) == rank) bases.push_back(s);
    if (s == ground) break;
  }
  return Matroid::from_bases(ground_size, std::move(bases));
}

Matroid graphic(int vertices, const std::vector<std::pair<int, int>>& edges) {
  if (vertices < 0) throw InvalidInput("vertex count must be non-negative");
  const int m = static_cast<int>(edges.size());
  if (m > kMaxGroundSize) {
    throw InvalidInput("graph has more than " +
                       std::to_string(kMaxGroundSize) + " edges");
  }
  for (const auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= vertices || b >= vertices) {
      throw InvalidInput("edge endpoint out of range");
    }
  }
  DisjointSets whole(vertices);
  int rank = 0;
  for (const auto& [a, b] : edges) rank += whole.unite(a, b) ? 1 : 0;

  std::vector<Subset> bases;
  const Subset ground = full_set(m);
  for (Subset s = 0;; ++s) {
    if (cardinality(s) == rank) {
      DisjointSets forest(vertices);
      bool acyclic = true;
      for (Subset es = s; es && acyclic; es &= es - 1) {
        const auto& [a, b] = edges[__builtin_ctz(es)];
        acyclic = forest.unite(a, b);
      }
      if (acyclic) bases.push_back(s);
    }
    if (s == ground) break;
  }
  return Matroid::from_bases(m, std::move(bases));
}

Matroid direct_sum(const Matroid& a, const Matroid& b) {
  const int size = a.ground_size() + b.ground_size();
  if (size > kMaxGroundSize) {
    throw InvalidInput("direct sum exceeds the maximum ground size");
  }
  std::vector<Subset> bases;
  bases.reserve(a.bases().size() * b.bases().size());
  for (Subset x : a.bases()) {
    for (Subset y : b.bases()) bases.push_back(x | (y << a.ground_size()));
  }
  return Matroid::from_bases(size, std::move(bases));
}

Matroid sparse_paving(int n, int d, const std::vector<Subset>& hyperplanes) {
  if (n < 1 || d < 0 || d >= n || n + 1 > kMaxGroundSize) {
    throw InvalidInput("sparse paving matroid needs 0 <= d < n < " +
                       std::to_string(kMaxGroundSize));
  }
  const Subset ground = full_set(n + 1);
  std::vector<Subset> listed = hyperplanes;
  for (Subset h : listed) {
    if ((h & ~ground) || cardinality(h) != d + 1) {
      throw InvalidInput("circuit-hyperplane must be a (d+1)-subset of {0..n}");
    }
  }
  sort_unique(listed);
  if (listed.size() != hyperplanes.size()) {
    throw InvalidInput("circuit-hyperplane listed twice");
  }
  for (std::size_t i = 0; i < listed.size(); ++i) {
    for (std::size_t j = i + 1; j < listed.size(); ++j) {
      if (cardinality(listed[i] & listed[j]) > d - 1) {
        throw InvalidInput(
            "circuit-hyperplanes must pairwise share at most d-1 elements");
      }
    }
  }
  std::vector<Subset> bases;
  for (Subset s = 0;; ++s) {
    if (cardinality(s) == d + 1 &&
        !std::binary_search(listed.begin(), listed.end(), s)) {
      bases.push_back(s);
    }
    if (s == ground) break;
  }
  if (bases.empty()) throw InvalidInput("every (d+1)-subset was removed");
  return Matroid::from_bases(n + 1, std::move(bases));
}

Matroid schubert(const BinarySequence& b) {
  if (static_cast<int>(b.size()) > kMaxGroundSize) {
    throw InvalidInput("sequence longer than the maximum ground size");
  }
  std::vector<Subset> bases{0};
  int rank = 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    const Subset e = singleton(static_cast<int>(i));
    if (b[i] == 1) {
      for (Subset& basis : bases) basis |= e;
      ++rank;
      continue;
    }
    // Free extension: the new element completes every independent set of
    // size rank-1 to a basis.
    std::vector<Subset> extended = bases;
    for (Subset basis : bases) {
      for (Subset xs = basis; xs; xs &= xs - 1) {
        extended.push_back((basis & ~(xs & -xs)) | e);
      }
    }
    sort_unique(extended);
    bases = std::move(extended);
  }
  return Matroid::from_bases(static_cast<int>(b.size()), std::move(bases));
}

}  // namespace matvol
