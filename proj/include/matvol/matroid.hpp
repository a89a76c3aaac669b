#ifndef MATVOL_MATROID_HPP
#define MATVOL_MATROID_HPP

// Explicit small matroids on the ground set {0, ..., m-1}, stored as a basis
// family of bitmasks together with a full rank table.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "matvol/descent.hpp"

namespace matvol {

using Subset = std::uint32_t;

inline constexpr int kMaxGroundSize = 20;

// Basis families with more than this many ordered pairs are only checked for
// the exchange axiom when the caller does not opt out.
inline constexpr std::uint64_t kExchangeCheckPairLimit = 100'000'000;

inline int cardinality(Subset s) { return __builtin_popcount(s); }
inline bool contains(Subset s, int e) { return (s >> e) & 1U; }
inline Subset singleton(int e) { return Subset{1} << e; }
inline Subset full_set(int m) {
  return m == 32 ? ~Subset{0} : (Subset{1} << m) - 1;
}
std::vector<int> elements_of(Subset s);
Subset subset_of(std::span<const int> elements);

class Matroid {
 public:
  // Validates sizes, ranges and the exchange axiom; throws InvalidInput.
  // `skip_exchange_check` is honoured only above kExchangeCheckPairLimit.
  static Matroid from_bases(int ground_size, std::vector<Subset> bases,
                            bool skip_exchange_check = false);
  static Matroid from_basis_lists(int ground_size,
                                  const std::vector<std::vector<int>>& bases,
                                  bool skip_exchange_check = false);

  int ground_size() const { return ground_size_; }
  int rank() const { return rank_; }
  Subset ground() const { return full_set(ground_size_); }
  // Sorted ascending, no duplicates.
  const std::vector<Subset>& bases() const { return bases_; }

  int rank_of(Subset s) const { return rank_table_[s & ground()]; }
  bool is_independent(Subset s) const { return rank_of(s) == cardinality(s); }
  bool is_basis(Subset s) const {
    return cardinality(s) == rank_ && is_independent(s);
  }

  bool operator==(const Matroid& other) const {
    return ground_size_ == other.ground_size_ && bases_ == other.bases_;
  }

 private:
  Matroid(int ground_size, std::vector<Subset> bases);

  int ground_size_ = 0;
  int rank_ = 0;
  std::vector<Subset> bases_;
  std::vector<std::uint8_t> rank_table_;
};

// A matroid on a relabelled ground set; labels[i] is the original element
// now called i.
struct Relabeled {
  Matroid matroid;
  std::vector<int> labels;
};

struct CyclicFlat {
  Subset elements = 0;
  int rank = 0;

  bool operator==(const CyclicFlat&) const = default;
};

Subset closure(const Matroid& m, Subset s);
bool is_flat(const Matroid& m, Subset s);
// Minimal dependent sets, ascending by mask.
std::vector<Subset> circuits(const Matroid& m);
Subset loops(const Matroid& m);
Subset coloops(const Matroid& m);

// Classes of "lies on a common circuit"; loops and coloops are singletons.
// Ordered by least element.
std::vector<Subset> connected_components(const Matroid& m);
bool is_connected(const Matroid& m);

Matroid dual(const Matroid& m);
Relabeled restriction(const Matroid& m, Subset f);
Relabeled deletion(const Matroid& m, Subset s);
// Isomorphic copy in which element i is renamed perm[i].
Matroid relabel(const Matroid& m, std::span<const int> perm);

// Flats whose restriction has no coloops (unions of circuits), ascending.
std::vector<CyclicFlat> cyclic_flats(const Matroid& m);

bool is_circuit_hyperplane(const Matroid& m, Subset h);
std::vector<Subset> circuit_hyperplanes(const Matroid& m);
// Adds h as a basis. Throws PreconditionError unless h is a
// circuit-hyperplane.
Matroid relax(const Matroid& m, Subset h);
bool is_sparse_paving(const Matroid& m);

Matroid uniform(int rank, int ground_size);
// Bases are the spanning forests; edge i becomes element i.
Matroid graphic(int vertices, const std::vector<std::pair<int, int>>& edges);
// Elements of b are shifted past those of a.
Matroid direct_sum(const Matroid& a, const Matroid& b);
// Rank d+1 on {0..n}: every (d+1)-set except the listed circuit-hyperplanes.
Matroid sparse_paving(int n, int d, const std::vector<Subset>& hyperplanes);
// Coloop for each 1, free extension for each 0, elements in order.
Matroid schubert(const BinarySequence& b);

}  // namespace matvol

#endif  // MATVOL_MATROID_HPP
