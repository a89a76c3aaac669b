#ifndef MATVOL_VOLUME_HPP
#define MATVOL_VOLUME_HPP

// Normalized volumes of matroid base polytopes from the lattice of cyclic
// flats. For a connected matroid on {0..n},
//
//   n! Vol(P_M) = sum over anchored chains F of  mu(F) * delta_leq(b_F)
//
// where mu is minus the Moebius function from an adjoined bottom in the
// refinement poset of chains, and b_F records rank and nullity increments
// along the chain.

#include <cstddef>
#include <vector>

#include "matvol/bigint.hpp"
#include "matvol/descent.hpp"
#include "matvol/matroid.hpp"

namespace matvol {

// Proper cyclic flats F_1 < ... < F_k in inclusion order. The anchors (empty
// set and ground set) are implicit.
struct CyclicFlatChain {
  std::vector<Subset> proper_flats;

  bool operator==(const CyclicFlatChain&) const = default;
};

struct ChainPoset {
  // Index 0 is the empty chain (the top element).
  std::vector<CyclicFlatChain> chains;
  std::vector<BigInt> mobius;

  // True when chain i refines chain j, i.e. contains all of its flats.
  bool refines(std::size_t i, std::size_t j) const;
};

// Euclidean volume of the polytope in coordinates where the affine lattice is
// the standard one; n! * value is an integer for connected matroids.
struct ExactVolume {
  Rational value;

  BigInt numerator() const;
  BigInt denominator() const;
  // factorial(n) * value; throws PreconditionError if not integral.
  BigInt scaled(int n) const;

  bool operator==(const ExactVolume&) const = default;
};

BinarySequence chain_to_sequence(const Matroid& m, const CyclicFlatChain& chain);
// Initial segments {0..i} ending at each 0 followed by a 1.
std::vector<Subset> sequence_to_chain(const BinarySequence& b);

ChainPoset build_chain_poset(const Matroid& m);

struct LedgerRow {
  CyclicFlatChain chain;
  BinarySequence sequence;
  BigInt mobius;
  BigInt delta_leq;
};

struct VolumeLedger {
  std::vector<LedgerRow> rows;
  BigInt weighted_sum;  // n! Vol
  int n = 0;
  ExactVolume volume;
};

// Full per-chain ledger for a connected loopless matroid.
VolumeLedger volume_ledger(const Matroid& m);
ExactVolume volume_connected(const Matroid& m);
// Any matroid: strips loops and multiplies over connected components.
ExactVolume volume(const Matroid& m);

ExactVolume schubert_volume(const BinarySequence& b);
ExactVolume sparse_paving_volume(int n, int d, int alpha);
ExactVolume relaxation_volume(const Matroid& m, Subset h);

// Process-wide memo shared by the engine.
DescentCache& shared_descent_cache();

}  // namespace matvol

#endif  // MATVOL_VOLUME_HPP
