#include "matvol/volume.hpp"

#include <algorithm>
#include <string>

#include "matvol/errors.hpp"

namespace matvol {

namespace {

// Total order on the flats of any one chain that agrees with inclusion.
bool flat_before(Subset a, Subset b) {
  const int ca = cardinality(a);
  const int cb = cardinality(b);
  return ca != cb ? ca < cb : a < b;
}

void require_connected_loopless(const Matroid& m) {
  if (m.ground_size() < 2 || m.rank() < 1 || m.rank() >= m.ground_size()) {
    throw PreconditionError(
        "chain formula needs 1 <= rank < ground size and ground size >= 2");
  }
  if (loops(m) != 0) {
    throw PreconditionError("chain formula needs a loopless matroid");
  }
  if (!is_connected(m)) {
    throw PreconditionError(
        "chain formula needs a connected matroid; decompose first");
  }
}

void extend_chains(const std::vector<Subset>& flats, std::vector<Subset>& chain,
                   std::vector<CyclicFlatChain>& out) {
  for (Subset f : flats) {
    if (!chain.empty() && ((chain.back() & ~f) || chain.back() == f)) continue;
    chain.push_back(f);
    out.push_back({chain});
    extend_chains(flats, chain, out);
    chain.pop_back();
  }
}

Rational over_factorial(const BigInt& numerator, int n) {
  return Rational(numerator, factorial(static_cast<unsigned>(n)));
}

}  // namespace

bool ChainPoset::refines(std::size_t i, std::size_t j) const {
  const auto& fine = chains[i].proper_flats;
  const auto& coarse = chains[j].proper_flats;
  return std::includes(fine.begin(), fine.end(), coarse.begin(), coarse.end(),
                       flat_before);
}

BigInt ExactVolume::numerator() const {
  return boost::multiprecision::numerator(value);
}

BigInt ExactVolume::denominator() const {
  return boost::multiprecision::denominator(value);
}

BigInt ExactVolume::scaled(int n) const {
  const Rational product = value * factorial(static_cast<unsigned>(n));
  if (boost::multiprecision::denominator(product) != 1) {
    throw PreconditionError("volume times n! is not an integer");
  }
  return boost::multiprecision::numerator(product);
}

BinarySequence chain_to_sequence(const Matroid& m,
                                 const CyclicFlatChain& chain) {
  std::vector<Subset> anchored{0};
  for (Subset f : chain.proper_flats) {
    if (f == 0 || f == m.ground() || (f & ~m.ground())) {
      throw PreconditionError("chain members must be proper subsets");
    }
    anchored.push_back(f);
  }
  anchored.push_back(m.ground());

  std::vector<std::uint8_t> bits;
  bits.reserve(m.ground_size());
  for (std::size_t j = 1; j < anchored.size(); ++j) {
    const Subset lower = anchored[j - 1];
    const Subset upper = anchored[j];
    if ((lower & ~upper) || lower == upper) {
      throw PreconditionError("chain must increase strictly by inclusion");
    }
    const int rank_step = m.rank_of(upper) - m.rank_of(lower);
    const int nullity_step = cardinality(upper) - cardinality(lower) - rank_step;
    if (rank_step <= 0 || nullity_step <= 0) {
      throw PreconditionError(
          "rank and nullity must increase strictly along the chain");
    }
    bits.insert(bits.end(), rank_step, 1);
    bits.insert(bits.end(), nullity_step, 0);
  }
  return BinarySequence::from_bits(std::move(bits));
}

std::vector<Subset> sequence_to_chain(const BinarySequence& b) {
  std::vector<Subset> chain;
  for (std::size_t i = 0; i + 1 < b.size(); ++i) {
    if (b[i] == 0 && b[i + 1] == 1) {
      chain.push_back(full_set(static_cast<int>(i) + 1));
    }
  }
  return chain;
}

ChainPoset build_chain_poset(const Matroid& m) {
  require_connected_loopless(m);
  std::vector<Subset> proper;
  for (const auto& cf : cyclic_flats(m)) {
    if (cf.elements != 0 && cf.elements != m.ground()) {
      proper.push_back(cf.elements);
    }
  }

  ChainPoset poset;
  poset.chains.push_back({});
  std::vector<Subset> scratch;
  extend_chains(proper, scratch, poset.chains);

  // Longer chains sit lower; process them first so every strict refinement
  // of a chain already has its weight. With mu_G(x) = -mu(0, x):
  //   mu_G(x) = 1 - sum_{y < x} mu_G(y).
  const std::size_t count = poset.chains.size();
  std::vector<std::size_t> order(count);
  for (std::size_t i = 0; i < count; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
    return poset.chains[a].proper_flats.size() >
           poset.chains[b].proper_flats.size();
  });
  poset.mobius.assign(count, 0);
  for (std::size_t x : order) {
    BigInt weight = 1;
    const auto length = poset.chains[x].proper_flats.size();
    for (std::size_t y = 0; y < count; ++y) {
      if (poset.chains[y].proper_flats.size() > length && poset.refines(y, x)) {
        weight -= poset.mobius[y];
      }
    }
    poset.mobius[x] = std::move(weight);
  }
  return poset;
}

DescentCache& shared_descent_cache() {
  static DescentCache cache;
  return cache;
}

VolumeLedger volume_ledger(const Matroid& m) {
  const ChainPoset poset = build_chain_poset(m);
  auto& cache = shared_descent_cache();
  VolumeLedger ledger;
  ledger.n = m.ground_size() - 1;
  ledger.rows.reserve(poset.chains.size());
  for (std::size_t i = 0; i < poset.chains.size(); ++i) {
    auto sequence = chain_to_sequence(m, poset.chains[i]);
    BigInt below = cache.delta_leq(sequence);
    ledger.weighted_sum += poset.mobius[i] * below;
    ledger.rows.push_back(
        {poset.chains[i], std::move(sequence), poset.mobius[i], std::move(below)});
  }
  ledger.volume = {over_factorial(ledger.weighted_sum, ledger.n)};
  return ledger;
}

ExactVolume volume_connected(const Matroid& m) {
  return volume_ledger(m).volume;
}

ExactVolume volume(const Matroid& m) {
  const Matroid loopless = deletion(m, loops(m)).matroid;
  Rational product = 1;
  for (Subset component : connected_components(loopless)) {
    if (cardinality(component) == 1) continue;  // coloop: a point
    product *= volume_connected(restriction(loopless, component).matroid).value;
  }
  return {product};
}

ExactVolume schubert_volume(const BinarySequence& b) {
  if (!is_connected(schubert(b))) {
    throw PreconditionError("Schubert matroid of " + b.str() +
                            " is disconnected");
  }
  return {over_factorial(shared_descent_cache().delta_leq(b), b.n())};
}

ExactVolume sparse_paving_volume(int n, int d, int alpha) {
  if (alpha < 0) throw PreconditionError("alpha must be non-negative");
  const BigInt value =
      eulerian(n, d) - alpha * binomial(static_cast<unsigned>(n - 1),
                                        static_cast<unsigned>(d));
  if (value <= 0) {
    throw PreconditionError("no connected sparse paving matroid with n=" +
                            std::to_string(n) + ", d=" + std::to_string(d) +
                            ", alpha=" + std::to_string(alpha));
  }
  return {over_factorial(value, n)};
}

ExactVolume relaxation_volume(const Matroid& m, Subset h) {
  if (!is_connected(m)) {
    throw PreconditionError("relaxation formula needs a connected matroid");
  }
  if (!is_circuit_hyperplane(m, h)) {
    throw PreconditionError("relaxation needs a circuit-hyperplane");
  }
  const int n = m.ground_size() - 1;
  const int d = m.rank() - 1;
  const Rational step = over_factorial(
      binomial(static_cast<unsigned>(n - 1), static_cast<unsigned>(d)), n);
  return {volume(m).value + step};
}

}  // namespace matvol
