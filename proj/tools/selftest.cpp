#include <algorithm>
#include <map>
#include <numeric>

#include "cli.hpp"
#include "matvol/descent.hpp"
#include "matvol/matroid.hpp"
#include "matvol/oracle.hpp"
#include "matvol/volume.hpp"

namespace matvol::cli {

namespace {

constexpr int kMaxN = 6;

// Buckets all n! permutations by descent sequence.
std::map<BinarySequence, BigInt> brute_force_delta(int n) {
  std::vector<int> word(n);
  std::iota(word.begin(), word.end(), 1);
  std::map<BinarySequence, BigInt> buckets;
  do {
    buckets[descent_sequence(Permutation::from_word(word))] += 1;
  } while (std::next_permutation(word.begin(), word.end()));
  return buckets;
}

std::vector<Subset> greedy_family(int n, int d) {
  std::vector<Subset> chosen;
  for (Subset s = 0; s <= full_set(n + 1); ++s) {
    if (cardinality(s) != d + 1) continue;
    if (std::all_of(chosen.begin(), chosen.end(), [&](Subset t) {
          return cardinality(s & t) <= d - 1;
        })) {
      chosen.push_back(s);
    }
  }
  return chosen;
}

SelftestCheck check(std::string name, bool passed, std::string detail = {}) {
  return {std::move(name), passed, passed ? std::string{} : std::move(detail)};
}

}  // namespace

std::vector<SelftestCheck> run_selftest() {
  std::vector<SelftestCheck> out;

  {
    bool ok = true;
    std::string where;
    for (int n = 1; n <= kMaxN && ok; ++n) {
      const auto buckets = brute_force_delta(n);
      for (int d = 0; d < n && ok; ++d) {
        BigInt sum = 0;
        for (const auto& b : enumerate_L(n, d)) {
          const auto it = buckets.find(b);
          const BigInt expected = it == buckets.end() ? BigInt(0) : it->second;
          BigInt below = 0;
          for (const auto& [a, count] : buckets) {
            if (a.d() == d && seq_leq(a, b)) below += count;
          }
          if (delta(b) != expected || delta_leq(b) != below ||
              delta(b) != delta(dual_sequence(b))) {
            ok = false;
            where = b.str();
          }
          sum += delta(b);
        }
        if (sum != eulerian(n, d)) {
          ok = false;
          where = "sum over L_" + std::to_string(d) + "(" + std::to_string(n) + ")";
        }
        if (d >= 1 && delta(BinarySequence::top(n, d)) !=
                          binomial(static_cast<unsigned>(n - 1), static_cast<unsigned>(d))) {
          ok = false;
          where = "top of L_" + std::to_string(d) + "(" + std::to_string(n) + ")";
        }
      }
    }
    out.push_back(check("descent statistics vs enumeration", ok, where));
  }

  {
    bool ok = true;
    std::string where;
    for (int n = 1; n <= kMaxN && ok; ++n) {
      for (int d = 0; d < n && ok; ++d) {
        for (const auto& b : enumerate_L(n, d)) {
          const Matroid s = schubert(b);
          const auto chain = sequence_to_chain(b);
          std::vector<Subset> proper;
          for (const auto& cf : cyclic_flats(s)) {
            if (cf.elements != 0 && cf.elements != s.ground()) {
              proper.push_back(cf.elements);
            }
          }
          auto sorted_chain = chain;
          std::sort(sorted_chain.begin(), sorted_chain.end());
          bool good = proper == sorted_chain &&
                      chain_to_sequence(s, {chain}) == b;
          if (good && is_connected(s)) {
            good = volume_connected(s) == schubert_volume(b);
          }
          if (!good) {
            ok = false;
            where = b.str();
            break;
          }
        }
      }
    }
    out.push_back(check("Schubert chains and volumes", ok, where));
  }

  {
    bool ok = true;
    std::string where;
    for (int n = 2; n <= kMaxN && ok; ++n) {
      for (int d = 1; d < n - 1 && ok; ++d) {
        const auto family = greedy_family(n, d);
        for (std::size_t alpha = 0; alpha <= family.size() && ok; ++alpha) {
          const std::vector<Subset> prefix(family.begin(), family.begin() + alpha);
          const Matroid m = sparse_paving(n, d, prefix);
          if (!is_connected(m)) continue;
          const ChainPoset poset = build_chain_poset(m);
          const BigInt sum =
              std::accumulate(poset.mobius.begin(), poset.mobius.end(), BigInt(0));
          if (sum != 1 ||
              volume(m) != sparse_paving_volume(n, d, static_cast<int>(alpha)) ||
              volume(m) != volume(dual(m))) {
            ok = false;
            where = "n=" + std::to_string(n) + " d=" + std::to_string(d) +
                    " alpha=" + std::to_string(alpha);
          }
        }
      }
    }
    out.push_back(check("sparse paving closed form and Moebius sums", ok, where));
  }

  {
    bool ok = true;
    std::string where;
    std::vector<Matroid> family;
    for (int n = 2; n <= 5; ++n) {
      for (int r = 1; r <= n; ++r) family.push_back(uniform(r, n + 1));
    }
    family.push_back(graphic(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
    for (const auto& m : family) {
      if (oracle_volume(m, kDefaultOracleBudget).volume != volume(m)) {
        ok = false;
        where = "ground " + std::to_string(m.ground_size()) + ", rank " +
                std::to_string(m.rank());
        break;
      }
    }
    out.push_back(check("oracle agrees with engine", ok, where));
  }

  return out;
}

}  // namespace matvol::cli
