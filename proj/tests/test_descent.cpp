#include <doctest.h>

#include <algorithm>
#include <set>
#include <thread>

#include "brute_force.hpp"
#include "matvol/descent.hpp"
#include "matvol/errors.hpp"

using namespace matvol;
using matvol::testing::binom;
using matvol::testing::descent_buckets;
using matvol::testing::dominated;

namespace {

BinarySequence seq(const char* text) { return BinarySequence::parse(text); }

std::vector<std::string> strings(const std::vector<BinarySequence>& v) {
  std::vector<std::string> out;
  for (const auto& b : v) out.push_back(b.str());
  return out;
}

}  // namespace

TEST_CASE("sequence construction validates membership in L_d(n)") {
  const auto b = BinarySequence::from_bits({1, 1, 0, 1, 0});
  CHECK(b.n() == 4);
  CHECK(b.d() == 2);
  CHECK(b.str() == "11010");

  const auto smallest = BinarySequence::from_bits({1, 0});
  CHECK(smallest.n() == 1);
  CHECK(smallest.d() == 0);

  CHECK_THROWS_AS(BinarySequence::from_bits({0, 1, 1, 0}), InvalidInput);
  CHECK_THROWS_AS(BinarySequence::from_bits({1, 1}), InvalidInput);
  CHECK_THROWS_AS(BinarySequence::from_bits({0, 0}), InvalidInput);
  CHECK_THROWS_AS(BinarySequence::from_bits({1}), InvalidInput);
  CHECK_THROWS_AS(BinarySequence::from_bits({1, 2, 0}), InvalidInput);
  CHECK_THROWS_AS(BinarySequence::parse("1x0"), InvalidInput);
}

TEST_CASE("top and bottom of L_d(n)") {
  CHECK(BinarySequence::top(5, 2).str() == "111000");
  CHECK(BinarySequence::bottom(5, 2).str() == "100110");
  CHECK(BinarySequence::top(1, 0).str() == "10");
  CHECK_THROWS_AS(BinarySequence::top(3, 3), PreconditionError);
  for (int n = 1; n <= 7; ++n) {
    for (int d = 0; d < n; ++d) {
      CHECK(seq_leq(BinarySequence::bottom(n, d), BinarySequence::top(n, d)));
    }
  }
}

TEST_CASE("dominance order") {
  CHECK(seq_leq(seq("10110"), seq("11010")));
  CHECK_FALSE(seq_leq(seq("11010"), seq("10110")));
  CHECK(seq_leq(seq("11010"), seq("11010")));
  CHECK_THROWS_AS(seq_leq(seq("1010"), seq("11010")), PreconditionError);
  CHECK_THROWS_AS(seq_leq(seq("11000"), seq("11010")), PreconditionError);

  // Exhaustively against the prefix-sum definition.
  for (int n = 1; n <= 6; ++n) {
    for (int d = 0; d < n; ++d) {
      const auto all = enumerate_L(n, d);
      for (const auto& a : all) {
        for (const auto& b : all) {
          CHECK(seq_leq(a, b) == dominated(a.str(), b.str()));
        }
      }
    }
  }
}

TEST_CASE("descent sequences of permutations") {
  CHECK(descent_sequence(Permutation::from_word({1, 2, 3})).str() == "1000");
  CHECK(descent_sequence(Permutation::from_word({3, 2, 1})).str() == "1110");
  CHECK(descent_sequence(Permutation::from_word({2, 1, 3})).str() == "1100");
  CHECK(descent_sequence(Permutation::from_word({1})).str() == "10");
  CHECK_THROWS_AS(Permutation::from_word({1, 1, 2}), InvalidInput);
  CHECK_THROWS_AS(Permutation::from_word({0, 1}), InvalidInput);
  CHECK_THROWS_AS(Permutation::from_word({}), InvalidInput);
}

TEST_CASE("delta examples") {
  CHECK(delta(seq("1100")) == 2);
  CHECK(delta(seq("1000")) == 1);
  CHECK(delta(seq("1010")) == 2);  // 132 and 231
  CHECK(delta(seq("11010")) == 5);
  CHECK(delta(seq("10110")) == 3);
  CHECK(delta(seq("10")) == 1);
}

TEST_CASE("delta of the top element is a binomial coefficient") {
  for (int n = 2; n <= 10; ++n) {
    for (int d = 1; d < n; ++d) {
      CHECK(delta(BinarySequence::top(n, d)) == binom(n - 1, d));
    }
  }
}

TEST_CASE("delta and delta_leq agree with permutation enumeration") {
  for (int n = 1; n <= 8; ++n) {
    const auto buckets = descent_buckets(n);
    for (int d = 0; d < n; ++d) {
      BigInt class_total = 0;
      for (const auto& b : enumerate_L(n, d)) {
        const auto it = buckets.find(b.str());
        const long long exact = it == buckets.end() ? 0 : it->second;
        long long below = 0;
        for (const auto& [word, count] : buckets) {
          if (std::count(word.begin(), word.end(), '1') == d + 1 &&
              dominated(word, b.str())) {
            below += count;
          }
        }
        CHECK(delta(b) == exact);
        CHECK(delta_leq(b) == below);
        class_total += delta(b);
      }
      CHECK(class_total == eulerian(n, d));
      CHECK(delta_leq(BinarySequence::top(n, d)) == eulerian(n, d));
    }
  }
}

TEST_CASE("delta is invariant under the duality involution") {
  for (int n = 1; n <= 8; ++n) {
    for (int d = 0; d < n; ++d) {
      for (const auto& b : enumerate_L(n, d)) {
        const auto star = dual_sequence(b);
        CHECK(dual_sequence(star) == b);
        CHECK(delta(star) == delta(b));
      }
    }
  }
}

TEST_CASE("delta_leq examples") {
  CHECK(delta_leq(BinarySequence::top(5, 2)) == 66);
  CHECK(delta_leq(seq("1010")) == 2);
  CHECK(delta_leq(seq("11010")) == 8);
  CHECK(delta_leq(seq("1101010")) == 172);
  for (int n = 1; n <= 7; ++n) {
    for (int d = 0; d < n; ++d) {
      const auto bottom = BinarySequence::bottom(n, d);
      CHECK(delta_leq(bottom) == delta(bottom));
    }
  }
}

TEST_CASE("down sets") {
  const auto bottom = BinarySequence::bottom(6, 3);
  CHECK(strings(down_set(bottom)) == std::vector<std::string>{bottom.str()});
  CHECK(strings(down_set(seq("11010"))) ==
        std::vector<std::string>{"10110", "11010"});
  for (int n = 1; n <= 8; ++n) {
    for (int d = 0; d < n; ++d) {
      CHECK(down_set(BinarySequence::top(n, d)).size() ==
            static_cast<std::size_t>(binom(n - 1, d)));
      for (const auto& b : enumerate_L(n, d)) {
        BigInt total = 0;
        for (const auto& a : down_set(b)) {
          CHECK(seq_leq(a, b));
          total += delta(a);
        }
        CHECK(total == delta_leq(b));
      }
    }
  }
}

TEST_CASE("duality involution examples") {
  CHECK(dual_sequence(seq("11100")).str() == "10110");
  CHECK(dual_sequence(BinarySequence::top(6, 2)) == BinarySequence::bottom(6, 2));
  CHECK(dual_sequence(seq("1101100")).str() == "1011010");
  CHECK(dual_sequence(seq("1101010")).str() == "1101010");
}

TEST_CASE("partition images") {
  CHECK(to_partition(BinarySequence::bottom(6, 3)).parts.empty());
  const auto top = to_partition(BinarySequence::top(6, 2));
  CHECK(top.parts == std::vector<int>{3, 3});
  CHECK(top.rows == 2);
  CHECK(top.max_part == 3);
  CHECK(to_partition(seq("11010")).parts == std::vector<int>{1});
  CHECK(to_partition(seq("1000")).parts.empty());

  const std::vector<int> too_wide{4};
  const std::vector<int> too_tall{1, 1, 1};
  const std::vector<int> increasing{1, 2};
  CHECK_THROWS_AS(from_partition(too_wide, 6, 2), InvalidInput);
  CHECK_THROWS_AS(from_partition(too_tall, 6, 2), InvalidInput);
  CHECK_THROWS_AS(from_partition(increasing, 6, 2), InvalidInput);
}

TEST_CASE("partition map is an order isomorphism onto the d x (n-d-1) box") {
  auto contained = [](const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() > b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] > b[i]) return false;
    }
    return true;
  };
  for (int n = 1; n <= 8; ++n) {
    for (int d = 0; d < n; ++d) {
      const auto all = enumerate_L(n, d);
      std::set<std::vector<int>> images;
      for (const auto& b : all) {
        const auto p = to_partition(b);
        CHECK(static_cast<int>(p.parts.size()) <= d);
        for (int part : p.parts) CHECK(part <= n - d - 1);
        CHECK(std::is_sorted(p.parts.rbegin(), p.parts.rend()));
        CHECK(from_partition(p.parts, n, d) == b);
        images.insert(p.parts);
      }
      // Partitions in a d x (n-d-1) box number C(n-1, d) = |L_d(n)|.
      CHECK(images.size() == all.size());
      for (const auto& a : all) {
        for (const auto& b : all) {
          CHECK(seq_leq(a, b) ==
                contained(to_partition(a).parts, to_partition(b).parts));
        }
      }
    }
  }
}

TEST_CASE("Eulerian numbers") {
  CHECK(eulerian(5, 2) == 66);
  CHECK(eulerian(4, 1) == 11);
  CHECK(eulerian(3, 1) == 4);
  for (int n = 1; n <= 8; ++n) {
    CHECK(eulerian(n, 0) == 1);
    for (int d = 0; d < n; ++d) {
      CHECK(eulerian(n, d) == matvol::testing::permutations_with_descents(n, d));
    }
  }
  // Closed-form alternating sum, evaluated independently.
  CHECK(eulerian(20, 9).str() == "679562217794156938");
  CHECK(eulerian(12, 5) == 162512286);
  CHECK_THROWS_AS(eulerian(3, 3), PreconditionError);
}

TEST_CASE("enumeration of L_d(n)") {
  CHECK(strings(enumerate_L(3, 1)) == std::vector<std::string>{"1010", "1100"});
  CHECK(strings(enumerate_L(1, 0)) == std::vector<std::string>{"10"});
  for (int n = 1; n <= 9; ++n) {
    for (int d = 0; d < n; ++d) {
      const auto all = enumerate_L(n, d);
      CHECK(all.size() == static_cast<std::size_t>(binom(n - 1, d)));
      CHECK(std::is_sorted(all.begin(), all.end()));
    }
  }
}

TEST_CASE("zigzag words (10)^{d+1}: brute-forced values only") {
  // Euler zigzag numbers E_3, E_5, E_7 by enumeration; no closed form used.
  CHECK(delta(seq("1010")) == 2);
  CHECK(delta(seq("101010")) == 16);
  CHECK(delta(seq("10101010")) == 272);
}

TEST_CASE("big-integer exactness beyond 64 bits") {
  // 22! overflows 64 bits; the identity permutation class still counts 1.
  const auto b = BinarySequence::top(22, 0);
  CHECK(delta(b) == 1);
  CHECK(delta(BinarySequence::top(22, 11)) == binom(21, 11));
  CHECK(eulerian(22, 10) > BigInt(std::numeric_limits<std::uint64_t>::max()));
}

TEST_CASE("descent cache is consistent under concurrent use") {
  DescentCache cache;
  const auto all = enumerate_L(8, 3);
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&] {
      for (const auto& b : all) {
        cache.delta(b);
        cache.delta_leq(b);
      }
    });
  }
  for (auto& t : threads) t.join();
  for (const auto& b : all) {
    CHECK(cache.delta(b) == delta(b));
    CHECK(cache.delta_leq(b) == delta_leq(b));
  }
}
