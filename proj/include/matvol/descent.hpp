#ifndef MATVOL_DESCENT_HPP
#define MATVOL_DESCENT_HPP

// Descent statistics on the poset L_d(n) of 0/1 words of length n+1 with
// d+1 ones that start with 1 and end with 0, ordered by prefix-sum dominance.

#include <compare>
#include <cstdint>
#include <map>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "matvol/bigint.hpp"

namespace matvol {

class BinarySequence {
 public:
  // Validates membership in some L_d(n). Throws InvalidInput.
  static BinarySequence from_bits(std::vector<std::uint8_t> bits);
  // Parses a string of '0'/'1' characters such as "11010".
  static BinarySequence parse(std::string_view text);

  // 1^{d+1} 0^{n-d}
  static BinarySequence top(int n, int d);
  // 1 0^{n-d-1} 1^d 0
  static BinarySequence bottom(int n, int d);

  int n() const { return static_cast<int>(bits_.size()) - 1; }
  int d() const { return ones_ - 1; }
  std::size_t size() const { return bits_.size(); }
  std::span<const std::uint8_t> bits() const { return bits_; }
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
  std::string str() const;

  // Lexicographic on bits; unrelated to the dominance order (see seq_leq).
  auto operator<=>(const BinarySequence&) const = default;

 private:
  BinarySequence(std::vector<std::uint8_t> bits, int ones)
      : bits_(std::move(bits)), ones_(ones) {}

  std::vector<std::uint8_t> bits_;
  int ones_ = 0;
};

// A permutation of [n] in one-line notation w_1 ... w_n.
class Permutation {
 public:
  static Permutation from_word(std::vector<int> word);

  int size() const { return static_cast<int>(word_.size()); }
  std::span<const int> word() const { return word_; }

 private:
  explicit Permutation(std::vector<int> word) : word_(std::move(word)) {}
  std::vector<int> word_;
};

// A partition fitting inside a rows x max_part rectangle.
struct PartitionInBox {
  std::vector<int> parts;  // weakly decreasing, no zeros
  int rows = 0;
  int max_part = 0;

  bool operator==(const PartitionInBox&) const = default;
};

// Prefix-sum dominance. Throws PreconditionError unless a and b share (n, d).
bool seq_leq(const BinarySequence& a, const BinarySequence& b);

BinarySequence descent_sequence(const Permutation& w);

// Number of permutations of [n] whose descent sequence is exactly b.
BigInt delta(const BinarySequence& b);

// Sum of delta over the order ideal below b.
BigInt delta_leq(const BinarySequence& b);

// The order ideal {a in L_d(n) : a <= b}, b included, lexicographic order.
std::vector<BinarySequence> down_set(const BinarySequence& b);

// (b_0, b_{n-1}, ..., b_1, b_n)
BinarySequence dual_sequence(const BinarySequence& b);

// Young-lattice image: lambda_j counts the zeros strictly between the j-th
// interior one and position n. Box is d x (n-d-1).
PartitionInBox to_partition(const BinarySequence& b);
BinarySequence from_partition(std::span<const int> parts, int n, int d);

// Permutations of [n] with exactly d descents.
BigInt eulerian(int n, int d);

// All C(n-1, d) elements of L_d(n) in lexicographic order.
std::vector<BinarySequence> enumerate_L(int n, int d);

// Thread-safe memo for delta and delta_leq keyed by the sequence.
class DescentCache {
 public:
  BigInt delta(const BinarySequence& b);
  BigInt delta_leq(const BinarySequence& b);
  std::size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::map<BinarySequence, BigInt> delta_;
  std::map<BinarySequence, BigInt> delta_leq_;
};

}  // namespace matvol

#endif  // MATVOL_DESCENT_HPP
