#include "matvol/descent.hpp"

#include <algorithm>

#include "matvol/errors.hpp"

namespace matvol {

namespace {

void require_shape(int n, int d) {
  if (n < 1 || d < 0 || d >= n) {
    throw PreconditionError("L_d(n) needs n >= 1 and 0 <= d < n (got n=" +
                            std::to_string(n) + ", d=" + std::to_string(d) +
                            ")");
  }
}

// Depth-first generation of L_d(n) restricted to words whose prefix sums stay
// at or below `ceiling`. Emits in lexicographic order.
void generate_below(int n, int d, std::span<const int> ceiling,
                    std::vector<std::uint8_t>& bits, int pos, int ones,
                    std::vector<BinarySequence>& out) {
  if (pos == n) {
    if (ones == d + 1) out.push_back(BinarySequence::from_bits(bits));
    return;
  }
  for (std::uint8_t v = 0; v <= 1; ++v) {
    const int next = ones + v;
    if (next > ceiling[pos] || next > d + 1) continue;
    if (d + 1 - next > n - 1 - pos) continue;
    bits[pos] = v;
    generate_below(n, d, ceiling, bits, pos + 1, next, out);
  }
  bits[pos] = 0;
}

std::vector<int> prefix_sums(const BinarySequence& b) {
  std::vector<int> sums(b.size());
  int acc = 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    acc += b[i];
    sums[i] = acc;
  }
  return sums;
}

}  // namespace

BinarySequence BinarySequence::from_bits(std::vector<std::uint8_t> bits) {
  if (bits.size() < 2) {
    throw InvalidInput("binary sequence needs length >= 2");
  }
  int ones = 0;
  for (auto bit : bits) {
    if (bit > 1) throw InvalidInput("binary sequence entries must be 0 or 1");
    ones += bit;
  }
  if (bits.front() != 1) throw InvalidInput("binary sequence must start with 1");
  if (bits.back() != 0) throw InvalidInput("binary sequence must end with 0");
  return BinarySequence(std::move(bits), ones);
}

BinarySequence BinarySequence::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw InvalidInput("binary sequence may only contain '0' and '1'");
    }
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return from_bits(std::move(bits));
}

BinarySequence BinarySequence::top(int n, int d) {
  require_shape(n, d);
  std::vector<std::uint8_t> bits(n + 1, 0);
  std::fill(bits.begin(), bits.begin() + d + 1, 1);
  return from_bits(std::move(bits));
}

BinarySequence BinarySequence::bottom(int n, int d) {
  require_shape(n, d);
  std::vector<std::uint8_t> bits(n + 1, 0);
  bits[0] = 1;
  for (int i = n - d; i < n; ++i) bits[i] = 1;
  return from_bits(std::move(bits));
}

std::string BinarySequence::str() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto bit : bits_) s.push_back(static_cast<char>('0' + bit));
  return s;
}

Permutation Permutation::from_word(std::vector<int> word) {
  std::vector<bool> seen(word.size() + 1, false);
  for (int v : word) {
    if (v < 1 || v > static_cast<int>(word.size()) || seen[v]) {
      throw InvalidInput("not a permutation of [n]");
    }
    seen[v] = true;
  }
  if (word.empty()) throw InvalidInput("permutation of [n] needs n >= 1");
  return Permutation(std::move(word));
}

bool seq_leq(const BinarySequence& a, const BinarySequence& b) {
  if (a.n() != b.n() || a.d() != b.d()) {
    throw PreconditionError("dominance order compares sequences of one L_d(n)");
  }
  int sa = 0;
  int sb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sa += a[i];
    sb += b[i];
    if (sa > sb) return false;
  }
  return true;
}

BinarySequence descent_sequence(const Permutation& w) {
  const auto word = w.word();
  const int n = w.size();
  std::vector<std::uint8_t> bits(n + 1, 0);
  bits[0] = 1;
  for (int i = 1; i < n; ++i) {
    bits[i] = word[i - 1] > word[i] ? 1 : 0;
  }
  return BinarySequence::from_bits(std::move(bits));
}

BigInt delta(const BinarySequence& b) {
  const int n = b.n();
  // counts[j]: arrangements of the prefix whose last entry has relative rank j.
  std::vector<BigInt> counts{1};
  for (int k = 1; k < n; ++k) {
    std::vector<BigInt> next(k + 1);
    if (b[k] == 0) {
      BigInt running = 0;
      for (int j = 0; j <= k; ++j) {
        next[j] = running;
        if (j < k) running += counts[j];
      }
    } else {
      BigInt running = 0;
      for (int j = k; j >= 0; --j) {
        if (j < k) running += counts[j];
        next[j] = running;
      }
    }
    counts = std::move(next);
  }
  BigInt total = 0;
  for (const auto& c : counts) total += c;
  return total;
}

std::vector<BinarySequence> down_set(const BinarySequence& b) {
  const auto ceiling = prefix_sums(b);
  std::vector<std::uint8_t> bits(b.size(), 0);
  bits[0] = 1;
  std::vector<BinarySequence> out;
  generate_below(b.n(), b.d(), ceiling, bits, 1, 1, out);
  return out;
}

BigInt delta_leq(const BinarySequence& b) {
  BigInt total = 0;
  for (const auto& a : down_set(b)) total += delta(a);
  return total;
}

BinarySequence dual_sequence(const BinarySequence& b) {
  const int n = b.n();
  std::vector<std::uint8_t> bits(b.bits().begin(), b.bits().end());
  for (int i = 1; i < n; ++i) bits[i] = b[n - i];
  return BinarySequence::from_bits(std::move(bits));
}

PartitionInBox to_partition(const BinarySequence& b) {
  const int n = b.n();
  const int d = b.d();
  PartitionInBox p;
  p.rows = d;
  p.max_part = n - d - 1;
  // zeros_after[i] = #{k : i < k < n, b_k = 0}
  int zeros = 0;
  std::vector<int> lambda;
  for (int i = n - 1; i >= 1; --i) {
    if (b[i] == 1) {
      lambda.push_back(zeros);
    } else {
      ++zeros;
    }
  }
  // Collected right to left, so lambda is weakly increasing here.
  std::reverse(lambda.begin(), lambda.end());
  for (int part : lambda) {
    if (part > 0) p.parts.push_back(part);
  }
  return p;
}

BinarySequence from_partition(std::span<const int> parts, int n, int d) {
  require_shape(n, d);
  std::vector<int> lambda(parts.begin(), parts.end());
  while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
  if (static_cast<int>(lambda.size()) > d) {
    throw InvalidInput("partition has more than d parts");
  }
  for (std::size_t j = 0; j < lambda.size(); ++j) {
    if (lambda[j] < 0 || lambda[j] > n - d - 1) {
      throw InvalidInput("partition part exceeds the box width n-d-1");
    }
    if (j > 0 && lambda[j] > lambda[j - 1]) {
      throw InvalidInput("partition parts must be weakly decreasing");
    }
  }
  lambda.resize(d, 0);
  std::vector<std::uint8_t> bits(n + 1, 0);
  bits[0] = 1;
  for (int j = 1; j <= d; ++j) {
    bits[n - 1 - (d - j) - lambda[j - 1]] = 1;
  }
  return BinarySequence::from_bits(std::move(bits));
}

BigInt eulerian(int n, int d) {
  require_shape(n, d);
  std::vector<BigInt> row{1};  // n = 1
  for (int m = 2; m <= n; ++m) {
    std::vector<BigInt> next(m);
    for (int k = 0; k < m; ++k) {
      BigInt value = 0;
      if (k < m - 1) value += (k + 1) * row[k];
      if (k > 0) value += (m - k) * row[k - 1];
      next[k] = std::move(value);
    }
    row = std::move(next);
  }
  return row[d];
}

std::vector<BinarySequence> enumerate_L(int n, int d) {
  return down_set(BinarySequence::top(n, d));
}

BigInt DescentCache::delta(const BinarySequence& b) {
  {
    std::lock_guard lock(mutex_);
    if (auto it = delta_.find(b); it != delta_.end()) return it->second;
  }
  BigInt value = matvol::delta(b);
  std::lock_guard lock(mutex_);
  delta_.emplace(b, value);
  return value;
}

BigInt DescentCache::delta_leq(const BinarySequence& b) {
  {
    std::lock_guard lock(mutex_);
    if (auto it = delta_leq_.find(b); it != delta_leq_.end()) return it->second;
  }
  BigInt total = 0;
  for (const auto& a : down_set(b)) total += delta(a);
  std::lock_guard lock(mutex_);
  delta_leq_.emplace(b, total);
  return total;
}

std::size_t DescentCache::size() const {
  std::lock_guard lock(mutex_);
  return delta_.size() + delta_leq_.size();
}

}  // namespace matvol
