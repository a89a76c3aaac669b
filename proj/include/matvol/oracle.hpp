#ifndef MATVOL_ORACLE_HPP
#define MATVOL_ORACLE_HPP

// Brute-force volume of P_M from lattice-point counts of its dilates. The
// Ehrhart function of a D-dimensional lattice polytope is a degree-D
// polynomial, and its D-th forward difference at 0 is D! times the leading
// coefficient. Only the rank function is consulted.

#include <cstdint>
#include <span>
#include <vector>

#include "matvol/bigint.hpp"
#include "matvol/matroid.hpp"
#include "matvol/volume.hpp"

namespace matvol {

inline constexpr int kDefaultOracleBudget = 10;

// sum x = t*rank, 0 <= x_i <= t, and x(F) <= t*rank(F) for every subset F.
bool contains_lattice_point(const Matroid& m, std::span<const std::int64_t> x,
                            std::int64_t t);

std::uint64_t ehrhart_count(const Matroid& m, int t);
// Counts for t = 0..max_t; levels are spread over `threads` workers.
std::vector<std::uint64_t> ehrhart_counts(const Matroid& m, int max_t,
                                          int threads = 1);

// (ground size) - (number of connected components)
int polytope_dimension(const Matroid& m);

struct OracleVolume {
  ExactVolume volume;
  BigInt scaled;  // dimension! * volume
  int dimension = 0;
  std::vector<std::uint64_t> counts;
};

// Throws BudgetExceeded when the ground set is larger than `budget`.
OracleVolume oracle_volume(const Matroid& m, int budget = kDefaultOracleBudget,
                           int threads = 1);

// Incidence vectors of the bases, in basis order.
std::vector<std::vector<int>> vertices(const Matroid& m);

}  // namespace matvol

#endif  // MATVOL_ORACLE_HPP
