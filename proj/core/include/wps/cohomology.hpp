#ifndef WPS_COHOMOLOGY_HPP
#define WPS_COHOMOLOGY_HPP

#include <map>
#include <vector>

#include "wps/sectors.hpp"

namespace wps {

// l_k = lcm over all (k+1)-subsets I of l_I, l_I = prod(q_i)/gcd(q_i).
std::vector<Int> l_values(const WeightSystem& w);

/*
  Ordinary rational cohomology ring of P(Q): basis 1, xi_1, ..., xi_n with
  xi_i * xi_j = e_ij * xi_{i+j} for i+j <= n (zero beyond), where
  e_ij = l_i l_j / l_{i+j}.
*/
struct OrdinaryRing {
  std::vector<Int> l;

  int n() const { return static_cast<int>(l.size()) - 1; }
  Rat e(int i, int j) const;
};

OrdinaryRing ordinary_ring(const WeightSystem& w);

/*
  Rationally graded Betti table of the Chen-Ruan cohomology: dimension at
  degree p counts the untwisted classes (p even in [0,2n]) plus one for
  every (sector, 0 <= m <= dim) with p = 2 iota + 2m.
*/
struct BettiTable {
  std::map<Rat, long> entries;
  Int denominator_lcm;  // lcm of the sector d's (and 1)

  long dim_at(const Rat& p) const;
  Int total() const;
};

BettiTable betti_table(const Fan& fan);
BettiTable betti_table(const Fan& fan, const std::vector<TwistedSector>& census);

// Sorted (degree, dimension) presentation of the table.
std::vector<std::pair<Rat, long>> poincare_polynomial(const BettiTable& t);

}  // namespace wps

#endif  // WPS_COHOMOLOGY_HPP
