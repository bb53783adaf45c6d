#include "wps/cohomology.hpp"

namespace wps {

std::vector<Int> l_values(const WeightSystem& w) {
  const int n = w.n();
  std::vector<Int> l(n + 1, Int(1));
  std::vector<std::vector<Int>> by_size(n + 2);
  for (unsigned mask = 1; mask < (1u << (n + 1)); ++mask) {
    std::vector<Int> sub;
    for (int i = 0; i <= n; ++i)
      if (mask & (1u << i)) sub.push_back(w.q[i]);
    Int prod = 1;
    for (const Int& x : sub) prod *= x;
    by_size[sub.size()].push_back(prod / gcd_list(sub));
  }
  for (int k = 0; k <= n; ++k) l[k] = lcm_list(by_size[k + 1]);
  return l;
}

Rat OrdinaryRing::e(int i, int j) const {
  if (i < 0 || j < 0 || i > n() || j > n()) throw std::out_of_range("OrdinaryRing::e: bad index");
  if (i + j > n()) return Rat(0);
  return Rat(l[i] * l[j], l[i + j]);
}

OrdinaryRing ordinary_ring(const WeightSystem& w) { return OrdinaryRing{l_values(w)}; }

long BettiTable::dim_at(const Rat& p) const {
  auto it = entries.find(p);
  return it == entries.end() ? 0 : it->second;
}

Int BettiTable::total() const {
  Int t = 0;
  for (const auto& [deg, dim] : entries) t += dim;
  return t;
}

BettiTable betti_table(const Fan& fan, const std::vector<TwistedSector>& census) {
  BettiTable t;
  const int n = fan.n();
  for (int r = 0; r <= n; ++r) t.entries[Rat(2 * r)] += 1;
  std::vector<Int> dens{Int(1)};
  for (const TwistedSector& s : census) {
    for (int m = 0; m <= s.dim; ++m) t.entries[s.iota * Rat(2) + Rat(2 * m)] += 1;
    dens.push_back(s.d);
  }
  t.denominator_lcm = lcm_list(dens);
  return t;
}

BettiTable betti_table(const Fan& fan) {
  return betti_table(fan, enumerate_twisted_sectors(fan));
}

std::vector<std::pair<Rat, long>> poincare_polynomial(const BettiTable& t) {
  return {t.entries.begin(), t.entries.end()};
}

}  // namespace wps
