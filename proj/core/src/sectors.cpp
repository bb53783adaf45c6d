#include "wps/sectors.hpp"

#include <algorithm>

namespace wps {

std::vector<Int> SectorSpace::padded_weights(const Fan& fan) const {
  std::vector<Int> out(fan.n() + 1, Int(0));
  for (int i : survivors) out[i] = fan.weights.q[i];
  return out;
}

SectorSpace space_for_cone(const Fan& fan, const Cone& carrier) {
  SectorSpace s;
  s.carrier = carrier;
  for (int i = 0; i <= fan.n(); ++i)
    if (!carrier.contains(i)) s.survivors.push_back(i);
  if (s.survivors.empty())
    throw std::invalid_argument("space_for_cone: full ray set is not a cone");
  for (int i : s.survivors) s.quotient_weights.push_back(fan.weights.q[i]);
  s.d = gcd_list(s.quotient_weights);
  for (const Int& q : s.quotient_weights) s.reduced_weights.push_back(q / s.d);
  s.dim = fan.n() - carrier.size();
  return s;
}

SectorSpace TwistedSector::space() const {
  SectorSpace s;
  s.carrier = carrier;
  s.survivors = survivors;
  s.quotient_weights = quotient_weights;
  s.d = d;
  s.reduced_weights = reduced_weights;
  s.dim = dim;
  return s;
}

Rat iota_of(const LocalGroupElement& g) {
  Rat s;
  for (int i : g.carrier.rays) s += g.a[i];
  return s;
}

std::vector<TwistedSector> enumerate_twisted_sectors(const Fan& fan) {
  const int n = fan.n();
  std::vector<TwistedSector> out;
  std::vector<Cone> cones;
  for (unsigned mask = 1; mask < (1u << (n + 1)) - 1; ++mask) {
    Cone c;
    for (int i = 0; i <= n; ++i)
      if (mask & (1u << i)) c.rays.push_back(i);
    cones.push_back(std::move(c));
  }
  std::sort(cones.begin(), cones.end());
  for (const Cone& tau : cones) {
    for (const LocalGroupElement& g : enumerate_group_elements(fan, tau)) {
      if (g.is_identity()) continue;
      if (g.carrier.size() != tau.size()) continue;  // counted at its own carrier
      SectorSpace sp = space_for_cone(fan, tau);
      TwistedSector s;
      s.g = g;
      s.carrier = tau;
      s.survivors = std::move(sp.survivors);
      s.quotient_weights = std::move(sp.quotient_weights);
      s.d = sp.d;
      s.reduced_weights = std::move(sp.reduced_weights);
      s.dim = sp.dim;
      s.iota = iota_of(g);
      out.push_back(std::move(s));
    }
  }
  return out;
}

Rat degree_shift(const TwistedSector& s) { return s.iota; }

std::string SectorTriple::key() const {
  return "(" + g1.key() + ")*(" + g2.key() + ")*(" + g3.key() + ")";
}

Rat SectorTriple::iota_sum() const { return iota_of(g1) + iota_of(g2) + iota_of(g3); }

std::optional<SectorTriple> make_triple(const Fan& fan, const LocalGroupElement& g1,
                                        const LocalGroupElement& g2) {
  Cone u = Cone::unite(g1.carrier, g2.carrier);
  if (u.size() > fan.n()) return std::nullopt;
  SectorTriple t;
  t.g1 = g1;
  t.g2 = g2;
  t.g3 = inverse(fan, group_multiply(fan, g1, g2));
  t.carrier = Cone::unite(u, t.g3.carrier);  // = u; g3 is supported inside it
  t.space = space_for_cone(fan, t.carrier);
  return t;
}

std::vector<SectorTriple> enumerate_triples(const Fan& fan) {
  std::vector<LocalGroupElement> universe;
  universe.push_back(identity_element(fan));
  for (const TwistedSector& s : enumerate_twisted_sectors(fan)) universe.push_back(s.g);

  std::vector<SectorTriple> out;
  for (const LocalGroupElement& g1 : universe)
    for (const LocalGroupElement& g2 : universe)
      if (auto t = make_triple(fan, g1, g2)) out.push_back(std::move(*t));
  return out;
}

Rat covering_genus(const Int& k1, const Int& k2, const Int& k3, const Int& group_order) {
  for (const Int* k : {&k1, &k2, &k3})
    if (sgn(*k) <= 0) throw std::invalid_argument("covering_genus: branch orders must be positive");
  if (sgn(group_order) <= 0) throw std::invalid_argument("covering_genus: group order must be positive");
  Rat s = Rat(2) + Rat(group_order);
  s -= Rat(group_order, k1);
  s -= Rat(group_order, k2);
  s -= Rat(group_order, k3);
  return s / Rat(2);
}

}  // namespace wps
