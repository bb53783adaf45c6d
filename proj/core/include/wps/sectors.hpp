#ifndef WPS_SECTORS_HPP
#define WPS_SECTORS_HPP

#include <optional>
#include <string>
#include <vector>

#include "wps/fan.hpp"

namespace wps {

/*
  The orbit closure attached to a cone: a (possibly nonreduced) weighted
  projective space P(Q_tau) on the surviving rays, with the cyclic group
  of order d = gcd(Q_tau) acting trivially. The empty cone gives the
  ambient space itself.
*/
struct SectorSpace {
  Cone carrier;
  std::vector<int> survivors;         // ray indices not in carrier
  std::vector<Int> quotient_weights;  // weights of the survivors
  Int d;                              // gcd(quotient_weights)
  std::vector<Int> reduced_weights;   // quotient_weights / d
  int dim = 0;                        // n - |carrier|

  // Mnemonic form "P(0,2,2,0,0,0)": zeros at carrier positions.
  std::vector<Int> padded_weights(const Fan& fan) const;
};

SectorSpace space_for_cone(const Fan& fan, const Cone& carrier);

/*
  A twisted sector of P(Q): a non-identity local group element whose
  a-vector is fully supported on its carrier cone, together with the
  orbit closure it sits on and its degree-shifting number iota = sum of
  the carrier coefficients.
*/
struct TwistedSector {
  LocalGroupElement g;
  Cone carrier;
  std::vector<int> survivors;
  std::vector<Int> quotient_weights;
  Int d;
  std::vector<Int> reduced_weights;
  int dim = 0;
  Rat iota;

  std::string key() const { return g.key(); }
  SectorSpace space() const;
};

// One sector per (nonzero cone tau, element of G_tau with full support);
// the untwisted sector is excluded. Sorted by carrier, then a-vector.
std::vector<TwistedSector> enumerate_twisted_sectors(const Fan& fan);

Rat degree_shift(const TwistedSector& s);

Rat iota_of(const LocalGroupElement& g);

/*
  A 3-multisector: an ordered pair (g1,g2) with g3 = (g1 g2)^{-1},
  supported on the union cone. For weighted projective spaces it always
  coincides with a twisted sector (or the untwisted one); `space` is that
  orbit closure.
*/
struct SectorTriple {
  LocalGroupElement g1, g2, g3;
  Cone carrier;  // union of the three supports
  SectorSpace space;

  std::string key() const;
  Rat iota_sum() const;
};

// Every ordered pair of (possibly identity) local group elements whose
// carriers fit in a common cone. Pairs whose carriers' union needs all
// n+1 rays share no chart and produce no triple.
std::vector<SectorTriple> enumerate_triples(const Fan& fan);

std::optional<SectorTriple> make_triple(const Fan& fan, const LocalGroupElement& g1,
                                        const LocalGroupElement& g2);

// Genus of the branched covering surface for branch orders (k1,k2,k3)
// and covering group order |K|: g = (2 + |K| - sum |K|/k_i) / 2.
// Documentation/validation only; nothing downstream consumes it.
Rat covering_genus(const Int& k1, const Int& k2, const Int& k3, const Int& group_order);

}  // namespace wps

#endif  // WPS_SECTORS_HPP
