#ifndef WPS_RINGOPS_HPP
#define WPS_RINGOPS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wps/cohomology.hpp"
#include "wps/sectors.hpp"

namespace wps {

/*
  P(Q) embeds as a hypersurface of P(1,q_0,...,q_n) with identical
  twisted sectors, 3-multisectors and integrals; the localization
  formulas assume the leading weight is 1. index_map sends old ray
  indices to their position in the extended tuple.
*/
struct EmbedResult {
  WeightSystem weights;
  std::vector<int> index_map;
};

EmbedResult embed_if_needed(const WeightSystem& w);

/*
  Obstruction bundle over a 3-multisector, as a Whitney sum of line
  bundles indexed by the carrier rays t where the three coefficient
  vectors sum to 2. Each summand carries the ray weight q_t and the order
  d_l of the character g -> e^{2 pi i a_t(g)} on the carrier's group.
*/
struct ObstructionSummand {
  int ray;
  Int exponent;  // q_t
  Int order;     // d_l, a divisor of d
};

struct ObstructionBundle {
  std::vector<ObstructionSummand> summands;
  int rank = 0;
};

ObstructionBundle obstruction_bundle(const Fan& fan, const SectorTriple& t);

// One divisor factor on a sector; coefficients are indexed parallel to
// the sector space's survivor list.
struct EquivariantDivisor {
  std::vector<Rat> coeffs;

  static EquivariantDivisor ones(int nsurv);
};

// A cohomology class on a sector: scalar * product of divisor factors.
struct SectorClass {
  Rat scalar{1};
  std::vector<EquivariantDivisor> factors;

  static SectorClass unit() { return {}; }
  static SectorClass divisor_power(int nsurv, int m);
  int degree() const { return static_cast<int>(factors.size()); }
};

// Torus data at one fixed point of the reduced sector: the local order
// a_j = q_j/d and the Euler-class factors as lambda-coefficient vectors.
struct FixedPointData {
  int point;  // survivor ray index
  Int local_order;
  std::vector<std::vector<Rat>> euler_factors;
};

std::vector<FixedPointData> fixed_point_data(const SectorSpace& sp);

struct LocalizeResult {
  Rat value;
  bool degree_ok = true;
};

/*
  Fixed-point sum over the reduced sector P(Q_tau/d): for each torus
  fixed point, (class weights)*(obstruction weights) / (a_j * Euler),
  evaluated at a seeded random rational lambda assignment. The sum is
  evaluated at two independent assignments and must agree exactly; a
  vanishing Euler factor triggers a redraw. Returns 0 with degree_ok
  false when #factors + rank != dim. No reduction prefactors here: the
  1/d and 1/(prod d_l) of the nonreduced picture live in three_point and
  pairing, keeping this integrator reusable.
*/
LocalizeResult localize_integral(const SectorSpace& sp,
                                 const std::vector<EquivariantDivisor>& factors,
                                 const ObstructionBundle& obs, std::uint64_t seed);

// Number of dual-evaluated localization sums so far (for the property
// suite's lambda-independence accounting).
std::uint64_t localize_evaluation_count();

/*
  3-point function <eta1,eta2,eta3> over the multisector of t: classes
  are pulled back to the carrier's orbit closure, integrated against the
  obstruction Euler class, and scaled by 1/(prod d_l) and 1/d. Returns 0
  when sum iota > n or on degree mismatch. The lambda source is seeded
  from the triple's canonical key, so evaluation order cannot change
  results.
*/
Rat three_point(const Fan& fan, const SectorTriple& t, const SectorClass& eta1,
                const SectorClass& eta2, const SectorClass& eta3, std::uint64_t seed);

struct ThreePointResult {
  Rat value;
  bool degree_ok = true;  // false: zero forced by degree/rank mismatch
};

ThreePointResult three_point_checked(const Fan& fan, const SectorTriple& t, const SectorClass& eta1,
                                     const SectorClass& eta2, const SectorClass& eta3,
                                     std::uint64_t seed);

// Poincare pairing <alpha, beta> with alpha on X_(ga), beta on the
// inverse sector: (1/d) times the reduced-sector integral of the product
// of the divisor factors. 0 on degree mismatch.
Rat pairing(const Fan& fan, const LocalGroupElement& ga, const SectorClass& alpha,
            const LocalGroupElement& gb, const SectorClass& beta, std::uint64_t seed);

// Pairing normalization of a sector: <D^m, D^{dim-m}> = (1/d) * integral
// of D^dim over the reduced sector, independent of m.
Rat pairing_normalization(const Fan& fan, const SectorSpace& sp, std::uint64_t seed);

// One term of a product expansion: coeff * D^power on the sector of g
// (identity g = untwisted).
struct ProductTerm {
  LocalGroupElement sector;
  int power = 0;
  Rat coeff;
};

/*
  Closed-form cup product for pairwise coprime weights, where every
  sector is an isolated point. Units on the same Z_{q_i} point combine to
  the unit of the (g1 g2)-sector when the degree shifts sum to n; an
  inverse pair lands in the untwisted top degree, normalized so that
  <g1 g2-product, unit> = 1/q_i. Products across different isotropy
  points vanish (nullopt).
*/
std::optional<ProductTerm> mutually_prime_product(const Fan& fan, const LocalGroupElement& g1,
                                                  const LocalGroupElement& g2);

struct BasisElement {
  LocalGroupElement g;  // identity = untwisted sector
  int power = 0;
  Rat degree;           // 2*(iota + power)
  std::string label;    // "1", "D^2", "g3*D", ...
};

/*
  Structure constants of the Chen-Ruan cup product over the basis
  {sector x D-power}. The pairing blocks are 1x1 per degree, so each
  product has at most one expansion term.
*/
struct CupTable {
  std::vector<BasisElement> basis;
  std::map<std::pair<int, int>, std::vector<std::pair<int, Rat>>> constants;

  int find(const LocalGroupElement& g, int power) const;  // -1 when absent
  // Product of two basis elements as a sparse vector over the basis.
  std::vector<std::pair<int, Rat>> product(int i, int j) const;
};

CupTable cup_table(const Fan& fan, std::uint64_t seed);

}  // namespace wps

#endif  // WPS_RINGOPS_HPP
