#ifndef WPS_FAN_HPP
#define WPS_FAN_HPP

#include <optional>
#include <string>
#include <vector>

#include "wps/intmat.hpp"
#include "wps/rat.hpp"

namespace wps {

/*
  Weight tuple Q = (q_0,...,q_n), normalized so gcd(Q) = 1. P(Q) and
  P(Q/d) have the same fan, so a common factor is divided out rather than
  rejected; the original tuple is kept in reduced_from.
*/
struct WeightSystem {
  std::vector<Int> q;
  std::optional<std::vector<Int>> reduced_from;

  int n() const { return static_cast<int>(q.size()) - 1; }
  Int weight_sum() const;
  bool mutually_prime() const;  // pairwise coprime weights
};

WeightSystem normalize_weights(const std::vector<Int>& raw);

/*
  A cone of the fan, as a strictly increasing list of ray indices.
  Every proper subset of {0,...,n} spans a cone of the complete fan on
  n+1 rays, so no geometry is stored.
*/
struct Cone {
  std::vector<int> rays;

  int size() const { return static_cast<int>(rays.size()); }
  bool contains(int r) const;
  bool subset_of(const Cone& o) const;
  static Cone unite(const Cone& a, const Cone& b);

  friend bool operator==(const Cone& a, const Cone& b) { return a.rays == b.rays; }
  friend bool operator<(const Cone& a, const Cone& b) { return a.rays < b.rays; }
};

// Basis matrix C_0 of the weight lattice: upper triangular, diagonal
// d_{0..i-1}/d_{0..i}, off-diagonal entries the minimal nonnegative
// solutions of c*q_i + sum_{v=i+1..j} c_vj*q_v = 0 mod d_{0..i-1},
// built column by column with i descending. |det C_0| = q_0.
IntMat build_c0(const WeightSystem& w);

struct Fan {
  WeightSystem weights;
  IntMat c0;
  std::vector<std::vector<Int>> rays;  // v_0..v_n, each of length n

  int n() const { return weights.n(); }
  // Lexicographically smallest maximal cone containing the carrier,
  // i.e. the one omitting the largest index outside it.
  Cone canonical_ambient(const Cone& carrier) const;
  // Rows are the rays of a maximal cone, in ray-index order.
  IntMat ray_matrix(const Cone& maximal) const;
  std::vector<Int> complement_weights(const Cone& c) const;
};

// Rays v_1..v_n are the rows of C_0; v_0 = -sum (q_i/q_0) v_i, which the
// C_0 construction makes integral. sum q_i v_i = 0 exactly.
Fan build_fan(const WeightSystem& w);

/*
  An element of the local group G_tau = N/N_sigma restricted to tau:
  stored by its fractional coefficient vector a (length n+1, zero off the
  carrier, entries in [0,1)) with k_a = sum a_i v_i an integral lattice
  point. The a-coordinates are intrinsic: every maximal cone containing
  the carrier reproduces them, so re-expression between ambients is free.
*/
struct LocalGroupElement {
  Cone carrier;           // support of a
  Cone ambient;           // canonical maximal cone containing carrier
  std::vector<Rat> a;     // indexed by ray 0..n
  std::vector<Int> k;     // = sum a_i v_i, in Z^n

  bool is_identity() const { return carrier.rays.empty(); }
  // "carrier=[i,j,...];a=[p/q,...]" — stable across runs and ambients.
  std::string key() const;

  friend bool operator==(const LocalGroupElement& x, const LocalGroupElement& y) {
    return x.carrier == y.carrier && x.a == y.a;
  }
  friend bool operator<(const LocalGroupElement& x, const LocalGroupElement& y) {
    if (x.carrier.rays != y.carrier.rays) return x.carrier < y.carrier;
    return x.a < y.a;
  }
};

// |G_tau| = gcd of the weights not indexed by tau (Prop: for a maximal
// cone omitting k this is q_k).
Int local_group_order(const Fan& fan, const Cone& tau);

LocalGroupElement identity_element(const Fan& fan);

/*
  All d = |G_tau| elements supported inside tau, identity included.
  Realized by an SNF coset walk: coset representatives of N/N_sigma for
  the canonical ambient sigma come from the diagonal of UBV = S via
  k = w * V^{-1}, and each representative maps to a = frac(k B^{-1}).
  Output is sorted by a-vector.
*/
std::vector<LocalGroupElement> enumerate_group_elements(const Fan& fan, const Cone& tau);

// Componentwise frac(a_g + a_h); throws std::invalid_argument when the
// carriers do not fit in a common maximal cone (no shared chart).
LocalGroupElement group_multiply(const Fan& fan, const LocalGroupElement& g, const LocalGroupElement& h);

// a -> 1-a on the carrier; realizes I: X_(g) -> X_(g^{-1}).
LocalGroupElement inverse(const Fan& fan, const LocalGroupElement& g);

// Rebuilds an element from its intrinsic a-vector (validates integrality
// of k). Used by parsers and tests.
LocalGroupElement element_from_a(const Fan& fan, const std::vector<Rat>& a);

}  // namespace wps

#endif  // WPS_FAN_HPP
