#include "wps/ringops.hpp"

#include <algorithm>
#include <atomic>
#include <random>

namespace wps {

EmbedResult embed_if_needed(const WeightSystem& w) {
  EmbedResult r;
  if (w.q[0] == 1) {
    r.weights = w;
    r.index_map.resize(w.q.size());
    for (size_t i = 0; i < w.q.size(); ++i) r.index_map[i] = static_cast<int>(i);
    return r;
  }
  r.weights.q.push_back(Int(1));
  for (const Int& x : w.q) r.weights.q.push_back(x);
  for (size_t i = 0; i < w.q.size(); ++i) r.index_map.push_back(static_cast<int>(i) + 1);
  return r;
}

ObstructionBundle obstruction_bundle(const Fan& fan, const SectorTriple& t) {
  ObstructionBundle b;
  const Int d = local_group_order(fan, t.carrier);
  for (int ray : t.carrier.rays) {
    Rat s = t.g1.a[ray] + t.g2.a[ray] + t.g3.a[ray];
    if (!s.is_integer())
      throw std::logic_error("obstruction_bundle: non-integral coefficient sum over a carrier ray");
    if (s == Rat(2)) {
      Int g;
      mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), fan.weights.q[ray].get_mpz_t());
      b.summands.push_back({ray, fan.weights.q[ray], d / g});
    }
  }
  // Rank double-check: dim X_(g) - n + sum iota must equal the ray count.
  Rat rank_formula = Rat(t.space.dim) - Rat(fan.n()) + t.iota_sum();
  if (!rank_formula.is_integer() || rank_formula != Rat(static_cast<long>(b.summands.size())))
    throw std::logic_error("obstruction_bundle: rank formula and ray-sum count disagree");
  b.rank = static_cast<int>(b.summands.size());
  return b;
}

EquivariantDivisor EquivariantDivisor::ones(int nsurv) {
  EquivariantDivisor d;
  d.coeffs.assign(nsurv, Rat(1));
  return d;
}

SectorClass SectorClass::divisor_power(int nsurv, int m) {
  SectorClass c;
  for (int i = 0; i < m; ++i) c.factors.push_back(EquivariantDivisor::ones(nsurv));
  return c;
}

namespace {

std::atomic<std::uint64_t> g_localize_count{0};

// lambda-coefficient form: value = sum coeffs[r] * lambda[r]
using Form = std::vector<Rat>;

Rat eval_form(const Form& f, const std::vector<Rat>& lambda) {
  Rat v;
  for (size_t r = 0; r < f.size(); ++r)
    if (!f[r].is_zero()) v += f[r] * lambda[r];
  return v;
}

/*
  Weight forms at the fixed points of the reduced sector, in the basis
  rho_r = (q_last/d) m_{s_r} - (q_{s_r}/d) m_last of the orthogonal
  character lattice of the carrier: every form below is the solution of
  the <m, v_k> interpolation constraints over the survivor rays.
*/
struct LocalGeometry {
  std::vector<int> surv;
  std::vector<Int> q;
  Int d;
  int p;  // number of survivors; p-1 lambda parameters

  explicit LocalGeometry(const SectorSpace& sp)
      : surv(sp.survivors), q(sp.quotient_weights), d(sp.d), p(static_cast<int>(sp.survivors.size())) {}

  // Euler factor at fixed point t (0-based, t < p-1) pointing toward the
  // last survivor: the lone negative factor of Eq-(5.16) shape.
  Form toward_last(int t) const {
    Form f(p - 1, Rat(0));
    f[t] = Rat(-d, q[t]);
    return f;
  }

  std::vector<Form> euler_factors(int t) const {
    std::vector<Form> fs;
    const Rat scale = Rat(d, q[p - 1]);
    if (t == p - 1) {
      for (int k = 0; k < p - 1; ++k) {
        Form f(p - 1, Rat(0));
        f[k] = scale;
        fs.push_back(std::move(f));
      }
      return fs;
    }
    fs.push_back(toward_last(t));
    for (int k = 0; k < p - 1; ++k) {
      if (k == t) continue;
      Form f(p - 1, Rat(0));
      f[k] = scale;
      f[t] = scale * Rat(-q[k], q[t]);
      fs.push_back(std::move(f));
    }
    return fs;
  }

  // Weight of the line bundle with divisor coefficients a (parallel to
  // survivors) at fixed point t: the unique <-m, v_k> = a_k solution.
  Form divisor_weight(int t, const std::vector<Rat>& a) const {
    Form f(p - 1, Rat(0));
    const Rat scale = Rat(d, q[p - 1]);
    if (t == p - 1) {
      for (int k = 0; k < p - 1; ++k) f[k] = scale * a[k];
      return f;
    }
    Rat mixed = a[p - 1];
    for (int k = 0; k < p - 1; ++k) {
      if (k == t) continue;
      f[k] = scale * a[k];
      mixed += a[k] * Rat(q[k], q[p - 1]);
    }
    f[t] = Rat(-d, q[t]) * mixed;
    return f;
  }

  // Obstruction line-bundle weight at fixed point t: zero at the last
  // fixed point, (q_t_l * d_l / q_last) times the toward-last factor
  // elsewhere (Eq-(5.20) shape).
  Form obstruction_weight(int t, const ObstructionSummand& s) const {
    if (t == p - 1) return Form(p - 1, Rat(0));
    Form f = toward_last(t);
    const Rat c = Rat(s.exponent * s.order, q[p - 1]);
    for (Rat& x : f) x *= c;
    return f;
  }

  Int local_order(int t) const { return q[t] / d; }
};

std::vector<Rat> draw_lambda(std::mt19937_64& eng, int count) {
  std::vector<Rat> l(count);
  for (int i = 0; i < count; ++i) l[i] = Rat(static_cast<long>(eng() % (1 << 20)) + 1);
  return l;
}

Rat localize_at(const LocalGeometry& geo, const std::vector<EquivariantDivisor>& factors,
                const ObstructionBundle& obs, const std::vector<Rat>& lambda, bool& pole) {
  pole = false;
  Rat total;
  for (int t = 0; t < geo.p; ++t) {
    if (t == geo.p - 1 && obs.rank > 0) continue;  // obstruction weight 0 kills the term
    Rat denom{geo.local_order(t)};
    for (const Form& f : geo.euler_factors(t)) {
      Rat v = eval_form(f, lambda);
      if (v.is_zero()) {
        pole = true;
        return Rat(0);
      }
      denom *= v;
    }
    Rat numer{1};
    for (const EquivariantDivisor& dv : factors) numer *= eval_form(geo.divisor_weight(t, dv.coeffs), lambda);
    for (const ObstructionSummand& s : obs.summands)
      numer *= eval_form(geo.obstruction_weight(t, s), lambda);
    total += numer / denom;
  }
  return total;
}

}  // namespace

std::vector<FixedPointData> fixed_point_data(const SectorSpace& sp) {
  LocalGeometry geo(sp);
  std::vector<FixedPointData> out;
  for (int t = 0; t < geo.p; ++t)
    out.push_back({geo.surv[t], geo.local_order(t), geo.euler_factors(t)});
  return out;
}

std::uint64_t localize_evaluation_count() { return g_localize_count.load(); }

LocalizeResult localize_integral(const SectorSpace& sp, const std::vector<EquivariantDivisor>& factors,
                                 const ObstructionBundle& obs, std::uint64_t seed) {
  LocalGeometry geo(sp);
  for (const EquivariantDivisor& d : factors)
    if (static_cast<int>(d.coeffs.size()) != geo.p)
      throw std::invalid_argument("localize_integral: divisor coefficient length != survivor count");
  if (static_cast<int>(factors.size()) + obs.rank != sp.dim) return {Rat(0), false};

  std::mt19937_64 eng(seed);
  const int nl = geo.p - 1;
  if (nl == 0) {
    // Point: no torus parameters, nothing to dual-evaluate.
    bool pole = false;
    Rat v = localize_at(geo, factors, obs, {}, pole);
    g_localize_count.fetch_add(1);
    return {v, true};
  }
  Rat first;
  bool have_first = false;
  std::vector<Rat> first_lambda;
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Rat> lambda = draw_lambda(eng, nl);
    if (have_first && lambda == first_lambda) continue;
    bool pole = false;
    Rat v = localize_at(geo, factors, obs, lambda, pole);
    if (pole) continue;
    if (!have_first) {
      first = v;
      first_lambda = lambda;
      have_first = true;
      continue;
    }
    if (v != first)
      throw std::logic_error("localize_integral: lambda-dependent fixed-point sum (degree bug)");
    g_localize_count.fetch_add(1);
    return {first, true};
  }
  throw std::logic_error("localize_integral: could not find pole-free lambda assignments");
}

namespace {

std::uint64_t mix_seed(std::uint64_t seed, const std::string& key) {
  std::uint64_t h = seed ^ fnv1a64(key);
  // splitmix64 finalizer
  h += 0x9e3779b97f4a7c15ULL;
  h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ULL;
  h = (h ^ (h >> 27)) * 0x94d049bb133111ebULL;
  return h ^ (h >> 31);
}

// Pull a class on the sector of g back to the triple's orbit closure.
// All sector classes are powers of restrictions of the ambient O(1), so
// a factor with divisor coefficients c on the source survivors becomes
// (sum c_s q_s) * u on the target, u any coefficient vector of total
// weight 1. When source and target carriers agree the factor is kept
// verbatim.
std::vector<EquivariantDivisor> pull_back_factors(const Fan& fan, const LocalGroupElement& g,
                                                  const SectorClass& cls, const SectorSpace& target) {
  if (g.carrier == target.carrier) {
    for (const EquivariantDivisor& f : cls.factors)
      if (f.coeffs.size() != target.survivors.size())
        throw std::invalid_argument("sector class: coefficient length != survivor count");
    return cls.factors;
  }
  if (!g.carrier.subset_of(target.carrier))
    throw std::invalid_argument("sector class pullback: source sector does not contain the multisector");
  SectorSpace src = space_for_cone(fan, g.carrier);
  Int qsum = 0;
  for (const Int& q : target.quotient_weights) qsum += q;
  std::vector<EquivariantDivisor> out;
  for (const EquivariantDivisor& f : cls.factors) {
    if (f.coeffs.size() != src.survivors.size())
      throw std::invalid_argument("sector class: coefficient length != survivor count");
    Rat w;
    for (size_t i = 0; i < f.coeffs.size(); ++i) w += f.coeffs[i] * Rat(src.quotient_weights[i]);
    EquivariantDivisor d;
    d.coeffs.assign(target.survivors.size(), w / Rat(qsum));
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace

ThreePointResult three_point_checked(const Fan& fan, const SectorTriple& t, const SectorClass& eta1,
                                     const SectorClass& eta2, const SectorClass& eta3,
                                     std::uint64_t seed) {
  if (t.iota_sum() > Rat(fan.n())) return {Rat(0), false};  // rank exceeds the sector dimension
  ObstructionBundle obs = obstruction_bundle(fan, t);

  std::vector<EquivariantDivisor> factors;
  const LocalGroupElement* gs[3] = {&t.g1, &t.g2, &t.g3};
  const SectorClass* etas[3] = {&eta1, &eta2, &eta3};
  Rat scalar{1};
  for (int j = 0; j < 3; ++j) {
    scalar *= etas[j]->scalar;
    for (auto& f : pull_back_factors(fan, *gs[j], *etas[j], t.space)) factors.push_back(std::move(f));
  }
  LocalizeResult r = localize_integral(t.space, factors, obs, mix_seed(seed, t.key()));
  if (!r.degree_ok) return {Rat(0), false};
  if (scalar.is_zero() || r.value.is_zero()) return {Rat(0), true};

  Rat pre = Rat(1, t.space.d);
  for (const ObstructionSummand& s : obs.summands) pre *= Rat(1, s.order);
  return {scalar * pre * r.value, true};
}

Rat three_point(const Fan& fan, const SectorTriple& t, const SectorClass& eta1,
                const SectorClass& eta2, const SectorClass& eta3, std::uint64_t seed) {
  return three_point_checked(fan, t, eta1, eta2, eta3, seed).value;
}

Rat pairing(const Fan& fan, const LocalGroupElement& ga, const SectorClass& alpha,
            const LocalGroupElement& gb, const SectorClass& beta, std::uint64_t seed) {
  if (!(inverse(fan, ga) == gb))
    throw std::invalid_argument("pairing: sectors are not inverse to each other");
  SectorSpace sp = space_for_cone(fan, ga.carrier);
  std::vector<EquivariantDivisor> factors = alpha.factors;
  for (const EquivariantDivisor& f : beta.factors) factors.push_back(f);
  for (const EquivariantDivisor& f : factors)
    if (f.coeffs.size() != sp.survivors.size())
      throw std::invalid_argument("pairing: coefficient length != survivor count");
  LocalizeResult r = localize_integral(sp, factors, ObstructionBundle{}, mix_seed(seed, "pair:" + ga.key()));
  if (!r.degree_ok) return Rat(0);
  return alpha.scalar * beta.scalar * Rat(1, sp.d) * r.value;
}

Rat pairing_normalization(const Fan& fan, const SectorSpace& sp, std::uint64_t seed) {
  const int nsurv = static_cast<int>(sp.survivors.size());
  std::vector<EquivariantDivisor> factors(static_cast<size_t>(sp.dim), EquivariantDivisor::ones(nsurv));
  std::string key = "norm:carrier=[";
  for (size_t i = 0; i < sp.carrier.rays.size(); ++i) {
    if (i) key += ",";
    key += std::to_string(sp.carrier.rays[i]);
  }
  key += "]";
  LocalizeResult r = localize_integral(sp, factors, ObstructionBundle{}, mix_seed(seed, key));
  if (!r.degree_ok) throw std::logic_error("pairing_normalization: degree mismatch");
  return Rat(1, sp.d) * r.value;
}

std::optional<ProductTerm> mutually_prime_product(const Fan& fan, const LocalGroupElement& g1,
                                                  const LocalGroupElement& g2) {
  if (!fan.weights.mutually_prime())
    throw std::invalid_argument("mutually_prime_product: weights are not pairwise coprime");
  if (g1.is_identity()) return ProductTerm{g2, 0, Rat(1)};
  if (g2.is_identity()) return ProductTerm{g1, 0, Rat(1)};
  if (!(g1.carrier == g2.carrier)) return std::nullopt;  // distinct isolated points

  LocalGroupElement h = group_multiply(fan, g1, g2);
  Rat iota3 = iota_of(inverse(fan, h));
  if (iota_of(g1) + iota_of(g2) + iota3 != Rat(fan.n())) return std::nullopt;

  if (!h.is_identity()) return ProductTerm{h, 0, Rat(1)};

  // Inverse pair: lands in the untwisted top degree. Normalize so the
  // pairing against the unit is 1/q_i, with vol = (sum q)^n / prod q.
  Int qi = local_group_order(fan, g1.carrier);
  Int prod = 1;
  for (const Int& q : fan.weights.q) prod *= q;
  Int sum_pow;
  mpz_pow_ui(sum_pow.get_mpz_t(), fan.weights.weight_sum().get_mpz_t(), static_cast<unsigned long>(fan.n()));
  Rat vol(sum_pow, prod);
  return ProductTerm{identity_element(fan), fan.n(), Rat(1, qi) / vol};
}

int CupTable::find(const LocalGroupElement& g, int power) const {
  for (size_t i = 0; i < basis.size(); ++i)
    if (basis[i].power == power && basis[i].g == g) return static_cast<int>(i);
  return -1;
}

std::vector<std::pair<int, Rat>> CupTable::product(int i, int j) const {
  auto it = constants.find({i, j});
  if (it == constants.end()) return {};
  return it->second;
}

CupTable cup_table(const Fan& fan, std::uint64_t seed) {
  const int n = fan.n();
  std::vector<TwistedSector> census = enumerate_twisted_sectors(fan);

  CupTable table;
  LocalGroupElement id = identity_element(fan);
  for (int m = 0; m <= n; ++m)
    table.basis.push_back({id, m, Rat(2 * m), m == 0 ? "1" : (m == 1 ? "D" : "D^" + std::to_string(m))});
  std::vector<std::string> alias(census.size());
  for (size_t s = 0; s < census.size(); ++s) {
    alias[s] = "g" + std::to_string(s + 1);
    for (int m = 0; m <= census[s].dim; ++m) {
      std::string label = alias[s];
      if (m == 1) label += "*D";
      if (m > 1) label += "*D^" + std::to_string(m);
      table.basis.push_back({census[s].g, m, (census[s].iota + Rat(m)) * Rat(2), label});
    }
  }

  // Pairing normalization per sector space (1x1 blocks; must be nonzero).
  std::map<std::string, Rat> norm;
  std::map<std::string, SectorSpace> spaces;
  spaces[id.key()] = space_for_cone(fan, id.carrier);
  for (const TwistedSector& s : census) spaces[s.key()] = s.space();
  for (const auto& [key, sp] : spaces) {
    Rat p = pairing_normalization(fan, sp, seed);
    if (p.is_zero()) throw std::logic_error("cup_table: degenerate pairing block");
    norm[key] = p;
  }

  const size_t nb = table.basis.size();
  for (size_t i = 0; i < nb; ++i) {
    for (size_t j = 0; j < nb; ++j) {
      const BasisElement& b1 = table.basis[i];
      const BasisElement& b2 = table.basis[j];
      auto t = make_triple(fan, b1.g, b2.g);
      if (!t) continue;
      LocalGroupElement g3v = group_multiply(fan, b1.g, b2.g);
      SectorSpace sp3 = space_for_cone(fan, g3v.carrier);
      Rat m3r = Rat(b1.power + b2.power) + iota_of(b1.g) + iota_of(b2.g) - iota_of(g3v);
      if (!m3r.is_integer()) throw std::logic_error("cup_table: non-integral target power");
      if (m3r < Rat(0) || m3r > Rat(sp3.dim)) continue;
      const int m3 = static_cast<int>(m3r.num().get_si());

      SectorClass e1 = SectorClass::divisor_power(
          static_cast<int>(space_for_cone(fan, b1.g.carrier).survivors.size()), b1.power);
      SectorClass e2 = SectorClass::divisor_power(
          static_cast<int>(space_for_cone(fan, b2.g.carrier).survivors.size()), b2.power);
      SectorClass e3 = SectorClass::divisor_power(
          static_cast<int>(sp3.survivors.size()), sp3.dim - m3);
      Rat val = three_point(fan, *t, e1, e2, e3, seed);
      if (val.is_zero()) continue;
      int k = table.find(g3v, m3);
      if (k < 0) throw std::logic_error("cup_table: product target missing from basis");
      Rat coeff = val / norm[g3v.key()];
      table.constants[{static_cast<int>(i), static_cast<int>(j)}] = {{k, coeff}};
    }
  }
  return table;
}

}  // namespace wps
