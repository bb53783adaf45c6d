#include "wps/fan.hpp"

#include <algorithm>

namespace wps {

Int WeightSystem::weight_sum() const {
  Int s = 0;
  for (const Int& x : q) s += x;
  return s;
}

bool WeightSystem::mutually_prime() const {
  for (size_t i = 0; i < q.size(); ++i)
    for (size_t j = i + 1; j < q.size(); ++j) {
      Int g;
      mpz_gcd(g.get_mpz_t(), q[i].get_mpz_t(), q[j].get_mpz_t());
      if (g != 1) return false;
    }
  return true;
}

WeightSystem normalize_weights(const std::vector<Int>& raw) {
  if (raw.size() < 2) throw std::invalid_argument("normalize_weights: need at least two weights");
  for (const Int& x : raw)
    if (sgn(x) <= 0) throw std::invalid_argument("normalize_weights: weights must be positive");
  Int g = gcd_list(raw);
  WeightSystem w;
  w.q = raw;
  if (g != 1) {
    for (Int& x : w.q) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    w.reduced_from = raw;
  }
  return w;
}

bool Cone::contains(int r) const { return std::binary_search(rays.begin(), rays.end(), r); }

bool Cone::subset_of(const Cone& o) const {
  return std::includes(o.rays.begin(), o.rays.end(), rays.begin(), rays.end());
}

Cone Cone::unite(const Cone& a, const Cone& b) {
  Cone u;
  std::set_union(a.rays.begin(), a.rays.end(), b.rays.begin(), b.rays.end(), std::back_inserter(u.rays));
  return u;
}

namespace {

// Minimal c >= 0 with c*qi + s = 0 mod g (g > 0). Solvable whenever
// gcd(qi, g) | s, which the C_0 recursion guarantees.
Int minimal_congruence_solution(const Int& qi, const Int& s, const Int& g) {
  Int e, inv, dummy;
  Int qm = qi % g;
  if (sgn(qm) < 0) qm += g;
  mpz_gcdext(e.get_mpz_t(), inv.get_mpz_t(), dummy.get_mpz_t(), qm.get_mpz_t(), g.get_mpz_t());
  Int rhs = -s;
  if (!mpz_divisible_p(rhs.get_mpz_t(), e.get_mpz_t()))
    throw std::logic_error("build_c0: unsolvable congruence (broken d-chain)");
  Int g1 = g / e;
  Int c = ((rhs / e) % g1) * (inv % g1) % g1;
  if (sgn(c) < 0) c += g1;
  return c;
}

}  // namespace

IntMat build_c0(const WeightSystem& w) {
  const int n = w.n();
  // d_chain[i] = gcd(q_0..q_i)
  std::vector<Int> d_chain(n + 1);
  d_chain[0] = w.q[0];
  for (int i = 1; i <= n; ++i)
    mpz_gcd(d_chain[i].get_mpz_t(), d_chain[i - 1].get_mpz_t(), w.q[i].get_mpz_t());
  if (d_chain[n] != 1) throw std::invalid_argument("build_c0: weights not normalized");

  IntMat c0(n, n);
  for (int i = 1; i <= n; ++i) c0.at(i - 1, i - 1) = d_chain[i - 1] / d_chain[i];
  for (int j = 2; j <= n; ++j) {
    for (int i = j - 1; i >= 1; --i) {
      Int s = 0;
      for (int v = i + 1; v <= j; ++v) s += c0.at(v - 1, j - 1) * w.q[v];
      c0.at(i - 1, j - 1) = minimal_congruence_solution(w.q[i], s, d_chain[i - 1]);
    }
  }
  Int det = c0.det();
  if (abs(det) != w.q[0]) throw std::logic_error("build_c0: |det C_0| != q_0");
  return c0;
}

Fan build_fan(const WeightSystem& w) {
  const int n = w.n();
  Fan fan;
  fan.weights = w;
  fan.c0 = build_c0(w);
  fan.rays.assign(n + 1, std::vector<Int>(n, Int(0)));
  for (int i = 1; i <= n; ++i) fan.rays[i] = fan.c0.row(i - 1);
  for (int j = 0; j < n; ++j) {
    Rat acc;
    for (int i = 1; i <= n; ++i) acc += Rat(-w.q[i], w.q[0]) * Rat(fan.rays[i][j]);
    if (!acc.is_integer()) throw std::logic_error("build_fan: v_0 not integral");
    fan.rays[0][j] = acc.num();
  }
  // sum q_i v_i = 0 exactly
  for (int j = 0; j < n; ++j) {
    Int s = 0;
    for (int i = 0; i <= n; ++i) s += w.q[i] * fan.rays[i][j];
    if (sgn(s) != 0) throw std::logic_error("build_fan: sum q_i v_i != 0");
  }
  return fan;
}

Cone Fan::canonical_ambient(const Cone& carrier) const {
  if (carrier.size() > n()) throw std::invalid_argument("canonical_ambient: carrier too large");
  int omit = -1;
  for (int i = n(); i >= 0; --i)
    if (!carrier.contains(i)) { omit = i; break; }
  if (omit < 0) throw std::invalid_argument("canonical_ambient: full ray set is not a cone");
  Cone c;
  for (int i = 0; i <= n(); ++i)
    if (i != omit) c.rays.push_back(i);
  return c;
}

IntMat Fan::ray_matrix(const Cone& maximal) const {
  if (maximal.size() != n()) throw std::invalid_argument("ray_matrix: cone not maximal");
  IntMat b(n(), n());
  for (int r = 0; r < n(); ++r)
    for (int j = 0; j < n(); ++j) b.at(r, j) = rays[maximal.rays[r]][j];
  return b;
}

std::vector<Int> Fan::complement_weights(const Cone& c) const {
  std::vector<Int> out;
  for (int i = 0; i <= n(); ++i)
    if (!c.contains(i)) out.push_back(weights.q[i]);
  return out;
}

std::string LocalGroupElement::key() const {
  std::string s = "carrier=[";
  for (size_t i = 0; i < carrier.rays.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(carrier.rays[i]);
  }
  s += "];a=[";
  for (size_t i = 0; i < carrier.rays.size(); ++i) {
    if (i) s += ",";
    s += a[carrier.rays[i]].wire();
  }
  s += "]";
  return s;
}

Int local_group_order(const Fan& fan, const Cone& tau) {
  std::vector<Int> comp = fan.complement_weights(tau);
  if (comp.empty()) throw std::invalid_argument("local_group_order: full ray set is not a cone");
  return gcd_list(comp);
}

LocalGroupElement identity_element(const Fan& fan) {
  LocalGroupElement e;
  e.ambient = fan.canonical_ambient(e.carrier);
  e.a.assign(fan.n() + 1, Rat(0));
  e.k.assign(fan.n(), Int(0));
  return e;
}

namespace {

LocalGroupElement element_from_a_unchecked(const Fan& fan, std::vector<Rat> a) {
  LocalGroupElement g;
  g.a = std::move(a);
  for (int i = 0; i <= fan.n(); ++i)
    if (!g.a[i].is_zero()) g.carrier.rays.push_back(i);
  g.ambient = fan.canonical_ambient(g.carrier);
  g.k.assign(fan.n(), Int(0));
  for (int j = 0; j < fan.n(); ++j) {
    Rat acc;
    for (int i : g.carrier.rays) acc += g.a[i] * Rat(fan.rays[i][j]);
    if (!acc.is_integer()) throw std::invalid_argument("local group element: k_a not integral");
    g.k[j] = acc.num();
  }
  return g;
}

}  // namespace

LocalGroupElement element_from_a(const Fan& fan, const std::vector<Rat>& a) {
  if (static_cast<int>(a.size()) != fan.n() + 1)
    throw std::invalid_argument("element_from_a: wrong length");
  for (const Rat& x : a)
    if (x < Rat(0) || x >= Rat(1)) throw std::invalid_argument("element_from_a: entries must lie in [0,1)");
  return element_from_a_unchecked(fan, a);
}

std::vector<LocalGroupElement> enumerate_group_elements(const Fan& fan, const Cone& tau) {
  const int n = fan.n();
  const Cone sigma = fan.canonical_ambient(tau);
  const IntMat b = fan.ray_matrix(sigma);
  const RatMat binv = rat_inverse(b);
  const SnfResult snf = smith_normal_form(b);

  std::vector<Int> diag(n);
  for (int i = 0; i < n; ++i) {
    diag[i] = snf.S.at(i, i);
    if (sgn(diag[i]) <= 0) throw std::logic_error("enumerate_group_elements: singular ray matrix");
  }

  std::vector<LocalGroupElement> out;
  std::vector<Int> w(n, Int(0));
  for (;;) {
    // k = w * V^{-1}
    std::vector<Int> k(n, Int(0));
    for (int i = 0; i < n; ++i) {
      if (sgn(w[i]) == 0) continue;
      for (int j = 0; j < n; ++j) k[j] += w[i] * snf.v_inv.at(i, j);
    }
    std::vector<Rat> c = binv.apply_left(k);
    std::vector<Rat> a(n + 1, Rat(0));
    bool supported = true;
    for (int i = 0; i < n; ++i) {
      Rat f = c[i].frac();
      if (!f.is_zero() && !tau.contains(sigma.rays[i])) { supported = false; break; }
      a[sigma.rays[i]] = f;
    }
    if (supported) out.push_back(element_from_a_unchecked(fan, std::move(a)));

    int pos = n - 1;
    while (pos >= 0) {
      w[pos] += 1;
      if (w[pos] < diag[pos]) break;
      w[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }

  std::sort(out.begin(), out.end());
  if (Int(static_cast<long>(out.size())) != local_group_order(fan, tau))
    throw std::logic_error("enumerate_group_elements: count != gcd of complementary weights");
  return out;
}

LocalGroupElement group_multiply(const Fan& fan, const LocalGroupElement& g, const LocalGroupElement& h) {
  Cone u = Cone::unite(g.carrier, h.carrier);
  if (u.size() > fan.n())
    throw std::invalid_argument("group_multiply: carriers do not share an ambient cone");
  std::vector<Rat> a(fan.n() + 1);
  for (int i = 0; i <= fan.n(); ++i) a[i] = (g.a[i] + h.a[i]).frac();
  return element_from_a_unchecked(fan, std::move(a));
}

LocalGroupElement inverse(const Fan& fan, const LocalGroupElement& g) {
  std::vector<Rat> a(fan.n() + 1, Rat(0));
  for (int i : g.carrier.rays) a[i] = Rat(1) - g.a[i];
  return element_from_a_unchecked(fan, std::move(a));
}

}  // namespace wps
