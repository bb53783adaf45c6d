#include "wps/rat.hpp"

namespace wps {

Int gcd_list(const std::vector<Int>& xs) {
  if (xs.empty()) throw std::invalid_argument("gcd_list: empty list");
  Int g = 0;
  for (const Int& x : xs) {
    if (sgn(x) < 0) throw std::invalid_argument("gcd_list: negative entry");
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  return g;
}

Int lcm_list(const std::vector<Int>& xs) {
  if (xs.empty()) throw std::invalid_argument("lcm_list: empty list");
  Int l = 1;
  for (const Int& x : xs) {
    if (sgn(x) <= 0) throw std::invalid_argument("lcm_list: nonpositive entry");
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_mpz_t());
  }
  return l;
}

Rat::Rat(const Int& num, const Int& den) {
  if (sgn(den) == 0) throw std::invalid_argument("Rat: zero denominator");
  v_ = mpq_class(num, den);
  canonicalize();
}

void Rat::canonicalize() { v_.canonicalize(); }

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::invalid_argument("Rat: division by zero");
  v_ /= o.v_;
  return *this;
}

Int Rat::floor() const {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

Rat Rat::frac() const { return *this - Rat(floor()); }

std::string Rat::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rat::wire() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat Rat::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("Rat::parse: empty string");
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    return Rat(num, den);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Rat::parse: malformed rational '" + s + "'");
  }
}

std::string to_string(const Int& n) { return n.get_str(); }

Int int_from_string(const std::string& s) {
  try {
    return Int(s);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed integer '" + s + "'");
  }
}

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace wps
