#ifndef WPS_RAT_HPP
#define WPS_RAT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace wps {

// Arbitrary-precision integer. Fan entries and the l_k values grow
// multiplicatively in the weights, so fixed-width arithmetic is out.
using Int = mpz_class;

// gcd of a nonempty list of nonnegative integers; gcd of an all-zero list is 0.
Int gcd_list(const std::vector<Int>& xs);

// lcm of a nonempty list of positive integers.
Int lcm_list(const std::vector<Int>& xs);

/*
  Exact rational scalar. Always kept in lowest terms with positive
  denominator; equality is structural. Every rational quantity of the
  library (a-coordinates, degree shifts, structure constants, 3-point
  values) is a Rat.
*/
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT: implicit by design
  Rat(const Int& n) : v_(n) {}                      // NOLINT
  Rat(const Int& num, const Int& den);
  explicit Rat(const mpq_class& q) : v_(q) { canonicalize(); }

  const Int num() const { return v_.get_num(); }
  const Int den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Int floor() const;
  // x - floor(x), in [0,1).
  Rat frac() const;

  Rat operator-() const { Rat r; r.v_ = -v_; return r; }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  // "p" when integral, "p/q" otherwise.
  std::string str() const;
  // Always "p/q", q >= 1. Wire form used in JSON.
  std::string wire() const;
  // Accepts both forms. Throws std::invalid_argument on malformed input.
  static Rat parse(const std::string& s);

 private:
  void canonicalize();
  mpq_class v_;
};

std::string to_string(const Int& n);
Int int_from_string(const std::string& s);

// 64-bit FNV-1a, used to derive per-integral RNG seeds from canonical keys.
std::uint64_t fnv1a64(const std::string& s);

}  // namespace wps

#endif  // WPS_RAT_HPP
