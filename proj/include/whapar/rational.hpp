#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace whapar {

// Exact rational scalar. Always canonical: gcd(|num|, den) = 1, den >= 1.
// mpq_class canonicalizes on construction from integers; string parsing and
// arithmetic keep the invariant.
class Rat {
public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}
  Rat(long num, long den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("Rat: zero denominator");
    v_.canonicalize();
  }
  explicit Rat(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  // Accepts "p", "-p", "p/q" with arbitrary-precision digits.
  static Rat parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rat: empty string");
    mpq_class v;
    if (v.set_str(s, 10) != 0)
      throw std::invalid_argument("Rat: cannot parse '" + s + "'");
    if (v.get_den() == 0) throw std::invalid_argument("Rat: zero denominator in '" + s + "'");
    v.canonicalize();
    return Rat(v);
  }

  std::string str() const { return v_.get_str(); }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  int sgn() const { return ::sgn(v_); }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("Rat: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
  friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
  friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
  friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }
  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }

  Rat inv() const {
    if (is_zero()) throw std::domain_error("Rat: inverse of zero");
    return Rat(mpq_class(1 / v_));
  }

  std::string numerator() const { return v_.get_num().get_str(); }
  std::string denominator() const { return v_.get_den().get_str(); }

private:
  mpq_class v_;
};

// Error taxonomy shared by all modules. CLI maps these to exit codes.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InternalInconsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace whapar
