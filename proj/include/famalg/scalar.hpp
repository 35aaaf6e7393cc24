#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "famalg/error.hpp"

namespace famalg {

/// Runtime tag for the scalar field of a serialized algebra.
enum class FieldTag { Q, F2, F3, F5 };

inline const char* field_tag_name(FieldTag t) {
  switch (t) {
    case FieldTag::Q: return "Q";
    case FieldTag::F2: return "F2";
    case FieldTag::F3: return "F3";
    case FieldTag::F5: return "F5";
  }
  return "?";
}

inline FieldTag field_tag_from_name(const std::string& s) {
  if (s == "Q") return FieldTag::Q;
  if (s == "F2") return FieldTag::F2;
  if (s == "F3") return FieldTag::F3;
  if (s == "F5") return FieldTag::F5;
  throw Error("SemanticError", "unknown field tag '" + s + "'");
}

/// Exact rational scalar. Always kept in canonical form:
/// gcd(|num|, den) = 1 and den >= 1.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(long num, long den) {
    if (den == 0) throw Error("DivisionByZero", "rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  /// Parses "p", "-p" or "p/q" (base 10). Normalizes, so "2/4" parses as 1/2.
  static Rational parse(const std::string& s) {
    mpq_class q;
    if (s.empty() || mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
      throw Error("SyntaxError", "invalid rational literal '" + s + "'");
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
      throw Error("DivisionByZero", "rational with zero denominator: '" + s + "'");
    q.canonicalize();
    Rational r;
    r.v_ = std::move(q);
    return r;
  }

  std::string str() const { return v_.get_str(); }
  bool is_zero() const { return sgn(v_) == 0; }

  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static constexpr int characteristic() { return 0; }
  static constexpr FieldTag tag() { return FieldTag::Q; }
  static const char* field_name() { return "Q"; }

  /// Small nonzero values used when drawing random structure constants.
  static std::vector<Rational> nonzero_pool() {
    return {Rational(1), Rational(-1), Rational(2), Rational(-2)};
  }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw Error("DivisionByZero", "rational division by zero");
    return Rational(a.v_ / b.v_);
  }
  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }

private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_; // canonical: operations on canonical operands stay canonical
};

/// Prime-field scalar for tiny p. Values live in [0, P).
template <int P>
class Fp {
  static_assert(P == 2 || P == 3 || P == 5, "supported prime fields: F2, F3, F5");

public:
  Fp() : v_(0) {}
  Fp(long n) : v_(static_cast<int>(((n % P) + P) % P)) {}

  /// Parses a decimal integer and reduces it mod P ("-1" is accepted as P-1).
  static Fp parse(const std::string& s) {
    if (s.empty()) throw Error("SyntaxError", "empty field element literal");
    std::size_t pos = 0;
    long n = 0;
    try {
      n = std::stol(s, &pos);
    } catch (const std::exception&) {
      throw Error("SyntaxError", "invalid field element literal '" + s + "'");
    }
    if (pos != s.size())
      throw Error("SyntaxError", "invalid field element literal '" + s + "'");
    return Fp(n);
  }

  std::string str() const { return std::to_string(v_); }
  bool is_zero() const { return v_ == 0; }
  int value() const { return v_; }

  static Fp zero() { return Fp(0); }
  static Fp one() { return Fp(1); }
  static constexpr int characteristic() { return P; }
  static constexpr FieldTag tag() {
    return P == 2 ? FieldTag::F2 : P == 3 ? FieldTag::F3 : FieldTag::F5;
  }
  static const char* field_name() { return P == 2 ? "F2" : P == 3 ? "F3" : "F5"; }

  static std::vector<Fp> nonzero_pool() {
    std::vector<Fp> out;
    for (int v = 1; v < P; ++v) out.push_back(Fp(v));
    return out;
  }

  friend Fp operator+(Fp a, Fp b) { return Fp((a.v_ + b.v_) % P); }
  friend Fp operator-(Fp a, Fp b) { return Fp((a.v_ - b.v_ + P) % P); }
  friend Fp operator*(Fp a, Fp b) { return Fp((a.v_ * b.v_) % P); }
  friend Fp operator/(Fp a, Fp b) {
    if (b.is_zero()) throw Error("DivisionByZero", "division by zero in F_p");
    return a * b.inverse();
  }
  Fp operator-() const { return Fp((P - v_) % P); }
  Fp& operator+=(Fp o) { v_ = (v_ + o.v_) % P; return *this; }
  Fp& operator-=(Fp o) { v_ = (v_ - o.v_ + P) % P; return *this; }
  Fp& operator*=(Fp o) { v_ = (v_ * o.v_) % P; return *this; }
  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
  friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

  Fp inverse() const {
    if (is_zero()) throw Error("DivisionByZero", "inverse of zero in F_p");
    // Fermat: a^(P-2), P tiny
    Fp acc = one();
    for (int i = 0; i < P - 2; ++i) acc *= *this;
    return acc;
  }

private:
  int v_;
};

using F2 = Fp<2>;
using F3 = Fp<3>;
using F5 = Fp<5>;

} // namespace famalg
