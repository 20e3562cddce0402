#ifndef NCG_SCALAR_HPP
#define NCG_SCALAR_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ncg {

/// Base field of an algebra: the rationals or the Gaussian rationals.
enum class Field { Q, Qi };

inline std::string field_name(Field f) { return f == Field::Q ? "Q" : "Qi"; }

inline Field field_from_name(std::string_view s) {
  if (s == "Q") return Field::Q;
  if (s == "Qi") return Field::Qi;
  throw std::invalid_argument("unknown field: " + std::string(s));
}

/// Exact Gaussian rational a + b*i.  Elements of Q are the b == 0 case; all
/// arithmetic is exact and canonical (GMP keeps fractions reduced).
class Scalar {
 public:
  Scalar() : re_(0), im_(0) {}
  Scalar(long n) : re_(n), im_(0) {}  // NOLINT: implicit by design
  Scalar(long num, long den) : re_(num, den), im_(0) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    re_.canonicalize();
  }
  Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}
  explicit Scalar(mpq_class re) : re_(std::move(re)), im_(0) {}

  static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }

  Scalar operator-() const { return Scalar(-re_, -im_); }

  Scalar& operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
      re_ *= o.re_;
      return *this;
    }
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    return *this;
  }
  Scalar& operator/=(const Scalar& o) {
    if (o.is_zero()) throw std::domain_error("division by zero scalar");
    if (sgn(o.im_) == 0) {
      re_ /= o.re_;
      im_ /= o.re_;
      return *this;
    }
    mpq_class n = o.re_ * o.re_ + o.im_ * o.im_;
    mpq_class r = (re_ * o.re_ + im_ * o.im_) / n;
    im_ = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(r);
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar inverse() const {
    Scalar r(1);
    r /= *this;
    return r;
  }

  /// *this += x*y, the inner-loop operation of elimination.
  void addmul(const Scalar& x, const Scalar& y) {
    if (sgn(x.im_) == 0 && sgn(y.im_) == 0) {
      re_ += x.re_ * y.re_;
      return;
    }
    re_ += x.re_ * y.re_ - x.im_ * y.im_;
    im_ += x.re_ * y.im_ + x.im_ * y.re_;
  }
  /// *this -= x*y.
  void submul(const Scalar& x, const Scalar& y) {
    if (sgn(x.im_) == 0 && sgn(y.im_) == 0) {
      re_ -= x.re_ * y.re_;
      return;
    }
    re_ -= x.re_ * y.re_ - x.im_ * y.im_;
    im_ -= x.re_ * y.im_ + x.im_ * y.re_;
  }

  /// Serialized form "p/q" or "p/q+r/s*i"; round-trips bit-exactly.
  std::string str() const {
    if (sgn(im_) == 0) return re_.get_str();
    std::string s = re_.get_str();
    if (sgn(im_) >= 0) s += "+";
    s += im_.get_str();
    s += "*i";
    return s;
  }

  static Scalar parse(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty scalar literal");
    if (s.size() >= 2 && s.substr(s.size() - 2) == "*i") {
      std::string_view body = s.substr(0, s.size() - 2);
      // Split at the sign that separates the real and imaginary parts; a
      // leading '-' and a '-' right after '/' belong to the numbers.
      for (size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != '/') {
          return Scalar(parse_rational(body.substr(0, k)),
                        parse_rational(body.substr(k)));
        }
      }
      return Scalar(mpq_class(0), parse_rational(body));
    }
    return Scalar(parse_rational(s), mpq_class(0));
  }

 private:
  static mpq_class parse_rational(std::string_view sv) {
    std::string s(sv);
    if (!s.empty() && s[0] == '+') s = s.substr(1);
    mpq_class q;
    if (q.set_str(s, 10) != 0)
      throw std::invalid_argument("bad rational literal: " + s);
    if (sgn(q.get_den()) == 0)
      throw std::invalid_argument("zero denominator in: " + s);
    q.canonicalize();
    return q;
  }

  mpq_class re_, im_;
};

inline std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace ncg

#include <ostream>

namespace ncg {
inline std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.str();
}
}  // namespace ncg

#endif  // NCG_SCALAR_HPP
