#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "filltop/error.hpp"

namespace filltop {

using Int = boost::multiprecision::cpp_int;

// Which of the two low-complexity surfaces a curve pair lives on. Both share
// the same curve graph (the Farey graph); they differ in the geometric
// intersection number realized by adjacent vertices.
enum class SurfaceKind { T11, S04 };

// A reduced rational p/q naming an isotopy class of essential simple closed
// curve. Canonical form: gcd(|p|, q) = 1 and q > 0, except the single
// infinite slope 1/0.
class Slope {
 public:
  Slope() : p_(0), q_(1) {}

  Slope(Int p, Int q) {
    if (p == 0 && q == 0) raise(errc::invalid_slope, "slope 0/0 is not a curve class");
    if (q < 0) {
      p = -p;
      q = -q;
    }
    if (q == 0) {
      p_ = 1;
      q_ = 0;
      return;
    }
    Int g = boost::multiprecision::gcd(boost::multiprecision::abs(p), q);
    p_ = p / g;
    q_ = q / g;
  }

  const Int& p() const { return p_; }
  const Int& q() const { return q_; }
  bool infinite() const { return q_ == 0; }

  Int height() const {
    Int a = boost::multiprecision::abs(p_);
    return a > q_ ? a : q_;
  }

  bool operator==(const Slope& o) const { return p_ == o.p_ && q_ == o.q_; }
  bool operator!=(const Slope& o) const { return !(*this == o); }

  // Total order used for deterministic tie-breaking: (p, q) lexicographic.
  bool lex_less(const Slope& o) const {
    if (p_ != o.p_) return p_ < o.p_;
    return q_ < o.q_;
  }

  // Order by rational value with 1/0 as the maximum.
  bool value_less(const Slope& o) const {
    if (infinite()) return false;
    if (o.infinite()) return true;
    return p_ * o.q_ < o.p_ * q_;
  }

  std::string str() const {
    return p_.str() + "/" + q_.str();
  }

  static Slope parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos || slash == 0 || slash + 1 >= text.size())
      raise(errc::invalid_slope, "expected \"p/q\", got \"" + text + "\"");
    try {
      Int p(text.substr(0, slash));
      Int q(text.substr(slash + 1));
      return Slope(p, q);
    } catch (const std::runtime_error&) {
      raise(errc::invalid_slope, "expected \"p/q\", got \"" + text + "\"");
    }
  }

 private:
  Int p_;
  Int q_;
};

// |p1 q2 - p2 q1|: the determinant pairing of the underlying torus classes.
inline Int slope_det(const Slope& a, const Slope& b) {
  return boost::multiprecision::abs(a.p() * b.q() - b.p() * a.q());
}

// Geometric intersection number of the curve classes named by two slopes.
// On the once-punctured torus this is the determinant pairing; the
// four-punctured sphere doubles it.
inline Int intersection_number(const Slope& a, const Slope& b, SurfaceKind surface) {
  Int d = slope_det(a, b);
  return surface == SurfaceKind::S04 ? Int(2 * d) : d;
}

inline bool farey_adjacent(const Slope& a, const Slope& b) { return slope_det(a, b) == 1; }

}  // namespace filltop
