#pragma once

#include "plab/matrix.hpp"
#include "plab/rational.hpp"

namespace plab {

/// An angle with exactly rational sine and cosine, strictly inside the first
/// quadrant (0 < sin < 1, 0 < cos < 1). By Niven's theorem every such angle
/// is an irrational multiple of pi, which is exactly the property the
/// rotation constructions need.
class PythagoreanAngle {
 public:
  /// Requires sin^2 + cos^2 == 1 exactly and both strictly in (0, 1).
  PythagoreanAngle(Rational sin, Rational cos);

  /// Completes the angle from its sine; fails unless 1 - sin^2 is the
  /// square of a rational (e.g. sin 3/5 -> cos 4/5, sin 5/13 -> cos 12/13).
  static PythagoreanAngle from_sin(const Rational& sin);

  const Rational& sin() const { return sin_; }
  const Rational& cos() const { return cos_; }

  /// The plane rotation [[cos, -sin], [sin, cos]] acting on column vectors.
  /// (The transpose convention gives identical squared amplitudes.)
  RatMatrix rotation_matrix() const;

  friend bool operator==(const PythagoreanAngle& a, const PythagoreanAngle& b) {
    return a.sin_ == b.sin_ && a.cos_ == b.cos_;
  }

 private:
  Rational sin_;
  Rational cos_;
};

/// Exact square root of a rational that is a perfect square; nullopt-style
/// failure is signalled by the bool.
bool rational_sqrt(const Rational& x, Rational& out);

}  // namespace plab
