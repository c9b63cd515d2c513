#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pltower/interval_set.hpp"
#include "pltower/number.hpp"

namespace pltower {

struct Breakpoint {
  Rational x;
  Rational y;
  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

/// Orientation-preserving piecewise-linear homeomorphism of [0,1], stored as
/// its breakpoint sequence with linear interpolation in between.
///
/// Construction validates (0,0) ... (1,1) with strictly increasing
/// coordinates and drops collinear interior breakpoints, so two maps are
/// equal exactly when they are structurally equal. Maps act on the right:
/// x.(f g) = (x.f).g.
class PLMap {
public:
  PLMap();
  explicit PLMap(std::vector<Breakpoint> points);

  static PLMap identity() { return PLMap(); }

  const std::vector<Breakpoint>& breakpoints() const noexcept { return points_; }
  std::size_t piece_count() const noexcept { return points_.size() - 1; }
  bool is_identity() const noexcept { return points_.size() == 2; }

  Rational slope(std::size_t piece) const;

  /// `PL[(0,0),(1/2,1/4),(3/4,1/2),(1,1)]`
  std::string str() const;
  static PLMap parse(std::string_view text);

  friend bool operator==(const PLMap&, const PLMap&) = default;

private:
  std::vector<Breakpoint> points_;
};

enum class Side { Left, Right };

Rational evaluate(const PLMap& f, const Rational& x);
/// Accepts quadratic irrationals (the pieces have rational coefficients).
/// Throws OutOfDomain outside [0,1].
Number evaluate(const PLMap& f, const Number& x);

PLMap compose(const PLMap& f, const PLMap& g);
PLMap inverse(const PLMap& f);
/// f^-1 g^-1 f g
PLMap commutator(const PLMap& f, const PLMap& g);
/// k^-1 f k; its support is the image of supp(f) under k.
PLMap conjugate(const PLMap& f, const PLMap& k);

inline PLMap operator*(const PLMap& f, const PLMap& g) { return compose(f, g); }

IntervalSet fix_set(const PLMap& f);
IntervalSet support(const PLMap& f);
IntervalSet image_under(const IntervalSet& set, const PLMap& f);

Rational one_sided_slope(const PLMap& f, const Number& x, Side side);

/// True iff f fixes x and is the identity on a neighbourhood of x (one-sided
/// at 0 and 1).
bool identity_near(const PLMap& f, const Number& x);

/// Largest r such that f is the identity on (x - r, x + r) within [0,1];
/// empty when f is not the identity near x.
std::optional<Number> identity_radius(const PLMap& f, const Number& x);

/// Dyadic breakpoints and power-of-two slopes.
bool is_in_F(const PLMap& f);

/// Positions of the breakpoints, for sampling.
std::vector<Rational> breakpoint_positions(const PLMap& f);

}  // namespace pltower
