#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pltower/number.hpp"

namespace pltower {

/// One connected piece. Degenerate closed points [a,a] are allowed; infinite
/// endpoints are always open.
struct Interval {
  Number lo;
  Number hi;
  bool lo_closed = false;
  bool hi_closed = false;

  static Interval open(Number a, Number b) { return {std::move(a), std::move(b), false, false}; }
  static Interval closed(Number a, Number b) { return {std::move(a), std::move(b), true, true}; }
  static Interval point(const Number& a) { return {a, a, true, true}; }

  bool empty() const;
  bool contains(const Number& x) const;
  std::string str() const;

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Finite union of disjoint intervals, kept sorted with touching pieces merged,
/// so that structural equality is set equality.
class IntervalSet {
public:
  IntervalSet() = default;
  explicit IntervalSet(std::vector<Interval> pieces);
  IntervalSet(Interval piece);  // NOLINT(google-explicit-constructor)

  static IntervalSet unit_interval() { return IntervalSet(Interval::closed(0, 1)); }
  static IntervalSet real_line() { return IntervalSet(Interval::open(Number::neg_inf(), Number::pos_inf())); }

  const std::vector<Interval>& intervals() const noexcept { return pieces_; }
  bool empty() const noexcept { return pieces_.empty(); }
  std::size_t size() const noexcept { return pieces_.size(); }

  bool contains(const Number& x) const;
  bool is_subset_of(const IntervalSet& other) const;
  bool is_disjoint(const IntervalSet& other) const;

  IntervalSet unite(const IntervalSet& other) const;
  IntervalSet intersect(const IntervalSet& other) const;
  /// Complement relative to `ambient`.
  IntervalSet complement_in(const IntervalSet& ambient) const;
  IntervalSet closure() const;

  std::optional<Interval> leftmost() const;
  /// Throws Precondition on an empty set.
  const Number& inf() const;
  const Number& sup() const;

  /// Image under an increasing homeomorphism given pointwise; open/closed
  /// flags carry over.
  IntervalSet mapped(const std::function<Number(const Number&)>& increasing) const;

  /// `{}` for the empty set, otherwise pieces joined by ` u `, e.g.
  /// `(1/4,1/2) u [3/4,1]`.
  std::string str() const;
  static IntervalSet parse(std::string_view text);

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

private:
  std::vector<Interval> pieces_;
};

}  // namespace pltower
