#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pltower/interval_set.hpp"
#include "pltower/number.hpp"
#include "pltower/plmap.hpp"

namespace pltower {

/// t -> (p t + q) / (r t + s) with p s - q r > 0. Entries are scaled to
/// coprime integers with the first nonzero entry positive, so equal maps have
/// equal entries.
class Mobius {
public:
  Mobius() : Mobius(1, 0, 0, 1) {}
  Mobius(Rational p, Rational q, Rational r, Rational s);

  static Mobius identity() { return {}; }

  const Rational& p() const noexcept { return p_; }
  const Rational& q() const noexcept { return q_; }
  const Rational& r() const noexcept { return r_; }
  const Rational& s() const noexcept { return s_; }

  Rational det() const { return p_ * s_ - q_ * r_; }
  bool is_identity() const;
  bool is_affine() const { return sgn(r_) == 0; }

  /// Throws PoleInPiece when the denominator vanishes.
  Number apply(const Number& t) const;
  Rational apply(const Rational& t) const;
  Number derivative(const Number& t) const;

  Mobius inverse() const { return {s_, -q_, -r_, p_}; }
  /// The map t -> next(this(t)).
  Mobius then(const Mobius& next) const;

  friend bool operator==(const Mobius&, const Mobius&) = default;

private:
  Rational p_, q_, r_, s_;
};

/// Piecewise-projective homeomorphism of the real line. Breakpoints
/// b_1 < ... < b_m split R into m+1 closed pieces, each carrying a Mobius
/// map. Construction checks continuity at every breakpoint, absence of poles
/// on every piece and affine end pieces (so the map is an increasing
/// bijection of R), and merges neighbouring equal pieces.
class PPMap {
public:
  PPMap() : pieces_{Mobius::identity()} {}
  PPMap(std::vector<Rational> breakpoints, std::vector<Mobius> pieces);

  static PPMap identity() { return {}; }

  const std::vector<Rational>& breakpoints() const noexcept { return breaks_; }
  const std::vector<Mobius>& pieces() const noexcept { return pieces_; }
  bool is_identity() const noexcept { return pieces_.size() == 1 && pieces_.front().is_identity(); }

  /// Piece index for x; at a breakpoint the right-hand piece.
  std::size_t piece_index(const Number& x) const;
  Number lower(std::size_t piece) const;
  Number upper(std::size_t piece) const;

  /// `PP[ (-inf,0 : 1,0,0,1) (0,1 : 2,0,1,1) (1,inf : 1,0,0,1) ]`
  std::string str() const;
  static PPMap parse(std::string_view text);

  friend bool operator==(const PPMap&, const PPMap&) = default;

private:
  std::vector<Rational> breaks_;
  std::vector<Mobius> pieces_;
};

/// ±inf map to themselves.
Number evaluate(const PPMap& f, const Number& x);
Rational evaluate(const PPMap& f, const Rational& x);

PPMap compose(const PPMap& f, const PPMap& g);
PPMap inverse(const PPMap& f);
PPMap commutator(const PPMap& f, const PPMap& g);
PPMap conjugate(const PPMap& f, const PPMap& k);

inline PPMap operator*(const PPMap& f, const PPMap& g) { return compose(f, g); }

IntervalSet fix_set(const PPMap& f);
IntervalSet support(const PPMap& f);
IntervalSet image_under(const IntervalSet& set, const PPMap& f);

/// One-sided derivative det / (r t + s)^2 of the adjacent piece.
Number derivative_at(const PPMap& f, const Number& x, Side side);

/// True iff both pieces adjacent to x are the identity. Throws NotFixed when
/// f moves x.
bool identity_near(const PPMap& f, const Number& x);
std::optional<Number> identity_radius(const PPMap& f, const Number& x);

std::vector<Rational> breakpoint_positions(const PPMap& f);

/// Identity outside [u,v]; on [u,v] the hyperbolic map fixing u and v with
/// multiplier `lambda` at u (lambda > 0, u < v).
PPMap pp_bump(const Rational& u, const Rational& v, const Rational& lambda);

namespace projective {

/// t + 1
PPMap a();
/// t for t <= 0, t/(1-t) on [0,1/2], 3 - 1/t on [1/2,1], t + 1 for t >= 1
PPMap b();
/// 2t/(t+1) on [0,1], identity elsewhere
PPMap c();

}  // namespace projective

}  // namespace pltower
