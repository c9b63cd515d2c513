#pragma once

#include <random>
#include <string>
#include <vector>

#include "pltower/analysis.hpp"
#include "pltower/number.hpp"
#include "pltower/plmap.hpp"
#include "pltower/projmap.hpp"
#include "pltower/treepair.hpp"
#include "pltower/word.hpp"

namespace pltower::random {

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi].
long uniform(Rng& rng, long lo, long hi);

/// Rational with denominator up to 2^den_bits * 3, any sign.
Rational rational(Rng& rng, long max_abs = 4, int den_bits = 5);

/// Dyadic rational strictly inside (lo, hi).
Rational dyadic_between(Rng& rng, const Rational& lo, const Rational& hi, int den_bits = 5);

/// n distinct sorted dyadics strictly inside (lo, hi).
std::vector<Rational> sorted_points(Rng& rng, const Rational& lo, const Rational& hi, int n, int den_bits = 5);

/// Homeomorphism of [lo,hi] with `interior` random breakpoints, identity
/// elsewhere in [0,1].
PLMap pl_on(Rng& rng, const Rational& lo, const Rational& hi, int interior);

/// Map of [lo,hi] moving every interior point left.
PLMap pl_pusher(Rng& rng, const Rational& lo, const Rational& hi, int k);

PLMap pl(Rng& rng, int max_interior = 4);

Word word(Rng& rng, const std::vector<std::string>& names, int max_len);

/// Random word of length <= max_len in x0, x1.
PLMap f_element(Rng& rng, int max_len);

/// Random word of length <= max_len in a, b, c.
PPMap pp_element(Rng& rng, int max_len);

/// Random affine map t -> alpha t + beta.
PPMap pp_affine(Rng& rng);

/// Random reduced tree pair with at most `max_leaves` leaves.
TreePair tree_pair(Rng& rng, int max_leaves);

BinaryTree tree(Rng& rng, int leaves);

/// Subgroup of PL+[0,1] whose partition has exactly `support_cells` support
/// cells, possibly separated by fixed cells or isolated fixed points.
/// Generators mix pushers and general maps on several cells at once.
GeneratingSet<PLMap> pl_subgroup(Rng& rng, int support_cells, int generators);

/// Same on the real line with hyperbolic bumps as pieces.
GeneratingSet<PPMap> pp_subgroup(Rng& rng, int support_cells, int generators);

/// Element of <a,b,c> fixing 0: a word in b, c and their conjugates by
/// powers of a that still fix 0.
PPMap pp_fixing_zero(Rng& rng, int max_len);

}  // namespace pltower::random
