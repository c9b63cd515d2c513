#pragma once

#include "pltower/interval_set.hpp"
#include "pltower/number.hpp"
#include "scanner.hpp"

namespace pltower::detail {

Rational read_rational(Scanner& in);
Number read_number(Scanner& in);
Interval read_interval(Scanner& in);

}  // namespace pltower::detail
