#pragma once

#include <ostream>

#include "pltower/interval_set.hpp"
#include "pltower/number.hpp"
#include "pltower/plmap.hpp"
#include "pltower/projmap.hpp"
#include "pltower/treepair.hpp"
#include "pltower/word.hpp"

namespace pltower {

inline void PrintTo(const Number& x, std::ostream* os) { *os << x.str(); }
inline void PrintTo(const Interval& x, std::ostream* os) { *os << x.str(); }
inline void PrintTo(const IntervalSet& x, std::ostream* os) { *os << x.str(); }
inline void PrintTo(const PLMap& x, std::ostream* os) { *os << x.str(); }
inline void PrintTo(const PPMap& x, std::ostream* os) { *os << x.str(); }
inline void PrintTo(const TreePair& x, std::ostream* os) { *os << x.str(); }
inline void PrintTo(const Word& x, std::ostream* os) { *os << '"' << x.str() << '"'; }

}  // namespace pltower
