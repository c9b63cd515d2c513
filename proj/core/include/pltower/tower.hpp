#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pltower/analysis.hpp"
#include "pltower/error.hpp"
#include "pltower/interval_set.hpp"
#include "pltower/word.hpp"

namespace pltower {

enum class Strategy { Greedy, Bfs };
enum class Direction { Left, Right };

std::string to_string(Strategy s);
std::string to_string(Direction d);
Strategy parse_strategy(std::string_view text);
Direction parse_direction(std::string_view text);

struct TowerConfig {
  /// Empty means 1 for PL maps and 2 for projective maps.
  std::optional<int> germ_depth;
  Strategy strategy = Strategy::Greedy;
  bool left_first = true;
  /// Greedy: maximum letters; BFS: maximum word length.
  long max_steps = 4096;
  std::size_t max_generators = 16;
  std::size_t max_bfs_states = 200000;
};

/// Left: sup(I.k) < inf(I). Right: inf(I.k) > sup(I).
struct Certificate {
  Direction direction = Direction::Left;
  IntervalSet interval;
  IntervalSet image;
  std::string inequality;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct Displacement {
  Word word;
  Certificate certificate;
};

struct TowerStep {
  std::size_t level = 0;
  /// Index into all cells of the partition.
  std::size_t cell = 0;
  IntervalSet interval;
  Word displacement;
  Certificate certificate;
  bool left_cells_identity = true;
  /// Expressions over H's generator names.
  std::vector<std::string> next_generators;

  friend bool operator==(const TowerStep&, const TowerStep&) = default;
};

enum class Outcome { AbelianAtStart, Terminated };

std::string to_string(Outcome o);
Outcome parse_outcome(std::string_view text);

struct TowerReport {
  Ambient ambient = Ambient::UnitInterval;
  /// name -> canonical element text
  std::vector<std::pair<std::string, std::string>> generators;
  int germ_depth = 1;
  Partition partition;
  std::vector<std::string> initial_generators;
  bool germs_trivial = true;
  std::vector<GermWitness> germ_witnesses;
  std::vector<TowerStep> steps;
  std::size_t terminal_level = 0;
  /// Every [a^k_l, b] over the terminal generators is the identity.
  bool terminal_identity = true;
  Outcome outcome = Outcome::AbelianAtStart;
  /// max_generators used to build the levels; needed to recompute them.
  std::size_t generator_cap = 16;
  bool capped = false;

  friend bool operator==(const TowerReport&, const TowerReport&) = default;
};

/// Thrown when displacement hits its step or state cap. Carries what was
/// built so far.
class SearchExhausted : public Error {
public:
  SearchExhausted(const std::string& message, TowerReport partial)
      : Error(ErrorKind::SearchExhausted, message), partial_(std::move(partial)) {}

  const TowerReport& partial() const noexcept { return partial_; }

private:
  TowerReport partial_;
};

/// Finds a word k over H's generators with I.k disjoint from I. Requires
/// closure(I) inside the open support cell `cell`.
template <class Elem>
Displacement displace(const GeneratingSet<Elem>& h, const IntervalSet& interval, const Interval& cell,
                      const TowerConfig& cfg = {});

/// Builds the certificate for a candidate word, or nothing if I.k meets I.
template <class Elem>
std::optional<Certificate> displacement_certificate(const Elem& k, const IntervalSet& interval);

/// {[a^k, b] : a, b in g}, identities pruned, deduplicated by canonical form
/// and capped at `cap` (sets `capped` when elements were dropped).
template <class Elem>
GeneratingSet<Elem> next_level(const GeneratingSet<Elem>& g, const Word& k, const Elem& k_value, std::size_t cap,
                               bool& capped);

template <class Elem>
TowerReport build_tower(const GeneratingSet<Elem>& h, const TowerConfig& cfg = {});

struct VerifyResult {
  bool ok = true;
  /// Location of the first failure, e.g. `steps[0].certificate`.
  std::string where;
  std::string message;
};

/// Rechecks every claim of the report from H's generators alone.
template <class Elem>
VerifyResult verify_report(const GeneratingSet<Elem>& h, const TowerReport& report);

}  // namespace pltower
