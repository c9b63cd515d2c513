#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pltower/interval_set.hpp"
#include "pltower/plmap.hpp"
#include "pltower/projmap.hpp"
#include "pltower/word.hpp"

namespace pltower {

enum class Ambient { UnitInterval, RealLine };

std::string to_string(Ambient a);
Ambient parse_ambient(std::string_view text);
IntervalSet ambient_set(Ambient a);

template <class Elem>
struct ElementTraits;

template <>
struct ElementTraits<PLMap> {
  static constexpr Ambient ambient = Ambient::UnitInterval;
  static constexpr int default_germ_depth = 1;
};

template <>
struct ElementTraits<PPMap> {
  static constexpr Ambient ambient = Ambient::RealLine;
  static constexpr int default_germ_depth = 2;
};

/// An element together with the expression that produced it. For the given
/// generators of H the expression is just the name.
template <class Elem>
struct NamedElement {
  Expr expr;
  Elem value;

  std::string name() const { return expr.str(); }
};

/// Ordered, name-unique list of elements of one kind. Derived and tower
/// levels reuse the type, so it may be empty.
template <class Elem>
class GeneratingSet {
public:
  static constexpr Ambient ambient = ElementTraits<Elem>::ambient;

  GeneratingSet() = default;

  void add(Expr expr, Elem value) {
    if (find(expr.str()) != nullptr) throw Error(ErrorKind::Semantic, "duplicate generator name '" + expr.str() + "'");
    elements_.push_back({std::move(expr), std::move(value)});
  }
  void add(std::string name, Elem value) { add(Expr::generator(std::move(name)), std::move(value)); }

  const std::vector<NamedElement<Elem>>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }

  const Elem* find(std::string_view name) const {
    for (const auto& e : elements_) {
      bool hit = e.expr.kind() == Expr::Kind::Generator ? e.expr.name() == name : e.name() == name;
      if (hit) return &e.value;
    }
    return nullptr;
  }

  /// Evaluates an expression over this set's names.
  Elem evaluate(const Expr& e) const {
    return evaluate_expr<Elem>(e, [this](const std::string& name) { return find(name); });
  }
  Elem evaluate(const Word& w) const {
    return word_evaluate<Elem>(w, [this](const std::string& name) { return find(name); });
  }

private:
  std::vector<NamedElement<Elem>> elements_;
};

enum class CellKind { Fixed, Support };

std::string to_string(CellKind k);

/// points x_0 < ... < x_n cut the ambient into n cells (x_i, x_{i+1}). On the
/// real line x_0 and x_n may be -inf and +inf.
struct Partition {
  std::vector<Number> points;
  std::vector<CellKind> cells;

  std::size_t cell_count() const noexcept { return cells.size(); }
  std::size_t support_cell_count() const;
  /// Closed cell, with open infinite ends.
  Interval cell(std::size_t i) const;
  Interval open_cell(std::size_t i) const { return Interval::open(points[i], points[i + 1]); }
  /// Union of cells 0..i as a closed set.
  IntervalSet cells_through(std::size_t i) const;

  friend bool operator==(const Partition&, const Partition&) = default;
};

template <class Elem>
IntervalSet group_fix_set(const GeneratingSet<Elem>& h);

template <class Elem>
IntervalSet group_support(const GeneratingSet<Elem>& h);

template <class Elem>
Partition partition(const GeneratingSet<Elem>& h);

/// Depth 1: [s_i, s_j] for i < j. Depth 2: the same applied to the depth 1
/// set. Identities are pruned and duplicates (by canonical form) removed.
template <class Elem>
GeneratingSet<Elem> derived_generators(const GeneratingSet<Elem>& h, int depth);

struct GermWitness {
  std::string element;
  Number point;
  /// Empty when the element is not the identity near the point.
  std::optional<Number> radius;

  friend bool operator==(const GermWitness&, const GermWitness&) = default;
};

struct GermCheck {
  bool trivial = true;
  std::vector<GermWitness> witnesses;
};

/// Checks every element of `derived` at every finite partition point.
template <class Elem>
GermCheck germ_check(const GeneratingSet<Elem>& derived, const Partition& p);

template <class Elem>
GermCheck germ_trivial_at_partition(const GeneratingSet<Elem>& h, int depth) {
  return germ_check(derived_generators(h, depth), partition(h));
}

/// Rational sample points for a cell: midpoints between consecutive
/// generator breakpoints inside it (a point beyond an infinite end).
template <class Elem>
std::vector<Rational> cell_samples(const GeneratingSet<Elem>& h, const Partition& p, std::size_t cell);

/// Exact soundness check of a partition against the generators. Returns a
/// description of the first violation, or nothing.
template <class Elem>
std::optional<std::string> partition_violation(const GeneratingSet<Elem>& h, const Partition& p);

}  // namespace pltower
