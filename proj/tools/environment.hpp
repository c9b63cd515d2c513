#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pltower/analysis.hpp"
#include "pltower/plmap.hpp"
#include "pltower/projmap.hpp"

namespace pltower::cli {

using Element = std::variant<PLMap, PPMap>;

std::string element_str(const Element& e);
bool is_pl(const Element& e);

struct Binding {
  std::string name;
  Element value;
  /// 0 for builtins.
  std::size_t line = 0;
};

/// Ordered name -> element bindings. Starts with the builtins x0, x1 (PL)
/// and a, b, c (projective); a file may shadow them once. Every other name
/// is bound at most once, and only earlier names are visible.
class Environment {
public:
  Environment();

  /// `name = <expression>` per line, `#` starts a comment.
  static Environment parse(std::string_view text, std::string source = "<input>");
  static Environment load(const std::filesystem::path& path);

  void define(const std::string& name, Element value, std::size_t line);

  /// Parses an element in any published form: `PL[...]`, `PP[...]`, a tree
  /// pair `(..)|(..)`, or an expression over bound names. Throws SyntaxError,
  /// SemanticError or UnboundName.
  Element parse_element(std::string_view text) const;

  const Binding* find(std::string_view name) const;
  const std::vector<Binding>& bindings() const noexcept { return bindings_; }
  /// Names defined by the file, in order.
  std::vector<std::string> user_names() const;
  const std::string& source() const noexcept { return source_; }

  /// Generating set from the named bindings (all file bindings when `names`
  /// is empty). Throws SemanticError unless they are nonempty and all of
  /// kind Elem.
  template <class Elem>
  GeneratingSet<Elem> generators(const std::vector<std::string>& names) const;

  /// True when the selected bindings are PL maps.
  bool generators_are_pl(const std::vector<std::string>& names) const;

private:
  std::vector<Binding> bindings_;
  std::string source_;
};

}  // namespace pltower::cli
