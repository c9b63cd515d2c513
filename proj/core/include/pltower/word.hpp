#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pltower/error.hpp"

namespace pltower {

struct Letter {
  std::string name;
  long exponent = 1;
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Freely reduced product of generator powers, e.g. `x0^3 x1^-1`. The empty
/// word prints as `1`.
class Word {
public:
  Word() = default;
  explicit Word(const std::vector<Letter>& letters);

  /// Appends name^exponent, merging with the last letter when names match.
  void append(std::string_view name, long exponent = 1);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  bool empty() const noexcept { return letters_.empty(); }
  /// Sum of |exponent|.
  long length() const;

  Word inverse() const;
  friend Word operator*(const Word& a, const Word& b);

  std::string str() const;
  /// Parses the full expression grammar and flattens it.
  static Word parse(std::string_view text);

  friend bool operator==(const Word&, const Word&) = default;

private:
  std::vector<Letter> letters_;
};

/// Parse tree of the element-expression grammar:
///
///   expr := term { term }            juxtaposition is the product
///   term := atom [ '^' INT ]
///   atom := NAME | '1' | '(' expr ')' | '[' expr ',' expr ']'
///
/// `[u,v]` is u^-1 v^-1 u v. Evaluation walks the tree directly, which keeps
/// nested commutators from expanding into exponentially long words.
class Expr {
public:
  enum class Kind { Identity, Generator, Product, Power, Commutator };

  Expr() = default;
  static Expr generator(std::string name);
  static Expr product(std::vector<Expr> factors);
  static Expr power(Expr base, long exponent);
  static Expr commutator(Expr a, Expr b);
  /// k^-1 a k, written `(k)^-1 a k` with parentheses as needed.
  static Expr conjugate(Expr a, const Expr& k);

  Kind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }
  long exponent() const noexcept { return exponent_; }
  const std::vector<Expr>& children() const noexcept { return children_; }

  Word flatten() const;
  std::vector<std::string> names() const;

  std::string str() const;
  static Expr parse(std::string_view text);

  friend bool operator==(const Expr&, const Expr&) = default;

private:
  Kind kind_ = Kind::Identity;
  std::string name_;
  long exponent_ = 1;
  std::vector<Expr> children_;
};

namespace detail {

template <class Elem>
Elem power(const Elem& base, long exponent) {
  Elem result = Elem::identity();
  Elem square = exponent < 0 ? inverse(base) : base;
  unsigned long n = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
  while (n > 0) {
    if (n & 1UL) result = compose(result, square);
    n >>= 1;
    if (n > 0) square = compose(square, square);
  }
  return result;
}

template <class Elem, class Lookup>
const Elem& resolve(const Lookup& lookup, const std::string& name) {
  const Elem* e = lookup(name);
  if (e == nullptr) throw Error(ErrorKind::UnboundName, "name '" + name + "' is not bound");
  return *e;
}

}  // namespace detail

/// `lookup(name)` returns a pointer to the bound element or nullptr.
template <class Elem, class Lookup>
Elem evaluate_expr(const Expr& e, const Lookup& lookup) {
  switch (e.kind()) {
    case Expr::Kind::Identity:
      return Elem::identity();
    case Expr::Kind::Generator:
      return detail::resolve<Elem>(lookup, e.name());
    case Expr::Kind::Product: {
      Elem acc = Elem::identity();
      for (const Expr& c : e.children()) acc = compose(acc, evaluate_expr<Elem>(c, lookup));
      return acc;
    }
    case Expr::Kind::Power:
      return detail::power(evaluate_expr<Elem>(e.children().front(), lookup), e.exponent());
    case Expr::Kind::Commutator:
      return commutator(evaluate_expr<Elem>(e.children()[0], lookup), evaluate_expr<Elem>(e.children()[1], lookup));
  }
  return Elem::identity();
}

template <class Elem, class Lookup>
Elem word_evaluate(const Word& w, const Lookup& lookup) {
  Elem acc = Elem::identity();
  for (const Letter& l : w.letters()) acc = compose(acc, detail::power(detail::resolve<Elem>(lookup, l.name), l.exponent));
  return acc;
}

template <class Elem>
Elem word_evaluate(const Word& w, const std::map<std::string, Elem, std::less<>>& env) {
  return word_evaluate<Elem>(w, [&](std::string_view name) -> const Elem* {
    auto it = env.find(name);
    return it == env.end() ? nullptr : &it->second;
  });
}

template <class Elem>
Elem evaluate_expr(const Expr& e, const std::map<std::string, Elem, std::less<>>& env) {
  return evaluate_expr<Elem>(e, [&](std::string_view name) -> const Elem* {
    auto it = env.find(name);
    return it == env.end() ? nullptr : &it->second;
  });
}

}  // namespace pltower
