#include "pltower/word.hpp"

#include <cstdlib>
#include <set>

#include "scanner.hpp"

namespace pltower {

Word::Word(const std::vector<Letter>& letters) {
  for (const Letter& l : letters) append(l.name, l.exponent);
}

void Word::append(std::string_view name, long exponent) {
  if (exponent == 0) return;
  if (!letters_.empty() && letters_.back().name == name) {
    letters_.back().exponent += exponent;
    if (letters_.back().exponent == 0) letters_.pop_back();
    return;
  }
  letters_.push_back({std::string(name), exponent});
}

long Word::length() const {
  long n = 0;
  for (const Letter& l : letters_) n += std::labs(l.exponent);
  return n;
}

Word Word::inverse() const {
  Word out;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.append(it->name, -it->exponent);
  return out;
}

Word operator*(const Word& a, const Word& b) {
  Word out = a;
  for (const Letter& l : b.letters_) out.append(l.name, l.exponent);
  return out;
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (const Letter& l : letters_) {
    if (!out.empty()) out += ' ';
    out += l.name;
    if (l.exponent != 1) out += "^" + std::to_string(l.exponent);
  }
  return out;
}

Word Word::parse(std::string_view text) { return Expr::parse(text).flatten(); }

// ---------------------------------------------------------------------------

Expr Expr::generator(std::string name) {
  Expr e;
  e.kind_ = Kind::Generator;
  e.name_ = std::move(name);
  return e;
}

Expr Expr::product(std::vector<Expr> factors) {
  std::vector<Expr> flat;
  for (Expr& f : factors) {
    if (f.kind_ == Kind::Identity) continue;
    if (f.kind_ == Kind::Product) {
      for (Expr& c : f.children_) flat.push_back(std::move(c));
    } else {
      flat.push_back(std::move(f));
    }
  }
  if (flat.empty()) return {};
  if (flat.size() == 1) return std::move(flat.front());
  Expr e;
  e.kind_ = Kind::Product;
  e.children_ = std::move(flat);
  return e;
}

Expr Expr::power(Expr base, long exponent) {
  if (exponent == 1 || base.kind_ == Kind::Identity) return base;
  if (exponent == 0) return {};
  Expr e;
  e.kind_ = Kind::Power;
  e.exponent_ = exponent;
  e.children_.push_back(std::move(base));
  return e;
}

Expr Expr::commutator(Expr a, Expr b) {
  Expr e;
  e.kind_ = Kind::Commutator;
  e.children_.push_back(std::move(a));
  e.children_.push_back(std::move(b));
  return e;
}

Expr Expr::conjugate(Expr a, const Expr& k) { return product({power(k, -1), std::move(a), k}); }

Word Expr::flatten() const {
  switch (kind_) {
    case Kind::Identity: return {};
    case Kind::Generator: {
      Word w;
      w.append(name_);
      return w;
    }
    case Kind::Product: {
      Word w;
      for (const Expr& c : children_) w = w * c.flatten();
      return w;
    }
    case Kind::Power: {
      Word base = children_.front().flatten();
      if (exponent_ < 0) base = base.inverse();
      Word w;
      for (long i = 0; i < std::labs(exponent_); ++i) w = w * base;
      return w;
    }
    case Kind::Commutator: {
      Word a = children_[0].flatten();
      Word b = children_[1].flatten();
      return a.inverse() * b.inverse() * a * b;
    }
  }
  return {};
}

namespace {

void collect_names(const Expr& e, std::set<std::string>& seen, std::vector<std::string>& out) {
  if (e.kind() == Expr::Kind::Generator && seen.insert(e.name()).second) out.push_back(e.name());
  for (const Expr& c : e.children()) collect_names(c, seen, out);
}

}  // namespace

std::vector<std::string> Expr::names() const {
  std::set<std::string> seen;
  std::vector<std::string> out;
  collect_names(*this, seen, out);
  return out;
}

std::string Expr::str() const {
  switch (kind_) {
    case Kind::Identity: return "1";
    case Kind::Generator: return name_;
    case Kind::Product: {
      std::string out;
      for (const Expr& c : children_) {
        if (!out.empty()) out += ' ';
        out += c.str();
      }
      return out;
    }
    case Kind::Power: {
      const Expr& base = children_.front();
      bool bare = base.kind_ == Kind::Generator || base.kind_ == Kind::Commutator;
      return (bare ? base.str() : "(" + base.str() + ")") + "^" + std::to_string(exponent_);
    }
    case Kind::Commutator: return "[" + children_[0].str() + "," + children_[1].str() + "]";
  }
  return "1";
}

namespace {

Expr read_expr(detail::Scanner& in);

Expr read_atom(detail::Scanner& in) {
  char c = in.peek();
  if (c == '(') {
    in.expect('(');
    Expr e = read_expr(in);
    in.expect(')');
    return e;
  }
  if (c == '[') {
    in.expect('[');
    Expr a = read_expr(in);
    in.expect(',');
    Expr b = read_expr(in);
    in.expect(']');
    return Expr::commutator(std::move(a), std::move(b));
  }
  if (c == '1') {
    in.expect('1');
    return {};
  }
  return Expr::generator(std::string(in.identifier()));
}

Expr read_term(detail::Scanner& in) {
  Expr base = read_atom(in);
  if (!in.accept('^')) return base;
  std::string_view token = in.number_token();
  if (token.find('/') != std::string_view::npos) in.fail("exponent must be an integer");
  long n = std::strtol(std::string(token).c_str(), nullptr, 10);
  if (n == 0) return {};
  return Expr::power(std::move(base), n);
}

Expr read_expr(detail::Scanner& in) {
  std::vector<Expr> factors;
  factors.push_back(read_term(in));
  for (;;) {
    char c = in.peek();
    if (c == '\0' || c == ')' || c == ']' || c == ',') break;
    factors.push_back(read_term(in));
  }
  return Expr::product(std::move(factors));
}

}  // namespace

Expr Expr::parse(std::string_view text) {
  detail::Scanner in(text);
  Expr e = read_expr(in);
  in.expect_end();
  return e;
}

}  // namespace pltower
