#include "environment.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "pltower/treepair.hpp"
#include "pltower/word.hpp"

namespace pltower::cli {

std::string element_str(const Element& e) {
  return std::visit([](const auto& f) { return f.str(); }, e);
}

bool is_pl(const Element& e) { return std::holds_alternative<PLMap>(e); }

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'')) return false;
  }
  return true;
}

bool starts_with_tag(std::string_view s, std::string_view tag) {
  if (s.substr(0, tag.size()) != tag) return false;
  std::string_view rest = trim(s.substr(tag.size()));
  return !rest.empty() && rest.front() == '[';
}

template <class Elem>
Elem evaluate_over(const Expr& expr, const Environment& env) {
  return evaluate_expr<Elem>(expr, [&](const std::string& name) -> const Elem* {
    const Binding* b = env.find(name);
    return b == nullptr ? nullptr : std::get_if<Elem>(&b->value);
  });
}

}  // namespace

Environment::Environment() : source_("<builtins>") {
  bindings_.push_back({"x0", thompson::x0(), 0});
  bindings_.push_back({"x1", thompson::x1(), 0});
  bindings_.push_back({"a", projective::a(), 0});
  bindings_.push_back({"b", projective::b(), 0});
  bindings_.push_back({"c", projective::c(), 0});
}

const Binding* Environment::find(std::string_view name) const {
  for (auto it = bindings_.rbegin(); it != bindings_.rend(); ++it) {
    if (it->name == name) return &*it;
  }
  return nullptr;
}

std::vector<std::string> Environment::user_names() const {
  std::vector<std::string> out;
  for (const Binding& b : bindings_) {
    if (b.line > 0) out.push_back(b.name);
  }
  return out;
}

void Environment::define(const std::string& name, Element value, std::size_t line) {
  if (!is_identifier(name)) throw Error(ErrorKind::Syntax, "'" + name + "' is not a valid name");
  const Binding* prev = find(name);
  if (prev != nullptr && prev->line > 0) {
    throw Error(ErrorKind::Semantic, "name '" + name + "' is already bound at line " + std::to_string(prev->line));
  }
  bindings_.push_back({name, std::move(value), line});
}

Element Environment::parse_element(std::string_view text) const {
  std::string_view t = trim(text);
  if (starts_with_tag(t, "PL")) return PLMap::parse(text);
  if (starts_with_tag(t, "PP")) return PPMap::parse(text);
  if (t.find('|') != std::string_view::npos) return to_plmap(TreePair::parse(text));

  Expr expr = Expr::parse(text);
  std::vector<std::string> names = expr.names();
  bool pl = true;
  for (std::size_t i = 0; i < names.size(); ++i) {
    const Binding* b = find(names[i]);
    if (b == nullptr) throw Error(ErrorKind::UnboundName, "name '" + names[i] + "' is not bound");
    if (i == 0) {
      pl = is_pl(b->value);
    } else if (pl != is_pl(b->value)) {
      throw Error(ErrorKind::Semantic, "expression mixes PL and projective elements ('" + names[0] + "' and '" +
                                           names[i] + "')");
    }
  }
  if (pl) return evaluate_over<PLMap>(expr, *this);
  return evaluate_over<PPMap>(expr, *this);
}

Environment Environment::parse(std::string_view text, std::string source) {
  Environment env;
  env.source_ = std::move(source);
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (trim(line).empty()) continue;

    std::size_t eq = line.find('=');
    SourcePosition at{line_no, 1};
    if (eq == std::string_view::npos) {
      throw Error(ErrorKind::Syntax, env.source_ + ": expected 'name = <expression>'", at);
    }
    std::string name(trim(line.substr(0, eq)));
    std::string_view rhs = line.substr(eq + 1);
    try {
      env.define(name, env.parse_element(rhs), line_no);
    } catch (const Error& e) {
      SourcePosition where{line_no, eq + 2};
      if (e.position()) where.column = eq + 1 + e.position()->column;
      throw Error(e.kind(), env.source_ + ": " + e.detail(), where);
    }
    if (end == text.size()) break;
  }
  return env;
}

Environment Environment::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Semantic, "cannot read environment file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path.string());
}

bool Environment::generators_are_pl(const std::vector<std::string>& names) const {
  std::vector<std::string> selected = names.empty() ? user_names() : names;
  if (selected.empty()) throw Error(ErrorKind::Semantic, "no generators: the environment defines no names");
  const Binding* b = find(selected.front());
  if (b == nullptr) throw Error(ErrorKind::UnboundName, "name '" + selected.front() + "' is not bound");
  return is_pl(b->value);
}

template <class Elem>
GeneratingSet<Elem> Environment::generators(const std::vector<std::string>& names) const {
  std::vector<std::string> selected = names.empty() ? user_names() : names;
  if (selected.empty()) throw Error(ErrorKind::Semantic, "no generators: the environment defines no names");
  GeneratingSet<Elem> h;
  for (const std::string& name : selected) {
    const Binding* b = find(name);
    if (b == nullptr) throw Error(ErrorKind::UnboundName, "name '" + name + "' is not bound");
    const Elem* e = std::get_if<Elem>(&b->value);
    if (e == nullptr) throw Error(ErrorKind::Semantic, "generators must all be PL maps or all projective maps");
    h.add(name, *e);
  }
  return h;
}

template GeneratingSet<PLMap> Environment::generators(const std::vector<std::string>&) const;
template GeneratingSet<PPMap> Environment::generators(const std::vector<std::string>&) const;

}  // namespace pltower::cli
