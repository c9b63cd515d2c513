// pltower: command-line front end for the exact PL / projective toolkit.
//
// Exit codes: 0 success, 1 verification failure, 2 input error, 3 search
// exhausted.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "environment.hpp"
#include "pltower/report.hpp"
#include "selftest.hpp"

namespace {

using namespace pltower;
using cli::Element;
using cli::Environment;
using Json = nlohmann::ordered_json;

constexpr int exit_ok = 0;
constexpr int exit_verify_failed = 1;
constexpr int exit_input = 2;
constexpr int exit_exhausted = 3;

struct Options {
  std::string input;
  std::string out;
  std::string format = "text";
  std::vector<std::string> gens;

  std::string expr;
  std::string point;
  std::vector<std::string> exprs;

  std::string germ_depth = "auto";
  std::string strategy = "greedy";
  bool right_first = false;
  long max_steps = 4096;
  std::size_t max_gens = 16;

  std::string interval;
  std::string cell;
  std::string report;

  std::size_t samples = 11;
  std::string range;
  std::uint64_t seed = 1;
  std::size_t count = 100;
};

Environment environment(const Options& o) { return o.input.empty() ? Environment() : Environment::load(o.input); }

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw Error(ErrorKind::Semantic, "cannot write " + o.out);
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

bool json_format(const Options& o) {
  if (o.format != "json" && o.format != "text") {
    throw Error(ErrorKind::Semantic, "unknown format '" + o.format + "' (expected json or text)");
  }
  return o.format == "json";
}

TowerConfig tower_config(const Options& o) {
  TowerConfig cfg;
  if (o.germ_depth == "1" || o.germ_depth == "2") {
    cfg.germ_depth = o.germ_depth == "1" ? 1 : 2;
  } else if (o.germ_depth != "auto") {
    throw Error(ErrorKind::Semantic, "germ depth must be 1, 2 or auto");
  }
  cfg.strategy = parse_strategy(o.strategy);
  cfg.left_first = !o.right_first;
  if (o.max_steps <= 0 || o.max_gens == 0) throw Error(ErrorKind::Semantic, "caps must be positive");
  cfg.max_steps = o.max_steps;
  cfg.max_generators = o.max_gens;
  return cfg;
}

int cmd_eval(const Options& o) {
  Environment env = environment(o);
  Element f = env.parse_element(o.expr);
  if (o.point.empty()) {
    std::string s = cli::element_str(f);
    emit(o, json_format(o) ? Json{{"element", s}}.dump() : s);
    return exit_ok;
  }
  Number x = Number::parse(o.point);
  Number y = std::visit([&](const auto& m) { return evaluate(m, x); }, f);
  emit(o, json_format(o) ? Json{{"x", x.str()}, {"y", y.str()}}.dump() : y.str());
  return exit_ok;
}

int cmd_compose(const Options& o) {
  Environment env = environment(o);
  Element acc = env.parse_element(o.exprs.front());
  for (std::size_t i = 1; i < o.exprs.size(); ++i) {
    Element next = env.parse_element(o.exprs[i]);
    if (cli::is_pl(acc) != cli::is_pl(next)) {
      throw Error(ErrorKind::Semantic, "cannot compose a PL map with a projective map");
    }
    acc = std::visit(
        [&](const auto& f) -> Element { return compose(f, std::get<std::decay_t<decltype(f)>>(next)); }, acc);
  }
  std::string s = cli::element_str(acc);
  emit(o, json_format(o) ? Json{{"element", s}}.dump() : s);
  return exit_ok;
}

int cmd_set(const Options& o, bool support_set) {
  Environment env = environment(o);
  Element f = env.parse_element(o.expr);
  IntervalSet s = std::visit([&](const auto& m) { return support_set ? support(m) : fix_set(m); }, f);
  emit(o, json_format(o) ? Json{{support_set ? "support" : "fixset", s.str()}}.dump() : s.str());
  return exit_ok;
}

template <class Elem>
int partition_for(const Options& o, const GeneratingSet<Elem>& h) {
  Partition p = partition(h);
  if (json_format(o)) {
    Json points = Json::array();
    Json cells = Json::array();
    for (const Number& x : p.points) points.push_back(x.str());
    for (CellKind k : p.cells) cells.push_back(to_string(k));
    emit(o, Json{{"ambient", to_string(h.ambient)}, {"points", points}, {"cells", cells}}.dump(2));
    return exit_ok;
  }
  std::ostringstream s;
  for (std::size_t i = 0; i < p.cell_count(); ++i) s << p.cell(i).str() << ' ' << to_string(p.cells[i]) << '\n';
  emit(o, s.str());
  return exit_ok;
}

int cmd_partition(const Options& o) {
  Environment env = environment(o);
  if (env.generators_are_pl(o.gens)) return partition_for(o, env.generators<PLMap>(o.gens));
  return partition_for(o, env.generators<PPMap>(o.gens));
}

template <class Elem>
int tower_for(const Options& o, const GeneratingSet<Elem>& h) {
  TowerConfig cfg = tower_config(o);
  try {
    TowerReport r = build_tower(h, cfg);
    emit(o, to_json(r));
    if (!o.out.empty()) {
      std::cout << to_string(r.outcome);
      if (r.outcome == Outcome::Terminated) std::cout << " at l = " << r.terminal_level;
      std::cout << " (" << r.partition.support_cell_count() << " support cells)\n";
    }
    return exit_ok;
  } catch (const SearchExhausted& e) {
    if (!o.out.empty()) emit(o, to_json(e.partial()));
    std::cerr << e.what() << '\n';
    return exit_exhausted;
  }
}

int cmd_tower(const Options& o) {
  Environment env = environment(o);
  if (env.generators_are_pl(o.gens)) return tower_for(o, env.generators<PLMap>(o.gens));
  return tower_for(o, env.generators<PPMap>(o.gens));
}

template <class Elem>
int displace_for(const Options& o, const GeneratingSet<Elem>& h) {
  IntervalSet interval = IntervalSet::parse(o.interval);
  std::optional<Interval> cell;
  if (!o.cell.empty()) {
    IntervalSet c = IntervalSet::parse(o.cell);
    if (c.size() != 1) throw Error(ErrorKind::Precondition, "cell must be a single interval");
    cell = c.intervals().front();
  } else {
    Partition p = partition(h);
    for (std::size_t i = 0; i < p.cell_count(); ++i) {
      if (p.cells[i] == CellKind::Support && interval.is_subset_of(IntervalSet(p.open_cell(i)))) cell = p.open_cell(i);
    }
    if (!cell) throw Error(ErrorKind::Precondition, interval.str() + " does not lie inside one support cell");
  }
  Displacement d = displace(h, interval, *cell, tower_config(o));
  const Certificate& c = d.certificate;
  if (json_format(o)) {
    emit(o, Json{{"word", d.word.str()},
                 {"direction", to_string(c.direction)},
                 {"interval", c.interval.str()},
                 {"image", c.image.str()},
                 {"inequality", c.inequality}}
                .dump(2));
  } else {
    emit(o, "word: " + d.word.str() + "\nimage: " + c.image.str() + "\ncertificate: " + c.inequality + "\n");
  }
  return exit_ok;
}

int cmd_displace(const Options& o) {
  Environment env = environment(o);
  if (env.generators_are_pl(o.gens)) return displace_for(o, env.generators<PLMap>(o.gens));
  return displace_for(o, env.generators<PPMap>(o.gens));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Semantic, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int cmd_verify(const Options& o) {
  Environment env = environment(o);
  TowerReport r = report_from_json(read_file(o.report));
  std::vector<std::string> names = o.gens;
  if (names.empty()) {
    for (const auto& g : r.generators) names.push_back(g.first);
  }
  VerifyResult v;
  try {
    v = r.ambient == Ambient::UnitInterval ? verify_report(env.generators<PLMap>(names), r)
                                           : verify_report(env.generators<PPMap>(names), r);
  } catch (const Error& e) {
    v = {false, "generators", e.what()};
  }
  if (v.ok) {
    std::cout << "ok\n";
    return exit_ok;
  }
  std::cout << "FAIL at " << v.where << ": " << v.message << '\n';
  return exit_verify_failed;
}

int cmd_sample(const Options& o) {
  Environment env = environment(o);
  Element f = env.parse_element(o.expr);
  if (o.samples == 0) throw Error(ErrorKind::Semantic, "--samples must be positive");
  Rational lo = 0;
  Rational hi = 1;
  if (!cli::is_pl(f)) {
    lo = -4;
    hi = 4;
  }
  if (!o.range.empty()) {
    std::size_t comma = o.range.find(',');
    if (comma == std::string::npos) throw Error(ErrorKind::Syntax, "--range expects lo,hi");
    lo = parse_rational(o.range.substr(0, comma));
    hi = parse_rational(o.range.substr(comma + 1));
    if (!(lo < hi)) throw Error(ErrorKind::Semantic, "--range needs lo < hi");
  }
  std::ostringstream csv;
  csv << "x,y,x_decimal,y_decimal\n" << std::setprecision(17);
  for (std::size_t i = 0; i < o.samples; ++i) {
    Rational t = o.samples == 1 ? Rational(1, 2) : make_rational(static_cast<long>(i), static_cast<long>(o.samples - 1));
    Rational x = lo + (hi - lo) * t;
    Rational y = std::visit([&](const auto& m) { return evaluate(m, x); }, f);
    csv << to_string(x) << ',' << to_string(y) << ',' << x.get_d() << ',' << y.get_d() << '\n';
  }
  emit(o, csv.str());
  return exit_ok;
}

int exit_code(const Error& e) { return e.kind() == ErrorKind::SearchExhausted ? exit_exhausted : exit_input; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for PL and piecewise-projective homeomorphism groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--input", o.input, "Environment file (name = expression per line)");
  app.add_option("--out", o.out, "Write the result to this file");
  app.add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--gens", o.gens, "Generator names (default: all names in --input)")->delimiter(',');

  auto* eval = app.add_subcommand("eval", "Print an element, or its value at a point");
  eval->add_option("expr", o.expr)->required();
  eval->add_option("point", o.point);

  auto* compose = app.add_subcommand("compose", "Product of elements, first acting first");
  compose->add_option("exprs", o.exprs)->required()->expected(2, -1);

  auto* supp = app.add_subcommand("support", "Support of an element");
  supp->add_option("expr", o.expr)->required();
  auto* fix = app.add_subcommand("fixset", "Fixed set of an element");
  fix->add_option("expr", o.expr)->required();

  auto* part = app.add_subcommand("partition", "Partition of the ambient into fixed and support cells");

  auto add_search = [&](CLI::App* cmd) {
    cmd->add_option("--strategy", o.strategy, "greedy or bfs")->check(CLI::IsMember({"greedy", "bfs"}));
    cmd->add_option("--max-steps", o.max_steps, "Greedy step cap / BFS word length cap");
    cmd->add_flag("--right-first", o.right_first, "Try right displacement before left");
  };
  auto* tower = app.add_subcommand("tower", "Build the commutator tower and write its JSON report");
  tower->add_option("--germ-depth", o.germ_depth, "1, 2 or auto")->check(CLI::IsMember({"1", "2", "auto"}));
  tower->add_option("--max-gens", o.max_gens, "Generators kept per level");
  add_search(tower);

  auto* disp = app.add_subcommand("displace", "Find a word moving an interval off itself");
  disp->add_option("--interval", o.interval, "e.g. (1/4,1/2)")->required();
  disp->add_option("--cell", o.cell, "Support cell (default: the one containing the interval)");
  add_search(disp);

  auto* verify = app.add_subcommand("verify", "Recheck a tower report against the generators");
  verify->add_option("--report", o.report)->required();

  auto* sample = app.add_subcommand("sample", "CSV of (x, f(x)) at uniformly spaced rational points");
  sample->add_option("expr", o.expr)->required();
  sample->add_option("--samples", o.samples, "Number of points");
  sample->add_option("--range", o.range, "lo,hi (default 0,1 for PL maps, -4,4 for projective maps)");

  auto* self = app.add_subcommand("selftest", "Run the randomized property suites");
  self->add_option("--seed", o.seed);
  self->add_option("--samples", o.count, "Instances per suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_input;
  }

  try {
    if (*eval) return cmd_eval(o);
    if (*compose) return cmd_compose(o);
    if (*supp) return cmd_set(o, true);
    if (*fix) return cmd_set(o, false);
    if (*part) return cmd_partition(o);
    if (*tower) return cmd_tower(o);
    if (*disp) return cmd_displace(o);
    if (*verify) return cmd_verify(o);
    if (*sample) return cmd_sample(o);
    if (*self) return pltower::cli::run_selftest(o.seed, o.count, std::cout) ? exit_ok : exit_verify_failed;
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return exit_code(e);
  }
  return exit_input;
}
