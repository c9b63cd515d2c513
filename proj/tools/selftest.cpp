#include "selftest.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pltower/random.hpp"
#include "pltower/report.hpp"

namespace pltower::cli {

namespace {

using Check = std::function<std::optional<std::string>(random::Rng&)>;

std::optional<std::string> kernel(random::Rng& rng) {
  long d = random::uniform(rng, 2, 30);
  Number x = Number::surd(random::rational(rng), random::rational(rng), d);
  Number y = Number::surd(random::rational(rng), random::rational(rng), d);
  Number z = random::rational(rng);
  if ((x + y) + z != x + (y + z)) return "addition not associative";
  if ((x * y) * z != x * (y * z)) return "multiplication not associative";
  if (x.sign() != 0 && x * x.inverse() != Number(1)) return "x * x^-1 != 1 for " + x.str();
  if ((x < y) != (x.approx() < y.approx()) && x != y) return "order disagrees with floating point";
  return std::nullopt;
}

std::optional<std::string> group_axioms(random::Rng& rng) {
  PLMap f = random::pl(rng);
  PLMap g = random::pl(rng);
  PLMap h = random::pl(rng);
  if (compose(compose(f, g), h) != compose(f, compose(g, h))) return "PL composition not associative";
  if (!compose(f, inverse(f)).is_identity()) return "f f^-1 != 1";
  if (support(conjugate(f, g)) != image_under(support(f), g)) return "support transport failed";
  PPMap p = random::pp_element(rng, 6);
  PPMap q = random::pp_element(rng, 6);
  if (!compose(p, inverse(p)).is_identity()) return "PP p p^-1 != 1";
  if (support(conjugate(p, q)) != image_under(support(p), q)) return "PP support transport failed";
  return std::nullopt;
}

std::optional<std::string> round_trips(random::Rng& rng) {
  PLMap f = random::f_element(rng, 8);
  if (PLMap::parse(f.str()) != f) return "PL round trip failed for " + f.str();
  PPMap p = random::pp_element(rng, 6);
  if (PPMap::parse(p.str()) != p) return "PP round trip failed for " + p.str();
  TreePair t = random::tree_pair(rng, 12);
  if (from_plmap(to_plmap(t)) != t) return "tree pair round trip failed for " + t.str();
  return std::nullopt;
}

std::optional<std::string> partitions(random::Rng& rng) {
  auto h = random::pl_subgroup(rng, static_cast<int>(random::uniform(rng, 1, 4)), 2);
  if (auto v = partition_violation(h, partition(h))) return *v;
  return std::nullopt;
}

std::optional<std::string> towers(random::Rng& rng) {
  int cells = static_cast<int>(random::uniform(rng, 1, 4));
  auto h = random::pl_subgroup(rng, cells, 2);
  TowerReport r = build_tower(h);
  VerifyResult v = verify_report(h, report_from_json(to_json(r)));
  if (!v.ok) return "verify failed at " + v.where + ": " + v.message;
  if (r.outcome == Outcome::Terminated && r.terminal_level >= static_cast<std::size_t>(cells)) {
    return "terminal level exceeds the support cell count";
  }
  return std::nullopt;
}

}  // namespace

bool run_selftest(std::uint64_t seed, std::size_t count, std::ostream& out) {
  const std::vector<std::pair<const char*, Check>> suites = {
      {"exact-kernel", kernel},   {"group-axioms", group_axioms}, {"round-trips", round_trips},
      {"partition", partitions},  {"tower", towers},
  };
  bool all = true;
  for (const auto& [name, check] : suites) {
    random::Rng rng(seed);
    std::optional<std::string> failure;
    std::size_t i = 0;
    for (; i < count && !failure; ++i) {
      try {
        failure = check(rng);
      } catch (const Error& e) {
        failure = e.what();
      }
    }
    if (failure) {
      all = false;
      out << "FAIL " << name << " (instance " << i << "): " << *failure << '\n';
    } else {
      out << "PASS " << name << " (" << count << " instances)\n";
    }
  }
  return all;
}

}  // namespace pltower::cli
