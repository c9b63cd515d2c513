#include "pltower/random.hpp"

#include <algorithm>
#include <set>

namespace pltower::random {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Rational rational(Rng& rng, long max_abs, int den_bits) {
  long den = uniform(rng, 1, 3L << den_bits);
  long num = uniform(rng, -max_abs * den, max_abs * den);
  return make_rational(num, den);
}

Rational dyadic_between(Rng& rng, const Rational& lo, const Rational& hi, int den_bits) {
  for (int b = den_bits;; ++b) {
    Integer scale = Integer(1) << b;
    Rational l = lo * scale;
    Rational h = hi * scale;
    Integer kmin;
    Integer kmax;
    mpz_fdiv_q(kmin.get_mpz_t(), l.get_num_mpz_t(), l.get_den_mpz_t());
    mpz_cdiv_q(kmax.get_mpz_t(), h.get_num_mpz_t(), h.get_den_mpz_t());
    kmin += 1;
    kmax -= 1;
    if (kmin > kmax) continue;
    Integer span = kmax - kmin;
    if (!span.fits_slong_p()) return make_rational(kmin, scale);
    Integer k = kmin + uniform(rng, 0, span.get_si());
    return make_rational(k, scale);
  }
}

std::vector<Rational> sorted_points(Rng& rng, const Rational& lo, const Rational& hi, int n, int den_bits) {
  std::set<Rational> pts;
  int b = den_bits;
  for (int tries = 0; static_cast<int>(pts.size()) < n; ++tries) {
    if (tries > 4 * n + 8) {
      ++b;
      tries = 0;
    }
    pts.insert(dyadic_between(rng, lo, hi, b));
  }
  return {pts.begin(), pts.end()};
}

namespace {

// Interior breakpoints of a homeomorphism of [lo,hi].
std::vector<Breakpoint> general_points(Rng& rng, const Rational& lo, const Rational& hi, int k) {
  std::vector<Rational> xs = sorted_points(rng, lo, hi, k);
  std::vector<Rational> ys = sorted_points(rng, lo, hi, k);
  std::vector<Breakpoint> out;
  for (int i = 0; i < k; ++i) out.push_back({xs[i], ys[i]});
  return out;
}

// Interior breakpoints of a map with graph strictly below the diagonal on
// (lo,hi): z_1 < ... < z_2k, breakpoints (z_2i, z_2i-1).
std::vector<Breakpoint> pusher_points(Rng& rng, const Rational& lo, const Rational& hi, int k, bool rightward) {
  std::vector<Rational> z = sorted_points(rng, lo, hi, 2 * k);
  std::vector<Breakpoint> out;
  for (int i = 0; i < k; ++i) {
    Breakpoint p{z[2 * i + 1], z[2 * i]};
    if (rightward) std::swap(p.x, p.y);
    out.push_back(std::move(p));
  }
  return out;
}

PLMap embed(const Rational& lo, const Rational& hi, const std::vector<Breakpoint>& inner) {
  std::vector<Breakpoint> pts = {{0, 0}};
  if (lo > 0) pts.push_back({lo, lo});
  pts.insert(pts.end(), inner.begin(), inner.end());
  if (hi < 1) pts.push_back({hi, hi});
  pts.push_back({1, 1});
  return PLMap(std::move(pts));
}

std::vector<bool> cell_layout(Rng& rng, int support_cells) {
  std::vector<bool> support(static_cast<std::size_t>(support_cells), true);
  long fixed = uniform(rng, 0, support_cells + 1);
  for (long i = 0; i < fixed; ++i) {
    auto pos = static_cast<std::ptrdiff_t>(uniform(rng, 0, static_cast<long>(support.size())));
    support.insert(support.begin() + pos, false);
  }
  return support;
}

template <class Elem>
Elem evaluate_word(const Word& w, const std::map<std::string, Elem, std::less<>>& env) {
  return word_evaluate<Elem>(w, env);
}

}  // namespace

PLMap pl_on(Rng& rng, const Rational& lo, const Rational& hi, int interior) {
  return embed(lo, hi, general_points(rng, lo, hi, interior));
}

PLMap pl_pusher(Rng& rng, const Rational& lo, const Rational& hi, int k) {
  return embed(lo, hi, pusher_points(rng, lo, hi, k, false));
}

PLMap pl(Rng& rng, int max_interior) { return pl_on(rng, 0, 1, static_cast<int>(uniform(rng, 0, max_interior))); }

Word word(Rng& rng, const std::vector<std::string>& names, int max_len) {
  Word w;
  long len = uniform(rng, 0, max_len);
  for (long i = 0; i < len; ++i) {
    const std::string& name = names[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(names.size()) - 1))];
    w.append(name, uniform(rng, 0, 1) == 0 ? 1 : -1);
  }
  return w;
}

PLMap f_element(Rng& rng, int max_len) {
  static const std::map<std::string, PLMap, std::less<>> env = {{"x0", thompson::x0()}, {"x1", thompson::x1()}};
  return evaluate_word(word(rng, {"x0", "x1"}, max_len), env);
}

PPMap pp_element(Rng& rng, int max_len) {
  static const std::map<std::string, PPMap, std::less<>> env = {
      {"a", projective::a()}, {"b", projective::b()}, {"c", projective::c()}};
  return evaluate_word(word(rng, {"a", "b", "c"}, max_len), env);
}

PPMap pp_affine(Rng& rng) {
  Rational alpha = make_rational(uniform(rng, 1, 16), uniform(rng, 1, 8));
  return PPMap({}, {Mobius(alpha, rational(rng), 0, 1)});
}

BinaryTree tree(Rng& rng, int leaves) {
  if (leaves <= 1) return BinaryTree::leaf();
  int k = static_cast<int>(uniform(rng, 1, leaves - 1));
  return BinaryTree::caret(tree(rng, k), tree(rng, leaves - k));
}

TreePair tree_pair(Rng& rng, int max_leaves) {
  int n = static_cast<int>(uniform(rng, 1, max_leaves));
  return reduce(TreePair(tree(rng, n), tree(rng, n)));
}

GeneratingSet<PLMap> pl_subgroup(Rng& rng, int support_cells, int generators) {
  std::vector<bool> layout = cell_layout(rng, support_cells);
  std::vector<Rational> cuts = sorted_points(rng, 0, 1, static_cast<int>(layout.size()) - 1, 4);
  cuts.insert(cuts.begin(), Rational(0));
  cuts.push_back(Rational(1));

  std::vector<std::vector<Breakpoint>> pts(static_cast<std::size_t>(generators), {{0, 0}});
  for (std::size_t c = 0; c < layout.size(); ++c) {
    const Rational& u = cuts[c];
    const Rational& v = cuts[c + 1];
    if (layout[c]) {
      long pusher = uniform(rng, 0, generators - 1);
      for (long j = 0; j < generators; ++j) {
        long choice = j == pusher ? 2 : uniform(rng, 0, 2);
        int k = static_cast<int>(uniform(rng, 1, 2));
        std::vector<Breakpoint> inner;
        if (choice == 1) inner = general_points(rng, u, v, k);
        if (choice == 2) inner = pusher_points(rng, u, v, k, uniform(rng, 0, 1) == 1);
        auto& g = pts[static_cast<std::size_t>(j)];
        g.insert(g.end(), inner.begin(), inner.end());
      }
    }
    for (auto& g : pts) g.push_back({v, v});
  }
  GeneratingSet<PLMap> h;
  for (int j = 0; j < generators; ++j) h.add("g" + std::to_string(j + 1), PLMap(std::move(pts[static_cast<std::size_t>(j)])));
  return h;
}

GeneratingSet<PPMap> pp_subgroup(Rng& rng, int support_cells, int generators) {
  static const Rational multipliers[] = {2, 3, Rational(1, 2), Rational(1, 3), Rational(3, 2), Rational(2, 3)};
  auto multiplier = [&] { return multipliers[uniform(rng, 0, 5)]; };

  std::vector<bool> layout = cell_layout(rng, support_cells);
  std::vector<Rational> cuts = sorted_points(rng, -2, 2, static_cast<int>(layout.size()) + 1, 3);

  std::vector<PPMap> gens(static_cast<std::size_t>(generators));
  for (std::size_t c = 0; c < layout.size(); ++c) {
    if (!layout[c]) continue;
    const Rational& u = cuts[c];
    const Rational& v = cuts[c + 1];
    long pusher = uniform(rng, 0, generators - 1);
    for (long j = 0; j < generators; ++j) {
      long choice = j == pusher ? 2 : uniform(rng, 0, 2);
      PPMap piece;
      if (choice == 1) {
        std::vector<Rational> sub = sorted_points(rng, u, v, 2, 3);
        piece = pp_bump(sub[0], sub[1], multiplier());
      } else if (choice == 2) {
        piece = pp_bump(u, v, multiplier());
      }
      auto& g = gens[static_cast<std::size_t>(j)];
      g = compose(g, piece);
    }
  }
  GeneratingSet<PPMap> h;
  for (int j = 0; j < generators; ++j) h.add("g" + std::to_string(j + 1), std::move(gens[static_cast<std::size_t>(j)]));
  return h;
}

PPMap pp_fixing_zero(Rng& rng, int max_len) {
  static const std::vector<PPMap> pool = [] {
    PPMap a = projective::a();
    PPMap b = projective::b();
    PPMap c = projective::c();
    std::vector<PPMap> out = {b, c};
    PPMap an = PPMap::identity();
    for (int n = 1; n <= 3; ++n) {
      an = compose(an, a);
      out.push_back(conjugate(b, an));
      out.push_back(conjugate(c, an));
      out.push_back(conjugate(c, inverse(an)));
    }
    return out;
  }();
  PPMap out = PPMap::identity();
  long len = uniform(rng, 1, max_len);
  for (long i = 0; i < len; ++i) {
    const PPMap& x = pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(pool.size()) - 1))];
    out = compose(out, uniform(rng, 0, 1) == 0 ? x : inverse(x));
  }
  return out;
}

}  // namespace pltower::random
