#include "pltower/treepair.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "pltower/error.hpp"
#include "scanner.hpp"

namespace pltower {

namespace {

Integer pow2(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

int max_depth(const std::vector<int>& depths) { return *std::max_element(depths.begin(), depths.end()); }

// Leaf sizes in units of 2^-D.
std::vector<Integer> leaf_sizes(const std::vector<int>& depths, int D) {
  std::vector<Integer> out;
  out.reserve(depths.size());
  for (int d : depths) out.push_back(pow2(static_cast<unsigned long>(D - d)));
  return out;
}

// Leaf i and i+1 are the two children of one caret.
bool caret_at(const std::vector<int>& depths, std::size_t i, const std::vector<Integer>& starts, int D) {
  int d = depths[i];
  if (d == 0 || depths[i + 1] != d) return false;
  Integer parent = pow2(static_cast<unsigned long>(D - d + 1));
  return starts[i] % parent == 0;
}

std::vector<Integer> leaf_starts(const std::vector<int>& depths, int D) {
  std::vector<Integer> starts;
  starts.reserve(depths.size());
  Integer pos = 0;
  for (const Integer& size : leaf_sizes(depths, D)) {
    starts.push_back(pos);
    pos += size;
  }
  return starts;
}

using Node = std::pair<int, Integer>;  // (depth, index) of a standard dyadic interval

std::set<Node> internal_nodes(const std::vector<int>& depths) {
  std::set<Node> nodes;
  int D = max_depth(depths);
  auto starts = leaf_starts(depths, D);
  for (std::size_t i = 0; i < depths.size(); ++i) {
    Integer index = starts[i] >> static_cast<unsigned long>(D - depths[i]);
    for (int d = depths[i] - 1; d >= 0; --d) {
      index >>= 1;
      if (!nodes.emplace(d, index).second) break;
    }
  }
  return nodes;
}

void leaves_from_nodes(const std::set<Node>& nodes, int depth, const Integer& index, std::vector<int>& out) {
  if (nodes.count({depth, index}) == 0) {
    out.push_back(depth);
    return;
  }
  leaves_from_nodes(nodes, depth + 1, Integer(2 * index), out);
  leaves_from_nodes(nodes, depth + 1, Integer(2 * index + 1), out);
}

// For each leaf of `coarse`, the depths (relative to that leaf) of the leaves
// of `fine` lying inside it. `fine` must refine `coarse`.
std::vector<std::vector<int>> split_leaves(const std::vector<int>& coarse, const std::vector<int>& fine) {
  int D = std::max(max_depth(coarse), max_depth(fine));
  auto fine_sizes = leaf_sizes(fine, D);
  std::vector<std::vector<int>> out(coarse.size());
  std::size_t j = 0;
  for (std::size_t i = 0; i < coarse.size(); ++i) {
    Integer remaining = pow2(static_cast<unsigned long>(D - coarse[i]));
    while (remaining > 0) {
      out[i].push_back(fine[j] - coarse[i]);
      remaining -= fine_sizes[j];
      ++j;
    }
  }
  return out;
}

std::vector<int> graft(const std::vector<int>& depths, const std::vector<std::vector<int>>& subtrees) {
  std::vector<int> out;
  for (std::size_t i = 0; i < depths.size(); ++i) {
    for (int rel : subtrees[i]) out.push_back(depths[i] + rel);
  }
  return out;
}

void emit(const std::vector<int>& depths, std::size_t& idx, int depth, std::string& out) {
  if (depths[idx] == depth) {
    out += '*';
    ++idx;
    return;
  }
  out += '(';
  emit(depths, idx, depth + 1, out);
  out += ' ';
  emit(depths, idx, depth + 1, out);
  out += ')';
}

void read_tree(detail::Scanner& in, int depth, std::vector<int>& out) {
  if (in.accept('*')) {
    out.push_back(depth);
    return;
  }
  in.expect('(');
  read_tree(in, depth + 1, out);
  read_tree(in, depth + 1, out);
  in.expect(')');
}

}  // namespace

BinaryTree BinaryTree::caret(const BinaryTree& left, const BinaryTree& right) {
  std::vector<int> depths;
  depths.reserve(left.depths_.size() + right.depths_.size());
  for (int d : left.depths_) depths.push_back(d + 1);
  for (int d : right.depths_) depths.push_back(d + 1);
  return BinaryTree(std::move(depths));
}

BinaryTree BinaryTree::from_leaf_depths(std::vector<int> depths) {
  if (depths.empty()) throw Error(ErrorKind::Semantic, "a tree has at least one leaf");
  if (*std::min_element(depths.begin(), depths.end()) < 0) throw Error(ErrorKind::Semantic, "negative leaf depth");
  int D = max_depth(depths);
  Integer pos = 0;
  for (int d : depths) {
    Integer size = pow2(static_cast<unsigned long>(D - d));
    if (pos % size != 0) throw Error(ErrorKind::Semantic, "leaf depths do not form a binary tree");
    pos += size;
  }
  if (pos != pow2(static_cast<unsigned long>(D))) {
    throw Error(ErrorKind::Semantic, "leaf intervals do not tile [0,1]");
  }
  return BinaryTree(std::move(depths));
}

std::size_t BinaryTree::root_split() const {
  if (is_leaf()) throw Error(ErrorKind::Precondition, "a leaf has no children");
  int D = max_depth(depths_);
  Integer half = pow2(static_cast<unsigned long>(D - 1));
  Integer pos = 0;
  std::size_t k = 0;
  while (pos < half) pos += pow2(static_cast<unsigned long>(D - depths_[k++]));
  return k;
}

BinaryTree BinaryTree::left() const {
  std::size_t k = root_split();
  std::vector<int> d(depths_.begin(), depths_.begin() + static_cast<std::ptrdiff_t>(k));
  for (int& x : d) --x;
  return BinaryTree(std::move(d));
}

BinaryTree BinaryTree::right() const {
  std::size_t k = root_split();
  std::vector<int> d(depths_.begin() + static_cast<std::ptrdiff_t>(k), depths_.end());
  for (int& x : d) --x;
  return BinaryTree(std::move(d));
}

std::vector<Rational> BinaryTree::subdivision() const {
  std::vector<Rational> out;
  out.reserve(depths_.size() + 1);
  Rational pos = 0;
  for (int d : depths_) {
    out.push_back(pos);
    pos += Rational(1, pow2(static_cast<unsigned long>(d)));
  }
  out.push_back(pos);
  return out;
}

std::string BinaryTree::str() const {
  std::string out;
  std::size_t idx = 0;
  emit(depths_, idx, 0, out);
  return out;
}

BinaryTree BinaryTree::parse(std::string_view text) {
  detail::Scanner in(text);
  std::vector<int> depths;
  read_tree(in, 0, depths);
  in.expect_end();
  return BinaryTree(std::move(depths));
}

TreePair::TreePair(BinaryTree domain, BinaryTree range) : domain_(std::move(domain)), range_(std::move(range)) {
  if (domain_.leaf_count() != range_.leaf_count()) {
    throw Error(ErrorKind::LeafCountMismatch, "domain tree has " + std::to_string(domain_.leaf_count()) +
                                                  " leaves, range tree has " + std::to_string(range_.leaf_count()));
  }
}

bool TreePair::is_reduced() const { return reduce(*this) == *this; }

std::string TreePair::str() const { return domain_.str() + "|" + range_.str(); }

TreePair TreePair::parse(std::string_view text) {
  detail::Scanner in(text);
  std::vector<int> dom;
  read_tree(in, 0, dom);
  in.expect('|');
  std::vector<int> ran;
  read_tree(in, 0, ran);
  in.expect_end();
  if (dom.size() != ran.size()) {
    throw Error(ErrorKind::LeafCountMismatch, "domain and range trees have different leaf counts", in.position_at(0));
  }
  return TreePair(BinaryTree::from_leaf_depths(std::move(dom)), BinaryTree::from_leaf_depths(std::move(ran)));
}

TreePair reduce(const TreePair& tp) {
  std::vector<int> dom = tp.domain().leaf_depths();
  std::vector<int> ran = tp.range().leaf_depths();
  bool changed = true;
  while (changed && dom.size() > 1) {
    changed = false;
    int Dd = max_depth(dom);
    int Dr = max_depth(ran);
    auto sd = leaf_starts(dom, Dd);
    auto sr = leaf_starts(ran, Dr);
    for (std::size_t i = 0; i + 1 < dom.size(); ++i) {
      if (caret_at(dom, i, sd, Dd) && caret_at(ran, i, sr, Dr)) {
        --dom[i];
        --ran[i];
        dom.erase(dom.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        ran.erase(ran.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        changed = true;
        break;
      }
    }
  }
  return TreePair(BinaryTree::from_leaf_depths(std::move(dom)), BinaryTree::from_leaf_depths(std::move(ran)));
}

PLMap to_plmap(const TreePair& tp) {
  auto xs = tp.domain().subdivision();
  auto ys = tp.range().subdivision();
  std::vector<Breakpoint> pts;
  pts.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) pts.push_back({xs[i], ys[i]});
  return PLMap(std::move(pts));
}

TreePair from_plmap(const PLMap& f) {
  if (!is_in_F(f)) throw Error(ErrorKind::NotInF, "map " + f.str() + " is not an element of F");
  const auto& pts = f.breakpoints();
  std::vector<int> dom;
  std::vector<int> ran;
  // Depth-first over standard dyadic intervals [a, a + 2^-depth], left to right.
  std::vector<std::pair<Rational, int>> stack{{Rational(0), 0}};
  while (!stack.empty()) {
    auto [a, depth] = stack.back();
    stack.pop_back();
    Rational width(1, pow2(static_cast<unsigned long>(depth)));
    Rational b = a + width;
    bool linear = std::none_of(pts.begin(), pts.end(), [&](const Breakpoint& p) { return a < p.x && p.x < b; });
    if (linear) {
      Rational fa = evaluate(f, a);
      Rational len = evaluate(f, b) - fa;
      auto e = dyadic_slope_exponent(len);
      if (e && *e <= 0) {
        Rational pos = fa / len;
        if (pos.get_den() == 1) {
          dom.push_back(depth);
          ran.push_back(static_cast<int>(-*e));
          continue;
        }
      }
    }
    Rational half = width / 2;
    stack.emplace_back(a + half, depth + 1);
    stack.emplace_back(a, depth + 1);
  }
  return reduce(TreePair(BinaryTree::from_leaf_depths(std::move(dom)), BinaryTree::from_leaf_depths(std::move(ran))));
}

TreePair multiply(const TreePair& a, const TreePair& b) {
  std::set<Node> nodes = internal_nodes(a.range().leaf_depths());
  nodes.merge(internal_nodes(b.domain().leaf_depths()));
  std::vector<int> common;
  leaves_from_nodes(nodes, 0, Integer(0), common);

  auto dom = graft(a.domain().leaf_depths(), split_leaves(a.range().leaf_depths(), common));
  auto ran = graft(b.range().leaf_depths(), split_leaves(b.domain().leaf_depths(), common));
  return reduce(TreePair(BinaryTree::from_leaf_depths(std::move(dom)), BinaryTree::from_leaf_depths(std::move(ran))));
}

TreePair inverse(const TreePair& tp) { return TreePair(tp.range(), tp.domain()); }

namespace thompson {

PLMap x0() { return PLMap({{0, 0}, {Rational(1, 2), Rational(1, 4)}, {Rational(3, 4), Rational(1, 2)}, {1, 1}}); }

PLMap x1() {
  return PLMap({{0, 0},
                {Rational(1, 2), Rational(1, 2)},
                {Rational(3, 4), Rational(5, 8)},
                {Rational(7, 8), Rational(3, 4)},
                {1, 1}});
}

TreePair x0_pair() { return TreePair::parse("(* (* *))|((* *) *)"); }
TreePair x1_pair() { return TreePair::parse("(* (* (* *)))|(* ((* *) *))"); }

}  // namespace thompson

}  // namespace pltower
