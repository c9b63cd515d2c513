#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pltower/plmap.hpp"

namespace pltower {

/// Finite rooted binary tree, identified with the standard dyadic subdivision
/// of [0,1] given by its leaves. Stored as the left-to-right sequence of leaf
/// depths, which determines the tree.
class BinaryTree {
public:
  BinaryTree() : depths_{0} {}

  static BinaryTree leaf() { return {}; }
  static BinaryTree caret(const BinaryTree& left, const BinaryTree& right);
  /// Throws Semantic unless the depths tile [0,1] by standard dyadic intervals.
  static BinaryTree from_leaf_depths(std::vector<int> depths);

  bool is_leaf() const noexcept { return depths_.size() == 1; }
  std::size_t leaf_count() const noexcept { return depths_.size(); }
  const std::vector<int>& leaf_depths() const noexcept { return depths_; }

  /// Children of the root; throws Precondition on a leaf.
  BinaryTree left() const;
  BinaryTree right() const;

  /// Left endpoints of the leaf intervals, followed by 1.
  std::vector<Rational> subdivision() const;

  /// `*` for a leaf, `(L R)` for a caret.
  std::string str() const;
  static BinaryTree parse(std::string_view text);

  friend bool operator==(const BinaryTree&, const BinaryTree&) = default;

private:
  explicit BinaryTree(std::vector<int> depths) : depths_(std::move(depths)) {}
  std::size_t root_split() const;
  std::vector<int> depths_;
};

/// Element of Thompson's group F: the domain subdivision is mapped piecewise
/// linearly onto the range subdivision. Leaf counts always agree.
class TreePair {
public:
  TreePair() = default;
  /// Throws LeafCountMismatch.
  TreePair(BinaryTree domain, BinaryTree range);

  const BinaryTree& domain() const noexcept { return domain_; }
  const BinaryTree& range() const noexcept { return range_; }

  bool is_reduced() const;

  /// `(L R)|(L' R')`, domain first.
  std::string str() const;
  static TreePair parse(std::string_view text);

  friend bool operator==(const TreePair&, const TreePair&) = default;

private:
  BinaryTree domain_;
  BinaryTree range_;
};

TreePair reduce(const TreePair& tp);
PLMap to_plmap(const TreePair& tp);
/// Throws NotInF.
TreePair from_plmap(const PLMap& f);

/// Right-action product (first a, then b) by common refinement of a's range
/// tree and b's domain tree; the result is reduced.
TreePair multiply(const TreePair& a, const TreePair& b);
TreePair inverse(const TreePair& tp);

namespace thompson {

/// x0 contracts toward 0: 1/2 -> 1/4.
PLMap x0();
/// Identity on [0,1/2], half-scale copy of x0 on [1/2,1].
PLMap x1();

TreePair x0_pair();
TreePair x1_pair();

}  // namespace thompson

}  // namespace pltower
