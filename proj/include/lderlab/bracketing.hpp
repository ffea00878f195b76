#ifndef LDERLAB_BRACKETING_HPP
#define LDERLAB_BRACKETING_HPP

#include <memory>
#include <string>
#include <vector>

#include "lderlab/algebra.hpp"

namespace lderlab {

/*
 * A bracket arrangement on a product of length n: a full binary tree with
 * n leaves, leaves numbered 1..n left to right. Trees are immutable and
 * share structure, so copies are cheap.
 */
class BracketTree {
 public:
  // Single leaf (a product of length 1; useful only as a building block).
  static BracketTree leaf();
  static BracketTree node(const BracketTree& left, const BracketTree& right);
  static BracketTree left_comb(int n);   // ((..(x1 x2)..) x_{n-1}) x_n
  static BracketTree right_comb(int n);  // x1 (x2 (.. (x_{n-1} x_n)..))

  int leaves() const;
  bool is_leaf() const;
  BracketTree left() const;
  BracketTree right() const;

  // Grammar: T ::= "x" | "(" T T ")"
  std::string serialize() const;
  static BracketTree parse(const std::string& text);

  bool operator==(const BracketTree& o) const;
  bool operator!=(const BracketTree& o) const { return !(*this == o); }

 private:
  struct Node;
  explicit BracketTree(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// All full binary trees with n leaves in recursive split-position order
// (left subtree size 1..n-1); Catalan(n-1) trees. 2 <= n <= 8.
std::vector<BracketTree> enumerate_arrangements(int n);

// [args_1, ..., args_n]_f
Vec evaluate(const Algebra& a, const BracketTree& f, const std::vector<Vec>& args);

}  // namespace lderlab

#endif
