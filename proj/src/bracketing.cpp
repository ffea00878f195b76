#include "lderlab/bracketing.hpp"

#include <stdexcept>

namespace lderlab {

struct BracketTree::Node {
  std::shared_ptr<const Node> left;
  std::shared_ptr<const Node> right;
  int leaves;
};

BracketTree BracketTree::leaf() {
  return BracketTree(std::make_shared<Node>(Node{nullptr, nullptr, 1}));
}

BracketTree BracketTree::node(const BracketTree& left, const BracketTree& right) {
  return BracketTree(std::make_shared<Node>(
      Node{left.node_, right.node_, left.leaves() + right.leaves()}));
}

BracketTree BracketTree::left_comb(int n) {
  if (n < 2) throw std::invalid_argument("left_comb: length must be >= 2");
  BracketTree t = leaf();
  for (int i = 1; i < n; ++i) t = node(t, leaf());
  return t;
}

BracketTree BracketTree::right_comb(int n) {
  if (n < 2) throw std::invalid_argument("right_comb: length must be >= 2");
  BracketTree t = leaf();
  for (int i = 1; i < n; ++i) t = node(leaf(), t);
  return t;
}

int BracketTree::leaves() const { return node_->leaves; }
bool BracketTree::is_leaf() const { return node_->left == nullptr; }
BracketTree BracketTree::left() const { return BracketTree(node_->left); }
BracketTree BracketTree::right() const { return BracketTree(node_->right); }

std::string BracketTree::serialize() const {
  if (is_leaf()) return "x";
  return "(" + left().serialize() + right().serialize() + ")";
}

namespace {

BracketTree parse_at(const std::string& text, size_t& pos) {
  if (pos >= text.size()) {
    throw std::invalid_argument("BracketTree::parse: unexpected end at position " + std::to_string(pos));
  }
  char c = text[pos];
  if (c == 'x') {
    ++pos;
    return BracketTree::leaf();
  }
  if (c == '(') {
    ++pos;
    BracketTree l = parse_at(text, pos);
    BracketTree r = parse_at(text, pos);
    if (pos >= text.size() || text[pos] != ')') {
      throw std::invalid_argument("BracketTree::parse: expected ')' at position " + std::to_string(pos));
    }
    ++pos;
    return BracketTree::node(l, r);
  }
  throw std::invalid_argument("BracketTree::parse: unexpected character at position " + std::to_string(pos));
}

}  // namespace

BracketTree BracketTree::parse(const std::string& text) {
  size_t pos = 0;
  BracketTree t = parse_at(text, pos);
  if (pos != text.size()) {
    throw std::invalid_argument("BracketTree::parse: trailing input at position " + std::to_string(pos));
  }
  return t;
}

bool BracketTree::operator==(const BracketTree& o) const {
  if (node_ == o.node_) return true;
  if (is_leaf() || o.is_leaf()) return is_leaf() && o.is_leaf();
  return leaves() == o.leaves() && left() == o.left() && right() == o.right();
}

std::vector<BracketTree> enumerate_arrangements(int n) {
  if (n < 2 || n > 8) throw std::invalid_argument("enumerate_arrangements: length out of range [2,8]");
  std::vector<std::vector<BracketTree>> by_size(n + 1);
  by_size[1] = {BracketTree::leaf()};
  for (int size = 2; size <= n; ++size) {
    for (int split = 1; split < size; ++split) {
      for (const auto& l : by_size[split]) {
        for (const auto& r : by_size[size - split]) {
          by_size[size].push_back(BracketTree::node(l, r));
        }
      }
    }
  }
  return by_size[n];
}

namespace {

Vec evaluate_span(const Algebra& a, const BracketTree& f, const std::vector<Vec>& args, int offset) {
  if (f.is_leaf()) return args[offset];
  Vec l = evaluate_span(a, f.left(), args, offset);
  Vec r = evaluate_span(a, f.right(), args, offset + f.left().leaves());
  return a.multiply(l, r);
}

}  // namespace

Vec evaluate(const Algebra& a, const BracketTree& f, const std::vector<Vec>& args) {
  if (int(args.size()) != f.leaves()) {
    throw std::invalid_argument("evaluate: argument count does not match leaf count");
  }
  return evaluate_span(a, f, args, 0);
}

}  // namespace lderlab
