#include "bingtau/tree.hpp"

#include <cassert>

namespace bingtau {

struct TreeShape::Rep {
  std::shared_ptr<const Rep> left, right;  // both null for a leaf
};

TreeShape::TreeShape(std::shared_ptr<const Rep> rep) : node_(std::move(rep)) {}

TreeShape::TreeShape() : node_(std::make_shared<Rep>()) {}

TreeShape TreeShape::leaf() { return TreeShape{}; }

TreeShape TreeShape::node(TreeShape left, TreeShape right) {
  auto rep = std::make_shared<Rep>();
  rep->left = std::move(left.node_);
  rep->right = std::move(right.node_);
  return TreeShape(std::move(rep));
}

bool TreeShape::is_leaf() const { return !node_->left; }

TreeShape TreeShape::left() const {
  assert(!is_leaf());
  return TreeShape(node_->left);
}

TreeShape TreeShape::right() const {
  assert(!is_leaf());
  return TreeShape(node_->right);
}

std::size_t TreeShape::leaf_count() const {
  if (is_leaf()) return 1;
  return left().leaf_count() + right().leaf_count();
}

std::string TreeShape::text() const {
  if (is_leaf()) return "*";
  return "(" + left().text() + "," + right().text() + ")";
}

}  // namespace bingtau
