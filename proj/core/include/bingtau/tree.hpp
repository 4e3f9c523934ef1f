#pragma once

#include <cstddef>
#include <memory>
#include <string>

namespace bingtau {

// An unlabeled binary tree shape.  Textual form: "*" for a leaf,
// "(L,R)" for an internal node.  Immutable, shareable.
class TreeShape {
 public:
  TreeShape();  // single leaf

  static TreeShape leaf();
  static TreeShape node(TreeShape left, TreeShape right);

  bool is_leaf() const;
  TreeShape left() const;   // internal nodes only
  TreeShape right() const;

  std::size_t leaf_count() const;
  std::string text() const;

 private:
  struct Rep;
  explicit TreeShape(std::shared_ptr<const Rep> rep);
  std::shared_ptr<const Rep> node_;
};

}  // namespace bingtau
