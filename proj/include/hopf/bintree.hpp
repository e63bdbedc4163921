#pragma once
// Planar binary trees: a tree is a leaf "." or a wedge (left, right) of two
// trees. A permutation of size n maps to the tree with n internal nodes whose
// recursion peels off the maximal letter.
#include <memory>
#include <string>
#include <vector>

#include "hopf/errors.hpp"
#include "hopf/permutation.hpp"

namespace hopf {

class BinTree {
  public:
    BinTree() = default;  // leaf
    static BinTree leaf() { return BinTree(); }
    static BinTree wedge(const BinTree& l, const BinTree& r);

    bool is_leaf() const { return !node_; }
    BinTree left() const;
    BinTree right() const;

    int internal_nodes() const;
    int leaf_count() const { return internal_nodes() + 1; }

    bool operator==(const BinTree& o) const;
    bool operator!=(const BinTree& o) const { return !(*this == o); }
    bool operator<(const BinTree& o) const;  // leaf first, then (left, right)

    std::string str() const;  // "." or "(L,R)"

  private:
    struct Node {
        std::shared_ptr<const Node> left, right;
    };
    std::shared_ptr<const Node> node_;
    static BinTree from_node(std::shared_ptr<const Node> n) {
        BinTree t;
        t.node_ = std::move(n);
        return t;
    }
};

BinTree parse_bintree(const std::string& s);

// Underlying tree of a permutation: empty word -> leaf; otherwise split
// sigma = u n v around the maximal letter and wedge the trees of u and v.
BinTree binary_tree_of(const Permutation& s);

// All trees with the given number of internal nodes (Catalan many), sorted.
std::vector<BinTree> all_trees(int internal_nodes);

} // namespace hopf
