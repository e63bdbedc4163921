#include "hopf/bintree.hpp"

#include <algorithm>
#include <cctype>

namespace hopf {

BinTree BinTree::wedge(const BinTree& l, const BinTree& r) {
    BinTree t;
    t.node_ = std::make_shared<const Node>(Node{l.node_, r.node_});
    return t;
}

BinTree BinTree::left() const {
    require(!is_leaf(), "leaf has no subtrees");
    return from_node(node_->left);
}

BinTree BinTree::right() const {
    require(!is_leaf(), "leaf has no subtrees");
    return from_node(node_->right);
}

int BinTree::internal_nodes() const {
    if (is_leaf()) return 0;
    return 1 + left().internal_nodes() + right().internal_nodes();
}

bool BinTree::operator==(const BinTree& o) const {
    if (is_leaf() || o.is_leaf()) return is_leaf() == o.is_leaf();
    if (node_ == o.node_) return true;
    return left() == o.left() && right() == o.right();
}

bool BinTree::operator<(const BinTree& o) const {
    if (is_leaf() || o.is_leaf()) return is_leaf() && !o.is_leaf();
    if (left() != o.left()) return left() < o.left();
    return right() < o.right();
}

std::string BinTree::str() const {
    if (is_leaf()) return ".";
    return "(" + left().str() + "," + right().str() + ")";
}

namespace {

BinTree parse_rec(const std::string& s, size_t& pos) {
    if (pos >= s.size()) throw parse_error("truncated tree");
    if (s[pos] == '.') {
        ++pos;
        return BinTree::leaf();
    }
    if (s[pos] != '(') throw parse_error("expected '.' or '(' in tree");
    ++pos;
    BinTree l = parse_rec(s, pos);
    if (pos >= s.size() || s[pos] != ',') throw parse_error("expected ',' in tree");
    ++pos;
    BinTree r = parse_rec(s, pos);
    if (pos >= s.size() || s[pos] != ')') throw parse_error("expected ')' in tree");
    ++pos;
    return BinTree::wedge(l, r);
}

BinTree tree_of_range(const std::vector<int>& w, int lo, int hi) {  // [lo, hi)
    if (lo >= hi) return BinTree::leaf();
    int mx = lo;
    for (int i = lo + 1; i < hi; ++i)
        if (w[i] > w[mx]) mx = i;
    return BinTree::wedge(tree_of_range(w, lo, mx), tree_of_range(w, mx + 1, hi));
}

} // namespace

BinTree parse_bintree(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    size_t pos = 0;
    BinTree out = parse_rec(t, pos);
    if (pos != t.size()) throw parse_error("trailing text after tree");
    return out;
}

BinTree binary_tree_of(const Permutation& s) {
    return tree_of_range(s.word(), 0, s.size());
}

std::vector<BinTree> all_trees(int internal_nodes) {
    require(internal_nodes >= 0, "negative tree size");
    require_scale(internal_nodes <= 12, "tree enumeration capped at 12 nodes");
    if (internal_nodes == 0) return {BinTree::leaf()};
    std::vector<BinTree> out;
    for (int k = 0; k < internal_nodes; ++k)
        for (const BinTree& l : all_trees(k))
            for (const BinTree& r : all_trees(internal_nodes - 1 - k))
                out.push_back(BinTree::wedge(l, r));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace hopf
