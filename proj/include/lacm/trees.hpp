#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lacm/bracket.hpp"
#include "lacm/rational.hpp"

namespace lacm {

/* Unrooted tree with thick ('o') and thin ('.') vertices.
 *
 * Structural invariants (checked on construction):
 *   - connected and acyclic;
 *   - no edge joins two thin vertices;
 *   - every thin vertex has exactly one edge, except the one-vertex trees.
 *
 * Every edge incident to a thin vertex therefore joins it to a thick vertex
 * (a free-end edge).  order = #free-end edges + 2*#thick - 1 with the
 * special case order(thin atom) = 1; degree = #free-end edges with
 * degree(thin atom) = 2.
 *
 * Identity is by canonical encoding: AHU-style strings
 *   node := ('o' | '.') [ '(' node (',' node)* ')' ]
 * with children sorted lexicographically, rooted at the subtree-size
 * centroid (lexicographic min over the two rootings for a bicentroid).
 */
class ColoredTree {
 public:
  /* colors[i] in {'o','.'}, edges on vertex indices 0..n-1.  Throws
   * std::invalid_argument on malformed input. */
  ColoredTree(std::vector<char> colors, std::vector<std::pair<int, int>> edges);

  static ColoredTree thin_atom();
  static ColoredTree thick_atom();
  /* Inverse of encoding(); accepts any valid (not necessarily canonical)
   * string in the grammar above. */
  static ColoredTree parse(const std::string& text);

  int size() const { return static_cast<int>(colors_.size()); }
  char color(int v) const { return colors_[v]; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }

  int thick_count() const;
  int thin_count() const;
  int order() const;
  int degree() const;

  const std::string& encoding() const { return encoding_; }

  bool operator==(const ColoredTree& o) const { return encoding_ == o.encoding_; }
  bool operator!=(const ColoredTree& o) const { return encoding_ != o.encoding_; }

 private:
  std::vector<char> colors_;
  std::vector<std::vector<int>> adj_;
  std::string encoding_;

  void validate() const;
  void canonicalize();
};

struct TreeLess {
  bool operator()(const ColoredTree& a, const ColoredTree& b) const {
    return a.encoding() < b.encoding();
  }
};

/* Sparse rational combination of trees; zero coefficients never stored. */
using TreeVector = std::map<ColoredTree, Rational, TreeLess>;

/* All trees with order <= max_order, keyed by (order, degree), each list
 * sorted by encoding and duplicate-free. */
std::map<std::pair<int, int>, std::vector<ColoredTree>> enumerate_trees(int max_order);

/* Counts of the above. */
std::map<std::pair<int, int>, long long> tree_dims(int max_order);

/* Grafting product on basis trees, extended bilinearly on combinations.
 * u ⊳ v attaches each free-end edge of v to each thick vertex of u (the
 * edge's thin end is absorbed by the receiving vertex); v = thin atom
 * instead contributes a fresh free-end edge at each thick vertex of u.
 * u ⊳ thick-atom = 0 and thin-atom ⊳ v = 0.  Term-wise,
 * order(u⊳v) = order(u)+order(v) and degree(u⊳v) = degree(u)+degree(v)-1. */
TreeVector graft(const ColoredTree& u, const ColoredTree& v);
TreeVector graft(const TreeVector& u, const TreeVector& v);

/* [u,v] = u ⊳ v - v ⊳ u. */
TreeVector tree_bracket(const TreeVector& u, const TreeVector& v);
TreeVector tree_bracket(const ColoredTree& u, const ColoredTree& v);

/* The homomorphism determined by A -> thin atom, B -> thick atom,
 * [x,y] -> tree bracket of the images.  Kills the ideal spanned by
 * brackets of two degree-0 elements (their images have no free ends). */
TreeVector theta(const BracketExpr& x);
TreeVector theta(const LieVector& x);

struct ThetaRankRow {
  int order = 0;
  long long rank = 0;      // exact rank of the images of the order-n basis
  long long lie_dim = 0;   // number of basis elements at this order
  long long tree_dim = 0;  // number of trees at this order
  bool pass = false;       // rank == lie_dim
};

/* Injectivity evidence per order n = 1..max_order (max 12). */
std::vector<ThetaRankRow> theta_rank(int max_order);

}  // namespace lacm
