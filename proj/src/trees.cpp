#include "lacm/trees.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "lacm/hall.hpp"

namespace lacm {

namespace {

/* Rooted AHU string: color, then sorted child encodings in parentheses. */
std::string rooted_encoding(const std::vector<char>& colors,
                            const std::vector<std::vector<int>>& adj, int v, int parent) {
  std::vector<std::string> kids;
  for (int w : adj[v])
    if (w != parent) kids.push_back(rooted_encoding(colors, adj, w, v));
  if (kids.empty()) return std::string(1, colors[v]);
  std::sort(kids.begin(), kids.end());
  std::string out(1, colors[v]);
  out += '(';
  for (std::size_t i = 0; i < kids.size(); ++i) {
    if (i) out += ',';
    out += kids[i];
  }
  out += ')';
  return out;
}

/* Subtree-size centroids: one vertex, or two adjacent ones. */
std::vector<int> centroids(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> size(n, 1), best;
  int best_weight = n + 1;
  // iterative post-order from vertex 0
  std::vector<std::pair<int, int>> stack{{0, -1}};
  std::vector<std::pair<int, int>> order;
  while (!stack.empty()) {
    auto [v, p] = stack.back();
    stack.pop_back();
    order.push_back({v, p});
    for (int w : adj[v])
      if (w != p) stack.push_back({w, v});
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (it->second >= 0) size[it->second] += size[it->first];
  for (auto [v, p] : order) {
    int weight = n - size[v];
    for (int w : adj[v])
      if (w != p) weight = std::max(weight, size[w]);
    if (weight < best_weight) {
      best_weight = weight;
      best = {v};
    } else if (weight == best_weight) {
      best.push_back(v);
    }
  }
  return best;
}

}  // namespace

ColoredTree::ColoredTree(std::vector<char> colors, std::vector<std::pair<int, int>> edges)
    : colors_(std::move(colors)), adj_(colors_.size()) {
  const int n = size();
  if (n == 0) throw std::invalid_argument("ColoredTree: empty vertex set");
  if (static_cast<int>(edges.size()) != n - 1)
    throw std::invalid_argument("ColoredTree: edge count must be vertex count - 1");
  for (auto [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n || a == b)
      throw std::invalid_argument("ColoredTree: bad edge endpoint");
    adj_[a].push_back(b);
    adj_[b].push_back(a);
  }
  validate();
  canonicalize();
}

void ColoredTree::validate() const {
  const int n = size();
  for (char c : colors_)
    if (c != 'o' && c != '.') throw std::invalid_argument("ColoredTree: color must be 'o' or '.'");
  // connectivity (with n-1 edges this also rules out cycles)
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj_[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  if (reached != n) throw std::invalid_argument("ColoredTree: not connected");
  for (int v = 0; v < n; ++v) {
    if (colors_[v] == '.') {
      if (n > 1 && adj_[v].size() != 1)
        throw std::invalid_argument("ColoredTree: thin vertex must have exactly one edge");
      for (int w : adj_[v])
        if (colors_[w] == '.')
          throw std::invalid_argument("ColoredTree: edge joins two thin vertices");
    }
  }
}

void ColoredTree::canonicalize() {
  std::string best;
  for (int c : centroids(adj_)) {
    std::string enc = rooted_encoding(colors_, adj_, c, -1);
    if (best.empty() || enc < best) best = enc;
  }
  encoding_ = best;
}

ColoredTree ColoredTree::thin_atom() { return ColoredTree({'.'}, {}); }
ColoredTree ColoredTree::thick_atom() { return ColoredTree({'o'}, {}); }

ColoredTree ColoredTree::parse(const std::string& text) {
  std::vector<char> colors;
  std::vector<std::pair<int, int>> edges;
  std::size_t pos = 0;
  std::function<int()> parse_node = [&]() -> int {
    if (pos >= text.size() || (text[pos] != 'o' && text[pos] != '.'))
      throw std::invalid_argument("ColoredTree::parse: expected 'o' or '.' at offset " +
                                  std::to_string(pos));
    int v = static_cast<int>(colors.size());
    colors.push_back(text[pos]);
    ++pos;
    if (pos < text.size() && text[pos] == '(') {
      ++pos;
      while (true) {
        int child = parse_node();
        edges.push_back({v, child});
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          continue;
        }
        break;
      }
      if (pos >= text.size() || text[pos] != ')')
        throw std::invalid_argument("ColoredTree::parse: expected ')' at offset " +
                                    std::to_string(pos));
      ++pos;
    }
    return v;
  };
  parse_node();
  if (pos != text.size())
    throw std::invalid_argument("ColoredTree::parse: trailing characters at offset " +
                                std::to_string(pos));
  return ColoredTree(std::move(colors), std::move(edges));
}

int ColoredTree::thick_count() const {
  return static_cast<int>(std::count(colors_.begin(), colors_.end(), 'o'));
}

int ColoredTree::thin_count() const { return size() - thick_count(); }

int ColoredTree::order() const {
  if (size() == 1) return 1;  // covers the thin atom, whose formula value would be -1
  return thin_count() + 2 * thick_count() - 1;
}

int ColoredTree::degree() const {
  if (size() == 1 && colors_[0] == '.') return 2;
  return thin_count();
}

namespace {

void accumulate(TreeVector& acc, const ColoredTree& t, const Rational& c) {
  auto it = acc.find(t);
  if (it == acc.end()) {
    if (c != 0) acc.emplace(t, c);
    return;
  }
  it->second += c;
  if (it->second == 0) acc.erase(it);
}

/* Join: drop thin vertex w of v, connect its (thick) neighbour to thick
 * vertex t of u. */
ColoredTree join_at(const ColoredTree& u, int t, const ColoredTree& v, int w) {
  std::vector<char> colors;
  std::vector<std::pair<int, int>> edges;
  const int nu = u.size();
  for (int i = 0; i < nu; ++i) colors.push_back(u.color(i));
  for (int i = 0; i < nu; ++i)
    for (int j : u.neighbors(i))
      if (i < j) edges.push_back({i, j});
  // map v's vertices (except w) to fresh indices
  std::vector<int> remap(v.size(), -1);
  for (int i = 0; i < v.size(); ++i) {
    if (i == w) continue;
    remap[i] = static_cast<int>(colors.size());
    colors.push_back(v.color(i));
  }
  for (int i = 0; i < v.size(); ++i)
    for (int j : v.neighbors(i))
      if (i < j && i != w && j != w) edges.push_back({remap[i], remap[j]});
  const int x = v.neighbors(w)[0];
  edges.push_back({t, remap[x]});
  return ColoredTree(std::move(colors), std::move(edges));
}

}  // namespace

TreeVector graft(const ColoredTree& u, const ColoredTree& v) {
  TreeVector out;
  const bool u_thin_atom = (u.size() == 1 && u.color(0) == '.');
  const bool v_thin_atom = (v.size() == 1 && v.color(0) == '.');
  const bool v_thick_atom = (v.size() == 1 && v.color(0) == 'o');
  if (u_thin_atom || v_thick_atom) return out;
  if (v_thin_atom) {
    // add one fresh free-end edge at each thick vertex of u
    for (int t = 0; t < u.size(); ++t) {
      if (u.color(t) != 'o') continue;
      std::vector<char> colors;
      std::vector<std::pair<int, int>> edges;
      for (int i = 0; i < u.size(); ++i) colors.push_back(u.color(i));
      for (int i = 0; i < u.size(); ++i)
        for (int j : u.neighbors(i))
          if (i < j) edges.push_back({i, j});
      colors.push_back('.');
      edges.push_back({t, u.size()});
      accumulate(out, ColoredTree(std::move(colors), std::move(edges)), 1);
    }
    return out;
  }
  for (int t = 0; t < u.size(); ++t) {
    if (u.color(t) != 'o') continue;
    for (int w = 0; w < v.size(); ++w) {
      if (v.color(w) != '.') continue;
      accumulate(out, join_at(u, t, v, w), 1);
    }
  }
  return out;
}

TreeVector graft(const TreeVector& u, const TreeVector& v) {
  TreeVector out;
  for (const auto& [bu, cu] : u)
    for (const auto& [bv, cv] : v)
      for (const auto& [t, c] : graft(bu, bv)) accumulate(out, t, cu * cv * c);
  return out;
}

TreeVector tree_bracket(const TreeVector& u, const TreeVector& v) {
  TreeVector out = graft(u, v);
  for (const auto& [t, c] : graft(v, u)) accumulate(out, t, -c);
  return out;
}

TreeVector tree_bracket(const ColoredTree& u, const ColoredTree& v) {
  TreeVector out = graft(u, v);
  for (const auto& [t, c] : graft(v, u)) accumulate(out, t, -c);
  return out;
}

namespace {

/* Uncolored free trees on n vertices (as all-thick ColoredTrees), grown by
 * attaching a leaf to every vertex of every tree on n-1 vertices. */
std::vector<ColoredTree> thick_skeletons(int n) {
  std::vector<ColoredTree> cur{ColoredTree::thick_atom()};
  for (int k = 2; k <= n; ++k) {
    std::set<std::string> seen;
    std::vector<ColoredTree> next;
    for (const ColoredTree& t : cur) {
      for (int v = 0; v < t.size(); ++v) {
        std::vector<char> colors;
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < t.size(); ++i) colors.push_back('o');
        for (int i = 0; i < t.size(); ++i)
          for (int j : t.neighbors(i))
            if (i < j) edges.push_back({i, j});
        colors.push_back('o');
        edges.push_back({v, t.size()});
        ColoredTree grown(std::move(colors), std::move(edges));
        if (seen.insert(grown.encoding()).second) next.push_back(grown);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

std::map<std::pair<int, int>, std::vector<ColoredTree>> enumerate_trees(int max_order) {
  if (max_order < 1) throw std::invalid_argument("enumerate_trees: max_order must be >= 1");
  std::map<std::pair<int, int>, std::vector<ColoredTree>> out;
  std::set<std::string> seen;
  auto add = [&](const ColoredTree& t) {
    if (t.order() > max_order) return;
    if (seen.insert(t.encoding()).second) out[{t.order(), t.degree()}].push_back(t);
  };
  add(ColoredTree::thin_atom());
  // thick skeleton on k vertices + m thin leaves: order = m + 2k - 1
  for (int k = 1; 2 * k - 1 <= max_order; ++k) {
    const int m_max = max_order + 1 - 2 * k;
    for (const ColoredTree& skel : thick_skeletons(k)) {
      // distribute m thin leaves over the k thick vertices
      std::vector<int> counts(k, 0);
      std::function<void(int, int)> place = [&](int v, int remaining) {
        if (v == k) {
          std::vector<char> colors;
          std::vector<std::pair<int, int>> edges;
          for (int i = 0; i < k; ++i) colors.push_back('o');
          for (int i = 0; i < k; ++i)
            for (int j : skel.neighbors(i))
              if (i < j) edges.push_back({i, j});
          for (int i = 0; i < k; ++i)
            for (int c = 0; c < counts[i]; ++c) {
              edges.push_back({i, static_cast<int>(colors.size())});
              colors.push_back('.');
            }
          add(ColoredTree(std::move(colors), std::move(edges)));
          return;
        }
        for (int c = 0; c <= remaining; ++c) {
          counts[v] = c;
          place(v + 1, remaining - c);
        }
        counts[v] = 0;
      };
      for (int m = 0; m <= m_max; ++m) place(0, m);
    }
  }
  for (auto& [key, list] : out)
    std::sort(list.begin(), list.end(),
              [](const ColoredTree& a, const ColoredTree& b) { return a.encoding() < b.encoding(); });
  return out;
}

std::map<std::pair<int, int>, long long> tree_dims(int max_order) {
  std::map<std::pair<int, int>, long long> out;
  for (const auto& [key, list] : enumerate_trees(max_order))
    out[key] = static_cast<long long>(list.size());
  return out;
}

namespace {

class ThetaCache {
 public:
  TreeVector image(const BracketExpr& x) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto it = memo_.find(x.str());
    if (it != memo_.end()) return it->second;
    TreeVector out;
    if (x.is_A()) {
      out.emplace(ColoredTree::thin_atom(), 1);
    } else if (x.is_B()) {
      out.emplace(ColoredTree::thick_atom(), 1);
    } else {
      out = tree_bracket(image(x.left()), image(x.right()));
    }
    memo_.emplace(x.str(), out);
    return out;
  }

 private:
  std::recursive_mutex mu_;
  std::unordered_map<std::string, TreeVector> memo_;
};

ThetaCache& theta_cache() {
  static ThetaCache cache;
  return cache;
}

}  // namespace

TreeVector theta(const BracketExpr& x) { return theta_cache().image(x); }

TreeVector theta(const LieVector& x) {
  TreeVector out;
  for (const auto& [expr, coeff] : x)
    for (const auto& [t, c] : theta(expr)) accumulate(out, t, coeff * c);
  return out;
}

std::vector<ThetaRankRow> theta_rank(int max_order) {
  if (max_order < 1 || max_order > 12)
    throw std::invalid_argument("theta_rank: max_order must be in 1..12");
  std::vector<HallElement> hall = build_hall_set(max_order);
  auto trees = enumerate_trees(max_order);
  std::vector<ThetaRankRow> report;
  for (int n = 1; n <= max_order; ++n) {
    // column index: canonical encodings of all order-n trees
    std::map<std::string, int> col;
    long long tree_dim = 0;
    for (const auto& [key, list] : trees) {
      if (key.first != n) continue;
      for (const ColoredTree& t : list) col.emplace(t.encoding(), 0);
    }
    int idx = 0;
    for (auto& [enc, j] : col) j = idx++;
    tree_dim = idx;
    // rows: theta images of the order-n quotient basis
    std::vector<std::vector<Rational>> rows;
    for (const HallElement& h : hall) {
      if (h.order() != n || h.cls != HallClass::basis) continue;
      std::vector<Rational> row(col.size(), Rational(0));
      for (const auto& [t, c] : theta(h.expr)) row[col.at(t.encoding())] = c;
      rows.push_back(std::move(row));
    }
    const long long lie_dim = static_cast<long long>(rows.size());
    // exact Gaussian elimination
    long long rank = 0;
    std::size_t pivot_col = 0;
    for (std::size_t r = 0; r < rows.size() && pivot_col < col.size(); ++pivot_col) {
      std::size_t sel = r;
      while (sel < rows.size() && rows[sel][pivot_col] == 0) ++sel;
      if (sel == rows.size()) continue;
      std::swap(rows[r], rows[sel]);
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][pivot_col] == 0) continue;
        Rational f = rows[i][pivot_col] / rows[r][pivot_col];
        for (std::size_t j = pivot_col; j < col.size(); ++j) rows[i][j] -= f * rows[r][j];
      }
      ++rank;
      ++r;
    }
    report.push_back({n, rank, lie_dim, tree_dim, rank == lie_dim});
  }
  return report;
}

}  // namespace lacm
