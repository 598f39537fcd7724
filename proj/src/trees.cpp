#include "baxterlab/trees.hpp"

#include <algorithm>
#include <map>

namespace baxterlab {

// ---------------------------------------------------------------- OrderedTree

size_t OrderedTree::vertex_count() const
{
    size_t n = 1;
    for (const auto &c : children)
        n += c.vertex_count();
    return n;
}

std::string OrderedTree::str() const
{
    std::string s = "(";
    for (const auto &c : children)
        s += c.str();
    s += ")";
    return s;
}

static OrderedTree parse_ordered(const std::string &s, size_t &pos)
{
    require(pos < s.size() && s[pos] == '(', errc::parse_error, "expected '(' in tree");
    ++pos;
    OrderedTree t;
    while (pos < s.size() && s[pos] == '(')
        t.children.push_back(parse_ordered(s, pos));
    require(pos < s.size() && s[pos] == ')', errc::parse_error, "expected ')' in tree");
    ++pos;
    return t;
}

OrderedTree OrderedTree::parse(const std::string &s)
{
    size_t pos = 0;
    OrderedTree t = parse_ordered(s, pos);
    require(pos == s.size(), errc::parse_error, "trailing characters after tree");
    return t;
}

// ------------------------------------------------------------- FullBinaryTree

size_t FullBinaryTree::leaf_count() const
{
    size_t n = 0;
    for (const auto &nd : nodes)
        if (nd.is_leaf())
            ++n;
    return n;
}

void FullBinaryTree::expand(int v)
{
    require(nodes[v].is_leaf(), errc::domain_error, "expand needs a leaf");
    int l = static_cast<int>(nodes.size());
    nodes.push_back({});
    nodes.push_back({});
    nodes[v].left = l;
    nodes[v].right = l + 1;
}

bool FullBinaryTree::operator==(const FullBinaryTree &o) const
{
    return str() == o.str();
}

static void binary_str(const FullBinaryTree &t, int v, std::string &s)
{
    if (t.leaf(v)) {
        s += '*';
        return;
    }
    s += '(';
    binary_str(t, t.nodes[v].left, s);
    binary_str(t, t.nodes[v].right, s);
    s += ')';
}

std::string FullBinaryTree::str() const
{
    std::string s;
    binary_str(*this, 0, s);
    return s;
}

static int parse_binary(const std::string &s, size_t &pos, FullBinaryTree &t)
{
    require(pos < s.size(), errc::parse_error, "unexpected end of binary tree");
    int v = static_cast<int>(t.nodes.size());
    t.nodes.push_back({});
    if (s[pos] == '*') {
        ++pos;
        return v;
    }
    require(s[pos] == '(', errc::parse_error, "expected '(' or '*' in binary tree");
    ++pos;
    int l = parse_binary(s, pos, t);
    int r = parse_binary(s, pos, t);
    require(pos < s.size() && s[pos] == ')', errc::parse_error, "expected ')' in binary tree");
    ++pos;
    t.nodes[v].left = l;
    t.nodes[v].right = r;
    return v;
}

FullBinaryTree FullBinaryTree::parse(const std::string &s)
{
    FullBinaryTree t;
    t.nodes.clear();
    size_t pos = 0;
    parse_binary(s, pos, t);
    require(pos == s.size(), errc::parse_error, "trailing characters after binary tree");
    return t;
}

FullBinaryTree FullBinaryTree::single_inner()
{
    FullBinaryTree t;
    t.expand(0);
    return t;
}

FullBinaryTree FullBinaryTree::node(const FullBinaryTree &l, const FullBinaryTree &r)
{
    FullBinaryTree t;
    t.nodes.clear();
    t.nodes.push_back({});
    int off_l = 1;
    for (const auto &nd : l.nodes) {
        Node m = nd;
        if (!m.is_leaf()) {
            m.left += off_l;
            m.right += off_l;
        }
        t.nodes.push_back(m);
    }
    int off_r = static_cast<int>(t.nodes.size());
    for (const auto &nd : r.nodes) {
        Node m = nd;
        if (!m.is_leaf()) {
            m.left += off_r;
            m.right += off_r;
        }
        t.nodes.push_back(m);
    }
    t.nodes[0].left = off_l;
    t.nodes[0].right = off_r;
    return t;
}

FullBinaryTree FullBinaryTree::left_comb(size_t inner)
{
    FullBinaryTree t; // single leaf
    for (size_t i = 0; i < inner; ++i)
        t = node(t, FullBinaryTree());
    return t;
}

FullBinaryTree FullBinaryTree::right_comb(size_t inner)
{
    FullBinaryTree t;
    for (size_t i = 0; i < inner; ++i)
        t = node(FullBinaryTree(), t);
    return t;
}

// ------------------------------------------------------------ layouts & walks

namespace {

struct FlatTree {
    std::vector<std::vector<int>> children;
    std::vector<int> parent;
    std::vector<int> depth;
};

int flatten(const OrderedTree &t, FlatTree &f, int parent, int depth)
{
    int id = static_cast<int>(f.children.size());
    f.children.emplace_back();
    f.parent.push_back(parent);
    f.depth.push_back(depth);
    for (const auto &c : t.children) {
        int cid = flatten(c, f, id, depth + 1); // may reallocate f.children
        f.children[id].push_back(cid);
    }
    return id;
}

// Numbers vertices along the contour walk.  Clockwise walks traverse
// children in reversed order; the class assigned "at first visit" gets its
// number on entry, the other class on exit.
void walk_number(const FlatTree &f, int v, bool cw, bool root_class_first,
                 int &counter, std::vector<int> &pos)
{
    bool root_class = (f.depth[v] % 2 == 0);
    bool at_first = (root_class == root_class_first);
    if (at_first)
        pos[v] = counter++;
    if (cw) {
        for (auto it = f.children[v].rbegin(); it != f.children[v].rend(); ++it)
            walk_number(f, *it, cw, root_class_first, counter, pos);
    } else {
        for (int c : f.children[v])
            walk_number(f, c, cw, root_class_first, counter, pos);
    }
    if (!at_first)
        pos[v] = counter++;
}

} // namespace

AltLayout alt_layout(const OrderedTree &t, LayoutMode mode)
{
    FlatTree f;
    flatten(t, f, -1, 0);
    int n = static_cast<int>(f.children.size());
    bool cw = (mode == LayoutMode::sw || mode == LayoutMode::se);
    bool root_first = (mode == LayoutMode::sw || mode == LayoutMode::nw);
    std::vector<int> pos(n, -1);
    int counter = 0;
    walk_number(f, 0, cw, root_first, counter, pos);

    AltLayout l;
    l.n = static_cast<size_t>(n);
    l.mode = mode;
    for (int v = 1; v < n; ++v) {
        int a = pos[f.parent[v]], b = pos[v];
        l.arcs.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(l.arcs.begin(), l.arcs.end());
    return l;
}

static void validate_layout(const AltLayout &l)
{
    require(l.arcs.size() + 1 == l.n, errc::not_alternating, "layout is not a tree");
    // one-sided vertices
    std::vector<int> lo(l.n, -1), hi(l.n, -1);
    for (auto [a, b] : l.arcs) {
        require(a != b, errc::not_alternating, "loop arc");
        if (hi[a] < 0 || b > hi[a]) hi[a] = b;
        if (lo[a] < 0 || b < lo[a]) lo[a] = b;
        if (hi[b] < 0 || a > hi[b]) hi[b] = a;
        if (lo[b] < 0 || a < lo[b]) lo[b] = a;
    }
    for (size_t v = 0; v < l.n; ++v) {
        if (lo[v] < 0)
            continue;
        bool all_right = lo[v] > static_cast<int>(v);
        bool all_left = hi[v] < static_cast<int>(v);
        require(all_right || all_left, errc::not_alternating, "vertex has neighbors on both sides");
    }
    // non-crossing
    for (size_t i = 0; i < l.arcs.size(); ++i)
        for (size_t j = i + 1; j < l.arcs.size(); ++j) {
            auto [a, b] = l.arcs[i];
            auto [c, d] = l.arcs[j];
            require(!(a < c && c < b && b < d), errc::not_alternating, "crossing arcs");
        }
}

OrderedTree tree_of_layout(const AltLayout &l)
{
    validate_layout(l);
    bool root_left = (l.mode == LayoutMode::sw || l.mode == LayoutMode::nw);
    bool cw = (l.mode == LayoutMode::sw || l.mode == LayoutMode::se);
    int root = root_left ? 0 : static_cast<int>(l.n) - 1;

    std::vector<std::vector<int>> adj(l.n);
    for (auto [a, b] : l.arcs) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    // children in tree order have monotone positions: increasing for
    // counterclockwise walks, decreasing for clockwise ones
    std::vector<char> seen(l.n, 0);
    auto build = [&](auto &&self, int v) -> OrderedTree {
        seen[v] = 1;
        std::vector<int> ch;
        for (int w : adj[v])
            if (!seen[w])
                ch.push_back(w);
        std::sort(ch.begin(), ch.end());
        if (cw)
            std::reverse(ch.begin(), ch.end());
        OrderedTree t;
        for (int w : ch)
            t.children.push_back(self(self, w));
        return t;
    };
    OrderedTree t = build(build, root);
    require(t.vertex_count() == l.n, errc::not_alternating, "layout not connected");
    return t;
}

BitString fingerprint(const AltLayout &l)
{
    require(l.n >= 2, errc::domain_error, "fingerprint needs >= 2 vertices");
    std::vector<int> lo(l.n, -1);
    std::vector<int> hi(l.n, -1);
    for (auto [a, b] : l.arcs) {
        if (hi[a] < 0 || b > hi[a]) hi[a] = b;
        if (lo[a] < 0 || b < lo[a]) lo[a] = b;
        if (hi[b] < 0 || a > hi[b]) hi[b] = a;
        if (lo[b] < 0 || a < lo[b]) lo[b] = a;
    }
    BitString s;
    for (size_t v = 0; v < l.n; ++v) {
        require(lo[v] >= 0, errc::not_alternating, "isolated vertex");
        s.push(lo[v] > static_cast<int>(v));
    }
    return s;
}

BitString fingerprint(const OrderedTree &t, LayoutMode mode)
{
    return fingerprint(alt_layout(t, mode));
}

// ---------------------------------------------------------- binary tree prints

static void leaf_bits(const FullBinaryTree &t, int v, bool left_child, BitString &s)
{
    if (t.leaf(v)) {
        s.push(left_child);
        return;
    }
    leaf_bits(t, t.nodes[v].left, true, s);
    leaf_bits(t, t.nodes[v].right, false, s);
}

BitString fingerprint(const FullBinaryTree &t)
{
    require(t.leaf_count() >= 2, errc::domain_error, "fingerprint needs >= 2 leaves");
    BitString s;
    leaf_bits(t, t.nodes[0].left, true, s);
    leaf_bits(t, t.nodes[0].right, false, s);
    return s;
}

static void inorder_bits(const FullBinaryTree &t, int v, bool right_or_root, BitString &s)
{
    if (t.leaf(v))
        return;
    inorder_bits(t, t.nodes[v].left, false, s);
    s.push(right_or_root);
    inorder_bits(t, t.nodes[v].right, true, s);
}

BitString bodyprint(const FullBinaryTree &t)
{
    BitString s;
    inorder_bits(t, 0, true, s);
    return s;
}

BitString reduced_fingerprint(const FullBinaryTree &t)
{
    return reduced(fingerprint(t));
}

BitString reduced_bodyprint(const FullBinaryTree &t)
{
    BitString b = bodyprint(t);
    require(!b.empty() && b.bits.back() == 1, errc::internal_contradiction,
            "bodyprint must end in 1");
    b.bits.pop_back();
    return b;
}

size_t left_leaf_count(const FullBinaryTree &t)
{
    return fingerprint(t).ones();
}

// ------------------------------------------------------- alternating <-> binary

FullBinaryTree alt_to_binary(const OrderedTree &t)
{
    size_t n = t.vertex_count();
    if (n == 1)
        return FullBinaryTree();
    AltLayout l = alt_layout(t, LayoutMode::ne);
    validate_layout(l);

    // arc (i,j) of the layout = inner vertex spanning leaves i..j
    std::map<std::pair<int, int>, bool> arc_set;
    std::vector<std::vector<int>> by_left(l.n), by_right(l.n);
    for (auto [a, b] : l.arcs) {
        arc_set[{a, b}] = true;
        by_left[a].push_back(b);
        by_right[b].push_back(a);
    }
    for (auto &v : by_left)
        std::sort(v.begin(), v.end());
    for (auto &v : by_right)
        std::sort(v.begin(), v.end());

    FullBinaryTree bt;
    bt.nodes.clear();
    // returns (node index, leaves covered are exactly i..j)
    auto build = [&](auto &&self, int i, int j) -> int {
        int v = static_cast<int>(bt.nodes.size());
        bt.nodes.push_back({});
        // left child: widest arc (i,m) with m < j, else leaf i
        int m = -1;
        for (auto it = by_left[i].rbegin(); it != by_left[i].rend(); ++it)
            if (*it < j) {
                m = *it;
                break;
            }
        int lc, lcov;
        if (m < 0) {
            lc = static_cast<int>(bt.nodes.size());
            bt.nodes.push_back({});
            lcov = i;
        } else {
            lc = self(self, i, m);
            lcov = m;
        }
        // right child: widest arc (m',j) with m' > i, else leaf j
        int mp = -1;
        for (int a : by_right[j])
            if (a > i) {
                mp = a;
                break;
            }
        int rc, rstart;
        if (mp < 0) {
            rc = static_cast<int>(bt.nodes.size());
            bt.nodes.push_back({});
            rstart = j;
        } else {
            rc = self(self, mp, j);
            rstart = mp;
        }
        require(rstart == lcov + 1, errc::internal_contradiction,
                "layout intervals do not tile");
        bt.nodes[v].left = lc;
        bt.nodes[v].right = rc;
        return v;
    };
    require(arc_set.count({0, static_cast<int>(l.n) - 1}) == 1, errc::not_alternating,
            "layout has no spanning arc");
    build(build, 0, static_cast<int>(l.n) - 1);
    return bt;
}

static std::pair<int, int> leaf_span(const FullBinaryTree &t, int v, int &next_leaf,
                                     std::vector<std::pair<int, int>> &arcs)
{
    if (t.leaf(v)) {
        int i = next_leaf++;
        return {i, i};
    }
    auto [li, lj] = leaf_span(t, t.nodes[v].left, next_leaf, arcs);
    auto [ri, rj] = leaf_span(t, t.nodes[v].right, next_leaf, arcs);
    (void)lj;
    (void)ri;
    arcs.emplace_back(li, rj);
    return {li, rj};
}

OrderedTree binary_to_alt(const FullBinaryTree &t)
{
    size_t n = t.leaf_count();
    if (n == 1)
        return OrderedTree();
    AltLayout l;
    l.n = n;
    l.mode = LayoutMode::ne;
    int next_leaf = 0;
    leaf_span(t, 0, next_leaf, l.arcs);
    std::sort(l.arcs.begin(), l.arcs.end());
    return tree_of_layout(l);
}

// ------------------------------------------------------------ prints -> tree

FullBinaryTree tree_from_prints(const BitString &beta, const BitString &alpha)
{
    require(beta.size() == alpha.size(), errc::length_mismatch,
            "prints must have equal length");
    require(beta.ones() == alpha.ones(), errc::count_mismatch,
            "prints must have equal weight");
    require(dominates(alpha, beta), errc::dominance_violated,
            "fingerprint must dominate bodyprint");

    // find leftmost "10" inside the reduced fingerprint
    size_t L = alpha.size();
    size_t p = L;
    for (size_t i = 0; i + 1 < L; ++i)
        if (alpha[i] == 1 && alpha[i + 1] == 0) {
            p = i;
            break;
        }
    if (p == L) {
        // alpha = 0^l 1^k, the unique tree is a left comb joined to a right comb
        size_t k = alpha.ones();
        size_t ell = L - k;
        return FullBinaryTree::node(FullBinaryTree::left_comb(ell),
                                    FullBinaryTree::right_comb(k));
    }

    // leaves q,q+1 (full positions, q = p+1) are siblings under the inner
    // vertex with in-order index q and bodyprint bit beta[q]
    size_t q = p + 1;
    uint8_t b = beta[q];
    BitString alpha_star, beta_star;
    for (size_t i = 0; i < L; ++i) {
        if (i == p)
            alpha_star.push(!b);
        else if (i != p + 1)
            alpha_star.push(alpha[i]);
        if (i != q)
            beta_star.push(beta[i]);
    }
    FullBinaryTree t = tree_from_prints(beta_star, alpha_star);
    // expand the leaf at position q
    int target = -1, count = -1;
    auto find_leaf = [&](auto &&self, int v) -> void {
        if (target >= 0)
            return;
        if (t.leaf(v)) {
            if (static_cast<size_t>(++count) == q)
                target = v;
            return;
        }
        self(self, t.nodes[v].left);
        self(self, t.nodes[v].right);
    };
    find_leaf(find_leaf, 0);
    require(target >= 0, errc::internal_contradiction, "expansion leaf not found");
    t.expand(target);
    return t;
}

// ------------------------------------------------------------------ twin pairs

bool is_twin_binary(const FullBinaryTree &a, const FullBinaryTree &b)
{
    if (a.leaf_count() < 2 || a.leaf_count() != b.leaf_count())
        return false;
    return reduced_fingerprint(a) == reverse(reduced_fingerprint(b));
}

bool is_twin_alternating(const OrderedTree &s, const OrderedTree &t)
{
    if (s.vertex_count() < 2 || s.vertex_count() != t.vertex_count())
        return false;
    return reduced(fingerprint(s, LayoutMode::ne)) ==
           reverse(reduced(fingerprint(t, LayoutMode::ne)));
}

TwinBinaryPair make_twin_binary(const FullBinaryTree &a, const FullBinaryTree &b)
{
    require(is_twin_binary(a, b), errc::not_twins,
            "reduced fingerprints are not reverses of each other");
    return {a, b};
}

TwinAlternatingPair make_twin_alternating(const OrderedTree &s, const OrderedTree &t)
{
    require(is_twin_alternating(s, t), errc::not_twins,
            "reduced ne-fingerprints are not reverses of each other");
    return {s, t};
}

TwinAlternatingPair twin_alt_from_twin_binary(const TwinBinaryPair &p)
{
    return make_twin_alternating(binary_to_alt(p.first), binary_to_alt(p.second));
}

TwinBinaryPair twin_binary_from_twin_alt(const TwinAlternatingPair &p)
{
    return make_twin_binary(alt_to_binary(p.first), alt_to_binary(p.second));
}

bool TwinBinaryPair::operator<(const TwinBinaryPair &o) const
{
    auto a = first.str(), b = o.first.str();
    if (a != b)
        return a < b;
    return second.str() < o.second.str();
}

} // namespace baxterlab
