#include "baxterlab/permutation.hpp"

#include <algorithm>
#include <sstream>

namespace baxterlab {

Permutation::Permutation(std::vector<int> e) : entries(std::move(e))
{
    std::vector<char> seen(entries.size() + 1, 0);
    for (int v : entries) {
        require(v >= 1 && static_cast<size_t>(v) <= entries.size() && !seen[v],
                errc::domain_error, "not a permutation of {1..n}");
        seen[v] = 1;
    }
}

std::string Permutation::str() const
{
    std::string s;
    for (size_t i = 0; i < entries.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(entries[i]);
    }
    return s;
}

Permutation Permutation::parse(const std::string &s)
{
    std::vector<int> e;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            e.push_back(std::stoi(tok));
        } catch (const std::exception &) {
            fail(errc::parse_error, "bad permutation entry '" + tok + "'");
        }
    }
    require(!e.empty(), errc::parse_error, "empty permutation");
    try {
        return Permutation(std::move(e));
    } catch (const error &) {
        fail(errc::parse_error, "not a permutation of {1..n}: " + s);
    }
}

Permutation reverse(const Permutation &p)
{
    std::vector<int> e(p.entries.rbegin(), p.entries.rend());
    return Permutation(std::move(e));
}

Permutation complement(const Permutation &p)
{
    int n = static_cast<int>(p.size());
    std::vector<int> e;
    e.reserve(p.size());
    for (int v : p.entries)
        e.push_back(n + 1 - v);
    return Permutation(std::move(e));
}

size_t descent_count(const Permutation &p)
{
    size_t d = 0;
    for (size_t i = 0; i + 1 < p.size(); ++i)
        if (p[i] > p[i + 1])
            ++d;
    return d;
}

size_t rise_count(const Permutation &p)
{
    return p.size() - 1 - descent_count(p);
}

bool is_baxter(const Permutation &p)
{
    int n = static_cast<int>(p.size());
    for (int j = 0; j + 1 < n; ++j) {
        int a = p[j], b = p[j + 1]; // the adjacent pair "41" resp. "14"
        for (int i = 0; i < j; ++i) {
            for (int k = j + 2; k < n; ++k) {
                if (b < p[i] && p[i] < p[k] && p[k] < a)
                    return false; // 2-41-3
                if (b > p[i] && p[i] > p[k] && p[k] > a)
                    return false; // 3-14-2
            }
        }
    }
    return true;
}

bool is_alternating(const Permutation &p)
{
    for (size_t i = 0; i + 1 < p.size(); ++i) {
        bool rise = p[i] < p[i + 1];
        if (i % 2 == 0 ? !rise : rise)
            return false;
    }
    return true;
}

bool is_symmetric_permutation(const Permutation &p)
{
    return p == complement(reverse(p));
}

namespace {

FullBinaryTree extreme_tree(const std::vector<int> &e, size_t lo, size_t hi, bool use_max)
{
    if (lo >= hi)
        return FullBinaryTree(); // leaf
    size_t z = lo;
    for (size_t i = lo + 1; i < hi; ++i)
        if (use_max ? e[i] > e[z] : e[i] < e[z])
            z = i;
    return FullBinaryTree::node(extreme_tree(e, lo, z, use_max),
                                extreme_tree(e, z + 1, hi, use_max));
}

} // namespace

FullBinaryTree max_tree(const Permutation &p)
{
    require(!p.entries.empty(), errc::domain_error, "max_tree of empty permutation");
    return extreme_tree(p.entries, 0, p.size(), true);
}

FullBinaryTree min_tree(const Permutation &p)
{
    require(!p.entries.empty(), errc::domain_error, "min_tree of empty permutation");
    return extreme_tree(p.entries, 0, p.size(), false);
}

TwinBinaryPair twin_pair_of_baxter(const Permutation &p)
{
    require(is_baxter(p), errc::not_baxter, "permutation contains a forbidden pattern");
    return make_twin_binary(max_tree(p), min_tree(reverse(p)));
}

// --------------------------------------------------- alternating Baxter pairs

namespace {

bool alternating_reduced_fp_starting_0(const FullBinaryTree &t)
{
    BitString a = reduced_fingerprint(t);
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != (i % 2 == 0 ? 0 : 1))
            return false;
    return true;
}

// Collapses every inner node whose two children are both leaves.
FullBinaryTree collapse_cherries(const FullBinaryTree &t, int v)
{
    if (t.leaf(v))
        return FullBinaryTree();
    int l = t.nodes[v].left, r = t.nodes[v].right;
    if (t.leaf(l) && t.leaf(r))
        return FullBinaryTree();
    return FullBinaryTree::node(collapse_cherries(t, l), collapse_cherries(t, r));
}

std::vector<int> leaves_in_order(const FullBinaryTree &t)
{
    std::vector<int> out;
    auto rec = [&](auto &&self, int v) -> void {
        if (t.leaf(v)) {
            out.push_back(v);
            return;
        }
        self(self, t.nodes[v].left);
        self(self, t.nodes[v].right);
    };
    rec(rec, 0);
    return out;
}

// Expands the leaves at the given 0-based left-to-right indices.
FullBinaryTree expand_leaves(FullBinaryTree t, const std::vector<size_t> &idx)
{
    std::vector<int> lv = leaves_in_order(t);
    for (size_t i : idx) {
        require(i < lv.size(), errc::internal_contradiction, "expand index out of range");
        t.expand(lv[i]);
    }
    return t;
}

} // namespace

std::pair<FullBinaryTree, FullBinaryTree> prune_alternating_pair(const TwinBinaryPair &p)
{
    require(alternating_reduced_fp_starting_0(p.first), errc::not_alternating_fingerprint,
            "first tree's reduced fingerprint is not alternating starting with 0");
    require(is_twin_binary(p.first, p.second), errc::not_twins, "not a twin pair");
    return {collapse_cherries(p.first, 0), collapse_cherries(p.second, 0)};
}

TwinBinaryPair graft_alternating_pair(const FullBinaryTree &a, const FullBinaryTree &b)
{
    size_t la = a.leaf_count(), lb = b.leaf_count();
    FullBinaryTree ga, gb;
    if (la == 1 && lb == 1) {
        ga = a;
        gb = b;
        ga.expand(leaves_in_order(ga)[0]);
        gb.expand(leaves_in_order(gb)[0]);
    } else if (la == lb && la >= 2) {
        // trees of an even-size permutation: expand the first la-1 leaves
        std::vector<size_t> idx(la - 1);
        for (size_t i = 0; i < la - 1; ++i)
            idx[i] = i;
        ga = expand_leaves(a, idx);
        gb = expand_leaves(b, idx);
    } else if (lb == la + 1 && la >= 2) {
        // odd-size permutation: max side expands all leaves, min side the
        // middle ones (positions 2..la, 1-based)
        std::vector<size_t> ia(la), ib(la - 1);
        for (size_t i = 0; i < la; ++i)
            ia[i] = i;
        for (size_t i = 0; i < la - 1; ++i)
            ib[i] = i + 1;
        ga = expand_leaves(a, ia);
        gb = expand_leaves(b, ib);
    } else {
        fail(errc::not_alternating_fingerprint,
             "leaf counts " + std::to_string(la) + "," + std::to_string(lb) +
                 " do not arise from an alternating Baxter permutation");
    }
    TwinBinaryPair out = make_twin_binary(ga, gb);
    require(alternating_reduced_fp_starting_0(out.first), errc::not_alternating_fingerprint,
            "grafted pair is not alternating");
    return out;
}

} // namespace baxterlab
