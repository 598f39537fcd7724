#include "baxterlab/paths.hpp"

#include <algorithm>
#include <set>

namespace baxterlab {

Point LatticePath::end() const
{
    long k = static_cast<long>(steps.ones());
    return {start.x + k, start.y + static_cast<long>(steps.size()) - k};
}

std::vector<Point> LatticePath::points() const
{
    std::vector<Point> pts;
    pts.reserve(steps.size() + 1);
    Point p = start;
    pts.push_back(p);
    for (uint8_t b : steps.bits) {
        if (b)
            ++p.x;
        else
            ++p.y;
        pts.push_back(p);
    }
    return pts;
}

bool LatticePath::operator<(const LatticePath &o) const
{
    if (start != o.start)
        return start < o.start;
    return steps.bits < o.steps.bits;
}

LatticePath path_of_bits(const BitString &s, Point start)
{
    return {start, s};
}

BitString bits_of_path(const LatticePath &p)
{
    return p.steps;
}

bool paths_disjoint(const LatticePath &a, const LatticePath &b)
{
    auto pa = a.points();
    auto pb = b.points();
    std::set<Point> sa(pa.begin(), pa.end());
    for (const Point &p : pb)
        if (sa.count(p))
            return false;
    return true;
}

bool PathTriple::operator<(const PathTriple &o) const
{
    if (!(p1 == o.p1))
        return p1 < o.p1;
    if (!(p2 == o.p2))
        return p2 < o.p2;
    return p3 < o.p3;
}

PathTriple validate_triple(const PathTriple &t)
{
    require(t.p1.start == Point{0, 2} && t.p2.start == Point{1, 1} && t.p3.start == Point{2, 0},
            errc::domain_error, "triple must start at (0,2),(1,1),(2,0)");
    long k = static_cast<long>(t.p2.steps.ones());
    long l = static_cast<long>(t.p2.steps.size()) - k;
    require(t.p1.end() == Point{k, l + 2} && t.p2.end() == Point{k + 1, l + 1} &&
                t.p3.end() == Point{k + 2, l},
            errc::domain_error, "triple endpoints inconsistent");
    require(paths_disjoint(t.p1, t.p2) && paths_disjoint(t.p2, t.p3) &&
                paths_disjoint(t.p1, t.p3),
            errc::intersection_detected, "triple paths intersect");
    return t;
}

PathTriple twin_pair_to_triple(const TwinBinaryPair &p)
{
    require(is_twin_binary(p.first, p.second), errc::not_twins, "not a twin pair");
    BitString beta_s = reduced_bodyprint(p.first);
    BitString alpha_s = reduced_fingerprint(p.first);
    BitString beta_t = reduced_bodyprint(p.second);
    PathTriple t;
    t.p1 = path_of_bits(beta_s, {0, 2});
    t.p2 = path_of_bits(alpha_s, {1, 1});
    t.p3 = path_of_bits(reverse(beta_t), {2, 0});
    return validate_triple(t);
}

TwinBinaryPair triple_to_twin_pair(const PathTriple &t)
{
    validate_triple(t);
    BitString beta_s = t.p1.steps;
    BitString alpha_s = t.p2.steps;
    BitString beta_t = reverse(t.p3.steps);
    BitString alpha_t = reverse(alpha_s);
    FullBinaryTree s = tree_from_prints(beta_s, alpha_s);
    FullBinaryTree u = tree_from_prints(beta_t, alpha_t);
    return make_twin_binary(s, u);
}

bool is_symmetric_triple(const PathTriple &t)
{
    validate_triple(t);
    long k = static_cast<long>(t.p2.steps.ones());
    long l = static_cast<long>(t.p2.steps.size()) - k;
    // doubled coordinates keep the half-integer center (k/2+1, l/2+1) exact;
    // the reflection p -> 2C - p becomes P -> 2(k+2) - P, 2(l+2) - P
    long cx2 = 2 * (k + 2), cy2 = 2 * (l + 2);
    auto reflect = [&](const std::vector<Point> &pts) {
        std::vector<Point> r;
        r.reserve(pts.size());
        for (auto it = pts.rbegin(); it != pts.rend(); ++it)
            r.push_back({cx2 - it->x, cy2 - it->y});
        return r;
    };
    auto doubled = [](const LatticePath &p) {
        auto pts = p.points();
        for (auto &q : pts) {
            q.x *= 2;
            q.y *= 2;
        }
        return pts;
    };
    return reflect(doubled(t.p3)) == doubled(t.p1) &&
           reflect(doubled(t.p2)) == doubled(t.p2);
}

bool DyckPair::operator<(const DyckPair &o) const
{
    if (!(p1 == o.p1))
        return p1 < o.p1;
    return p2 < o.p2;
}

bool below_diagonal(const LatticePath &p)
{
    for (const Point &q : p.points())
        if (q.y > q.x)
            return false;
    return true;
}

DyckPair validate_dyck_pair(const DyckPair &d)
{
    long n = static_cast<long>(d.p1.steps.ones());
    require(d.p1.start == Point{0, 0} && d.p1.end() == Point{n, n},
            errc::domain_error, "p1 must run from (0,0) to (n,n)");
    require(d.p2.start == Point{1, -1} && d.p2.end() == Point{n + 1, n - 1},
            errc::domain_error, "p2 must run from (1,-1) to (n+1,n-1)");
    require(below_diagonal(d.p1) && below_diagonal(d.p2), errc::dominance_violated,
            "paths must stay weakly below the diagonal");
    require(paths_disjoint(d.p1, d.p2), errc::intersection_detected,
            "dyck pair paths intersect");
    return d;
}

DyckPair schnyder_prints_to_dyck_pair(const BitString &alpha_hat, const BitString &beta_hat_r)
{
    require(alpha_hat.size() == beta_hat_r.size(), errc::length_mismatch,
            "schnyder prints must have equal length");
    BitString one({std::vector<uint8_t>{1}});
    BitString alpha_star = concat(one, alpha_hat);
    BitString beta_star = concat(one, beta_hat_r);
    size_t n = alpha_star.ones();
    require(alpha_star.size() == 2 * n, errc::count_mismatch, "alpha* must lie in C(2n,n)");
    require(dominates(alpha_star, alternating_word(n)), errc::dominance_violated,
            "alpha* must be a Dyck word");
    require(dominates(beta_star, alpha_star), errc::dominance_violated,
            "beta* must dominate alpha*");
    DyckPair d;
    d.p1 = path_of_bits(alpha_star, {0, 0});
    d.p2 = path_of_bits(beta_star, {1, -1});
    return validate_dyck_pair(d);
}

std::pair<BitString, BitString> dyck_pair_to_schnyder_prints(const DyckPair &d)
{
    validate_dyck_pair(d);
    BitString alpha_star = d.p1.steps;
    BitString beta_star = d.p2.steps;
    require(!alpha_star.empty() && alpha_star[0] == 1 && beta_star[0] == 1,
            errc::dominance_violated, "dyck pair strings must start with 1");
    BitString alpha_hat(std::vector<uint8_t>(alpha_star.bits.begin() + 1, alpha_star.bits.end()));
    BitString beta_hat_r(std::vector<uint8_t>(beta_star.bits.begin() + 1, beta_star.bits.end()));
    return {alpha_hat, beta_hat_r};
}

} // namespace baxterlab
