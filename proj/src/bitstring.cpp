#include "baxterlab/bitstring.hpp"

#include <algorithm>

namespace baxterlab {

const char *errc_name(errc c)
{
    switch (c) {
    case errc::non_quad_face: return "NonQuadFace";
    case errc::not_bipartite: return "NotBipartite";
    case errc::poles_invalid: return "PolesInvalid";
    case errc::not_simple: return "NotSimple";
    case errc::not_connected: return "NotConnected";
    case errc::bad_rotation_system: return "BadRotationSystem";
    case errc::not_two_connected: return "NotTwoConnected";
    case errc::malformed_fingerprint: return "MalformedFingerprint";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::not_alternating: return "NotAlternating";
    case errc::dominance_violated: return "DominanceViolated";
    case errc::count_mismatch: return "CountMismatch";
    case errc::not_twins: return "NotTwins";
    case errc::not_baxter: return "NotBaxter";
    case errc::not_alternating_fingerprint: return "NotAlternatingFingerprint";
    case errc::cyclic_orientation: return "CyclicOrientation";
    case errc::wrong_poles: return "WrongPoles";
    case errc::fact_v_violated: return "FactVViolated";
    case errc::fact_f_violated: return "FactFViolated";
    case errc::outdegree_violated: return "OutdegreeViolated";
    case errc::star_violated: return "StarViolated";
    case errc::bad_rectangulation: return "BadRectangulation";
    case errc::domain_error: return "DomainError";
    case errc::bound_exceeded: return "BoundExceeded";
    case errc::parse_error: return "ParseError";
    case errc::not_convertible: return "NotConvertible";
    case errc::not_renderable: return "NotRenderable";
    case errc::unknown_family: return "UnknownFamily";
    case errc::invariant_violated: return "InvariantViolated";
    case errc::internal_contradiction: return "InternalContradiction";
    case errc::cycle_detected: return "CycleDetected";
    case errc::straight_path_cycle: return "StraightPathCycle";
    case errc::intersection_detected: return "IntersectionDetected";
    }
    return "UnknownError";
}

BitString::BitString(const std::string &s)
{
    bits.reserve(s.size());
    for (char c : s) {
        require(c == '0' || c == '1', errc::parse_error, "bit string may contain only 0/1");
        bits.push_back(c == '1');
    }
}

size_t BitString::ones() const
{
    return static_cast<size_t>(std::count(bits.begin(), bits.end(), uint8_t(1)));
}

std::string BitString::str() const
{
    std::string s;
    s.reserve(bits.size());
    for (uint8_t b : bits)
        s.push_back(b ? '1' : '0');
    return s;
}

BitString reverse(const BitString &s)
{
    BitString r = s;
    std::reverse(r.bits.begin(), r.bits.end());
    return r;
}

BitString complement(const BitString &s)
{
    BitString r = s;
    for (auto &b : r.bits)
        b ^= 1;
    return r;
}

BitString concat(const BitString &a, const BitString &b)
{
    BitString r = a;
    r.bits.insert(r.bits.end(), b.bits.begin(), b.bits.end());
    return r;
}

BitString reduced(const BitString &s)
{
    require(s.size() >= 2, errc::malformed_fingerprint, "need length >= 2 to reduce");
    require(s.bits.front() == 1 && s.bits.back() == 0, errc::malformed_fingerprint,
            "fingerprint must start with 1 and end with 0");
    return BitString(std::vector<uint8_t>(s.bits.begin() + 1, s.bits.end() - 1));
}

bool dominates(const BitString &tau, const BitString &sigma)
{
    require(tau.size() == sigma.size(), errc::length_mismatch, "dominance needs equal lengths");
    require(tau.ones() == sigma.ones(), errc::length_mismatch, "dominance needs equal weight");
    int diff = 0;
    for (size_t i = 0; i < tau.size(); ++i) {
        diff += int(tau[i]) - int(sigma[i]);
        if (diff < 0)
            return false;
    }
    return true;
}

BitString alternating_word(size_t n)
{
    BitString r;
    for (size_t i = 0; i < n; ++i) {
        r.push(1);
        r.push(0);
    }
    return r;
}

} // namespace baxterlab
