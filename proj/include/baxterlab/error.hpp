#pragma once

#include <stdexcept>
#include <string>

namespace baxterlab {

enum class errc {
    // validation errors
    non_quad_face,
    not_bipartite,
    poles_invalid,
    not_simple,
    not_connected,
    bad_rotation_system,
    not_two_connected,
    malformed_fingerprint,
    length_mismatch,
    not_alternating,
    dominance_violated,
    count_mismatch,
    not_twins,
    not_baxter,
    not_alternating_fingerprint,
    cyclic_orientation,
    wrong_poles,
    fact_v_violated,
    fact_f_violated,
    outdegree_violated,
    star_violated,
    bad_rectangulation,
    domain_error,
    bound_exceeded,
    parse_error,
    not_convertible,
    not_renderable,
    unknown_family,
    invariant_violated,
    // bug signals: provably impossible on valid input, reported loudly anyway
    internal_contradiction,
    cycle_detected,
    straight_path_cycle,
    intersection_detected,
};

const char *errc_name(errc c);

struct error : std::runtime_error {
    errc code;
    error(errc c, const std::string &msg)
        : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code(c) {}
};

[[noreturn]] inline void fail(errc c, const std::string &msg) { throw error(c, msg); }

inline void require(bool ok, errc c, const std::string &msg)
{
    if (!ok)
        fail(c, msg);
}

} // namespace baxterlab
