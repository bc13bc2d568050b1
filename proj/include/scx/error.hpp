#pragma once

#include <stdexcept>
#include <string>

namespace scx {

/// Error codes for every failure mode the library reports. Each code maps
/// onto one documented error condition; CLI exit codes are derived from
/// these (see tools/).
enum class errc {
    bad_argument,
    not_prime_power,
    field_mismatch,
    division_by_zero,
    index_out_of_range,
    overflow,
    too_large,
    too_small,
    not_found,
    zero_seed,
    not_periodic,
    not_primitive,
    bad_header,
    facet_size_mismatch,
    vertex_out_of_range,
    duplicate_facet,
    empty_complex,
    disconnected,
    not_a_corridor,
    not_a_closed_corridor,
    unused_vertices,
    no_valid_glue_choice,
    no_polynomial,
    construction_check_failed,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::bad_argument: return "bad_argument";
        case errc::not_prime_power: return "not_prime_power";
        case errc::field_mismatch: return "field_mismatch";
        case errc::division_by_zero: return "division_by_zero";
        case errc::index_out_of_range: return "index_out_of_range";
        case errc::overflow: return "overflow";
        case errc::too_large: return "too_large";
        case errc::too_small: return "too_small";
        case errc::not_found: return "not_found";
        case errc::zero_seed: return "zero_seed";
        case errc::not_periodic: return "not_periodic";
        case errc::not_primitive: return "not_primitive";
        case errc::bad_header: return "bad_header";
        case errc::facet_size_mismatch: return "facet_size_mismatch";
        case errc::vertex_out_of_range: return "vertex_out_of_range";
        case errc::duplicate_facet: return "duplicate_facet";
        case errc::empty_complex: return "empty_complex";
        case errc::disconnected: return "disconnected";
        case errc::not_a_corridor: return "not_a_corridor";
        case errc::not_a_closed_corridor: return "not_a_closed_corridor";
        case errc::unused_vertices: return "unused_vertices";
        case errc::no_valid_glue_choice: return "no_valid_glue_choice";
        case errc::no_polynomial: return "no_polynomial";
        case errc::construction_check_failed: return "construction_check_failed";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace scx
