#pragma once

#include <stdexcept>
#include <string>

namespace sentinel {

enum class Errc {
    missing_file,
    schema_mismatch,
    empty_dataset,
    invalid_config,
    too_small,
    bad_length,
    already_registered,
    not_registered,
    empty_pool,
    all_zero_weights,
    dim_mismatch,
    non_integral,
    non_positive,
    single_class,
    no_servers,
    no_feasible_target,
    target_degraded,
    capacity_exceeded,
    unknown_profile,
    empty_session,
    signing_failed,
    unverified_pattern,
    one_class,
    bad_format,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace sentinel
