#pragma once

#include <stdexcept>
#include <string>

namespace sgw {

enum class errc {
    not_cofinite,             // gcd of generators != 1
    not_a_semigroup,          // gap-set complement not closed under addition
    not_member,               // Apéry base element outside the semigroup
    not_gamma_hyperelliptic,  // certificate required but negative
    malformed_odd_list,       // odd members below 2g do not number gamma
    construction_out_of_range,// closed-form constructor failed its post-checks
    genus_mismatch,           // tableau diff across different genera
    invalid_argument,         // precondition violation
};

const char* errc_name(errc code);

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
    throw error(code, what);
}

} // namespace sgw
