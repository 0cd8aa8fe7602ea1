#include "sgw/errors.hpp"

namespace sgw {

const char* errc_name(errc code) {
    switch (code) {
        case errc::not_cofinite: return "NotCofinite";
        case errc::not_a_semigroup: return "NotASemigroup";
        case errc::not_member: return "NotMember";
        case errc::not_gamma_hyperelliptic: return "NotGammaHyperelliptic";
        case errc::malformed_odd_list: return "MalformedOddList";
        case errc::construction_out_of_range: return "ConstructionOutOfRange";
        case errc::genus_mismatch: return "GenusMismatch";
        case errc::invalid_argument: return "InvalidArgument";
    }
    return "UnknownError";
}

} // namespace sgw
