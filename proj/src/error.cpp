#include "ccw/error.hpp"

namespace ccw {

const char* to_string(error_code code) noexcept {
    switch (code) {
    case error_code::index_out_of_range: return "IndexOutOfRange";
    case error_code::self_loop: return "SelfLoop";
    case error_code::parse_error: return "ParseError";
    case error_code::invalid_cover: return "InvalidCover";
    case error_code::not_a_permutation: return "NotAPermutation";
    case error_code::limit_exceeded: return "LimitExceeded";
    case error_code::cyclic_orientation: return "CyclicOrientation";
    case error_code::not_transitive: return "NotTransitive";
    case error_code::not_incomparability: return "NotIncomparability";
    case error_code::invalid_query: return "InvalidQuery";
    case error_code::invalid_argument: return "InvalidArgument";
    case error_code::not_an_intersection: return "NotAnIntersection";
    case error_code::degenerate_width: return "DegenerateWidth";
    }
    return "Unknown";
}

}  // namespace ccw
