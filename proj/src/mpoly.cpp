#include "jackps/mpoly.hpp"

namespace jackps {

std::string to_string(SymmetryType t) {
    switch (t) {
        case SymmetryType::AS: return "AS";
        case SymmetryType::AA: return "AA";
        case SymmetryType::SA: return "SA";
        case SymmetryType::SS: return "SS";
    }
    return "?";
}

SymmetryType parse_symmetry_type(const std::string& s) {
    if (s == "AS") return SymmetryType::AS;
    if (s == "AA") return SymmetryType::AA;
    if (s == "SA") return SymmetryType::SA;
    if (s == "SS") return SymmetryType::SS;
    throw std::invalid_argument("unknown symmetry type: " + s);
}

}  // namespace jackps
