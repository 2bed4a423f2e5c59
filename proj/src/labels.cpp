#include "allclear/labels.hpp"

#include "allclear/errors.hpp"

#include <algorithm>
#include <cctype>

namespace allclear {

std::string to_string(FlareClass fc) {
    switch (fc) {
        case FlareClass::X: return "X";
        case FlareClass::M: return "M";
        case FlareClass::C: return "C";
        case FlareClass::B: return "B";
        case FlareClass::FQ: return "FQ";
    }
    return "?";
}

std::string to_string(BinaryLabel label) {
    return label == BinaryLabel::XM ? "XM" : "CBN";
}

FlareClass parse_flare_class(const std::string& token) {
    std::string upper(token);
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    if (upper == "X") return FlareClass::X;
    if (upper == "M") return FlareClass::M;
    if (upper == "C") return FlareClass::C;
    if (upper == "B") return FlareClass::B;
    if (upper == "FQ") return FlareClass::FQ;
    throw DataError("unknown flare class token '" + token + "' (expected X, M, C, B or FQ)");
}

BinaryLabel parse_binary_label(const std::string& token) {
    std::string upper(token);
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    if (upper == "XM") return BinaryLabel::XM;
    if (upper == "CBN") return BinaryLabel::CBN;
    throw DataError("unknown binary label '" + token + "' (expected XM or CBN)");
}

} // namespace allclear
