#pragma once

#include <string>

namespace allclear {

// GOES flare classes handled by the pipeline; FQ marks flare-quiet slices.
enum class FlareClass { X, M, C, B, FQ };

// XM = positive (major flare), CBN = negative (all-clear).
enum class BinaryLabel { XM, CBN };

// X, M -> XM; C, B, FQ -> CBN.
inline BinaryLabel binarize_label(FlareClass fc) {
    return (fc == FlareClass::X || fc == FlareClass::M) ? BinaryLabel::XM : BinaryLabel::CBN;
}

std::string to_string(FlareClass fc);
std::string to_string(BinaryLabel label);

// Case-insensitive; any token outside {X, M, C, B, FQ} is a DataError.
FlareClass parse_flare_class(const std::string& token);
BinaryLabel parse_binary_label(const std::string& token);

// Categorical intensity order X > M > C > B > FQ.
inline int intensity_rank(FlareClass fc) {
    switch (fc) {
        case FlareClass::X: return 4;
        case FlareClass::M: return 3;
        case FlareClass::C: return 2;
        case FlareClass::B: return 1;
        case FlareClass::FQ: return 0;
    }
    return 0;
}

} // namespace allclear
