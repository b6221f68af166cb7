#pragma once

namespace qcorr {

inline constexpr const char* kVersionTag = "qcorr 1.0.0";

}  // namespace qcorr
