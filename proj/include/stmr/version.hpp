#pragma once

namespace stmr {

inline constexpr const char* kVersion = "0.1.0";

}
