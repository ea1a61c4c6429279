#pragma once

#define S1EMBED_VERSION "0.1.0"

namespace s1e {

inline constexpr const char* kVersion = S1EMBED_VERSION;

}  // namespace s1e
