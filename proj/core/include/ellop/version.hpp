#pragma once

#include <string>

namespace ellop {

inline constexpr const char* kToolName = "ellop";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

// Compiler + standard string, fixed per build.
std::string toolchain_description();

// FNV-1a 64-bit hex digest, used to fingerprint problem inputs.
std::string fnv1a_digest(std::string_view bytes);

}  // namespace ellop
