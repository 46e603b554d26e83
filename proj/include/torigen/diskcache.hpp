#pragma once

#include <filesystem>
#include <optional>
#include <string>

namespace torigen {

// Optional on-disk memo for canonical-text artefacts (transition matrices,
// P/Q polynomials). Disabled while no directory is set.
void set_cache_directory(const std::filesystem::path& dir);
std::optional<std::filesystem::path> cache_directory();
std::optional<std::string> cache_read(const std::string& key);
void cache_write(const std::string& key, const std::string& text);

}  // namespace torigen
