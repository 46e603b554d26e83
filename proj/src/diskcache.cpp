#include "torigen/diskcache.hpp"

#include <fstream>
#include <mutex>
#include <sstream>

namespace torigen {

namespace {

std::mutex& cache_mutex() {
    static std::mutex m;
    return m;
}

std::optional<std::filesystem::path>& cache_dir() {
    static std::optional<std::filesystem::path> dir;
    return dir;
}

}  // namespace

void set_cache_directory(const std::filesystem::path& dir) {
    std::lock_guard lock(cache_mutex());
    if (dir.empty()) {
        cache_dir().reset();
        return;
    }
    std::filesystem::create_directories(dir);
    cache_dir() = dir;
}

std::optional<std::filesystem::path> cache_directory() {
    std::lock_guard lock(cache_mutex());
    return cache_dir();
}

std::optional<std::string> cache_read(const std::string& key) {
    std::lock_guard lock(cache_mutex());
    if (!cache_dir()) return std::nullopt;
    std::ifstream in(*cache_dir() / (key + ".txt"));
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void cache_write(const std::string& key, const std::string& text) {
    std::lock_guard lock(cache_mutex());
    if (!cache_dir()) return;
    auto target = *cache_dir() / (key + ".txt");
    auto tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        out << text;
    }
    std::filesystem::rename(tmp, target);
}

}  // namespace torigen
