#include "torigen/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace torigen {

namespace {

int initial_threads() {
    if (const char* env = std::getenv("TORIGEN_THREADS")) {
        try {
            int n = std::stoi(env);
            if (n > 0) return n;
        } catch (...) {
        }
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

std::atomic<int>& thread_setting() {
    static std::atomic<int> n{initial_threads()};
    return n;
}

}  // namespace

int default_threads() {
    return thread_setting().load();
}

void set_default_threads(int n) {
    thread_setting().store(n > 0 ? n : initial_threads());
}

}  // namespace torigen
