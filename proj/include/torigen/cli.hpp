#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace torigen {

struct RunConfig {
    std::string verb;
    std::string space;
    std::string structure;
    std::string signs;
    std::string omega;
    std::string numeric;
    int trunc = -1;  // -1: per-verb default
    std::string method;
    std::string format = "text";
    int threads = 0;
    std::string cache;
};

// Exit codes: 0 ok, 1 check failure or computation error, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace torigen
