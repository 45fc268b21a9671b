#include "designworld/evaluation.hpp"

#include <cstdio>

namespace designworld {

std::string milli_to_string(std::int64_t milli) {
    bool neg = milli < 0;
    unsigned long long mag = neg ? static_cast<unsigned long long>(-(milli + 1)) + 1
                                 : static_cast<unsigned long long>(milli);
    char buf[40];
    std::snprintf(buf, sizeof buf, "%s%llu.%03llu", neg ? "-" : "", mag / 1000,
                  mag % 1000);
    return buf;
}

}  // namespace designworld
