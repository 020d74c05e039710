#include "idemkit/numfmt.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace idemkit {

std::string format_double(double x) {
    if (x == 0.0) return "0";
    if (std::floor(x) == x && std::abs(x) < 9.0e15) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%lld", static_cast<long long>(x));
        return buf;
    }
    char buf[40];
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof(buf), "%.*g", prec, x);
        if (std::strtod(buf, nullptr) == x) break;
    }
    return buf;
}

} // namespace idemkit
