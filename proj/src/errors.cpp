#include "pivotal/errors.hpp"

#include <cstdlib>
#include <string>

namespace pivotal {

std::size_t enumeration_guard(std::size_t defaultValue) {
    const char* env = std::getenv("PIVOTAL_GUARD");
    if (!env) return defaultValue;
    char*              end = nullptr;
    unsigned long long v   = std::strtoull(env, &end, 10);
    if (end == env || v == 0) return defaultValue;
    return std::max<std::size_t>(defaultValue, static_cast<std::size_t>(v));
}

}  // namespace pivotal
