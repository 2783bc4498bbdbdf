#include "laqe/log.hpp"

#include <cstdlib>
#include <cstring>

namespace laqe::log {

namespace {

Level read_env() {
    const char* env = std::getenv("LAQE_LOG");
    if (!env) return Level::Warn;
    if (std::strcmp(env, "error") == 0) return Level::Error;
    if (std::strcmp(env, "warn") == 0) return Level::Warn;
    if (std::strcmp(env, "info") == 0) return Level::Info;
    if (std::strcmp(env, "debug") == 0) return Level::Debug;
    return Level::Warn;
}

}  // namespace

Level level() {
    static Level l = read_env();
    return l;
}

bool enabled(Level l) { return static_cast<int>(l) <= static_cast<int>(level()); }

}  // namespace laqe::log
