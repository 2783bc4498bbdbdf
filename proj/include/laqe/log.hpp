#pragma once

#include <cstdio>

namespace laqe::log {

enum class Level : int { Error = 0, Warn = 1, Info = 2, Debug = 3 };

/// Level read once from LAQE_LOG (error|warn|info|debug); default warn.
Level level();

bool enabled(Level l);

}  // namespace laqe::log

#define LAQE_LOG_AT(lvl, tag, ...)                                  \
    do {                                                            \
        if (::laqe::log::enabled(lvl)) {                            \
            std::fprintf(stderr, "[laqe %s] ", tag);                \
            std::fprintf(stderr, __VA_ARGS__);                      \
            std::fprintf(stderr, "\n");                             \
        }                                                           \
    } while (0)

#define LAQE_ERROR(...) LAQE_LOG_AT(::laqe::log::Level::Error, "error", __VA_ARGS__)
#define LAQE_WARN(...) LAQE_LOG_AT(::laqe::log::Level::Warn, "warn", __VA_ARGS__)
#define LAQE_INFO(...) LAQE_LOG_AT(::laqe::log::Level::Info, "info", __VA_ARGS__)
#define LAQE_DEBUG(...) LAQE_LOG_AT(::laqe::log::Level::Debug, "debug", __VA_ARGS__)
