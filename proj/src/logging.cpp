#include "commitguard/logging.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>

namespace commitguard {

namespace {

LogLevel parse_level() {
    const char* raw = std::getenv("COMMITGUARD_LOG_LEVEL");
    if (raw == nullptr) return LogLevel::Warn;
    const std::string value(raw);
    if (value == "error") return LogLevel::Error;
    if (value == "warn") return LogLevel::Warn;
    if (value == "info") return LogLevel::Info;
    if (value == "debug") return LogLevel::Debug;
    return LogLevel::Warn;
}

const char* level_name(LogLevel level) {
    switch (level) {
        case LogLevel::Error: return "error";
        case LogLevel::Warn: return "warn";
        case LogLevel::Info: return "info";
        case LogLevel::Debug: return "debug";
    }
    return "?";
}

}  // namespace

LogLevel log_level() {
    static const LogLevel level = parse_level();
    return level;
}

void log_message(LogLevel level, std::string_view message) {
    if (static_cast<int>(level) > static_cast<int>(log_level())) return;
    std::fprintf(stderr, "commitguard [%s] %.*s\n", level_name(level),
                 static_cast<int>(message.size()), message.data());
}

}  // namespace commitguard
