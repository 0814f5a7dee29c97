#pragma once

#include <string_view>

namespace commitguard {

enum class LogLevel : int { Error = 0, Warn = 1, Info = 2, Debug = 3 };

// Current level, read once from COMMITGUARD_LOG_LEVEL (error|warn|info|debug).
LogLevel log_level();

// Writes to stderr when `level` is enabled; never touches stdout.
void log_message(LogLevel level, std::string_view message);

}  // namespace commitguard
