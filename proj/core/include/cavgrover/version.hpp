#pragma once

#define CAVGROVER_VERSION_MAJOR 0
#define CAVGROVER_VERSION_MINOR 1
#define CAVGROVER_VERSION_PATCH 0
#define CAVGROVER_VERSION "0.1.0"

namespace cavgrover {

inline const char* version() { return CAVGROVER_VERSION; }

} // namespace cavgrover
