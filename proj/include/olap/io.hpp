#pragma once

#include <string>

namespace olap {

// Reads a whole file; throws Error naming the path on failure.
std::string read_file(const std::string& path);

// Writes (truncates) a whole file; throws Error naming the path on failure.
void write_file(const std::string& path, const std::string& content);

}  // namespace olap
