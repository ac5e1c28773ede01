#pragma once

#include <cstddef>
#include <optional>
#include <string>

namespace ldlab {

// Allocation cap in bytes read from LDLAB_MAX_MEM ("512M", "2G", "1000000").
// Absent or empty variable means no cap.
std::optional<std::size_t> memory_cap();

// Parses a byte count with an optional K/M/G suffix (powers of 1024).
std::size_t parse_byte_count(const std::string& text);

// Throws ResourceError when `bytes` exceeds the cap.
void require_memory(std::size_t bytes, const std::string& what);

}  // namespace ldlab
