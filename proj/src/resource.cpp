#include "ldlab/resource.hpp"

#include <cctype>
#include <cstdlib>

#include "ldlab/errors.hpp"

namespace ldlab {

std::size_t parse_byte_count(const std::string& text) {
  std::size_t pos = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &pos);
  } catch (const std::exception&) {
    throw ParseError("invalid byte count '" + text + "'");
  }
  std::string suffix = text.substr(pos);
  unsigned long long scale = 1;
  if (suffix.empty() || suffix == "B" || suffix == "b") {
    scale = 1;
  } else if (suffix == "K" || suffix == "k") {
    scale = 1ULL << 10;
  } else if (suffix == "M" || suffix == "m") {
    scale = 1ULL << 20;
  } else if (suffix == "G" || suffix == "g") {
    scale = 1ULL << 30;
  } else {
    throw ParseError("invalid byte count suffix in '" + text + "'");
  }
  return static_cast<std::size_t>(value * scale);
}

std::optional<std::size_t> memory_cap() {
  const char* env = std::getenv("LDLAB_MAX_MEM");
  if (env == nullptr || *env == '\0') return std::nullopt;
  return parse_byte_count(env);
}

void require_memory(std::size_t bytes, const std::string& what) {
  auto cap = memory_cap();
  if (cap && bytes > *cap) {
    throw ResourceError(what + " needs " + std::to_string(bytes) +
                        " bytes, above LDLAB_MAX_MEM=" + std::to_string(*cap));
  }
}

}  // namespace ldlab
