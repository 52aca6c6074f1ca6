#include "fpb/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <string_view>

namespace fpb {

int worker_count() {
  if (const char* env = std::getenv("FPB_THREADS")) {
    const std::string_view text(env);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc() && ptr == text.data() + text.size() && value > 0) return value;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace fpb
