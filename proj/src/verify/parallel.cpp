#include "reflectq/verify/parallel.hpp"

#include <cstdlib>
#include <string>

namespace reflectq::verify {

unsigned thread_count() {
  if (const char* env = std::getenv("REFLECTQ_THREADS")) {
    try {
      int v = std::stoi(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
      // fall through to the hardware default
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace reflectq::verify
