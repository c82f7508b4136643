#include "vergen/parallel.hpp"

#include <cstdlib>
#include <string>

namespace vergen {

int worker_count(int fallback) {
    if (const char* env = std::getenv("VERGEN_THREADS")) {
        try {
            const int n = std::stoi(env);
            if (n > 0) return n;
        } catch (const std::exception&) {
        }
    }
    return std::max(fallback, 1);
}

}  // namespace vergen
