#include "ualg/exec.hpp"

#include <cstdlib>

namespace ualg {

namespace {

Exec& exec_state() {
#ifdef _OPENMP
    static Exec e = std::getenv("ALG_SERIAL") ? Exec::serial : Exec::parallel;
#else
    static Exec e = Exec::serial;
#endif
    return e;
}

} // namespace

Exec default_exec() { return exec_state(); }

void set_default_exec(Exec e) { exec_state() = e; }

int default_max_size() {
    static int bound = [] {
        if (const char* s = std::getenv("ALG_MAX_SIZE")) {
            int v = std::atoi(s);
            if (v > 0) return v;
        }
        return 14;
    }();
    return bound;
}

} // namespace ualg
