#ifndef RIGIDITYLAB_PARALLEL_HPP
#define RIGIDITYLAB_PARALLEL_HPP

#include <cstdlib>
#include <thread>
#include <vector>

namespace rigiditylab {

// Worker count: hardware concurrency, capped by RIGIDITYLAB_THREADS when set.
inline unsigned thread_cap() {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("RIGIDITYLAB_THREADS")) {
        long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1 && static_cast<unsigned>(cap) < n) n = static_cast<unsigned>(cap);
    }
    return n;
}

// Runs f(i) for i = 0..count-1; results must be written by index so output
// assembly is deterministic regardless of scheduling.
template <class F>
void parallel_for_indexed(size_t count, F&& f) {
    unsigned workers = thread_cap();
    if (workers <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) f(i);
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (size_t i = w; i < count; i += workers) f(i);
        });
    for (auto& t : pool) t.join();
}

}  // namespace rigiditylab

#endif
