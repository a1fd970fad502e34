#include "prodset/parallel.hpp"

#include <cstdlib>
#include <thread>
#include <vector>

namespace prodset {

std::size_t worker_count() {
    if (const char* env = std::getenv("PRODUCTSET_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

void parallel_chunks(std::size_t n,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& body) {
    std::size_t workers = std::min(worker_count(), n ? n : std::size_t{1});
    if (workers <= 1) {
        body(0, 0, n);
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(workers);
    std::size_t per = n / workers, extra = n % workers, begin = 0;
    for (std::size_t w = 0; w < workers; ++w) {
        std::size_t len = per + (w < extra ? 1 : 0);
        threads.emplace_back(body, w, begin, begin + len);
        begin += len;
    }
    for (auto& t : threads) t.join();
}

}  // namespace prodset
