#include "spectra/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace spectra {

unsigned thread_budget() {
    unsigned budget = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("SPECTRA_LEASE_THREADS")) {
        char* end = nullptr;
        const unsigned long cap = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && cap >= 1 && cap < budget) {
            budget = static_cast<unsigned>(cap);
        }
    }
    return budget;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    const std::size_t workers = std::min<std::size_t>(thread_budget(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto body = [&] {
        try {
            for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
                fn(i);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!error) error = std::current_exception();
            next.store(n);  // stop handing out work
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(body);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace spectra
