#include <jacquet/formal_sum.hpp>

#include <atomic>
#include <cstdlib>
#include <string>

namespace jacquet
{

namespace
{

std::size_t limit_from_env()
{
    if (const char *v = std::getenv("JACQUET_MAX_TERMS")) {
        try {
            const auto n = std::stoull(v);
            if (n > 0) {
                return static_cast<std::size_t>(n);
            }
        } catch (const std::exception &) {
        }
    }
    return 1'000'000;
}

std::atomic<std::size_t> &limit()
{
    static std::atomic<std::size_t> value{limit_from_env()};
    return value;
}

} // namespace

std::size_t max_terms()
{
    return limit().load(std::memory_order_relaxed);
}

void set_max_terms(std::size_t n)
{
    limit().store(n, std::memory_order_relaxed);
}

} // namespace jacquet
