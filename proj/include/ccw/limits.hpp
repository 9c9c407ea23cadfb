#pragma once

#include <chrono>
#include <cstdint>
#include <string>

namespace ccw {

// Caps for every exponential search. Exceeding any of them throws
// limit_exceeded; no search silently degrades to an approximation.
struct search_limits {
    int max_n = 10;
    std::uint64_t node_budget = 50'000'000;
    std::chrono::milliseconds time_budget{60'000};

    void validate() const;
};

namespace default_limits {
inline constexpr search_limits bandwidth{12, 50'000'000, std::chrono::milliseconds{60'000}};
inline constexpr search_limits ccw{10, 50'000'000, std::chrono::milliseconds{60'000}};
inline constexpr search_limits orientation{16, 10'000'000, std::chrono::milliseconds{60'000}};
inline constexpr search_limits udim{7, 50'000'000, std::chrono::milliseconds{120'000}};
inline constexpr search_limits star{64, 200'000'000, std::chrono::milliseconds{60'000}};
inline constexpr search_limits ramsey{64, 1ULL << 24, std::chrono::milliseconds{30'000}};
}  // namespace default_limits

// Counts expanded nodes and polls the clock; throws limit_exceeded.
class search_budget {
public:
    search_budget(const search_limits& limits, std::string what);

    void require_order(std::size_t n) const;
    void tick();
    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    search_limits limits_;
    std::string what_;
    std::uint64_t nodes_ = 0;
    std::chrono::steady_clock::time_point deadline_;
};

}  // namespace ccw
