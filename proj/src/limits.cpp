#include "ccw/limits.hpp"

#include "ccw/error.hpp"

namespace ccw {

void search_limits::validate() const {
    if (max_n <= 0 || node_budget == 0 || time_budget.count() <= 0) {
        throw error(error_code::invalid_argument, "search limits must be positive");
    }
}

search_budget::search_budget(const search_limits& limits, std::string what)
    : limits_(limits), what_(std::move(what)),
      deadline_(std::chrono::steady_clock::now() + limits.time_budget) {
    limits_.validate();
}

void search_budget::require_order(std::size_t n) const {
    if (n > static_cast<std::size_t>(limits_.max_n)) {
        throw error(error_code::limit_exceeded,
                    what_ + ": n=" + std::to_string(n) + " exceeds max_n=" +
                        std::to_string(limits_.max_n));
    }
}

void search_budget::tick() {
    if (++nodes_ > limits_.node_budget) {
        throw error(error_code::limit_exceeded,
                    what_ + ": node budget of " + std::to_string(limits_.node_budget) +
                        " exhausted");
    }
    if ((nodes_ & 0x3ff) == 0 && std::chrono::steady_clock::now() > deadline_) {
        throw error(error_code::limit_exceeded,
                    what_ + ": time budget of " + std::to_string(limits_.time_budget.count()) +
                        " ms exhausted");
    }
}

}  // namespace ccw
