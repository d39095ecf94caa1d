// Cooperative time budget. The deadline is thread-local so batch workers
// can carry independent budgets.
#ifndef FINDET_BUDGET_HPP
#define FINDET_BUDGET_HPP

#include <chrono>
#include <stdexcept>

namespace findet {

struct BudgetExceeded : std::runtime_error {
    BudgetExceeded() : std::runtime_error("time budget exceeded") {}
};

namespace budget {

using Clock = std::chrono::steady_clock;

// 0 = no deadline.
Clock::time_point& thread_deadline();

// RAII scope installing a deadline for the current thread.
class Scope {
public:
    explicit Scope(double seconds) : prev_(thread_deadline()) {
        if (seconds > 0)
            thread_deadline() =
                Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                   std::chrono::duration<double>(seconds));
    }
    ~Scope() { thread_deadline() = prev_; }

private:
    Clock::time_point prev_;
};

// Called from engine inner loops; throws BudgetExceeded past the deadline.
void checkpoint();

}  // namespace budget
}  // namespace findet

#endif
