#include "findet/budget.hpp"

namespace findet::budget {

Clock::time_point& thread_deadline() {
    thread_local Clock::time_point deadline{};
    return deadline;
}

void checkpoint() {
    auto& d = thread_deadline();
    if (d != Clock::time_point{} && Clock::now() > d) throw BudgetExceeded();
}

}  // namespace findet::budget
