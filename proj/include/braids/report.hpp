#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace braids {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Report {
    std::string title;
    std::vector<CheckResult> checks;

    int total() const { return static_cast<int>(checks.size()); }
    int failed() const {
        int f = 0;
        for (const auto& c : checks)
            if (!c.pass) ++f;
        return f;
    }
    bool all_pass() const { return failed() == 0; }
    std::string summary() const {
        return std::to_string(total() - failed()) + "/" + std::to_string(total()) +
               " pass";
    }
};

enum class Exec { Serial, Parallel };

// Runs fn(0), ..., fn(count-1); with Exec::Parallel the iterations fan out
// across OpenMP threads.  Callers write results into pre-sized slots so the
// merged output is identical to the serial run.
template <class F>
void parallel_for(std::size_t count, Exec exec, F&& fn) {
#ifdef BRAIDSIM_HAVE_OPENMP
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(count); ++i)
            fn(static_cast<std::size_t>(i));
        return;
    }
#endif
    for (std::size_t i = 0; i < count; ++i) fn(i);
}

}  // namespace braids
