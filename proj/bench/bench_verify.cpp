// Times the verification sweeps with the serial reference loop against the
// OpenMP kernels.  Reports must agree exactly; the speedup column is the
// point of comparison.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "braids/garside.hpp"
#include "braids/verify.hpp"

using namespace braids;
using Clock = std::chrono::steady_clock;

namespace {

template <class F>
double time_run(F&& fn, Report& out) {
    auto start = Clock::now();
    out = fn();
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void bench(const std::string& name, std::function<Report(Exec)> run) {
    Report serial, parallel;
    double ts = time_run([&] { return run(Exec::Serial); }, serial);
    double tp = time_run([&] { return run(Exec::Parallel); }, parallel);
    bool same = serial.checks.size() == parallel.checks.size();
    for (size_t i = 0; same && i < serial.checks.size(); ++i)
        same = serial.checks[i].name == parallel.checks[i].name &&
               serial.checks[i].pass == parallel.checks[i].pass;
    std::printf("%-28s serial %8.3fs   parallel %8.3fs   speedup %5.2fx   %s  (%s)\n",
                name.c_str(), ts, tp, tp > 0 ? ts / tp : 0.0,
                same ? "reports identical" : "REPORT MISMATCH", serial.summary().c_str());
}

}  // namespace

int main() {
    bench("theorem-b n=5", [](Exec e) { return verify_theorem_b(5, e); });
    bench("theorem-b n=6", [](Exec e) { return verify_theorem_b(6, e); });
    bench("relations n=5 simplicial",
          [](Exec e) { return verify_relations(5, RepMode::Simplicial, e); });
    bench("theorem-a n=4 (200 trials)", [](Exec e) {
        TheoremAConfig cfg;
        cfg.n = 4;
        cfg.q_values = {mpq_class(1, 3), mpq_class(1, 2), mpq_class(2), mpq_class(3)};
        cfg.trials = 200;
        cfg.word_length = 12;
        cfg.seed = 7;
        return verify_theorem_a(cfg, e);
    });
    bench("qdegree n=4 (60 words)",
          [](Exec e) { return qdegree_experiment(4, 60, 6, 11, e); });
    return 0;
}
