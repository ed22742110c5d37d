#include "braids/garside.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "braids/verify.hpp"

namespace braids {

bool is_normal_pair(const NCPartition& a, const NCPartition& b) {
    if (a.n != b.n) throw DimensionMismatch("is_normal_pair: different n");
    NCPartition rc = complement(a, Side::Right);
    return nc_meet(rc, b).is_discrete();
}

DualPositiveWord normal_form(const DualPositiveWord& w) {
    DualPositiveWord out;
    out.n = w.n;
    for (const auto& f : w.factors) {
        if (f.n != w.n) throw DimensionMismatch("factor has wrong n");
        if (!f.is_discrete()) out.factors.push_back(f);
    }
    auto& fs = out.factors;
    int guard = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        if (++guard > 1000 + 100 * static_cast<int>(fs.size()))
            throw SlidingFailure("normal form did not stabilize");
        for (size_t idx = 0; idx + 1 < fs.size();) {
            NCPartition m = nc_meet(complement(fs[idx], Side::Right), fs[idx + 1]);
            if (m.is_discrete()) {
                ++idx;
                continue;
            }
            try {
                Perm head = to_permutation(fs[idx]).compose(to_permutation(m));
                Perm tail =
                    to_permutation(m).inverse().compose(to_permutation(fs[idx + 1]));
                fs[idx] = from_permutation(head);
                NCPartition rest = from_permutation(tail);
                if (rest.is_discrete())
                    fs.erase(fs.begin() + idx + 1);
                else
                    fs[idx + 1] = rest;
            } catch (const NotNoncrossingPermutation& e) {
                throw SlidingFailure(std::string("sliding left the lattice: ") +
                                     e.what());
            }
            changed = true;
        }
    }
    return out;
}

int dual_length(const DualPositiveWord& w) {
    return static_cast<int>(normal_form(w).factors.size());
}

int max_q_degree(const SymMatrix& m) {
    int deg = 0;
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j)
            if (!m.at(i, j).is_zero()) deg = std::max(deg, m.at(i, j).max_q_degree());
    return deg;
}

SymMatrix word_matrix(const DualPositiveWord& w) {
    SymMatrix acc = SymMatrix::identity(w.n);
    for (const auto& f : w.factors) acc = acc * dual_simple_matrix(f, w.n);
    return acc;
}

std::string dual_word_str(const DualPositiveWord& w) {
    std::ostringstream os;
    for (size_t i = 0; i < w.factors.size(); ++i) {
        if (i) os << " ";
        os << "d" << w.factors[i].str();
    }
    return w.factors.empty() ? "(empty)" : os.str();
}

Report qdegree_experiment(int n, int trials, int max_factors, std::uint64_t seed,
                          Exec exec) {
    if (n > 5) throw CapExceeded("q-degree experiment capped at n = 5");
    if (trials < 1 || max_factors < 1) throw OutOfRange("need trials, factors >= 1");
    auto all = enumerate_nc(n);
    std::vector<NCPartition> nontrivial;
    for (const auto& p : all)
        if (!p.is_discrete()) nontrivial.push_back(p);
    std::vector<std::function<CheckResult()>> jobs;
    for (int trial = 0; trial < trials; ++trial) {
        jobs.push_back([trial, n, max_factors, seed, &nontrivial]() {
            std::mt19937_64 rng(split_seed(seed, static_cast<std::uint64_t>(trial)));
            DualPositiveWord w;
            w.n = n;
            int len = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_factors));
            for (int s = 0; s < len; ++s)
                w.factors.push_back(nontrivial[rng() % nontrivial.size()]);
            int deg = max_q_degree(word_matrix(w));
            int len_nf = dual_length(w);
            bool agree = deg == 2 * len_nf;
            std::ostringstream detail;
            detail << "word " << dual_word_str(w) << ": max q-degree " << deg
                   << ", dual length " << len_nf;
            if (!agree) detail << "  [MISMATCH]";
            return CheckResult{"word " + std::to_string(trial), agree, detail.str()};
        });
    }
    Report report;
    report.title = "qdegree experiment n=" + std::to_string(n);
    report.checks.resize(jobs.size());
    parallel_for(jobs.size(), exec, [&](size_t idx) {
        try {
            report.checks[idx] = jobs[idx]();
        } catch (const std::exception& e) {
            report.checks[idx] = CheckResult{"word " + std::to_string(idx), false,
                                             std::string("exception: ") + e.what()};
        }
    });
    return report;
}

}  // namespace braids
