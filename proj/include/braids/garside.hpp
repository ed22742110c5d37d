#pragma once

#include "braids/noncrossing.hpp"
#include "braids/rep.hpp"
#include "braids/report.hpp"

namespace braids {

// Word in the dual positive monoid: a sequence of dual simple factors,
// multiplied in written order.
struct DualPositiveWord {
    int n = 0;
    std::vector<NCPartition> factors;
};

// Left-greedy condition over the NC_n lattice: the head a absorbs nothing
// more from b, i.e. meet(rc(a), b) is discrete.
bool is_normal_pair(const NCPartition& a, const NCPartition& b);

// Local sliding (a, b) -> (a m, m^-1 b) with m = meet(rc(a), b) until every
// adjacent pair is normal; identity factors drop out.  The represented
// monoid element never changes.
DualPositiveWord normal_form(const DualPositiveWord& w);

// Number of simple factors of the normal form.
int dual_length(const DualPositiveWord& w);

// Largest q exponent over all matrix entries (0 for a constant matrix).
int max_q_degree(const SymMatrix& m);

// Product of the factors' simplicial matrices in written order.
SymMatrix word_matrix(const DualPositiveWord& w);

std::string dual_word_str(const DualPositiveWord& w);

// Random dual-positive words: does max_q_degree(word_matrix) equal twice
// the dual Garside length?  Outcomes are reported with witnesses, never
// asserted; a mismatch is a finding.
Report qdegree_experiment(int n, int trials, int max_factors, std::uint64_t seed,
                          Exec exec = Exec::Serial);

}  // namespace braids
