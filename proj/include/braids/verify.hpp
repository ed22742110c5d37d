#pragma once

#include <random>

#include "braids/rep.hpp"
#include "braids/report.hpp"

namespace braids {

// Symbolic identity sweep: braid relations and far commutations for the
// standard generators (with generic t in LKB mode), and the dual
// multiplication rule s_Bi s_iC = s_BiC in simplicial mode.
Report verify_relations(int n, RepMode mode, Exec exec = Exec::Serial);

// For every noncrossing sigma, the product of direct-table generator
// matrices along a factorization of sigma must equal both relabel-and-
// rescale products P R^rc and R^lc P.
Report verify_theorem_b(int n, Exec exec = Exec::Serial);

struct TheoremAConfig {
    int n = 4;
    std::vector<mpq_class> q_values;
    int word_length = 15;
    int trials = 100;
    std::uint64_t seed = 1;
};

// Randomized exact check that simplicial matrices carry nondegenerate
// simplices to nondegenerate simplices: positive norms in, positive norms
// and a positive-definite Gram matrix out.
Report verify_theorem_a(const TheoremAConfig& cfg, Exec exec = Exec::Serial);

// Deterministic seeded samplers used by the drivers and the CLI.
std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream);
RatPoints random_simplex(int n, std::mt19937_64& rng);
BraidWord random_gen_word(int n, int max_len, std::mt19937_64& rng);

}  // namespace braids
