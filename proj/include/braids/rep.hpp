#pragma once

#include <string>
#include <variant>
#include <vector>

#include "braids/matrix.hpp"
#include "braids/noncrossing.hpp"
#include "braids/rescale.hpp"

namespace braids {

// Matrices act on edge-norm column vectors from the left; basis row
// vectors are acted on from the right.  Words multiply in written order,
// so in a product the rightmost factor reaches the simplex first.

// Vertex relabeling x -> sigma(x): column e_kl moves to column
// e_{sigma(k) sigma(l)}.  Under this convention P_a P_b = P_{ab} with the
// right-to-left product convention of Perm.
SymMatrix permutation_matrix(const Perm& sigma);
SymMatrix permutation_matrix(const NCPartition& p, int n);

// Standard generator s_{i,i+1} of the LKB representation, entries in
// Z[q, t] (Krammer's sign convention for t).
SymMatrix lkb_generator_matrix(int i, int n);

// Dual generator s_ij under the simplicial representation, built as the
// relabel-and-rescale product P_(ij) R^(ij)_rc(ij).
SymMatrix simplicial_generator_matrix(int i, int j, int n);

// The same matrix straight from the row description: identical,
// noncrossing, left, right, and the crossing case for j > i+1.  Kept as an
// independent route; tests pin it against the P*R factorization.
SymMatrix simplicial_generator_direct(int i, int j, int n);

// Dual simple braid s_sigma: P_sigma R^sigma_rc(sigma).
SymMatrix dual_simple_matrix(const NCPartition& sigma, int n);

// Path factorization of each block into dual generators,
// s_{b1 b2} s_{b2 b3} ... per block.
std::vector<std::pair<int, int>> generator_factorization(const NCPartition& sigma);

// Product of the direct-table generator matrices along the factorization;
// the independent left side of the relabel-and-rescale identities.
SymMatrix dual_simple_via_generators(const NCPartition& sigma, int n);

// The rescaling half of a dual simple braid, fixed side chosen by `side`.
SymMatrix dual_simple_rescaling(const NCPartition& sigma, int n, Side side);

struct GeneratorToken {
    int i, j;
};
struct Token {
    std::variant<GeneratorToken, NCPartition> payload;
    int power = 1;  // +1 or -1
};

struct BraidWord {
    int n = 0;
    std::vector<Token> tokens;
};

enum class RepMode { LKB, Simplicial, Permutation };

// Product of token matrices in written order; negative powers go through
// symbolic inversion.  LKB mode only accepts standard generators.
SymMatrix evaluate_word(const BraidWord& w, RepMode mode);

// Evaluation with q (and t) substituted before multiplying; inverses are
// exact rational matrix inverses.
RatMatrix evaluate_word_rational(const BraidWord& w, RepMode mode, const mpq_class& q0,
                                 const mpq_class& t0 = 1);

RatNorms act_on_norms(const RatMatrix& m, const RatNorms& v);

// Word grammar: whitespace-separated tokens; "s12" / "s3,11" for dual
// generators, "d{1,3,4|5,6}" for dual simples, suffix "'" or "^-1" for the
// inverse.
BraidWord parse_word(int n, const std::string& text);
std::string word_str(const BraidWord& w);

}  // namespace braids
