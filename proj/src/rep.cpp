#include "braids/rep.hpp"

#include <algorithm>

namespace braids {

SymMatrix permutation_matrix(const Perm& sigma) {
    int n = sigma.n();
    SymMatrix m(n);
    for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
            int a = sigma(k), b = sigma(l);
            m.at(edge_rank(std::min(a, b), std::max(a, b), n), edge_rank(k, l, n)) =
                Laurent(1);
        }
    return m;
}

SymMatrix permutation_matrix(const NCPartition& p, int n) {
    if (p.n != n) throw DimensionMismatch("partition has wrong n");
    return permutation_matrix(to_permutation(p));
}

SymMatrix lkb_generator_matrix(int i, int n) {
    if (i < 1 || i + 1 > n) throw OutOfRange("standard generator needs 1 <= i < n");
    int j = i + 1;
    SymMatrix m(n);
    Laurent q = Laurent::q(), t = Laurent::t();
    Laurent q2 = q * q;
    for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
            int row = edge_rank(k, l, n);
            auto put = [&](int a, int b, const Laurent& c) {
                m.at(row, edge_rank(std::min(a, b), std::max(a, b), n)) += c;
            };
            if (k == i && l == j) {
                put(k, l, t * q2);
            } else if (k != i && k != j && l != i && l != j) {
                put(k, l, Laurent(1));
            } else if (k == i && j < l) {
                put(j, l, Laurent(1));
            } else if (l == i) {
                put(k, j, Laurent(1));
            } else if (k < i && l == j) {
                put(i, j, t * (q2 - q));
                put(k, i, q);
                put(k, l, Laurent(1) - q);
            } else if (k == j) {
                put(i, j, q2 - q);
                put(i, l, q);
                put(k, l, Laurent(1) - q);
            } else {
                throw InternalError("unreachable LKB case");
            }
        }
    return m;
}

SymMatrix simplicial_generator_matrix(int i, int j, int n) {
    make_edge(i, j, n);
    Perm sigma = Perm::transposition(n, i, j);
    RescalingSpec spec{n, from_permutation(sigma),
                       from_permutation(complement(sigma, Side::Right))};
    return permutation_matrix(sigma) * rescaling_matrix(spec);
}

SymMatrix simplicial_generator_direct(int i, int j, int n) {
    Edge eij = make_edge(i, j, n);
    SymMatrix m(n);
    Laurent q = Laurent::q();
    Laurent q2 = q * q;
    for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
            int row = edge_rank(k, l, n);
            Edge ekl{k, l};
            auto put = [&](Edge e, const Laurent& c) {
                m.at(row, edge_rank(e, n)) += c;
            };
            switch (classify_pair(eij, ekl, n)) {
                case EdgePairClass::Identical:
                    put(ekl, q2);
                    break;
                case EdgePairClass::Noncrossing:
                    put(ekl, Laurent(1));
                    break;
                case EdgePairClass::Counterclockwise:  // e_kl left of e_ij
                    put(third_edge(eij, ekl), Laurent(1));
                    break;
                case EdgePairClass::Clockwise:  // e_kl right of e_ij
                    put(eij, q2 - q);
                    put(third_edge(eij, ekl), q);
                    put(ekl, Laurent(1) - q);
                    break;
                case EdgePairClass::Crossing: {
                    // e_kl + (q-1)^2 e_ij, plus (q-1) on the two hull
                    // boundary edges left of e_ij and right of e_kl, and
                    // (1-q) on the two right of e_ij and left of e_kl.
                    put(ekl, Laurent(1));
                    put(eij, (q - Laurent(1)) * (q - Laurent(1)));
                    int c[4] = {i, j, k, l};
                    std::sort(c, c + 4);
                    for (int s = 0; s < 4; ++s) {
                        int a = c[s], b = c[(s + 1) % 4];
                        Edge hull{std::min(a, b), std::max(a, b)};
                        auto vs_ij = classify_pair(eij, hull, n);
                        auto vs_kl = classify_pair(ekl, hull, n);
                        if (vs_ij == EdgePairClass::Counterclockwise &&
                            vs_kl == EdgePairClass::Clockwise)
                            put(hull, q - Laurent(1));
                        else if (vs_ij == EdgePairClass::Clockwise &&
                                 vs_kl == EdgePairClass::Counterclockwise)
                            put(hull, Laurent(1) - q);
                        else
                            throw InternalError("hull edge fails left/right split");
                    }
                    break;
                }
            }
        }
    return m;
}

SymMatrix dual_simple_matrix(const NCPartition& sigma, int n) {
    if (sigma.n != n) throw DimensionMismatch("partition has wrong n");
    Perm p = to_permutation(sigma);
    RescalingSpec spec{n, sigma, from_permutation(complement(p, Side::Right))};
    return permutation_matrix(p) * rescaling_matrix(spec);
}

SymMatrix dual_simple_rescaling(const NCPartition& sigma, int n, Side side) {
    if (sigma.n != n) throw DimensionMismatch("partition has wrong n");
    Perm p = to_permutation(sigma);
    RescalingSpec spec{n, sigma, from_permutation(complement(p, side))};
    return rescaling_matrix(spec);
}

std::vector<std::pair<int, int>> generator_factorization(const NCPartition& sigma) {
    std::vector<std::pair<int, int>> gens;
    for (const auto& block : sigma.blocks)
        for (size_t s = 0; s + 1 < block.size(); ++s)
            gens.push_back({block[s], block[s + 1]});
    return gens;
}

SymMatrix dual_simple_via_generators(const NCPartition& sigma, int n) {
    if (sigma.n != n) throw DimensionMismatch("partition has wrong n");
    SymMatrix m = SymMatrix::identity(n);
    for (auto [i, j] : generator_factorization(sigma))
        m = m * simplicial_generator_direct(i, j, n);
    return m;
}

namespace {

SymMatrix token_matrix(const Token& tok, int n, RepMode mode) {
    SymMatrix m = SymMatrix::identity(n);
    if (const auto* gen = std::get_if<GeneratorToken>(&tok.payload)) {
        switch (mode) {
            case RepMode::LKB:
                if (gen->j != gen->i + 1)
                    throw UnsupportedToken(
                        "LKB mode only evaluates standard generators; got s" +
                        std::to_string(gen->i) + "," + std::to_string(gen->j));
                m = lkb_generator_matrix(gen->i, n);
                break;
            case RepMode::Simplicial:
                m = simplicial_generator_matrix(gen->i, gen->j, n);
                break;
            case RepMode::Permutation:
                m = permutation_matrix(Perm::transposition(n, gen->i, gen->j));
                break;
        }
    } else {
        const auto& sigma = std::get<NCPartition>(tok.payload);
        switch (mode) {
            case RepMode::LKB:
                throw UnsupportedToken("LKB mode only evaluates standard generators");
            case RepMode::Simplicial:
                m = dual_simple_matrix(sigma, n);
                break;
            case RepMode::Permutation:
                m = permutation_matrix(sigma, n);
                break;
        }
    }
    return m;
}

}  // namespace

SymMatrix evaluate_word(const BraidWord& w, RepMode mode) {
    SymMatrix acc = SymMatrix::identity(w.n);
    for (const Token& tok : w.tokens) {
        SymMatrix m = token_matrix(tok, w.n, mode);
        if (tok.power == -1) m = inverse(m);
        acc = acc * m;
    }
    return acc;
}

RatMatrix evaluate_word_rational(const BraidWord& w, RepMode mode, const mpq_class& q0,
                                 const mpq_class& t0) {
    RatMatrix acc = RatMatrix::identity(w.n);
    for (const Token& tok : w.tokens) {
        RatMatrix m = eval_matrix(token_matrix(tok, w.n, mode), q0, t0);
        if (tok.power == -1) m = inverse(m);
        acc = acc * m;
    }
    return acc;
}

RatNorms act_on_norms(const RatMatrix& m, const RatNorms& v) {
    if (m.n() != v.n) throw DimensionMismatch("matrix and norms disagree on n");
    return RatNorms{v.n, m.apply(v.a)};
}

}  // namespace braids
