#include "braids/verify.hpp"

#include <functional>
#include <sstream>

namespace braids {

namespace {

// Evaluates the batch of independent checks into fixed slots; exceptions
// become failing entries instead of escaping a parallel region.
Report run_batch(std::string title,
                 const std::vector<std::function<CheckResult()>>& jobs, Exec exec) {
    Report report;
    report.title = std::move(title);
    report.checks.resize(jobs.size());
    parallel_for(jobs.size(), exec, [&](size_t idx) {
        try {
            report.checks[idx] = jobs[idx]();
        } catch (const std::exception& e) {
            report.checks[idx] = CheckResult{"job " + std::to_string(idx), false,
                                             std::string("exception: ") + e.what()};
        }
    });
    return report;
}

SymMatrix mode_generator(int i, int n, RepMode mode) {
    switch (mode) {
        case RepMode::LKB:
            return lkb_generator_matrix(i, n);
        case RepMode::Simplicial:
            return simplicial_generator_matrix(i, i + 1, n);
        case RepMode::Permutation:
            return permutation_matrix(Perm::transposition(n, i, i + 1));
    }
    throw InternalError("bad mode");
}

NCPartition single_block_partition(int n, const std::vector<int>& block) {
    std::vector<std::vector<int>> blocks = {block};
    std::vector<bool> used(n + 1, false);
    for (int x : block) used[x] = true;
    for (int x = 1; x <= n; ++x)
        if (!used[x]) blocks.push_back({x});
    return make_partition(n, std::move(blocks));
}

const char* mode_name(RepMode mode) {
    switch (mode) {
        case RepMode::LKB:
            return "lkb";
        case RepMode::Simplicial:
            return "simplicial";
        case RepMode::Permutation:
            return "permutation";
    }
    return "?";
}

}  // namespace

Report verify_relations(int n, RepMode mode, Exec exec) {
    if (n < 2) throw OutOfRange("relations need n >= 2");
    if (n > 6) throw CapExceeded("symbolic relation sweep capped at n = 6");
    std::vector<std::function<CheckResult()>> jobs;
    for (int i = 1; i + 1 <= n - 1; ++i) {
        jobs.push_back([i, n, mode]() {
            SymMatrix a = mode_generator(i, n, mode);
            SymMatrix b = mode_generator(i + 1, n, mode);
            bool ok = a * b * a == b * a * b;
            std::ostringstream name;
            name << "braid s" << i << i + 1 << " s" << i + 1 << i + 2;
            return CheckResult{name.str(), ok, ok ? "" : "braid relation fails"};
        });
    }
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i + 2; j <= n - 1; ++j) {
            jobs.push_back([i, j, n, mode]() {
                SymMatrix a = mode_generator(i, n, mode);
                SymMatrix b = mode_generator(j, n, mode);
                bool ok = a * b == b * a;
                std::ostringstream name;
                name << "commute s" << i << i + 1 << " s" << j << j + 1;
                return CheckResult{name.str(), ok, ok ? "" : "far commutation fails"};
            });
        }
    if (mode != RepMode::LKB) {
        // Every clockwise reading B, i, C around the hull of a subset.
        for (int mask = 1; mask < (1 << n); ++mask) {
            std::vector<int> u;
            for (int x = 1; x <= n; ++x)
                if (mask & (1 << (x - 1))) u.push_back(x);
            int m = static_cast<int>(u.size());
            if (m < 3) continue;
            for (int rot = 0; rot < m; ++rot)
                for (int split = 1; split + 1 < m; ++split) {
                    std::vector<int> left, right;
                    for (int s = 0; s < split; ++s) left.push_back(u[(rot + s) % m]);
                    int pivot = u[(rot + split) % m];
                    for (int s = split + 1; s < m; ++s)
                        right.push_back(u[(rot + s) % m]);
                    jobs.push_back([left, pivot, right, u, n, mode]() {
                        std::vector<int> bi = left, ic = right, all = u;
                        bi.push_back(pivot);
                        ic.insert(ic.begin(), pivot);
                        NCPartition pbi = single_block_partition(n, bi);
                        NCPartition pic = single_block_partition(n, ic);
                        NCPartition pall = single_block_partition(n, all);
                        auto matrix = [&](const NCPartition& p) {
                            return mode == RepMode::Simplicial
                                       ? dual_simple_matrix(p, n)
                                       : permutation_matrix(p, n);
                        };
                        bool ok = matrix(pbi) * matrix(pic) == matrix(pall);
                        std::string name = "dual mult " + pbi.str() + " * " + pic.str();
                        return CheckResult{name, ok, ok ? "" : "product differs"};
                    });
                }
        }
    }
    Report r = run_batch(
        std::string("relations n=") + std::to_string(n) + " mode=" + mode_name(mode),
        jobs, exec);
    return r;
}

Report verify_theorem_b(int n, Exec exec) {
    if (n > 7) throw CapExceeded("theorem B sweep capped at n = 7");
    auto partitions = enumerate_nc(n);
    std::vector<std::function<CheckResult()>> jobs;
    for (const auto& sigma : partitions) {
        jobs.push_back([sigma, n]() {
            SymMatrix via_gens = dual_simple_via_generators(sigma, n);
            Perm p = to_permutation(sigma);
            SymMatrix left = permutation_matrix(p) * dual_simple_rescaling(sigma, n, Side::Right);
            SymMatrix right = dual_simple_rescaling(sigma, n, Side::Left) * permutation_matrix(p);
            bool ok = via_gens == left && via_gens == right;
            return CheckResult{sigma.str(), ok,
                               ok ? "" : "relabel-and-rescale factorization fails"};
        });
    }
    return run_batch("theorem-b n=" + std::to_string(n), jobs, exec);
}

std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream) {
    // splitmix64 step
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

RatPoints random_simplex(int n, std::mt19937_64& rng) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        RatPoints p;
        p.n = n;
        p.coords.assign(n, std::vector<mpq_class>(n - 1, 0));
        p.weights.assign(n - 1, 1);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n - 1; ++k)
                p.coords[i][k] = static_cast<long>(rng() % 21) - 10;
        RatNorms v = norms_from_points(p);
        bool positive = true;
        for (const auto& x : v.a) positive = positive && x > 0;
        if (positive && is_nondegenerate(v)) return p;
    }
    throw InternalError("could not sample a nondegenerate simplex");
}

BraidWord random_gen_word(int n, int max_len, std::mt19937_64& rng) {
    BraidWord w;
    w.n = n;
    int len = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_len));
    for (int s = 0; s < len; ++s) {
        int r = static_cast<int>(rng() % static_cast<std::uint64_t>(edge_count(n)));
        Edge e = rank_edge(r, n);
        Token tok;
        tok.payload = GeneratorToken{e.i, e.j};
        tok.power = (rng() & 1) ? 1 : -1;
        w.tokens.push_back(tok);
    }
    return w;
}

Report verify_theorem_a(const TheoremAConfig& cfg, Exec exec) {
    int n = cfg.n;
    if (n < 2) throw OutOfRange("theorem A needs n >= 2");
    if (cfg.trials < 1 || cfg.word_length < 1)
        throw OutOfRange("need trials, word length >= 1");
    for (const auto& q : cfg.q_values)
        if (!(q > 0)) throw NonPositiveEntry("q values must be positive");
    // All dual generator matrices and their inverses, evaluated once per q.
    struct QTable {
        mpq_class q;
        std::vector<RatMatrix> pos, neg;
    };
    std::vector<QTable> tables;
    for (const mpq_class& q : cfg.q_values) {
        QTable t{q, {}, {}};
        for (int r = 0; r < edge_count(n); ++r) {
            Edge e = rank_edge(r, n);
            RatMatrix m = eval_matrix(simplicial_generator_matrix(e.i, e.j, n), q);
            t.pos.push_back(m);
            t.neg.push_back(inverse(m));
        }
        tables.push_back(std::move(t));
    }
    std::vector<std::function<CheckResult()>> jobs;
    for (int trial = 0; trial < cfg.trials; ++trial) {
        jobs.push_back([trial, n, &cfg, &tables]() {
            std::mt19937_64 rng(split_seed(cfg.seed, static_cast<std::uint64_t>(trial)));
            RatPoints pts = random_simplex(n, rng);
            RatNorms input = norms_from_points(pts);
            BraidWord word = random_gen_word(n, cfg.word_length, rng);
            for (const auto& table : tables) {
                RatMatrix m = RatMatrix::identity(n);
                for (const Token& tok : word.tokens) {
                    const auto& gen = std::get<GeneratorToken>(tok.payload);
                    int r = edge_rank(gen.i, gen.j, n);
                    m = m * (tok.power == 1 ? table.pos[r] : table.neg[r]);
                }
                RatNorms out = act_on_norms(m, input);
                bool positive = true;
                for (const auto& x : out.a) positive = positive && x > 0;
                if (!positive || !is_nondegenerate(out)) {
                    std::ostringstream detail;
                    detail << "word " << word_str(word) << " at q=" << table.q
                           << " breaks positivity/nondegeneracy";
                    return CheckResult{"trial " + std::to_string(trial), false,
                                       detail.str()};
                }
            }
            return CheckResult{"trial " + std::to_string(trial), true, ""};
        });
    }
    return run_batch("theorem-a n=" + std::to_string(n) + " trials=" +
                         std::to_string(cfg.trials),
                     jobs, exec);
}

}  // namespace braids
