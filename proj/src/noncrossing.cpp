#include "braids/noncrossing.hpp"

#include <algorithm>
#include <sstream>

namespace braids {

bool NCPartition::is_discrete() const {
    return static_cast<int>(blocks.size()) == n;
}

bool NCPartition::is_full() const { return blocks.size() == 1 && n >= 1; }

std::string NCPartition::str() const {
    std::ostringstream os;
    os << "{";
    for (size_t b = 0; b < blocks.size(); ++b) {
        if (b) os << "|";
        for (size_t i = 0; i < blocks[b].size(); ++i) {
            if (i) os << ",";
            os << blocks[b][i];
        }
    }
    os << "}";
    return os.str();
}

static std::vector<std::vector<int>> canonicalize_blocks(
    int n, std::vector<std::vector<int>> blocks) {
    std::vector<bool> seen(n, false);
    int count = 0;
    for (auto& b : blocks) {
        if (b.empty()) throw NotAPartition("empty block");
        std::sort(b.begin(), b.end());
        for (int x : b) {
            if (x < 1 || x > n) throw NotAPartition("element out of range");
            if (seen[x - 1]) throw NotAPartition("blocks overlap");
            seen[x - 1] = true;
            ++count;
        }
    }
    if (count != n) throw NotAPartition("blocks do not cover {1..n}");
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return blocks;
}

static bool blocks_cross(const std::vector<int>& a, const std::vector<int>& b) {
    // Merge and look for an alternation of origins of length >= 4 (ABAB).
    size_t i = 0, j = 0;
    int runs = 0, last = -1;
    while (i < a.size() || j < b.size()) {
        int origin;
        if (j == b.size() || (i < a.size() && a[i] < b[j])) {
            origin = 0;
            ++i;
        } else {
            origin = 1;
            ++j;
        }
        if (origin != last) {
            ++runs;
            last = origin;
        }
        if (runs >= 4) return true;
    }
    return false;
}

bool is_noncrossing(const std::vector<std::vector<int>>& blocks, int n) {
    auto canon = canonicalize_blocks(n, blocks);
    for (size_t x = 0; x < canon.size(); ++x)
        for (size_t y = x + 1; y < canon.size(); ++y)
            if (blocks_cross(canon[x], canon[y])) return false;
    return true;
}

NCPartition make_partition(int n, std::vector<std::vector<int>> blocks) {
    if (n < 1) throw OutOfRange("partition needs n >= 1");
    auto canon = canonicalize_blocks(n, std::move(blocks));
    for (size_t x = 0; x < canon.size(); ++x)
        for (size_t y = x + 1; y < canon.size(); ++y)
            if (blocks_cross(canon[x], canon[y]))
                throw NotNoncrossingPermutation("blocks " + NCPartition{n, canon}.str() +
                                                " are crossing");
    return NCPartition{n, std::move(canon)};
}

NCPartition discrete_partition(int n) {
    NCPartition p;
    p.n = n;
    for (int x = 1; x <= n; ++x) p.blocks.push_back({x});
    return p;
}

NCPartition full_partition(int n) {
    NCPartition p;
    p.n = n;
    p.blocks.emplace_back();
    for (int x = 1; x <= n; ++x) p.blocks[0].push_back(x);
    return p;
}

NCPartition parse_partition(int n, const std::string& text) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(),
                           [](unsigned char c) { return std::isspace(c); }),
            s.end());
    if (s.size() < 2 || s.front() != '{' || s.back() != '}')
        throw ParseError("partition must look like {1,3|2}: " + text);
    s = s.substr(1, s.size() - 2);
    std::vector<std::vector<int>> blocks;
    std::vector<bool> mentioned(n, false);
    std::istringstream stream(s);
    std::string blocktext;
    while (std::getline(stream, blocktext, '|')) {
        if (blocktext.empty()) continue;
        std::vector<int> block;
        std::istringstream bs(blocktext);
        std::string num;
        while (std::getline(bs, num, ',')) {
            if (num.empty()) throw ParseError("bad partition block: " + blocktext);
            int v = std::stoi(num);
            if (v < 1 || v > n) throw ParseError("partition element out of range");
            block.push_back(v);
            mentioned[v - 1] = true;
        }
        blocks.push_back(std::move(block));
    }
    // Unmentioned elements become singletons.
    for (int x = 1; x <= n; ++x)
        if (!mentioned[x - 1]) blocks.push_back({x});
    return make_partition(n, std::move(blocks));
}

namespace {

// Scan positions 1..n keeping a stack of open blocks.  An element may open
// a new block, join the innermost open block, or close some open blocks and
// join the one underneath.  Joining a non-top open block directly would
// cross the blocks nested above it, so this walk hits every noncrossing
// partition exactly once.
struct NCEnumerator {
    int n;
    std::vector<std::vector<int>> blocks;
    std::vector<int> open;  // indices into blocks
    std::vector<NCPartition>* out;

    void run(int x) {
        if (x > n) {
            NCPartition p{n, blocks};
            std::sort(p.blocks.begin(), p.blocks.end(),
                      [](const auto& a, const auto& b) { return a.front() < b.front(); });
            out->push_back(std::move(p));
            return;
        }
        // Open a new block.
        blocks.push_back({x});
        open.push_back(static_cast<int>(blocks.size()) - 1);
        run(x + 1);
        open.pop_back();
        blocks.pop_back();
        // Close j of the open blocks, then join the next one down.
        int depth = static_cast<int>(open.size());
        std::vector<int> closed;
        for (int j = 0; j < depth; ++j) {
            int target = open[depth - 1 - j];
            blocks[target].push_back(x);
            run(x + 1);
            blocks[target].pop_back();
            closed.push_back(open.back());
            open.pop_back();
        }
        for (auto it = closed.rbegin(); it != closed.rend(); ++it) open.push_back(*it);
    }
};

}  // namespace

std::vector<NCPartition> enumerate_nc(int n) {
    if (n < 1) throw OutOfRange("enumerate_nc needs n >= 1");
    if (n > 12) throw CapExceeded("enumerate_nc capped at n = 12");
    std::vector<NCPartition> out;
    NCEnumerator e{n, {}, {}, &out};
    e.run(1);
    std::sort(out.begin(), out.end(),
              [](const NCPartition& a, const NCPartition& b) { return a.blocks < b.blocks; });
    return out;
}

Perm to_permutation(const NCPartition& p) {
    Perm result(p.n);
    for (const auto& block : p.blocks)
        if (block.size() >= 2) result = result.compose(Perm::cycle(p.n, block));
    return result;
}

NCPartition from_permutation(const Perm& sigma) {
    int n = sigma.n();
    std::vector<std::vector<int>> blocks;
    std::vector<bool> seen(n, false);
    for (int x = 1; x <= n; ++x) {
        if (seen[x - 1]) continue;
        std::vector<int> cyc;
        int y = x;
        do {
            cyc.push_back(y);
            seen[y - 1] = true;
            y = sigma(y);
        } while (y != x);
        for (size_t i = 0; i + 1 < cyc.size(); ++i)
            if (cyc[i] >= cyc[i + 1])
                throw NotNoncrossingPermutation(
                    "cycle of " + sigma.str() + " does not increase from its minimum");
        blocks.push_back(std::move(cyc));
    }
    for (size_t x = 0; x < blocks.size(); ++x)
        for (size_t y = x + 1; y < blocks.size(); ++y)
            if (blocks_cross(blocks[x], blocks[y]))
                throw NotNoncrossingPermutation("cycle supports of " + sigma.str() +
                                                " cross");
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return NCPartition{n, std::move(blocks)};
}

bool is_noncrossing_permutation(const Perm& sigma) {
    try {
        from_permutation(sigma);
        return true;
    } catch (const NotNoncrossingPermutation&) {
        return false;
    }
}

Perm complement(const Perm& sigma, Side side) {
    if (!is_noncrossing_permutation(sigma))
        throw NotNoncrossingPermutation("complement needs a noncrossing permutation, got " +
                                        sigma.str());
    Perm delta = Perm::delta(sigma.n());
    Perm result = side == Side::Left ? delta.compose(sigma.inverse())
                                     : sigma.inverse().compose(delta);
    try {
        from_permutation(result);
    } catch (const NotNoncrossingPermutation&) {
        throw ComplementNotNoncrossing("complement of " + sigma.str() +
                                       " is not noncrossing: " + result.str());
    }
    return result;
}

NCPartition complement(const NCPartition& p, Side side) {
    return from_permutation(complement(to_permutation(p), side));
}

FivePerms five_permutations(const Perm& s1, const Perm& s2) {
    if (s1.n() != s2.n()) throw DimensionMismatch("five_permutations: different n");
    if (!is_noncrossing_permutation(s1) || !is_noncrossing_permutation(s2))
        throw NotNoncrossingPermutation("five_permutations needs noncrossing inputs");
    Perm prod = s1.compose(s2);
    if (!is_noncrossing_permutation(prod) ||
        s1.reflection_length() + s2.reflection_length() != prod.reflection_length())
        throw ProductNotNoncrossing(
            "product " + prod.str() + " is not a geodesic noncrossing product");
    Perm delta = Perm::delta(s1.n());
    FivePerms f{complement(prod, Side::Right),
                s1.inverse().compose(delta).compose(s2.inverse()),
                complement(prod, Side::Left)};
    try {
        from_permutation(f.s4);
    } catch (const NotNoncrossingPermutation&) {
        throw ComplementNotNoncrossing("middle factor " + f.s4.str() +
                                       " is not noncrossing");
    }
    if (!(s1.compose(s2).compose(f.s3) == delta) ||
        !(s1.compose(f.s4).compose(s2) == delta) ||
        !(f.s5.compose(s1).compose(s2) == delta))
        throw InternalError("five permutation products do not equal delta");
    return f;
}

bool nc_leq(const NCPartition& a, const NCPartition& b) {
    if (a.n != b.n) throw DimensionMismatch("nc_leq: different n");
    std::vector<int> owner(a.n + 1, 0);
    for (size_t bi = 0; bi < b.blocks.size(); ++bi)
        for (int x : b.blocks[bi]) owner[x] = static_cast<int>(bi);
    for (const auto& block : a.blocks) {
        int bi = owner[block.front()];
        for (int x : block)
            if (owner[x] != bi) return false;
    }
    return true;
}

NCPartition nc_meet(const NCPartition& a, const NCPartition& b) {
    if (a.n != b.n) throw DimensionMismatch("nc_meet: different n");
    std::vector<int> oa(a.n + 1), ob(a.n + 1);
    for (size_t bi = 0; bi < a.blocks.size(); ++bi)
        for (int x : a.blocks[bi]) oa[x] = static_cast<int>(bi);
    for (size_t bi = 0; bi < b.blocks.size(); ++bi)
        for (int x : b.blocks[bi]) ob[x] = static_cast<int>(bi);
    std::vector<std::vector<int>> blocks;
    std::vector<int> index(static_cast<size_t>(a.blocks.size()) * b.blocks.size(), -1);
    for (int x = 1; x <= a.n; ++x) {
        size_t key = static_cast<size_t>(oa[x]) * b.blocks.size() + ob[x];
        if (index[key] < 0) {
            index[key] = static_cast<int>(blocks.size());
            blocks.emplace_back();
        }
        blocks[index[key]].push_back(x);
    }
    return make_partition(a.n, std::move(blocks));
}

NCPartition nc_join(const NCPartition& a, const NCPartition& b) {
    if (a.n != b.n) throw DimensionMismatch("nc_join: different n");
    // Kreweras complement is an anti-automorphism, so the join is the left
    // complement of the meet of the right complements.
    return complement(nc_meet(complement(a, Side::Right), complement(b, Side::Right)),
                      Side::Left);
}

int partition_rank(const NCPartition& p) {
    return p.n - static_cast<int>(p.blocks.size());
}

}  // namespace braids
