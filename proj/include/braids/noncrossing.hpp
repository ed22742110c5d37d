#pragma once

#include <string>
#include <vector>

#include "braids/permutation.hpp"

namespace braids {

// Noncrossing partition of {1..n} in canonical form: each block ascending,
// blocks ordered by their minimum, singletons stored explicitly.  Structural
// equality is partition equality.
struct NCPartition {
    int n = 0;
    std::vector<std::vector<int>> blocks;

    bool operator==(const NCPartition&) const = default;
    bool is_discrete() const;
    bool is_full() const;
    std::string str() const;  // "{1,3,6|2|4,5}"
};

enum class Side { Left, Right };

// Validates that `blocks` partition {1..n} and that the partition is
// noncrossing; canonicalizes.  Throws NotAPartition / NotNoncrossingPermutation.
NCPartition make_partition(int n, std::vector<std::vector<int>> blocks);

// Validation of the partition property alone (throws NotAPartition), then
// the pairwise noncrossing test: blocks B, B' cross when some a < c < b < d
// has a, b in B and c, d in B'.
bool is_noncrossing(const std::vector<std::vector<int>>& blocks, int n);

NCPartition discrete_partition(int n);
NCPartition full_partition(int n);
NCPartition parse_partition(int n, const std::string& text);

// All noncrossing partitions of {1..n}, sorted by their canonical encoding.
// Capped at n = 12 (C_12 = 208012); CapExceeded beyond.
std::vector<NCPartition> enumerate_nc(int n);

// The permutation whose cycles traverse each block in increasing order.
Perm to_permutation(const NCPartition& p);

// Inverse of to_permutation.  Requires every cycle to list its support in
// increasing order from its minimum and the supports to be noncrossing;
// otherwise NotNoncrossingPermutation.
NCPartition from_permutation(const Perm& sigma);

bool is_noncrossing_permutation(const Perm& sigma);

// Left complement lc(s): the unique s' with s' s = delta.  Right complement
// rc(s): the unique s'' with s s'' = delta.  Both are again noncrossing;
// failure of that assertion throws ComplementNotNoncrossing.
Perm complement(const Perm& sigma, Side side);
NCPartition complement(const NCPartition& p, Side side);

// Given noncrossing s1, s2 whose product s1 s2 is noncrossing with
// reflection lengths adding, returns (s3, s4, s5) with
// delta = s1 s2 s3 = s1 s4 s2 = s5 s1 s2.
struct FivePerms {
    Perm s3, s4, s5;
};
FivePerms five_permutations(const Perm& s1, const Perm& s2);

// Lattice operations under the refinement order.
bool nc_leq(const NCPartition& a, const NCPartition& b);
NCPartition nc_meet(const NCPartition& a, const NCPartition& b);
NCPartition nc_join(const NCPartition& a, const NCPartition& b);

// Sum over blocks of (|B| - 1); equals the reflection length of the
// associated permutation.
int partition_rank(const NCPartition& p);

}  // namespace braids
