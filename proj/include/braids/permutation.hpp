#pragma once

#include <string>
#include <vector>

#include "braids/errors.hpp"

namespace braids {

// Permutation of {1..n}, one-line notation, 1-based.  Products are taken
// right to left throughout: (a.compose(b))(x) = a(b(x)), so in a written
// product the rightmost factor acts first.  This matches the convention
// under which (1,2,3)(3,4,5) = (1,2,3,4,5).
class Perm {
  public:
    explicit Perm(int n);
    static Perm from_images(std::vector<int> images);
    static Perm delta(int n);  // the n-cycle 1 -> 2 -> ... -> n -> 1
    static Perm transposition(int n, int i, int j);
    // Cycle visiting `support` in the given order (support[0] -> support[1] -> ...).
    static Perm cycle(int n, const std::vector<int>& support);

    int n() const { return static_cast<int>(images_.size()); }
    int operator()(int x) const { return images_[x - 1]; }

    Perm compose(const Perm& rhs) const;  // apply rhs first
    Perm inverse() const;
    bool is_identity() const;

    // Nontrivial cycles, each written starting from its smallest element,
    // listed in order of those smallest elements.
    std::vector<std::vector<int>> cycles_from_min() const;

    // Absolute reflection length: n minus the number of orbits.
    int reflection_length() const;

    bool operator==(const Perm&) const = default;

    std::string str() const;  // "(1,3,6)(7,8)", identity prints "()"
    static Perm parse(int n, const std::string& text);

  private:
    std::vector<int> images_;
};

}  // namespace braids
