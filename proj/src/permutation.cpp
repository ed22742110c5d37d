#include "braids/permutation.hpp"

#include <algorithm>
#include <sstream>

namespace braids {

Perm::Perm(int n) {
    if (n < 1) throw OutOfRange("permutation needs n >= 1");
    images_.resize(n);
    for (int i = 0; i < n; ++i) images_[i] = i + 1;
}

Perm Perm::from_images(std::vector<int> images) {
    int n = static_cast<int>(images.size());
    Perm p(std::max(n, 1));
    std::vector<bool> seen(n, false);
    for (int v : images) {
        if (v < 1 || v > n || seen[v - 1])
            throw OutOfRange("images are not a bijection on {1..n}");
        seen[v - 1] = true;
    }
    p.images_ = std::move(images);
    return p;
}

Perm Perm::delta(int n) {
    Perm p(n);
    for (int x = 1; x <= n; ++x) p.images_[x - 1] = x % n + 1;
    return p;
}

Perm Perm::transposition(int n, int i, int j) {
    Perm p(n);
    if (i < 1 || j < 1 || i > n || j > n || i == j)
        throw OutOfRange("bad transposition indices");
    std::swap(p.images_[i - 1], p.images_[j - 1]);
    return p;
}

Perm Perm::cycle(int n, const std::vector<int>& support) {
    Perm p(n);
    int k = static_cast<int>(support.size());
    for (int idx = 0; idx < k; ++idx) {
        int x = support[idx];
        if (x < 1 || x > n) throw OutOfRange("cycle element out of range");
        int y = support[(idx + 1) % k];
        if (p.images_[x - 1] != x) throw OutOfRange("repeated cycle element");
        p.images_[x - 1] = y;
    }
    return p;
}

Perm Perm::compose(const Perm& rhs) const {
    if (n() != rhs.n()) throw DimensionMismatch("composing permutations of different n");
    Perm r(n());
    for (int x = 1; x <= n(); ++x) r.images_[x - 1] = (*this)(rhs(x));
    return r;
}

Perm Perm::inverse() const {
    Perm r(n());
    for (int x = 1; x <= n(); ++x) r.images_[(*this)(x)-1] = x;
    return r;
}

bool Perm::is_identity() const {
    for (int x = 1; x <= n(); ++x)
        if ((*this)(x) != x) return false;
    return true;
}

std::vector<std::vector<int>> Perm::cycles_from_min() const {
    std::vector<std::vector<int>> cycles;
    std::vector<bool> seen(n(), false);
    for (int x = 1; x <= n(); ++x) {
        if (seen[x - 1] || (*this)(x) == x) continue;
        std::vector<int> cyc;
        int y = x;
        do {
            cyc.push_back(y);
            seen[y - 1] = true;
            y = (*this)(y);
        } while (y != x);
        cycles.push_back(std::move(cyc));
    }
    return cycles;
}

int Perm::reflection_length() const {
    int orbits = 0;
    std::vector<bool> seen(n(), false);
    for (int x = 1; x <= n(); ++x) {
        if (seen[x - 1]) continue;
        ++orbits;
        int y = x;
        do {
            seen[y - 1] = true;
            y = (*this)(y);
        } while (y != x);
    }
    return n() - orbits;
}

std::string Perm::str() const {
    auto cycles = cycles_from_min();
    if (cycles.empty()) return "()";
    std::ostringstream os;
    for (const auto& cyc : cycles) {
        os << "(";
        for (size_t i = 0; i < cyc.size(); ++i) {
            if (i) os << ",";
            os << cyc[i];
        }
        os << ")";
    }
    return os.str();
}

Perm Perm::parse(int n, const std::string& text) {
    Perm result(n);
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos == text.size() || text.compare(pos, 2, "id") == 0) return result;
    while (pos < text.size()) {
        skip_ws();
        if (pos == text.size()) break;
        if (text[pos] != '(') throw ParseError("expected '(' in cycle notation: " + text);
        ++pos;
        std::vector<int> cyc;
        while (true) {
            skip_ws();
            if (pos < text.size() && text[pos] == ')') {
                ++pos;
                break;
            }
            size_t next = pos;
            int v = 0;
            while (next < text.size() && std::isdigit(static_cast<unsigned char>(text[next]))) {
                v = v * 10 + (text[next] - '0');
                ++next;
            }
            if (next == pos) throw ParseError("expected number in cycle: " + text);
            pos = next;
            cyc.push_back(v);
            skip_ws();
            if (pos < text.size() && (text[pos] == ',' || text[pos] == ' ')) ++pos;
        }
        if (!cyc.empty()) result = result.compose(Perm::cycle(n, cyc));
        skip_ws();
    }
    return result;
}

}  // namespace braids
