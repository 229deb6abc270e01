#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace homomorphism {

// Permutations of {0..k-1} as image vectors: p[i] is the image of i.
using Perm = std::vector<int>;

inline Perm perm_id(int k) {
    Perm p(k);
    for (int i = 0; i < k; ++i) p[i] = i;
    return p;
}

inline bool perm_valid(const Perm& p) {
    std::vector<char> seen(p.size(), 0);
    for (int x : p) {
        if (x < 0 || x >= static_cast<int>(p.size()) || seen[x]) return false;
        seen[x] = 1;
    }
    return true;
}

// (a compose b)(x) = a[b[x]]
inline Perm perm_compose(const Perm& a, const Perm& b) {
    if (a.size() != b.size()) throw std::invalid_argument("perm_compose: size mismatch");
    Perm out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
    return out;
}

inline Perm perm_inverse(const Perm& p) {
    Perm out(p.size());
    for (size_t i = 0; i < p.size(); ++i) out[p[i]] = static_cast<int>(i);
    return out;
}

// Transposition (a b) on {0..k-1}.
inline Perm perm_swap(int k, int a, int b) {
    Perm p = perm_id(k);
    std::swap(p[a], p[b]);
    return p;
}

// The k-cycle 0 -> 1 -> ... -> k-1 -> 0.
inline Perm perm_cycle(int k) {
    Perm p(k);
    for (int i = 0; i < k; ++i) p[i] = (i + 1) % k;
    return p;
}

inline std::vector<Perm> all_perms(int k) {
    std::vector<Perm> out;
    Perm p = perm_id(k);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

} // namespace homomorphism
