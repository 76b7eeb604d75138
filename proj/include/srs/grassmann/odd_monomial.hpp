#ifndef SRS_GRASSMANN_ODD_MONOMIAL_HPP
#define SRS_GRASSMANN_ODD_MONOMIAL_HPP

#include <bit>
#include <cstdint>
#include <string>

namespace srs {

// A square-free monomial in the odd generators xi_1 < xi_2 < ... < xi_n < theta,
// stored as a bitmask: bit k (k < n) is xi_{k+1}, bit n is theta. The sign of
// any permutation is folded into the coefficient at construction time, so a
// mask always denotes the product of its generators in canonical order.
struct OddMonomial {
    std::uint32_t mask = 0;

    static OddMonomial empty() { return {0}; }
    static OddMonomial xi(int k) { return {1u << (k - 1)}; } // k is 1-based
    static OddMonomial theta(int order) { return {1u << order}; }

    int degree() const { return std::popcount(mask); }
    bool parityOdd() const { return degree() % 2 != 0; }
    bool contains(const OddMonomial& o) const { return (mask & o.mask) == o.mask; }

    bool operator==(const OddMonomial& o) const { return mask == o.mask; }
    bool operator<(const OddMonomial& o) const { return mask < o.mask; }

    // Multiplies a * b where the generators of b stand to the right of those
    // of a. Returns the transposition sign, or 0 when a generator repeats.
    static int multiply(const OddMonomial& a, const OddMonomial& b, OddMonomial& out) {
        if (a.mask & b.mask) return 0;
        int swaps = 0;
        std::uint32_t rest = b.mask;
        while (rest) {
            std::uint32_t low = rest & (~rest + 1); // lowest set bit of b
            // moving this generator left past every generator of a above it
            std::uint32_t above = a.mask & ~(low | (low - 1));
            swaps += std::popcount(above);
            rest ^= low;
        }
        out.mask = a.mask | b.mask;
        return (swaps % 2 == 0) ? 1 : -1;
    }

    std::string str(int order) const {
        if (mask == 0) return "1";
        std::string s;
        for (int k = 0; k < order; ++k)
            if (mask & (1u << k)) s += "xi" + std::to_string(k + 1) + "*";
        if (mask & (1u << order)) s += "theta*";
        s.pop_back();
        return s;
    }
};

} // namespace srs

#endif
