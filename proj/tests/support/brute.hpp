#pragma once

// Naive reference counts used to pin down expected values. Enumerates every
// vector in (Z/p^l)^n directly; nothing here is shared with the library oracle.

#include <cstdint>
#include <vector>

#include "localperiod/rational.hpp"

namespace brute {

struct Form {
    std::vector<std::int64_t> squares;
    int planes = 0;

    int variables() const { return static_cast<int>(squares.size()) + 2 * planes; }
};

inline std::int64_t ipow(std::int64_t b, int e)
{
    std::int64_t r = 1;
    while (e-- > 0)
        r *= b;
    return r;
}

inline std::int64_t value(const Form& f, const std::vector<std::int64_t>& x, std::int64_t m)
{
    std::int64_t v = 0;
    std::size_t i = 0;
    for (auto c : f.squares) {
        v = (v + ((c % m + m) % m) * (x[i] * x[i] % m)) % m;
        ++i;
    }
    for (int j = 0; j < f.planes; ++j, i += 2)
        v = (v + x[i] * x[i + 1]) % m;
    return v;
}

template <typename Visit>
void each_vector(int n, std::int64_t m, Visit&& visit)
{
    std::vector<std::int64_t> x(static_cast<std::size_t>(n), 0);
    while (true) {
        visit(x);
        int i = 0;
        while (i < n && ++x[static_cast<std::size_t>(i)] == m)
            x[static_cast<std::size_t>(i++)] = 0;
        if (i == n)
            return;
    }
}

/// #{x : B(x) = r mod p^l} for every residue r.
inline std::vector<std::int64_t> histogram(const Form& f, std::int64_t p, int ell)
{
    const std::int64_t m = ipow(p, ell);
    std::vector<std::int64_t> counts(static_cast<std::size_t>(m), 0);
    each_vector(f.variables(), m, [&](const std::vector<std::int64_t>& x) { ++counts[value(f, x, m)]; });
    return counts;
}

/// meas{x : B(x) = rho mod p^l}.
inline localperiod::Rational measure(const Form& f, std::int64_t rho, std::int64_t p, int ell)
{
    if (ell == 0)
        return localperiod::Rational(1);
    const std::int64_t m = ipow(p, ell);
    auto h = histogram(f, p, ell);
    return localperiod::Rational(h[static_cast<std::size_t>((rho % m + m) % m)], ipow(m, f.variables()));
}

} // namespace brute
