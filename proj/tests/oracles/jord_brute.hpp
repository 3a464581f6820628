#pragma once

// Jordan-sequence oracle: every k-tuple on the grid a + Z between -1 and
// max_b, filtered by the defining inequalities.

#include <vector>

#include <jacquet/halfint.hpp>

namespace jt::oracle
{

using jacquet::HalfInt;

inline std::vector<std::vector<HalfInt>> jord_brute(HalfInt a, HalfInt max_b, bool strict)
{
    const std::int64_t k = ceil(a);
    // Grid points x = a + t, t in Z, with -2 <= x <= max_b.
    std::vector<HalfInt> grid;
    for (HalfInt x = a; x >= HalfInt(-2); x = x - 1) {
        grid.insert(grid.begin(), x);
    }
    for (HalfInt x = a + 1; x <= max_b; x = x + 1) {
        grid.push_back(x);
    }
    std::vector<std::vector<HalfInt>> out;
    std::vector<std::size_t> idx(k, 0);
    while (true) {
        std::vector<HalfInt> b;
        for (auto i : idx) {
            b.push_back(grid[i]);
        }
        bool ok = true;
        for (std::int64_t i = 0; i < k && ok; ++i) {
            if (b[i] > max_b) {
                ok = false;
            }
            if (i == 0 && !(b[0] > HalfInt(-1))) {
                ok = false;
            }
            if (i > 0 && !(b[i - 1] < b[i])) {
                ok = false;
            }
            // strict: b_i - a + k - i >= 0 with 1-based i.
            if (strict && b[i] - a + k - (i + 1) < HalfInt(0)) {
                ok = false;
            }
        }
        if (ok) {
            out.push_back(b);
        }
        std::int64_t pos = k - 1;
        while (pos >= 0 && ++idx[pos] == grid.size()) {
            idx[pos] = 0;
            --pos;
        }
        if (pos < 0) {
            break;
        }
    }
    if (k == 0) {
        out.assign(1, {});
    }
    return out;
}

} // namespace jt::oracle
