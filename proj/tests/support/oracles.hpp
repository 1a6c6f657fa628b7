#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "topograph/ktheory.hpp"

namespace topograph::testing {

/// Independent route to the invariant factors: d1···dk equals the gcd of
/// all k×k minors, so dk is the ratio of consecutive minor gcds. Brute
/// force over every minor; only for small matrices. Shares nothing with
/// the elimination in smith_normal_form.
inline std::vector<BigInt> factors_from_minors(const Mat& m) {
    std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    std::vector<BigInt> out;
    BigInt prev = 1;
    for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
        std::vector<std::size_t> ri(k), ci(k);
        BigInt g = 0;
        std::function<void(std::size_t, std::size_t)> pick_rows = [&](std::size_t idx,
                                                                      std::size_t from) {
            if (idx == k) {
                std::function<void(std::size_t, std::size_t)> pick_cols =
                    [&](std::size_t jdx, std::size_t cfrom) {
                        if (jdx == k) {
                            Mat sub(k, std::vector<BigInt>(k));
                            for (std::size_t a = 0; a < k; ++a)
                                for (std::size_t b = 0; b < k; ++b) sub[a][b] = m[ri[a]][ci[b]];
                            g = gcd(g, determinant(sub));
                            return;
                        }
                        for (std::size_t c = cfrom; c < cols; ++c) {
                            ci[jdx] = c;
                            pick_cols(jdx + 1, c + 1);
                        }
                    };
                pick_cols(0, 0);
                return;
            }
            for (std::size_t r = from; r < rows; ++r) {
                ri[idx] = r;
                pick_rows(idx + 1, r + 1);
            }
        };
        pick_rows(0, 0);
        if (g.is_zero()) break;  // rank < k
        out.push_back(g / prev);
        prev = g;
    }
    return out;
}

}  // namespace topograph::testing
