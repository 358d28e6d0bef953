// Independent brute-force oracles. These deliberately avoid the library's
// enumeration and search code paths so they can vouch for them.
#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "tableau_lab/core.hpp"

namespace oracles {

// Longest strictly increasing subsequence by scanning all 2^m subsequences.
inline int lis_brute(const std::vector<int>& vals) {
    const int m = static_cast<int>(vals.size());
    int best = 0;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        int len = 0, last = 0;
        bool ok = true;
        for (int i = 0; i < m && ok; ++i) {
            if (!(mask & (1u << i))) continue;
            if (vals[static_cast<std::size_t>(i)] <= last) ok = false;
            last = vals[static_cast<std::size_t>(i)];
            ++len;
        }
        if (ok) best = std::max(best, len);
    }
    return best;
}

// Counts semistandard fillings by laying every multiset permutation of the
// content into the shape and classifying. No pruning at all.
inline long long count_ssyt_naive(const tableau_lab::Diagram& shape,
                                  const tableau_lab::ContentVector& content) {
    std::vector<int> values;
    for (int v = 1; v <= content.max_value(); ++v)
        for (int c = 0; c < content.count(v); ++c) values.push_back(v);
    std::sort(values.begin(), values.end());
    long long count = 0;
    if (values.size() != shape.cell_count()) return -1;
    do {
        std::vector<std::vector<int>> cols(static_cast<std::size_t>(shape.width()));
        std::size_t pos = 0;
        for (int i = 0; i < shape.width(); ++i)
            for (int j = 0; j < shape.columns()[static_cast<std::size_t>(i)]; ++j)
                cols[static_cast<std::size_t>(i)].push_back(values[pos++]);
        if (tableau_lab::is_semistandard(tableau_lab::Tableau(cols))) ++count;
    } while (std::next_permutation(values.begin(), values.end()));
    return count;
}

// Set partitions by inserting each element into an existing block or a new
// one (a different scheme from the library's growth-string enumerator).
inline void partitions_brute(int n, const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
    std::vector<std::vector<int>> blocks;
    const std::function<void(int)> place = [&](int e) {
        if (e > n) {
            visit(blocks);
            return;
        }
        for (auto& block : blocks) {
            block.push_back(e);
            place(e + 1);
            block.pop_back();
        }
        blocks.push_back({e});
        place(e + 1);
        blocks.pop_back();
    };
    place(1);
}

// Colored noncrossing partitions by enumerating every coloring in full and
// filtering, with its own crossing test.
inline long long count_nc2_naive(int n, int r) {
    long long total = 0;
    partitions_brute(n, [&](const std::vector<std::vector<int>>& blocks) {
        std::vector<std::pair<int, int>> arcs;
        for (const auto& block : blocks)
            for (std::size_t i = 1; i < block.size(); ++i) arcs.push_back({block[i - 1], block[i]});
        std::vector<int> color(arcs.size(), 1);
        while (true) {
            bool ok = true;
            for (std::size_t i = 0; i < arcs.size() && ok; ++i)
                for (std::size_t j = i + 1; j < arcs.size() && ok; ++j)
                    if (color[i] == color[j] && arcs[i].first < arcs[j].first &&
                        arcs[j].first < arcs[i].second && arcs[i].second < arcs[j].second)
                        ok = false;
            if (ok) ++total;
            std::size_t d = 0;
            while (d < arcs.size() && color[d] == r) color[d++] = 1;
            if (d == arcs.size()) break;
            ++color[d];
        }
    });
    return total;
}

// Semistandard fillings of a shape with entries bounded by n and no content
// restriction (used for complement-involution sweeps).
inline void bounded_ssyt(const tableau_lab::Diagram& shape, int n,
                         const std::function<void(const tableau_lab::Tableau&)>& visit) {
    std::vector<std::vector<int>> cols(static_cast<std::size_t>(shape.width()));
    const std::function<void(int, int)> fill = [&](int col, int row) {
        if (col == shape.width()) {
            visit(tableau_lab::Tableau(cols));
            return;
        }
        if (row == shape.columns()[static_cast<std::size_t>(col)]) {
            fill(col + 1, 0);
            return;
        }
        const int above = row > 0 ? cols[static_cast<std::size_t>(col)][static_cast<std::size_t>(row - 1)] : 0;
        const int left = col > 0 ? cols[static_cast<std::size_t>(col - 1)][static_cast<std::size_t>(row)] : 1;
        for (int v = std::max(above + 1, left); v <= n; ++v) {
            cols[static_cast<std::size_t>(col)].push_back(v);
            fill(col, row + 1);
            cols[static_cast<std::size_t>(col)].pop_back();
        }
    };
    fill(0, 0);
}

// Every diagram fitting inside a w-by-h box (including the empty one).
inline std::vector<tableau_lab::Diagram> diagrams_in_box(int w, int h) {
    std::vector<tableau_lab::Diagram> out;
    std::vector<int> cols;
    const std::function<void(int, int)> grow = [&](int i, int bound) {
        if (i == w) {
            out.push_back(tableau_lab::Diagram(cols));
            return;
        }
        for (int len = bound; len >= 0; --len) {
            cols.push_back(len);
            grow(i + 1, len);
            cols.pop_back();
        }
    };
    grow(0, h);
    return out;
}

}  // namespace oracles
