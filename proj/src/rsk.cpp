#include "tableau_lab/rsk.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <utility>

namespace tableau_lab {

Permutation::Permutation(std::vector<int> one_line) : vals_(std::move(one_line)) {
    std::vector<bool> seen(vals_.size() + 1, false);
    for (int v : vals_) {
        if (v < 1 || v > static_cast<int>(vals_.size()) || seen[static_cast<std::size_t>(v)])
            throw ValidationError("not a permutation of [m]");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int m) {
    std::vector<int> v(static_cast<std::size_t>(m));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

int lis_length(const Permutation& sigma) {
    std::vector<int> tails;
    for (int x : sigma.values()) {
        auto it = std::lower_bound(tails.begin(), tails.end(), x);
        if (it == tails.end())
            tails.push_back(x);
        else
            *it = x;
    }
    return static_cast<int>(tails.size());
}

TableauPair rsk(const Permutation& sigma) {
    std::vector<std::vector<int>> rows_p, rows_q;
    for (int t = 1; t <= sigma.size(); ++t) {
        int x = sigma[t - 1];
        std::size_t r = 0;
        while (true) {
            if (r == rows_p.size()) {
                rows_p.push_back({x});
                rows_q.push_back({t});
                break;
            }
            auto& row = rows_p[r];
            auto it = std::upper_bound(row.begin(), row.end(), x);
            if (it == row.end()) {
                row.push_back(x);
                rows_q[r].push_back(t);
                break;
            }
            std::swap(*it, x);
            ++r;
        }
    }
    return {Tableau::from_rows(rows_p), Tableau::from_rows(rows_q)};
}

Permutation rsk_inverse(const TableauPair& pair) {
    if (!is_standard(pair.p) || !is_standard(pair.q))
        throw ValidationError("rsk_inverse requires standard tableaux");
    if (pair.p.shape() != pair.q.shape())
        throw ValidationError("rsk_inverse requires tableaux of the same shape");

    const int m = static_cast<int>(pair.p.cell_count());
    std::vector<std::vector<int>> rows_p = pair.p.rows();
    // Position (row, col) of each recording label.
    std::vector<std::pair<int, int>> where(static_cast<std::size_t>(m) + 1);
    const auto rows_q = pair.q.rows();
    for (std::size_t j = 0; j < rows_q.size(); ++j)
        for (std::size_t i = 0; i < rows_q[j].size(); ++i)
            where[static_cast<std::size_t>(rows_q[j][i])] = {static_cast<int>(j), static_cast<int>(i)};

    std::vector<int> sigma(static_cast<std::size_t>(m));
    for (int t = m; t >= 1; --t) {
        const auto [r, c] = where[static_cast<std::size_t>(t)];
        int x = rows_p[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        rows_p[static_cast<std::size_t>(r)].pop_back();
        for (int rr = r - 1; rr >= 0; --rr) {
            auto& row = rows_p[static_cast<std::size_t>(rr)];
            // Rightmost entry strictly below x takes its place.
            auto it = std::lower_bound(row.begin(), row.end(), x);
            --it;
            std::swap(*it, x);
        }
        sigma[static_cast<std::size_t>(t - 1)] = x;
    }
    return Permutation(std::move(sigma));
}

bool has_lis_prefix(const Permutation& sigma, int w) {
    if (w < 1 || w > sigma.size()) return false;
    std::vector<int> pos(static_cast<std::size_t>(sigma.size()) + 1);
    for (int i = 0; i < sigma.size(); ++i) pos[static_cast<std::size_t>(sigma[i])] = i;
    for (int v = 2; v <= w; ++v)
        if (pos[static_cast<std::size_t>(v - 1)] > pos[static_cast<std::size_t>(v)]) return false;
    return lis_length(sigma) == w;
}

bool has_block_head(const Permutation& sigma, int k, int w) {
    if (k < 1 || w < 1 || static_cast<long long>(k) * w > sigma.size()) return false;
    const auto rows = rsk(sigma).p.rows();
    if (static_cast<int>(rows.size()) < k) return false;
    std::vector<int> head;
    head.reserve(static_cast<std::size_t>(k) * static_cast<std::size_t>(w));
    for (int j = 0; j < k; ++j) {
        if (static_cast<int>(rows[static_cast<std::size_t>(j)].size()) != w) return false;
        head.insert(head.end(), rows[static_cast<std::size_t>(j)].begin(), rows[static_cast<std::size_t>(j)].end());
    }
    std::sort(head.begin(), head.end());
    for (int i = 0; i < k * w; ++i)
        if (head[static_cast<std::size_t>(i)] != i + 1) return false;
    return true;
}

namespace {

// Assign the values 1..kw to k blocks in increasing order; a block accepts
// a value only if its position comes after the block's previous value.
bool assign_blocks(int v, int kw, int k, int w, const std::vector<int>& pos,
                   std::vector<int>& block_size, std::vector<int>& block_last_pos) {
    if (v > kw) return true;
    bool tried_empty = false;
    for (int b = 0; b < k; ++b) {
        if (block_size[static_cast<std::size_t>(b)] == 0) {
            if (tried_empty) continue;  // empty blocks are interchangeable
            tried_empty = true;
        } else {
            if (block_size[static_cast<std::size_t>(b)] == w) continue;
            if (block_last_pos[static_cast<std::size_t>(b)] > pos[static_cast<std::size_t>(v)]) continue;
        }
        const int saved = block_last_pos[static_cast<std::size_t>(b)];
        ++block_size[static_cast<std::size_t>(b)];
        block_last_pos[static_cast<std::size_t>(b)] = pos[static_cast<std::size_t>(v)];
        if (assign_blocks(v + 1, kw, k, w, pos, block_size, block_last_pos)) return true;
        --block_size[static_cast<std::size_t>(b)];
        block_last_pos[static_cast<std::size_t>(b)] = saved;
    }
    return false;
}

}  // namespace

bool has_disjoint_lis_block(const Permutation& sigma, int k, int w) {
    if (k < 1 || w < 1 || static_cast<long long>(k) * w > sigma.size()) return false;
    if (lis_length(sigma) != w) return false;
    std::vector<int> pos(static_cast<std::size_t>(sigma.size()) + 1);
    for (int i = 0; i < sigma.size(); ++i) pos[static_cast<std::size_t>(sigma[i])] = i;
    std::vector<int> block_size(static_cast<std::size_t>(k), 0);
    std::vector<int> block_last_pos(static_cast<std::size_t>(k), -1);
    return assign_blocks(1, k * w, k, w, pos, block_size, block_last_pos);
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
    os << "(";
    for (int i = 0; i < p.size(); ++i) os << (i ? " " : "") << p[i];
    return os << ")";
}

}  // namespace tableau_lab
