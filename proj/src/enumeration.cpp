#include "tableau_lab/enumeration.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace tableau_lab {

BigCount factorial(int n) {
    if (n < 0) throw DomainError("factorial of a negative number");
    BigCount r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

namespace {

// Column-major backtracking fill. Two prunes: the value window implied by
// the row/column constraints, and a check that enough distinct values
// above the candidate remain to finish the current column.
class SsytFiller {
public:
    SsytFiller(const Diagram& shape, const ContentVector& content,
               const std::function<void(const std::vector<std::vector<int>>&)>& visit)
        : shape_(shape.columns()),
          remaining_(content.multiplicities()),
          max_value_(content.max_value()),
          visit_(visit) {
        cols_.resize(shape_.size());
        for (std::size_t i = 0; i < shape_.size(); ++i) cols_[i].reserve(static_cast<std::size_t>(shape_[i]));
    }

    void run() { fill(0, 0); }

private:
    void fill(std::size_t col, int row) {
        if (col == shape_.size()) {
            visit_(cols_);
            return;
        }
        if (row == shape_[col]) {
            fill(col + 1, 0);
            return;
        }
        const int above = row > 0 ? cols_[col][static_cast<std::size_t>(row - 1)] : 0;
        const int left = col > 0 ? cols_[col - 1][static_cast<std::size_t>(row)] : 1;
        const int lo = std::max(above + 1, left);
        const int tail = shape_[col] - row - 1;  // cells still to fill below
        const int hi = max_value_ - tail;
        for (int v = lo; v <= hi; ++v) {
            auto& avail = remaining_[static_cast<std::size_t>(v - 1)];
            if (avail == 0) continue;
            --avail;
            if (distinct_above(v) >= tail) {
                cols_[col].push_back(v);
                fill(col, row + 1);
                cols_[col].pop_back();
            }
            ++avail;
        }
    }

    int distinct_above(int v) const {
        int d = 0;
        for (int u = v + 1; u <= max_value_; ++u)
            if (remaining_[static_cast<std::size_t>(u - 1)] > 0) ++d;
        return d;
    }

    const std::vector<int>& shape_;
    std::vector<int> remaining_;
    int max_value_;
    const std::function<void(const std::vector<std::vector<int>>&)>& visit_;
    std::vector<std::vector<int>> cols_;
};

void ssyt_backtrack(const Diagram& shape, const ContentVector& content,
                    const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
    if (shape.cell_count() != content.sum())
        throw DomainError("shape size does not match content sum");
    SsytFiller(shape, content, visit).run();
}

ContentVector all_ones(std::size_t n) {
    return ContentVector(std::vector<int>(n, 1));
}

}  // namespace

BigCount kostka(const Diagram& shape, const ContentVector& content) {
    CheckedAccumulator<> acc;
    ssyt_backtrack(shape, content, [&](const std::vector<std::vector<int>>&) { acc.add(); });
    return acc.value();
}

BigCount count_syt_hook(const Diagram& shape) {
    const auto& cols = shape.columns();
    const auto rows = shape.row_lengths();
    BigCount numerator = factorial(static_cast<int>(shape.cell_count()));
    BigCount denominator = 1;
    for (std::size_t i = 0; i < cols.size(); ++i) {
        for (int j = 0; j < cols[i]; ++j) {
            const int arm = rows[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
            const int leg = cols[i] - j - 1;
            denominator *= arm + leg + 1;
        }
    }
    if (numerator % denominator != 0)
        throw ValidationError("hook product does not divide the factorial");
    return numerator / denominator;
}

BigCount superfactorial(int k) {
    if (k < 0) throw DomainError("superfactorial of a negative number");
    BigCount r = 1;
    for (int i = 1; i <= k; ++i) r *= factorial(i);
    return r;
}

BigCount rect_catalan(int n, int m) {
    if (n < 1 || m < 1) throw DomainError("rectangle dimensions must be positive");
    const BigCount numerator = factorial(m * n) * superfactorial(m - 1) * superfactorial(n - 1);
    const BigCount denominator = superfactorial(m + n - 1);
    if (numerator % denominator != 0)
        throw ValidationError("superfactorial quotient is not integral");
    return numerator / denominator;
}

void for_each_ssyt(const Diagram& shape, const ContentVector& content,
                   const std::function<void(const Tableau&)>& visit) {
    ssyt_backtrack(shape, content,
                   [&](const std::vector<std::vector<int>>& cols) { visit(Tableau(cols)); });
}

std::vector<Tableau> enumerate_ssyt(const Diagram& shape, const ContentVector& content) {
    std::vector<Tableau> out;
    for_each_ssyt(shape, content, [&](const Tableau& t) { out.push_back(t); });
    return out;
}

std::vector<Tableau> enumerate_syt(const Diagram& shape) {
    return enumerate_ssyt(shape, all_ones(shape.cell_count()));
}

int default_brute_force_cap() { return 9; }

void for_each_permutation(int m, const std::function<void(const Permutation&)>& visit) {
    if (m < 0) throw DomainError("permutation size must be non-negative");
    std::vector<int> vals(static_cast<std::size_t>(m));
    std::iota(vals.begin(), vals.end(), 1);
    do {
        visit(Permutation(vals));
    } while (std::next_permutation(vals.begin(), vals.end()));
}

BigCount count_perm_class(PermClass cls, int m, int w, int k, int cap) {
    if (m < 0) throw DomainError("permutation size must be non-negative");
    if (m > cap)
        throw ResourceError("S_" + std::to_string(m) + " scan exceeds the brute-force cap " +
                            std::to_string(cap));
    CheckedAccumulator<> acc;
    for_each_permutation(m, [&](const Permutation& sigma) {
        bool in_class = false;
        switch (cls) {
            case PermClass::LisAtMost: in_class = lis_length(sigma) <= w; break;
            case PermClass::LisPrefix: in_class = has_lis_prefix(sigma, w); break;
            case PermClass::BlockHead: in_class = has_block_head(sigma, k, w); break;
            case PermClass::DisjointLis: in_class = has_disjoint_lis_block(sigma, k, w); break;
        }
        if (in_class) acc.add();
    });
    return acc.value();
}

std::vector<ColoredArcPartition::Arc> ColoredArcPartition::arcs() const {
    std::vector<Arc> out;
    for (const auto& block : blocks)
        for (std::size_t i = 1; i < block.size(); ++i) out.push_back({block[i - 1], block[i]});
    return out;
}

bool arcs_cross(const ColoredArcPartition::Arc& a, const ColoredArcPartition::Arc& b) {
    return (a.from < b.from && b.from < a.to && a.to < b.to) ||
           (b.from < a.from && a.from < b.to && b.to < a.to);
}

bool monochrome_noncrossing(const ColoredArcPartition& p) {
    const auto arcs = p.arcs();
    if (arcs.size() != p.colors.size())
        throw ValidationError("arc coloring does not match the arc list");
    for (std::size_t i = 0; i < arcs.size(); ++i)
        for (std::size_t j = i + 1; j < arcs.size(); ++j)
            if (p.colors[i] == p.colors[j] && arcs_cross(arcs[i], arcs[j])) return false;
    return true;
}

void for_each_set_partition(int n, const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
    if (n < 0) throw DomainError("ground set size must be non-negative");
    if (n == 0) {
        visit({});
        return;
    }
    std::vector<int> rgs(static_cast<std::size_t>(n), 0);
    const std::function<void(int, int)> grow = [&](int i, int used) {
        if (i == n) {
            std::vector<std::vector<int>> blocks(static_cast<std::size_t>(used));
            for (int e = 0; e < n; ++e) blocks[static_cast<std::size_t>(rgs[static_cast<std::size_t>(e)])].push_back(e + 1);
            visit(blocks);
            return;
        }
        for (int c = 0; c <= used; ++c) {
            rgs[static_cast<std::size_t>(i)] = c;
            grow(i + 1, std::max(used, c + 1));
        }
    };
    grow(0, 0);
}

namespace {

void count_colorings(const std::vector<ColoredArcPartition::Arc>& arcs, std::size_t next, int r,
                     std::vector<int>& colors, CheckedAccumulator<>& acc) {
    if (next == arcs.size()) {
        acc.add();
        return;
    }
    for (int c = 1; c <= r; ++c) {
        bool ok = true;
        for (std::size_t j = 0; j < next && ok; ++j)
            if (colors[j] == c && arcs_cross(arcs[j], arcs[next])) ok = false;
        if (!ok) continue;
        colors[next] = c;
        count_colorings(arcs, next + 1, r, colors, acc);
    }
}

}  // namespace

BigCount count_colored_noncrossing(int n, int r) {
    if (n < 0) throw DomainError("ground set size must be non-negative");
    if (r < 1) throw DomainError("number of colors must be positive");
    CheckedAccumulator<> acc;
    for_each_set_partition(n, [&](const std::vector<std::vector<int>>& blocks) {
        ColoredArcPartition p{n, blocks, {}};
        const auto arcs = p.arcs();
        std::vector<int> colors(arcs.size(), 0);
        count_colorings(arcs, 0, r, colors, acc);
    });
    return acc.value();
}

}  // namespace tableau_lab
