#include "tableau_lab/complement.hpp"

#include <utility>
#include <vector>

namespace tableau_lab {

namespace {

std::vector<int> complement_entries(const std::vector<int>& entries, int n) {
    std::vector<bool> present(static_cast<std::size_t>(n) + 1, false);
    for (int v : entries) {
        if (v > n) throw DomainError("column entry exceeds the ground set [n]");
        present[static_cast<std::size_t>(v)] = true;
    }
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n) - entries.size());
    for (int v = 1; v <= n; ++v)
        if (!present[static_cast<std::size_t>(v)]) out.push_back(v);
    return out;
}

}  // namespace

Column column_complement(const Column& c, int n) {
    if (n < 0) throw DomainError("ground set size must be non-negative");
    return Column(complement_entries(c.entries(), n));
}

bool column_precedes(const Column& u, const Column& v) {
    if (u.size() < v.size()) return false;
    for (int i = 0; i < v.size(); ++i)
        if (u[i] > v[i]) return false;
    return true;
}

Tableau tableau_complement(const Tableau& p, int w, int n) {
    if (w < 1) throw DomainError("width must be positive");
    if (n < 0) throw DomainError("ground set size must be non-negative");
    if (p.width() > w) throw DomainError("tableau is wider than the complement width");
    static const std::vector<int> kEmpty;
    std::vector<std::vector<int>> cols(static_cast<std::size_t>(w));
    for (int i = 0; i < w; ++i) {
        const int src = w - i - 1;
        const auto& entries = src < p.width() ? p.column(src) : kEmpty;
        cols[static_cast<std::size_t>(i)] = complement_entries(entries, n);
    }
    return Tableau(std::move(cols));
}

}  // namespace tableau_lab
