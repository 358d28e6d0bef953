#include "tableau_lab/bijection.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "tableau_lab/enumeration.hpp"

namespace tableau_lab {

namespace {

void require_rectangular(const Tableau& t, int w, int h, const char* what) {
    if (t.width() != w || t.shape() != RectShape(w, h).diagram()) {
        std::ostringstream os;
        os << what << " must be rectangular of width " << w << " and height " << h;
        throw ValidationError(os.str());
    }
}

void require_content(const Tableau& t, const ContentVector& expected, const char* what) {
    if (content_of(t) != expected) {
        std::ostringstream os;
        os << what << " does not have the required content";
        throw ValidationError(os.str());
    }
}

int relabel_bound(const BijectionParams& p) {
    // Largest value occurring in R: 2n + k(w−2).
    return 2 * p.height + p.k * (p.width - 2);
}

/// Joins the low tableau A (shape □(w,n) − λ) with the 180°-rotated,
/// relabeled Q′ (shape λ) into a full □(w,n) tableau.
Tableau glue(const Tableau& a, const Tableau& q, const BijectionParams& params) {
    const int w = params.width;
    const int n = params.height;
    const int top = relabel_bound(params) + 1;  // relabel x ↦ top − x
    const Diagram lambda = q.shape();
    if (lambda.height() > n || lambda.width() > w)
        throw ValidationError("recording tableau does not fit inside the rectangle");
    std::vector<std::vector<int>> cols(static_cast<std::size_t>(w));
    for (int c = 0; c < w; ++c) {
        auto& col = cols[static_cast<std::size_t>(c)];
        if (c < a.width()) col = a.column(c);
        const int src = w - c - 1;  // column of Q feeding this column of R
        const int len = lambda.column_length(src);
        if (static_cast<int>(col.size()) != n - len)
            throw ValidationError("low and high parts do not tile the rectangle");
        for (int row = n - len; row < n; ++row)
            col.push_back(top - q.at(src, n - row - 1));
    }
    return Tableau(std::move(cols));
}

Tableau stack_on_top(const Tableau& head, const Tableau& body, int w) {
    std::vector<std::vector<int>> cols(static_cast<std::size_t>(w));
    for (int c = 0; c < w; ++c) {
        auto& col = cols[static_cast<std::size_t>(c)];
        col = head.column(c);
        if (c < body.width())
            col.insert(col.end(), body.column(c).begin(), body.column(c).end());
    }
    return Tableau(std::move(cols));
}

Tableau shift_entries(const Tableau& t, int delta) {
    std::vector<std::vector<int>> cols = t.columns();
    for (auto& col : cols)
        for (int& v : col) v += delta;
    return Tableau(std::move(cols));
}

}  // namespace

BijectionParams::BijectionParams(int w, int n, int k_) : width(w), height(n), k(k_) {
    if (w < 2) throw RangeError("bijection requires width >= 2");
    weight();  // validates n >= 1 and the k interval
}

int BijectionParams::perm_size() const {
    return k >= 0 ? height + k * (width - 1) : height - k;
}

SkewExtraction extract_q(const Tableau& r, const BijectionParams& params) {
    const int w = params.width;
    const int n = params.height;
    require_rectangular(r, w, n, "R");
    if (!is_semistandard(r)) throw ValidationError("R is not semistandard: " + describe_violation(r));
    require_content(r, expand_skew_weight(params.weight()), "R");

    const int low_max = n - params.k;  // values above this are the skew region
    std::vector<int> high(static_cast<std::size_t>(w), 0);
    std::vector<Cell> cells;
    for (int c = 0; c < w; ++c) {
        const auto& col = r.column(c);
        int count = 0;
        for (int j = 0; j < n; ++j) {
            if (col[static_cast<std::size_t>(j)] > low_max) {
                ++count;
                cells.push_back({c, j});
            }
        }
        high[static_cast<std::size_t>(c)] = count;
        if (c > 0 && high[static_cast<std::size_t>(c - 1)] > count)
            throw ValidationError("high values do not form a bottom-right skew region");
    }

    const int top = relabel_bound(params) + 1;
    std::vector<int> lambda_cols(static_cast<std::size_t>(w));
    for (int i = 0; i < w; ++i) lambda_cols[static_cast<std::size_t>(i)] = high[static_cast<std::size_t>(w - i - 1)];
    std::vector<std::vector<int>> q_cols(static_cast<std::size_t>(w));
    for (int i = 0; i < w; ++i) {
        const int len = lambda_cols[static_cast<std::size_t>(i)];
        auto& col = q_cols[static_cast<std::size_t>(i)];
        col.reserve(static_cast<std::size_t>(len));
        for (int j = 0; j < len; ++j) col.push_back(top - r.at(w - i - 1, n - j - 1));
    }
    Tableau q(std::move(q_cols));
    if (!is_standard(q)) throw ValidationError("rotated skew region does not relabel to a standard tableau");
    return {std::move(cells), std::move(q)};
}

TableauPair forward_base(const Tableau& r, int w, int n) {
    const BijectionParams params(w, n, 0);
    SkewExtraction e = extract_q(r, params);
    const Tableau low = rect_subtract_tableau(r, e.q.shape());
    Tableau p = tableau_complement(low, w, n);
    if (!is_standard(p) || p.shape() != e.q.shape())
        throw ValidationError("complement did not produce a standard tableau of the recording shape");
    return {std::move(p), std::move(e.q)};
}

Tableau inverse_base(const TableauPair& pair, int w, int n) {
    const BijectionParams params(w, n, 0);
    if (!is_standard(pair.p) || !is_standard(pair.q))
        throw ValidationError("inverse requires standard tableaux");
    if (pair.p.shape() != pair.q.shape())
        throw ValidationError("inverse requires tableaux of the same shape");
    if (pair.p.width() > w) throw DomainError("tableau pair is wider than the rectangle");
    if (pair.p.cell_count() != static_cast<std::size_t>(n))
        throw ValidationError("tableau pair does not have n cells");
    const Tableau low = tableau_complement(pair.p, w, n);
    Tableau r = glue(low, pair.q, params);
    if (!is_semistandard(r)) throw ValidationError("glued tableau is not semistandard");
    require_content(r, expand_skew_weight(params.weight()), "glued tableau");
    return r;
}

TableauPair forward_skew(const Tableau& r, const BijectionParams& params, const Tableau& m_block) {
    if (params.k == 0) throw ValidationError("k = 0 has no skew step; use forward_base");
    const int w = params.width;
    const int n = params.height;
    const int ak = std::abs(params.k);
    require_rectangular(m_block, w, ak, "M");
    if (!is_standard(m_block)) throw ValidationError("M must be a standard tableau on [|k|w]");

    SkewExtraction e = extract_q(r, params);
    const Diagram lambda = e.q.shape();
    const Tableau low = rect_subtract_tableau(r, lambda);
    const Tableau p2 = tableau_complement(low, w, n - params.k);
    for (int i = 0; i < w; ++i) {
        if (p2.shape().column_length(i) != lambda.column_length(i) - params.k)
            throw ValidationError("complement column heights violate |P''_i| = |Q_i| - k");
    }

    const Tableau& p_prime = params.k > 0 ? p2 : e.q;
    const Tableau& q_out = params.k > 0 ? e.q : p2;
    const Tableau body = shift_entries(p_prime, ak * w);
    Tableau p = stack_on_top(m_block, body, w);
    if (!is_standard(p) || p.shape() != q_out.shape())
        throw ValidationError("attaching M did not produce a standard tableau of the recording shape");
    return {std::move(p), q_out};
}

SkewPreimage inverse_skew(const TableauPair& pair, const BijectionParams& params) {
    if (params.k == 0) throw ValidationError("k = 0 has no skew step; use inverse_base");
    const int w = params.width;
    const int n = params.height;
    const int ak = std::abs(params.k);

    if (!is_standard(pair.p) || !is_standard(pair.q))
        throw ValidationError("inverse requires standard tableaux");
    if (pair.p.shape() != pair.q.shape())
        throw ValidationError("inverse requires tableaux of the same shape");
    if (pair.p.cell_count() != static_cast<std::size_t>(params.perm_size()))
        throw ValidationError("tableau pair size does not match the parameters");

    if (pair.p.width() != w)
        throw MembershipError("shape width differs from w: the permutation's LIS length is not w");
    std::vector<int> head_values;
    head_values.reserve(static_cast<std::size_t>(ak) * static_cast<std::size_t>(w));
    std::vector<std::vector<int>> head_cols(static_cast<std::size_t>(w));
    std::vector<std::vector<int>> body_cols(static_cast<std::size_t>(w));
    for (int c = 0; c < w; ++c) {
        const auto& col = pair.p.column(c);
        if (static_cast<int>(col.size()) < ak)
            throw MembershipError("the top |k| rows are not full width");
        head_cols[static_cast<std::size_t>(c)].assign(col.begin(), col.begin() + ak);
        body_cols[static_cast<std::size_t>(c)].assign(col.begin() + ak, col.end());
        head_values.insert(head_values.end(), col.begin(), col.begin() + ak);
        for (int& v : body_cols[static_cast<std::size_t>(c)]) v -= ak * w;
    }
    std::sort(head_values.begin(), head_values.end());
    for (int i = 0; i < ak * w; ++i) {
        if (head_values[static_cast<std::size_t>(i)] != i + 1)
            throw MembershipError("values [|k|w] do not occupy exactly the top |k| rows");
    }
    Tableau m_block(std::move(head_cols));
    Tableau p_prime(std::move(body_cols));

    const Tableau& p2 = params.k > 0 ? p_prime : pair.q;
    const Tableau& q_prime = params.k > 0 ? pair.q : p_prime;
    const Tableau low = tableau_complement(p2, w, n - params.k);
    Tableau r = glue(low, q_prime, params);
    if (!is_semistandard(r)) throw ValidationError("glued tableau is not semistandard");
    require_content(r, expand_skew_weight(params.weight()), "glued tableau");
    return {std::move(r), std::move(m_block)};
}

std::vector<Tableau> enumerate_m_blocks(int k, int w) {
    if (k == 0) throw ValidationError("k = 0 admits no M block");
    if (w < 1) throw DomainError("block width must be positive");
    const int ak = std::abs(k);
    std::vector<Tableau> blocks = enumerate_syt(RectShape(w, ak).diagram());
    std::vector<std::pair<std::vector<int>, std::size_t>> keyed;
    keyed.reserve(blocks.size());
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        std::vector<int> word;
        for (const auto& row : blocks[i].rows()) word.insert(word.end(), row.begin(), row.end());
        keyed.emplace_back(std::move(word), i);
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<Tableau> out;
    out.reserve(blocks.size());
    for (const auto& [word, i] : keyed) out.push_back(std::move(blocks[i]));
    return out;
}

}  // namespace tableau_lab
