#include "tableau_lab/verify.hpp"

#include <chrono>
#include <functional>
#include <ostream>
#include <sstream>

#include "tableau_lab/bijection.hpp"

namespace tableau_lab {

namespace {

using Clock = std::chrono::steady_clock;

struct Runner {
    Claim claim;
    const VerifyOptions& opts;
    std::vector<VerifyReport> rows;

    void add(const std::string& params, const std::function<BigCount()>& lhs,
             const std::function<BigCount()>& rhs) {
        const auto start = Clock::now();
        VerifyReport row;
        row.claim = to_string(claim);
        row.params = params;
        row.conjecture = is_conjecture(claim);
        row.lhs = lhs();
        row.rhs = rhs();
        row.status = row.lhs == row.rhs ? VerifyReport::Status::Match : VerifyReport::Status::Mismatch;
        row.elapsed_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
        rows.push_back(std::move(row));
    }

    void add_skipped(const std::string& params) {
        VerifyReport row;
        row.claim = to_string(claim);
        row.params = params;
        row.conjecture = is_conjecture(claim);
        row.status = VerifyReport::Status::Skipped;
        rows.push_back(std::move(row));
    }
};

ContentVector ones(std::size_t n) { return ContentVector(std::vector<int>(n, 1)); }

BigCount catalan_formula(int n) {
    // (2n)! / (n! (n+1)!)
    return factorial(2 * n) / (factorial(n) * factorial(n + 1));
}

std::vector<int> widths_or(const VerifyOptions& opts, std::vector<int> defaults) {
    if (opts.w) return {*opts.w};
    return defaults;
}

std::vector<int> ks_or(const VerifyOptions& opts, std::vector<int> defaults) {
    if (opts.k) return {*opts.k};
    return defaults;
}

bool skew_weight_valid(int n, int k, int a) {
    return n >= 1 && k <= n && n + static_cast<long long>(k) * a >= 0;
}

void run_eq1(Runner& r) {
    const int max_n = r.opts.max_n.value_or(7);
    for (int n = 1; n <= max_n; ++n) {
        const Diagram rect = RectShape(2, n).diagram();
        std::ostringstream a;
        a << "n=" << n << ",kostka-vs-formula";
        r.add(a.str(), [&] { return kostka(rect, ones(static_cast<std::size_t>(2 * n))); },
              [&] { return catalan_formula(n); });
        std::ostringstream b;
        b << "n=" << n << ",hook-vs-formula";
        r.add(b.str(), [&] { return count_syt_hook(rect); }, [&] { return catalan_formula(n); });
    }
}

void run_thm21(Runner& r) {
    const int max_n = r.opts.max_n.value_or(6);
    for (int w : widths_or(r.opts, {2, 3, 4})) {
        for (int n = 2; n <= max_n; ++n) {
            std::ostringstream p;
            p << "w=" << w << ",n=" << n;
            if (n > r.opts.cap) {
                r.add_skipped(p.str());
                continue;
            }
            r.add(p.str(),
                  [&] { return kostka(RectShape(w, n).diagram(), expand_skew_weight(SkewWeight(n, 0, w - 1))); },
                  [&] { return count_perm_class(PermClass::LisAtMost, n, w, 1, r.opts.cap); });
        }
    }
}

void run_thm22(Runner& r) {
    const int max_m = r.opts.max_m.value_or(8);
    for (int w : widths_or(r.opts, {2, 3})) {
        for (int k : ks_or(r.opts, {-2, -1, 1, 2})) {
            if (k == 0) continue;
            // The theorem fixes 2 <= w < n.
            for (int n = w + 1;; ++n) {
                const int m = k > 0 ? n + k * (w - 1) : n - k;
                if (m > max_m) break;
                if (!skew_weight_valid(n, k, w - 1)) continue;
                const BijectionParams params(w, n, k);
                std::ostringstream p;
                p << "w=" << w << ",n=" << n << ",k=" << k << ",m=" << m;
                if (m > r.opts.cap) {
                    r.add_skipped(p.str());
                    continue;
                }
                r.add(p.str(),
                      [&] {
                          return kostka(RectShape(w, n).diagram(), expand_skew_weight(params.weight())) *
                                 rect_catalan(std::abs(k), w);
                      },
                      [&] { return count_perm_class(PermClass::BlockHead, m, w, std::abs(k), r.opts.cap); });
            }
        }
    }
}

void run_cor23(Runner& r) {
    const int max_n = r.opts.max_n.value_or(6);
    for (int w : widths_or(r.opts, {2, 3})) {
        for (int n = 1; n <= max_n; ++n) {
            if (!skew_weight_valid(n, 1, w - 1)) continue;
            const int m = n + w - 1;
            std::ostringstream p;
            p << "w=" << w << ",n=" << n << ",m=" << m;
            if (m > r.opts.cap) {
                r.add_skipped(p.str());
                continue;
            }
            r.add(p.str(),
                  [&] { return kostka(RectShape(w, n).diagram(), expand_skew_weight(SkewWeight(n, 1, w - 1))); },
                  [&] { return count_perm_class(PermClass::LisPrefix, m, w, 1, r.opts.cap); });
        }
    }
}

void run_cor25(Runner& r) {
    const int max_cells = 15;
    for (int w : widths_or(r.opts, {2, 3, 4})) {
        for (int k : ks_or(r.opts, {-2, -1, 1, 2})) {
            if (k == 0) continue;
            for (int n = 1; w * n <= max_cells; ++n) {
                const int n2 = n + k * (w - 2);
                if (n2 < 1 || w * n2 > max_cells) continue;
                if (!skew_weight_valid(n, k, w - 1) || !skew_weight_valid(n2, -k, w - 1)) continue;
                std::ostringstream p;
                p << "w=" << w << ",n=" << n << ",k=" << k;
                r.add(p.str(),
                      [&] { return kostka(RectShape(w, n).diagram(), expand_skew_weight(SkewWeight(n, k, w - 1))); },
                      [&] {
                          return kostka(RectShape(w, n2).diagram(), expand_skew_weight(SkewWeight(n2, -k, w - 1)));
                      });
            }
        }
    }
}

void run_conj26(Runner& r) {
    const int max_m = r.opts.max_m.value_or(8);
    for (int w : widths_or(r.opts, {2, 3})) {
        for (int m = w; m <= max_m; ++m) {
            std::ostringstream p;
            p << "w=" << w << ",m=" << m << ",nc2(" << m - w + 1 << "," << w - 1 << ")";
            if (m > r.opts.cap) {
                r.add_skipped(p.str());
                continue;
            }
            r.add(p.str(), [&] { return count_perm_class(PermClass::LisPrefix, m, w, 1, r.opts.cap); },
                  [&] { return count_colored_noncrossing(m - w + 1, w - 1); });
        }
    }
}

void partitions_of(int n, std::vector<int>& parts, const std::function<void(const std::vector<int>&)>& visit) {
    if (n == 0) {
        visit(parts);
        return;
    }
    const int bound = parts.empty() ? n : std::min(n, parts.back());
    for (int part = bound; part >= 1; --part) {
        parts.push_back(part);
        partitions_of(n - part, parts, visit);
        parts.pop_back();
    }
}

void run_hook(Runner& r) {
    const int max_n = r.opts.max_n.value_or(8);
    for (int n = 1; n <= max_n; ++n) {
        std::vector<int> parts;
        partitions_of(n, parts, [&](const std::vector<int>& cols) {
            std::ostringstream p;
            p << "lambda=[";
            for (std::size_t i = 0; i < cols.size(); ++i) p << (i ? " " : "") << cols[i];
            p << "]";
            const Diagram shape(cols);
            r.add(p.str(), [&] { return count_syt_hook(shape); },
                  [&] { return kostka(shape, ones(shape.cell_count())); });
        });
    }
}

void run_rect_catalan(Runner& r) {
    const int max_cells = r.opts.max_n.value_or(12);
    for (int n = 1; n <= max_cells; ++n) {
        for (int m = 1; n * m <= max_cells; ++m) {
            std::ostringstream p;
            p << "n=" << n << ",m=" << m;
            const Diagram rect = RectShape(n, m).diagram();
            r.add(p.str(), [&] { return rect_catalan(n, m); },
                  [&] { return kostka(rect, ones(rect.cell_count())); });
        }
    }
}

}  // namespace

std::optional<Claim> claim_from_string(const std::string& s) {
    if (s == "eq1") return Claim::Eq1;
    if (s == "thm2.1") return Claim::Thm21;
    if (s == "thm2.2") return Claim::Thm22;
    if (s == "cor2.3") return Claim::Cor23;
    if (s == "cor2.5") return Claim::Cor25;
    if (s == "conj2.6") return Claim::Conj26;
    if (s == "hook") return Claim::Hook;
    if (s == "rect-catalan") return Claim::RectCatalan;
    return std::nullopt;
}

std::string to_string(Claim c) {
    switch (c) {
        case Claim::Eq1: return "eq1";
        case Claim::Thm21: return "thm2.1";
        case Claim::Thm22: return "thm2.2";
        case Claim::Cor23: return "cor2.3";
        case Claim::Cor25: return "cor2.5";
        case Claim::Conj26: return "conj2.6";
        case Claim::Hook: return "hook";
        case Claim::RectCatalan: return "rect-catalan";
    }
    return "?";
}

bool is_conjecture(Claim c) { return c == Claim::Conj26; }

const std::vector<Claim>& all_claims() {
    static const std::vector<Claim> claims = {Claim::Eq1,   Claim::Thm21,  Claim::Thm22,
                                              Claim::Cor23, Claim::Cor25,  Claim::Conj26,
                                              Claim::Hook,  Claim::RectCatalan};
    return claims;
}

std::vector<VerifyReport> run_verify(Claim claim, const VerifyOptions& opts) {
    Runner r{claim, opts, {}};
    switch (claim) {
        case Claim::Eq1: run_eq1(r); break;
        case Claim::Thm21: run_thm21(r); break;
        case Claim::Thm22: run_thm22(r); break;
        case Claim::Cor23: run_cor23(r); break;
        case Claim::Cor25: run_cor25(r); break;
        case Claim::Conj26: run_conj26(r); break;
        case Claim::Hook: run_hook(r); break;
        case Claim::RectCatalan: run_rect_catalan(r); break;
    }
    return std::move(r.rows);
}

int exit_code_for(const std::vector<VerifyReport>& reports) {
    bool conjecture_mismatch = false;
    for (const auto& row : reports) {
        if (row.status != VerifyReport::Status::Mismatch) continue;
        if (!row.conjecture) return 1;
        conjecture_mismatch = true;
    }
    return conjecture_mismatch ? 3 : 0;
}

namespace {

const char* status_word(VerifyReport::Status s) {
    switch (s) {
        case VerifyReport::Status::Match: return "true";
        case VerifyReport::Status::Mismatch: return "false";
        case VerifyReport::Status::Skipped: return "skipped";
    }
    return "?";
}

}  // namespace

void write_csv(std::ostream& os, const std::vector<VerifyReport>& reports, bool with_timing) {
    os << "claim,params,lhs,rhs,match,elapsed_ms\n";
    for (const auto& row : reports) {
        os << row.claim << ",\"" << row.params << "\",";
        if (row.status != VerifyReport::Status::Skipped) os << row.lhs.str() << "," << row.rhs.str();
        else os << ",";
        os << "," << status_word(row.status) << ",";
        if (with_timing) os << row.elapsed_ms;
        os << "\n";
    }
}

void write_json(std::ostream& os, const std::vector<VerifyReport>& reports, bool with_timing) {
    os << "[";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& row = reports[i];
        os << (i ? ",\n " : "\n ");
        os << "{\"claim\":\"" << row.claim << "\",\"params\":\"" << row.params << "\",";
        if (row.status != VerifyReport::Status::Skipped)
            os << "\"lhs\":\"" << row.lhs.str() << "\",\"rhs\":\"" << row.rhs.str() << "\",";
        else
            os << "\"lhs\":null,\"rhs\":null,";
        os << "\"match\":\"" << status_word(row.status) << "\",";
        if (with_timing) os << "\"elapsed_ms\":" << row.elapsed_ms << "}";
        else os << "\"elapsed_ms\":null}";
    }
    os << (reports.empty() ? "]" : "\n]") << "\n";
}

}  // namespace tableau_lab
