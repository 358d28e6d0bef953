#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tableau_lab/big_count.hpp"
#include "tableau_lab/enumeration.hpp"

namespace tableau_lab {

enum class Claim { Eq1, Thm21, Thm22, Cor23, Cor25, Conj26, Hook, RectCatalan };

std::optional<Claim> claim_from_string(const std::string& s);
std::string to_string(Claim c);
bool is_conjecture(Claim c);
const std::vector<Claim>& all_claims();

struct VerifyOptions {
    std::optional<int> max_n;  // per-claim default when unset
    std::optional<int> max_m;
    std::optional<int> w;      // restrict the grid to one width
    std::optional<int> k;      // restrict the grid to one skew parameter
    int cap = default_brute_force_cap();
};

struct VerifyReport {
    enum class Status { Match, Mismatch, Skipped };

    std::string claim;
    std::string params;
    BigCount lhs;
    BigCount rhs;
    Status status = Status::Skipped;
    bool conjecture = false;
    long long elapsed_ms = 0;
};

/// One report row per grid tuple, in canonical parameter order. Tuples
/// beyond the brute-force cap come back Skipped, never fabricated.
std::vector<VerifyReport> run_verify(Claim claim, const VerifyOptions& opts);

/// 0 all match; 1 any theorem/corollary mismatch; 3 conjecture-only
/// mismatches. Skipped rows do not affect the code.
int exit_code_for(const std::vector<VerifyReport>& reports);

/// Header claim,params,lhs,rhs,match,elapsed_ms. With timing off the
/// elapsed field is left empty so output is byte-stable across runs.
void write_csv(std::ostream& os, const std::vector<VerifyReport>& reports, bool with_timing);
void write_json(std::ostream& os, const std::vector<VerifyReport>& reports, bool with_timing);

}  // namespace tableau_lab
