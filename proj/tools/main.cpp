#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "tableau_lab/bijection.hpp"
#include "tableau_lab/enumeration.hpp"
#include "tableau_lab/json_io.hpp"
#include "tableau_lab/verify.hpp"

namespace {

using namespace tableau_lab;
using nlohmann::json;

constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitMembership = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int env_cap() {
    if (const char* s = std::getenv("TABLEAU_LAB_MAX_M")) {
        try {
            return std::stoi(s);
        } catch (const std::exception&) {
            throw UsageError("TABLEAU_LAB_MAX_M must be an integer");
        }
    }
    return default_brute_force_cap();
}

BijectionParams parse_params(const std::string& text) {
    int w = 0, n = 0, k = 0;
    char c1 = 0, c2 = 0;
    std::istringstream is(text);
    if (!(is >> w >> c1 >> n >> c2 >> k) || c1 != ',' || c2 != ',' || !(is >> std::ws).eof())
        throw UsageError("--params expects \"w,n,k\"");
    return BijectionParams(w, n, k);
}

struct KostkaCmd {
    int width = 0;
    int height = 0;
    int k = 0;
    std::optional<int> a;
    bool emit = false;

    int run() const {
        const SkewWeight weight(height, k, a.value_or(width - 1));
        const Diagram rect = RectShape(width, height).diagram();
        const ContentVector content = expand_skew_weight(weight);
        if (emit) {
            for_each_ssyt(rect, content,
                          [](const Tableau& t) { std::cout << canonical_dump(to_json(t)) << "\n"; });
            return 0;
        }
        std::cout << kostka(rect, content).str() << "\n";
        return 0;
    }
};

struct CountPermsCmd {
    std::string cls;
    int m = 0;
    int w = 0;
    int k = 1;
    int cap = 0;

    int run() const {
        PermClass pc;
        if (cls == "lis-at-most") pc = PermClass::LisAtMost;
        else if (cls == "lis-prefix") pc = PermClass::LisPrefix;
        else if (cls == "block-head") pc = PermClass::BlockHead;
        else if (cls == "disjoint-lis") pc = PermClass::DisjointLis;
        else throw UsageError("unknown class \"" + cls + "\"");
        std::cout << count_perm_class(pc, m, w, k, cap).str() << "\n";
        return 0;
    }
};

struct BijectCmd {
    std::string params_text;
    std::string input;
    std::string perm_text;
    int m_index = 0;
    bool forward = false;

    int run() const {
        const BijectionParams params = parse_params(params_text);
        if (params.k == 0)
            std::cerr << "note: k = 0 selects the base bijection (no M block)\n";
        return forward ? run_forward(params) : run_inverse(params);
    }

    int run_forward(const BijectionParams& params) const {
        const Tableau r = parse_tableau_file(input);
        TableauPair pair;
        if (params.k == 0) {
            pair = forward_base(r, params.width, params.height);
        } else {
            const auto blocks = enumerate_m_blocks(params.k, params.width);
            if (m_index < 0 || m_index >= static_cast<int>(blocks.size()))
                throw UsageError("--m-index out of range; have " + std::to_string(blocks.size()) +
                                 " blocks");
            pair = forward_skew(r, params, blocks[static_cast<std::size_t>(m_index)]);
        }
        const Permutation sigma = rsk_inverse(pair);
        json out{{"P", to_json(pair.p)}, {"Q", to_json(pair.q)}, {"sigma", to_json(sigma)}};
        std::cout << canonical_dump(out) << "\n";
        return 0;
    }

    int run_inverse(const BijectionParams& params) const {
        const Permutation sigma = permutation_from_string(perm_text);
        if (sigma.size() != params.perm_size())
            throw ParseError("permutation length " + std::to_string(sigma.size()) +
                             " does not match m = " + std::to_string(params.perm_size()));
        const TableauPair pair = rsk(sigma);
        json out;
        if (params.k == 0) {
            if (pair.p.width() > params.width)
                throw MembershipError("LIS length exceeds w: permutation is outside the counted class");
            out = json{{"R", to_json(inverse_base(pair, params.width, params.height))}, {"M", nullptr}};
        } else {
            const SkewPreimage pre = inverse_skew(pair, params);
            out = json{{"R", to_json(pre.r)}, {"M", to_json(pre.m_block)}};
        }
        std::cout << canonical_dump(out) << "\n";
        return 0;
    }
};

struct VerifyCmd {
    std::string claim_text;
    VerifyOptions opts;
    std::string format = "csv";
    bool deterministic = false;

    int run() const {
        std::vector<Claim> claims;
        if (claim_text == "all") {
            claims = all_claims();
        } else {
            const auto claim = claim_from_string(claim_text);
            if (!claim) throw UsageError("unknown claim \"" + claim_text + "\"");
            claims = {*claim};
        }
        std::vector<VerifyReport> rows;
        for (Claim c : claims) {
            auto part = run_verify(c, opts);
            rows.insert(rows.end(), part.begin(), part.end());
        }
        if (format == "json") write_json(std::cout, rows, !deterministic);
        else write_csv(std::cout, rows, !deterministic);
        return exit_code_for(rows);
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rectangular-tableau bijections, Kostka counts and LIS permutation classes"};
    app.require_subcommand(1);
    app.footer(
        "Exit codes: 0 success/all match, 1 theorem mismatch, 2 membership error,\n"
        "3 conjecture mismatch, 64 usage error, 65 bad input data.\n"
        "TABLEAU_LAB_MAX_M overrides the default brute-force cap (9).");

    KostkaCmd kostka_cmd;
    auto* kostka_app = app.add_subcommand("kostka", "Kostka number of a rectangle with a skewed weight");
    kostka_app->add_option("--width", kostka_cmd.width, "rectangle width w")->required();
    kostka_app->add_option("--height", kostka_cmd.height, "rectangle height n")->required();
    kostka_app->add_option("--k", kostka_cmd.k, "skew parameter (default 0)");
    kostka_app->add_option("--a", kostka_cmd.a, "weight value a (default w-1)");
    kostka_app->add_flag("--emit-tableaux", kostka_cmd.emit,
                         "stream the tableaux as JSON lines instead of printing the count");

    CountPermsCmd count_cmd;
    auto* count_app = app.add_subcommand("count-perms", "count a permutation class over all of S_m");
    count_app->add_option("--class", count_cmd.cls,
                          "lis-at-most | lis-prefix | block-head | disjoint-lis")->required();
    count_app->add_option("--m", count_cmd.m, "symmetric group size")->required();
    count_app->add_option("--w", count_cmd.w, "LIS bound / prefix length / block width")->required();
    count_app->add_option("--k", count_cmd.k, "block height (block-head, disjoint-lis)");
    count_app->add_option("--brute-cap", count_cmd.cap, "override the brute-force cap");

    int nc_n = 0, nc_colors = 0;
    auto* nc_app = app.add_subcommand("nc2", "count colored noncrossing partitions");
    nc_app->add_option("--n", nc_n, "ground set size")->required();
    nc_app->add_option("--colors", nc_colors, "number of arc colors")->required();

    int cr_n = 0, cr_m = 0;
    bool cr_emit = false;
    auto* cr_app = app.add_subcommand("catalan-rect", "standard tableaux of a width-n, height-m rectangle");
    cr_app->add_option("--n", cr_n, "rectangle width")->required();
    cr_app->add_option("--m", cr_m, "rectangle height")->required();
    cr_app->add_flag("--emit-tableaux", cr_emit,
                     "stream the tableaux as JSON lines instead of printing the count");

    BijectCmd biject_cmd;
    auto* biject_app = app.add_subcommand("biject", "run the bijection between rectangles and pairs");
    biject_app->require_subcommand(1);
    auto* fwd_app = biject_app->add_subcommand("forward", "rectangle R (+ block M) -> (P, Q, sigma)");
    fwd_app->add_option("--params", biject_cmd.params_text, "w,n,k")->required();
    fwd_app->add_option("--input", biject_cmd.input, "JSON file holding R")->required();
    fwd_app->add_option("--m-index", biject_cmd.m_index, "index into the canonical M-block order");
    auto* inv_app = biject_app->add_subcommand("inverse", "permutation -> (R, M)");
    inv_app->add_option("--params", biject_cmd.params_text, "w,n,k")->required();
    inv_app->add_option("--perm", biject_cmd.perm_text, "one-line notation, e.g. \"3 1 4 2\"")->required();

    VerifyCmd verify_cmd;
    auto* verify_app = app.add_subcommand("verify", "check the counting identities on a desk-scale grid");
    verify_app->add_option("--claim", verify_cmd.claim_text,
                           "eq1 | thm2.1 | thm2.2 | cor2.3 | cor2.5 | conj2.6 | hook | rect-catalan | all")
        ->required();
    verify_app->add_option("--max-n", verify_cmd.opts.max_n, "grid bound on n (per-claim default)");
    verify_app->add_option("--max-m", verify_cmd.opts.max_m, "grid bound on m (default 8)");
    verify_app->add_option("--w", verify_cmd.opts.w, "restrict the grid to one width");
    verify_app->add_option("--k", verify_cmd.opts.k, "restrict the grid to one skew parameter");
    verify_app->add_option("--brute-cap", verify_cmd.opts.cap, "override the brute-force cap");
    verify_app->add_option("--format", verify_cmd.format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    verify_app->add_flag("--deterministic", verify_cmd.deterministic,
                         "leave the elapsed column empty for byte-stable output");

    try {
        count_cmd.cap = env_cap();
        verify_cmd.opts.cap = env_cap();
        app.parse(argc, argv);

        if (*kostka_app) return kostka_cmd.run();
        if (*count_app) return count_cmd.run();
        if (*nc_app) {
            std::cout << count_colored_noncrossing(nc_n, nc_colors).str() << "\n";
            return 0;
        }
        if (*cr_app) {
            if (cr_emit) {
                const Diagram rect = RectShape(cr_n, cr_m).diagram();
                for_each_ssyt(rect, ContentVector(std::vector<int>(rect.cell_count(), 1)),
                              [](const Tableau& t) { std::cout << canonical_dump(to_json(t)) << "\n"; });
                return 0;
            }
            std::cout << rect_catalan(cr_n, cr_m).str() << "\n";
            return 0;
        }
        if (*biject_app) {
            biject_cmd.forward = fwd_app->parsed();
            return biject_cmd.run();
        }
        if (*verify_app) return verify_cmd.run();
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
        app.exit(e);
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ResourceError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const MembershipError& e) {
        std::cerr << "membership error: " << e.what() << "\n";
        return kExitMembership;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
}
