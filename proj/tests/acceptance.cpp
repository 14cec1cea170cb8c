/* Acceptance suite: every catalog identity at its contract grid, one line
 * per criterion.  The configuration mirrors configs/acceptance.json. */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>

#include "povp/verify.hpp"

using namespace povp;
using nlohmann::json;

namespace {

struct Criterion {
    const char* label;
    json entries;  // array of suite entries
};

std::vector<Criterion> criteria() {
    return {
        {"01 shifted MacMahon product vs full census (N=12)",
         json::array({{{"id", "prop34-all"}, {"params", json::object()}, {"max_q", 12}}})},
        {"02 t-weighted box products, r,c <= 3 (N=10)",
         json::array({{{"id", "thm2-box-t"}, {"params", {{"rmax", 3}, {"cmax", 3}}}, {"max_q", 10}}})},
        {"03 plain box products = t=-1 reduction (N=10)",
         json::array({{{"id", "thm1-box"}, {"params", {{"rmax", 3}, {"cmax", 3}}}, {"max_q", 10}}})},
        {"04 hook-content formulas, |shape| <= 5 (N=20) plus the (4,4,2) spot check (N=35)",
         json::array({{{"id", "thm3-shape"}, {"params", {{"weight_max", 5}}}, {"max_q", 20}},
                      {{"id", "thm3-shape"}, {"params", {{"lambda", {4, 4, 2}}}}, {"max_q", 35}},
                      {{"id", "thm4-bounded"}, {"params", {{"weight_max", 5}}}, {"max_q", 20}}})},
        {"05 determinant identity, |shape| <= 6 (N=15)",
         json::array({{{"id", "eqm-det-hook"}, {"params", {{"weight_max", 6}}}, {"max_q", 15}}})},
        {"06 doubled determinant sums, r <= 4, c <= 3 (N=12)",
         json::array({{{"id", "prop33-sum-det"}, {"params", {{"rmax", 4}, {"cmax", 3}}}, {"max_q", 12}}})},
        {"07 reverse hook products over the contract shapes (N=12)",
         json::array({{{"id", "thm5-reverse"}, {"params", json::object()}, {"max_q", 12}}})},
        {"08 free-start path sums vs Pfaffians and the recursion (N=15)",
         json::array({{{"id", "lemma-w"}, {"params", {{"max_val", 5}, {"len_max", 4}}}, {"max_q", 15}}})},
        {"09 bounded-entry products, n <= 3 (N=15) and the stable limit (N=10)",
         json::array({{{"id", "thm7-max-entry"}, {"params", {{"nmax", 3}, {"limit_q", 10}}}, {"max_q", 15}}})},
        {"10 parts-in-set products incl. odd parts (N=12)",
         json::array({{{"id", "set-s"}, {"params", json::object()}, {"max_q", 12}},
                      {{"id", "odd-parts"}, {"params", json::object()}, {"max_q", 12}}})},
        {"11 single-row bounded sums, n,c <= 4 (N=15)",
         json::array({{{"id", "sec7-row"}, {"params", {{"nmax", 4}, {"cmax", 4}}}, {"max_q", 15}}})},
        {"12 skew profile products, word length <= 6 (N=10)",
         json::array({{{"id", "thm8-skew"}, {"params", {{"len_max", 6}}}, {"max_q", 10}}})},
        {"13 cylindric products, period <= 3 (N=8)",
         json::array({{{"id", "thm9-cylindric"}, {"params", {{"T_max", 3}}}, {"max_q", 8}}})},
        {"14 border weights vs strip products and the bilinear kernel",
         json::array({{{"id", "phi-equals-a"},
                       {"params",
                        {{"skew_len_max", 6}, {"cyl_T_max", 3}, {"planar_len_max", 4},
                         {"planar_weight_max", 6}, {"cauchy_degree", 4}}},
                       {"max_q", 10}}})},
        {"15 insertion correspondence: round trip, statistics, transpose, symmetric case",
         json::array({{{"id", "rsk-stats"},
                       {"params", {{"n", 2}, {"emax", 2}, {"random_n", 3}, {"random_count", 1000}}},
                       {"max_q", 10}},
                      {{"id", "rsk-transpose"},
                       {"params", {{"n", 2}, {"emax", 2}, {"random_n", 3}, {"random_count", 200}}},
                       {"max_q", 10}},
                      {{"id", "rsk-symmetric"},
                       {"params", {{"n", 2}, {"emax", 2}, {"sym_weight_max", 8}}},
                       {"max_q", 8}}})},
        {"16 diagonal pairing: round trip and weight polynomials (shapes <= 4 cells)",
         json::array({{{"id", "bk-weights"}, {"params", {{"cells_max", 4}, {"emax", 3}}}, {"max_q", 10}}})},
        {"17 domino tilings: round trip, two-domino moves, frozen boundary",
         json::array({{{"id", "tiling-roundtrip"},
                       {"params", {{"weight_max", 5}, {"shape_cells_max", 5}, {"entry_max", 4}}},
                       {"max_q", 10}}})},
    };
}

}  // namespace

TEST_CASE("acceptance criteria") {
    bool all_pass = true;
    for (const Criterion& c : criteria()) {
        auto reports = run_suite(c.entries, 2);
        bool pass = true;
        long ms = 0;
        for (const auto& r : reports) {
            pass = pass && r.pass;
            ms += r.runtime_ms;
        }
        std::printf("criterion %s: %s (%ld ms)\n", c.label, pass ? "pass" : "FAIL", ms);
        if (!pass)
            for (const auto& r : reports)
                if (!r.pass) std::printf("    %s\n", r.line().c_str());
        std::fflush(stdout);
        CHECK(pass);
        all_pass = all_pass && pass;
    }
    CHECK(all_pass);
}
