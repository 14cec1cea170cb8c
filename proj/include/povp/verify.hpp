#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "povp/series.hpp"

namespace povp {

struct Discrepancy {
    int q_exp = 0;
    std::string oracle;
    std::string formula;
    std::string where;  // sub-case description
};

struct VerificationReport {
    std::string identity_id;
    nlohmann::json parameters;
    int truncation = 0;
    bool pass = false;
    std::optional<Discrepancy> first_discrepancy;
    long runtime_ms = 0;
    std::string error;  // usage problems (unknown id, bad params)

    nlohmann::json to_json() const;
    std::string line() const;
};

// catalog of identity checks
std::vector<std::string> identity_catalog();

VerificationReport verify(const std::string& identity_id, const nlohmann::json& params,
                          int max_q);

/* Config: array of {"id": ..., "params": {...}, "max_q": N}.  Reports come
 * back in config order; identities run concurrently up to `workers`. */
std::vector<VerificationReport> run_suite(const nlohmann::json& config, int workers);

}  // namespace povp
