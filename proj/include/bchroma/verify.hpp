#pragma once

#include "bchroma/formulas.hpp"
#include "bchroma/solver.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bchroma {

/// Inclusive integer range, written "a..b" or "a".
struct Range {
    std::size_t lo = 0;
    std::size_t hi = 0;

    static Range parse(const std::string& text);
};

struct VerifyOptions {
    Range n{1, 5};
    Range m{1, 5};
    Range k{2, 2};
    std::optional<Family> family;
    CountMode count_mode = CountMode::ExactPalette;
    Budget budget;
};

/// One parameter tuple: formula vs exact solver vs construction.
struct VerifyRow {
    /// Graph expression of the row, e.g. prod(star:4,star:3).
    std::string graph;
    std::map<std::string, std::size_t> params;
    /// Formula prediction as text ("5", "[12,16]", or a stated count).
    std::string formula;
    std::optional<std::uint64_t> solver;
    /// "exact", "budget-exceeded" or "not-run".
    std::string solver_status = "not-run";
    std::optional<std::size_t> construction_k;
    std::optional<bool> construction_valid;
    /// match, bounds-contain, solver-arbitrated, unverified or MISMATCH.
    std::string agreement;
    std::string note;
};

struct VerifyReport {
    std::string suite;
    std::vector<VerifyRow> rows;

    std::size_t mismatches() const;
};

/// Suites: thm3.1 thm3.2 thm3.3 thm4.1 thm4.2 thm4.4 lemma7 lemma-mdegree remark4.1.
/// Throws std::invalid_argument on an unknown suite.
VerifyReport run_verify(const std::string& suite, const VerifyOptions& options);
const std::vector<std::string>& verify_suites();

nlohmann::json to_json(const VerifyReport& report);
std::string to_text(const VerifyReport& report);

} // namespace bchroma
