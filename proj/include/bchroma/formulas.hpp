#pragma once

#include <nlohmann/json.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bchroma {

/// Closed-form prediction for φ: an exact value or an interval.
struct PhiResult {
    enum class Kind { Exact, Bounds };

    Kind kind = Kind::Exact;
    std::size_t lower = 0;
    std::size_t upper = 0;
    /// Identifier of the result the value comes from, e.g. "thm3.1".
    std::string source;
    bool preconditions_met = true;
    std::string explanation;
    /// Flags such as "solver-arbitrated" or "discrepancy".
    std::vector<std::string> annotations;
    /// Value as originally stated when it differs from `lower`.
    std::optional<std::size_t> stated_value;

    static PhiResult exact(std::size_t value, std::string source);
    static PhiResult bounds(std::size_t lower, std::size_t upper, std::string source);

    bool is_exact() const noexcept { return kind == Kind::Exact; }
    /// Throws std::logic_error for bounds.
    std::size_t value() const;
    bool contains(std::size_t phi) const noexcept { return lower <= phi && phi <= upper; }
    bool has_annotation(const std::string& a) const;

    friend bool operator==(const PhiResult&, const PhiResult&) = default;
};

std::string to_string(const PhiResult& r);
nlohmann::json to_json(const PhiResult& r);

PhiResult phi_star(std::size_t n);
/// Exact(min+2) for min >= 2; for min < 2 a solver-arbitrated interval.
PhiResult phi_star_product(std::size_t n, std::size_t m);
PhiResult phi_line_star_product(std::size_t n, std::size_t m);
/// Throws HypothesisError when min(n,m) < 3.
PhiResult phi_total_star_product(std::size_t n, std::size_t m);
PhiResult phi_star_power(std::size_t n, std::size_t k);
PhiResult phi_star_product_power(std::size_t n, std::size_t m, std::size_t k);
PhiResult phi_rook_bounds(std::size_t n, std::size_t m);
/// φ(L(S_n)) = φ(K_n) = n, annotated with the differing stated value n-1.
PhiResult phi_line_star(std::size_t n);
PhiResult phi_total_star(std::size_t n);

/// Exact φ(K_n□K_m) values known beyond the general rule, keyed (n, m).
const std::map<std::pair<std::size_t, std::size_t>, std::size_t>& rook_special_values();

enum class Family { StarProduct, LineStarProduct, TotalStarProduct, Power2, Power3 };

std::string to_string(Family f);
/// Accepts star_product, line_star_product, total_star_product, power2, power3.
Family parse_family(const std::string& name);

/// Closed-form m-degree; throws HypothesisError outside the lemma's hypothesis.
std::size_t m_degree_formula(Family family, std::size_t n, std::size_t m);

/// Every formula with its hypothesis and values for 1 <= m <= n <= n_max.
nlohmann::json theorem_table(std::size_t n_max = 6);

} // namespace bchroma
