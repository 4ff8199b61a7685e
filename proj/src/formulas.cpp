#include "bchroma/formulas.hpp"

#include "bchroma/error.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace bchroma {

namespace {

std::pair<std::size_t, std::size_t> ordered(std::size_t n, std::size_t m) { return {std::max(n, m), std::min(n, m)}; }

PhiResult arbitrated(PhiResult r, std::string why)
{
    r.annotations.push_back("solver-arbitrated");
    r.preconditions_met = false;
    r.explanation = std::move(why);
    return r;
}

} // namespace

PhiResult PhiResult::exact(std::size_t value, std::string source)
{
    PhiResult r;
    r.kind = Kind::Exact;
    r.lower = r.upper = value;
    r.source = std::move(source);
    return r;
}

PhiResult PhiResult::bounds(std::size_t lower, std::size_t upper, std::string source)
{
    if (lower > upper)
        throw std::invalid_argument("empty interval");
    PhiResult r;
    r.kind = Kind::Bounds;
    r.lower = lower;
    r.upper = upper;
    r.source = std::move(source);
    return r;
}

std::size_t PhiResult::value() const
{
    if (!is_exact())
        throw std::logic_error("result is an interval, not an exact value");
    return lower;
}

bool PhiResult::has_annotation(const std::string& a) const
{
    return std::find(annotations.begin(), annotations.end(), a) != annotations.end();
}

std::string to_string(const PhiResult& r)
{
    if (r.is_exact())
        return std::to_string(r.lower);
    return "[" + std::to_string(r.lower) + "," + std::to_string(r.upper) + "]";
}

nlohmann::json to_json(const PhiResult& r)
{
    nlohmann::json j = {{"kind", r.is_exact() ? "exact" : "bounds"},
                        {"lower", r.lower},
                        {"upper", r.upper},
                        {"source", r.source},
                        {"preconditions_met", r.preconditions_met},
                        {"annotations", r.annotations}};
    if (r.is_exact())
        j["value"] = r.lower;
    if (!r.explanation.empty())
        j["explanation"] = r.explanation;
    if (r.stated_value)
        j["stated_value"] = *r.stated_value;
    return j;
}

PhiResult phi_star(std::size_t n) { return PhiResult::exact(n == 0 ? 1 : 2, "prop.star"); }

PhiResult phi_star_product(std::size_t n, std::size_t m)
{
    std::tie(n, m) = ordered(n, m);
    if (m >= 2)
        return PhiResult::exact(m + 2, "thm3.1");
    if (n == 0)
        return PhiResult::exact(1, "prop.star");
    return arbitrated(PhiResult::bounds(2, m + 2, "thm3.1"),
                      "the construction needs min(n,m) >= 2; the exact solver decides this case");
}

PhiResult phi_line_star_product(std::size_t n, std::size_t m)
{
    if (n < 1 || m < 1)
        throw HypothesisError("line-graph formula needs n, m >= 1");
    return PhiResult::exact(n + m, "thm3.2");
}

PhiResult phi_total_star_product(std::size_t n, std::size_t m)
{
    std::tie(n, m) = ordered(n, m);
    if (m < 3)
        throw HypothesisError("outside theorem hypothesis: total-graph formula needs n >= m >= 3");
    if (n > 2 * (m - 1))
        return PhiResult::exact(2 * m + n + 1, "thm3.3");
    return PhiResult::exact(2 * n + 3, "thm3.3");
}

PhiResult phi_star_power(std::size_t n, std::size_t k)
{
    if (n < 1 || k < 1)
        throw HypothesisError("star-power formula needs n, k >= 1");
    return PhiResult::exact(k == 1 ? 2 : n + 1, "thm4.1");
}

const std::map<std::pair<std::size_t, std::size_t>, std::size_t>& rook_special_values()
{
    static const std::map<std::pair<std::size_t, std::size_t>, std::size_t> table = {
        {{1, 3}, 3}, {{2, 3}, 3}, {{3, 3}, 3}, {{4, 3}, 5}, {{5, 3}, 6},
    };
    return table;
}

PhiResult phi_star_product_power(std::size_t n, std::size_t m, std::size_t k)
{
    std::tie(n, m) = ordered(n, m);
    if (m < 1 || k < 1)
        throw HypothesisError("power formula needs n >= m >= 1 and k >= 1");
    switch (k) {
    case 1:
        return phi_star_product(n, m);
    case 2:
        return PhiResult::exact(n > m ? m + n + 1 : 2 * n + 2, "thm4.2");
    case 3: {
        const auto& special = rook_special_values();
        if (auto it = special.find({n, m}); it != special.end()) {
            auto r = PhiResult::exact(n + m + 1 + it->second, "thm4.4");
            r.explanation = "hub clique of n+m+1 colors plus the exact rook value " + std::to_string(it->second);
            return r;
        }
        if (n >= m * (m - 1))
            return PhiResult::exact(2 * n + m + 1, "thm4.2");
        auto r = PhiResult::bounds(2 * n + m + 1, m * m + n + 1, "thm4.2");
        r.explanation = "lower bound from the explicit 2n+m+1 coloring; the chromatic number may bind instead";
        return r;
    }
    default:
        return PhiResult::exact(n * m + n + m + 1, "thm4.2");
    }
}

PhiResult phi_rook_bounds(std::size_t n, std::size_t m)
{
    if (auto it = rook_special_values().find({n, m}); it != rook_special_values().end())
        return PhiResult::exact(it->second, "thm4.4");
    std::tie(n, m) = ordered(n, m);
    if (m < 1)
        throw HypothesisError("rook graphs need n, m >= 1");
    if (n >= m * (m - 1))
        return PhiResult::exact(n, "lemma7");
    return PhiResult::bounds(n, m * (m - 1), "lemma7");
}

PhiResult phi_line_star(std::size_t n)
{
    if (n < 1)
        throw HypothesisError("L(S_n) needs n >= 1");
    auto r = PhiResult::exact(n, "prop.line-star");
    r.annotations.push_back("discrepancy");
    r.stated_value = n - 1;
    r.explanation = "L(S_n) is K_n, so the value is n; the stated value is n-1";
    return r;
}

PhiResult phi_total_star(std::size_t n)
{
    if (n < 2)
        throw HypothesisError("total-star formula needs n > 1");
    return PhiResult::exact(n + 1, "prop.total-star");
}

std::string to_string(Family f)
{
    switch (f) {
    case Family::StarProduct:
        return "star_product";
    case Family::LineStarProduct:
        return "line_star_product";
    case Family::TotalStarProduct:
        return "total_star_product";
    case Family::Power2:
        return "power2";
    case Family::Power3:
        return "power3";
    }
    return "unknown";
}

Family parse_family(const std::string& name)
{
    for (auto f : {Family::StarProduct, Family::LineStarProduct, Family::TotalStarProduct, Family::Power2,
                   Family::Power3})
        if (to_string(f) == name)
            return f;
    throw std::invalid_argument("unknown family '" + name + "'");
}

std::size_t m_degree_formula(Family family, std::size_t n, std::size_t m)
{
    std::tie(n, m) = ordered(n, m);
    auto need = [&](bool ok, const char* what) {
        if (!ok)
            throw HypothesisError(to_string(family) + " m-degree formula needs " + what);
    };
    switch (family) {
    case Family::StarProduct:
        need(m >= 2, "n >= m >= 2");
        return m + 2;
    case Family::LineStarProduct:
        need(m >= 2, "n >= m >= 2");
        return m + n;
    case Family::TotalStarProduct:
        need(m >= 3, "n >= m >= 3");
        return n > 2 * (m - 1) ? 2 * m + n + 1 : 2 * n + 3;
    case Family::Power2:
        need(m >= 1, "n >= m >= 1");
        return m + n + 2;
    case Family::Power3:
        need(m >= 2, "n >= m >= 2");
        return 2 * m + 2 * n;
    }
    return 0;
}

nlohmann::json theorem_table(std::size_t n_max)
{
    using nlohmann::json;
    struct Entry {
        const char* id;
        const char* hypothesis;
        const char* formula;
        std::size_t min_m;
        std::function<PhiResult(std::size_t, std::size_t)> f;
    };
    std::vector<Entry> entries = {
        {"thm3.1", "n >= m >= 2", "phi(S_n box S_m) = m+2", 1,
         [](std::size_t n, std::size_t m) { return phi_star_product(n, m); }},
        {"thm3.2", "n, m >= 1", "phi(L(S_n box S_m)) = m+n", 1,
         [](std::size_t n, std::size_t m) { return phi_line_star_product(n, m); }},
        {"thm3.3", "n >= m >= 3", "phi(T(S_n box S_m)) = 2m+n+1 if n > 2(m-1), else 2n+3", 3,
         [](std::size_t n, std::size_t m) { return phi_total_star_product(n, m); }},
        {"thm4.2.k2", "n >= m >= 1", "phi((S_n box S_m)^2) = m+n+1 if n > m, else 2n+2", 1,
         [](std::size_t n, std::size_t m) { return phi_star_product_power(n, m, 2); }},
        {"thm4.2.k3", "n >= m >= 1",
         "phi((S_n box S_m)^3) = 2n+m+1 if n >= m(m-1), else in [2n+m+1, m^2+n+1]", 1,
         [](std::size_t n, std::size_t m) { return phi_star_product_power(n, m, 3); }},
        {"thm4.2.k4", "n >= m >= 1", "phi((S_n box S_m)^k) = nm+n+m+1 for k >= 4", 1,
         [](std::size_t n, std::size_t m) { return phi_star_product_power(n, m, 4); }},
        {"lemma7", "n >= m >= 1", "phi(K_n box K_m) = n if n >= m(m-1), else in [n, m(m-1)]", 1,
         [](std::size_t n, std::size_t m) { return phi_rook_bounds(n, m); }},
    };

    json table = json::array();
    for (const auto& e : entries) {
        json rows = json::array();
        for (std::size_t n = 1; n <= n_max; ++n)
            for (std::size_t m = e.min_m; m <= n; ++m) {
                auto r = e.f(n, m);
                rows.push_back({{"n", n}, {"m", m}, {"result", to_json(r)}});
            }
        table.push_back({{"theorem_id", e.id}, {"hypothesis", e.hypothesis}, {"formula_text", e.formula}, {"rows", rows}});
    }
    json single = json::array();
    for (std::size_t n = 2; n <= n_max; ++n) {
        single.push_back({{"n", n}, {"result", to_json(phi_line_star(n))}});
    }
    table.push_back({{"theorem_id", "prop.line-star"},
                     {"hypothesis", "n >= 1"},
                     {"formula_text", "phi(L(S_n)) = n"},
                     {"rows", single}});
    json powers = json::array();
    for (std::size_t n = 1; n <= n_max; ++n)
        for (std::size_t k = 1; k <= 3; ++k)
            powers.push_back({{"n", n}, {"k", k}, {"result", to_json(phi_star_power(n, k))}});
    table.push_back({{"theorem_id", "thm4.1"},
                     {"hypothesis", "n, k >= 1"},
                     {"formula_text", "phi(S_n^k) = 2 if k = 1, else n+1"},
                     {"rows", powers}});
    return {{"schema", "bchroma/1"}, {"theorems", table}};
}

} // namespace bchroma
