#pragma once

// Count of tight contact structures on M(-2; r1, r2, r3), where known, with
// the data that justifies the count.

#include "tightsf/convex_calc.hpp"
#include "tightsf/seifert.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace tightsf {

enum class CountStatus { exact, infinite, unknown };

const char* to_string(CountStatus s);

struct Fillability {
    enum class Kind { all_stein, mixed, torsion, not_applicable };
    Kind kind = Kind::not_applicable;
    Int stein_lower = 0;       // mixed
    Int non_stein_lower = 0;   // mixed
    bool all_strong = false;   // mixed

    std::string str() const;
};

struct Certificate {
    std::string case_tag;
    std::vector<FamilyTag> tags;
    std::array<Int, 3> t_values;
    Int t_product;
    /// prod honda_count(eval(reverse_shift(expand(-1/r_i))))
    Int shortcut_product;
    std::optional<SlopeCoeffs> coeffs;
    std::optional<LimitAnalysis> limit;
    std::optional<ImbalanceCheck> imbalance;
    std::vector<UpperBoundTerm> per_k;
    std::optional<long> index_count;        // |index_set(n)|
    std::optional<long> obstructed_count;   // stein_obstructed over index_set(n)
    std::string note;
};

struct ClassificationResult {
    CountStatus status = CountStatus::unknown;
    std::optional<Int> count;
    Fillability fillability;
    Certificate certificate;
};

ClassificationResult classify(const SeifertData& sd);

}  // namespace tightsf
