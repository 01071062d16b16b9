#include "tightsf/classifier.hpp"

#include "tightsf/contfrac.hpp"
#include "tightsf/floer.hpp"

namespace tightsf {

const char* to_string(CountStatus s)
{
    switch (s) {
    case CountStatus::exact:
        return "Exact";
    case CountStatus::infinite:
        return "Infinite";
    case CountStatus::unknown:
        return "Unknown";
    }
    return "?";
}

std::string Fillability::str() const
{
    switch (kind) {
    case Kind::all_stein:
        return "AllStein";
    case Kind::mixed:
        return "Mixed";
    case Kind::torsion:
        return "Torsion";
    case Kind::not_applicable:
        return "NotApplicable";
    }
    return "?";
}

namespace {

Slope minus_inverse(const Rational& r)
{
    return Slope(Int(-r.get_den()), r.get_num());
}

void fill_counts(const SeifertData& sd, Certificate& cert)
{
    cert.t_product = 1;
    cert.shortcut_product = 1;
    for (std::size_t i = 0; i < 3; ++i) {
        cert.t_values[i] = t_count(sd.r[i]);
        cert.t_product *= cert.t_values[i];
        Slope shifted = evaluate(reverse_shift(expand(minus_inverse(sd.r[i]))));
        cert.shortcut_product *= honda_count(shifted);
    }
}

}  // namespace

ClassificationResult classify(const SeifertData& sd)
{
    ClassificationResult out;
    Certificate& cert = out.certificate;
    cert.tags = detect_family(sd);
    fill_counts(sd, cert);
    const FamilyTag lead = cert.tags.front();

    switch (lead.kind) {
    case FamilyKind::wrong_e0:
        cert.case_tag = "WrongE0";
        cert.note = "e0 = " + sd.e0.get_str() + "; only e0 = -2 is handled";
        return out;

    case FamilyKind::torus_bundle:
        cert.case_tag = "TorusBundle";
        cert.note = "torus bundle over the circle: infinitely many tight structures "
                    "distinguished by Giroux torsion, at most one Stein fillable";
        out.status = CountStatus::infinite;
        out.fillability.kind = Fillability::Kind::torsion;
        return out;

    case FamilyKind::thm2_family: {
        const long n = lead.parameter;
        UpperBound bound = mn_upper_bound(n);
        long obstructed = 0;
        const auto indices = index_set(n);
        for (const ContactIndex& idx : indices)
            if (stein_obstructed(idx))
                ++obstructed;
        cert.case_tag = "Thm2";
        cert.per_k = bound.per_k;
        cert.index_count = static_cast<long>(indices.size());
        cert.obstructed_count = obstructed;
        if (bound.total != Int(static_cast<long>(indices.size())))
            throw Error("upper bound and index set disagree for n = " + std::to_string(n));
        out.status = CountStatus::exact;
        out.count = bound.total;
        // n = 1: the single structure is Stein fillable
        out.fillability.kind = bound.total == n ? Fillability::Kind::all_stein : Fillability::Kind::mixed;
        out.fillability.stein_lower = n;
        out.fillability.non_stein_lower = obstructed;
        out.fillability.all_strong = true;
        return out;
    }

    case FamilyKind::thm1_case3:
        cert.case_tag = "Thm1Case3";
        out.status = CountStatus::exact;
        out.count = cert.t_product;
        out.fillability.kind = Fillability::Kind::all_stein;
        return out;

    case FamilyKind::sum_ge_9_4:
    case FamilyKind::sum_lt_2: {
        cert.case_tag = lead.kind == FamilyKind::sum_ge_9_4 ? "SumGE9over4" : "SumLT2";
        SlopeCoeffs k = slope_coeffs(sd);
        cert.coeffs = k;
        cert.limit = limit_analysis(k, sd);
        if (!cert.limit->threshold_ok)
            cert.imbalance = imbalance_check(sd);
        if (cert.t_product != cert.shortcut_product)
            throw Error("T-product and solid torus assembly disagree for " + to_string(sd));
        out.status = CountStatus::exact;
        out.count = cert.t_product;
        out.fillability.kind = Fillability::Kind::all_stein;
        return out;
    }

    case FamilyKind::degenerate_sum_2:
        cert.case_tag = "DegenerateSum2";
        cert.note = "higher genus periodic surface bundle; no classification available";
        return out;

    case FamilyKind::gap_other:
        cert.case_tag = "GapOther";
        cert.note = "2 < r1 + r2 + r3 < 9/4 outside the known families";
        return out;
    }
    return out;
}

}  // namespace tightsf
