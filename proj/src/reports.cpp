#include "tightsf/reports.hpp"

#include "tightsf/classifier.hpp"
#include "tightsf/contfrac.hpp"
#include "tightsf/convex_calc.hpp"
#include "tightsf/farey.hpp"
#include "tightsf/floer.hpp"
#include "tightsf/seifert.hpp"
#include "tightsf/selftest.hpp"
#include "tightsf/theta.hpp"

#include <sstream>

namespace tightsf {

std::string Report::json() const
{
    Json argv = Json::array();
    for (const std::string& a : args)
        argv.push(a);
    Json env = Json::object();
    env.set("schema", kReportSchema)
        .set("version", kVersion)
        .set("command", command)
        .set("args", std::move(argv))
        .set("exact", true)
        .set("result", result);
    return env.dump(2) + "\n";
}

namespace {

Json int_array(const std::vector<Int>& xs)
{
    Json a = Json::array();
    for (const Int& x : xs)
        a.push(x);
    return a;
}

Json matrix_json(const IntMatrix& m)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push(m(i, j));
        rows.push(std::move(row));
    }
    return rows;
}

Json unimat_json(const UniMat& m)
{
    return Json(Json::Array{Json(Json::Array{m.a(), m.b()}), Json(Json::Array{m.c(), m.d()})});
}

Json coeffs_json(const SlopeCoeffs& k)
{
    return Json::object().set("A", to_json(k.A)).set("C", to_json(k.C)).set("F", to_json(k.F)).set("D", to_json(k.D));
}

Json limit_json(const LimitAnalysis& l)
{
    return Json::object()
        .set("limit", to_json(l.limit))
        .set("increasing", l.increasing)
        .set("constant", l.constant)
        .set("threshold", to_json(l.threshold))
        .set("threshold_ok", l.threshold_ok)
        .set("threshold_rule", l.threshold_rule)
        .set("window", Json::Array{Json(-1L), Json(-kLimitWindow)});
}

Json tags_json(const std::vector<FamilyTag>& tags)
{
    Json a = Json::array();
    for (const FamilyTag& t : tags)
        a.push(t.str());
    return a;
}

std::string tags_text(const std::vector<FamilyTag>& tags)
{
    std::string out;
    for (const FamilyTag& t : tags)
        out += (out.empty() ? "" : ", ") + t.str();
    return out;
}

std::string rational_text(const Rational& x)
{
    return to_string(x);
}

Int parse_twisting(std::string_view text, const char* name)
{
    try {
        return parse_int(text);
    } catch (const ParseError&) {
        throw ParseError(std::string(name) + " must be an integer, got '" + std::string(text) + "'");
    }
}

}  // namespace

Report cf_report(std::string_view slope_text)
{
    const Slope x = Slope::parse(slope_text);
    const NegContFrac cf = expand(x);
    const Convergents c = convergents(x);
    const NegContFrac shifted = reverse_shift(cf);
    const Slope shifted_value = evaluate(shifted);
    const Rational r(c.p, c.q);
    const Int t = t_count(r);
    const Int honda = honda_count(shifted_value);

    Report rep{"cf", {std::string(slope_text)}, Json::object(), {}, 0};
    rep.result.set("input", x.str())
        .set("value", to_json(x))
        .set("r", to_json(r))
        .set("entries", int_array(cf.entries))
        .set("p", c.p)
        .set("q", c.q)
        .set("u", c.u)
        .set("v", c.v)
        .set("t", t)
        .set("reverse_shift", Json::object()
                                  .set("entries", int_array(shifted.entries))
                                  .set("value", to_json(shifted_value))
                                  .set("honda_count", honda));

    std::ostringstream os;
    os << "slope        " << x.str() << "  (r = " << rational_text(r) << ")\n"
       << "expansion    " << cf.str() << "\n"
       << "convergents  p=" << c.p << " q=" << c.q << " u=" << c.u << " v=" << c.v
       << "  (pv - qu = " << Int(c.p * c.v - c.q * c.u) << ")\n"
       << "T(r)         " << t << "\n"
       << "reverse      " << shifted.str() << " = " << shifted_value.str() << ", solid torus count " << honda << "\n";
    rep.text = os.str();
    return rep;
}

Report bypass_report(std::string_view dividing_text, std::string_view ruling_text, std::string_view side_text,
                     bool oracle)
{
    const Slope dividing = Slope::parse(dividing_text);
    const Slope ruling = Slope::parse(ruling_text);
    const Side side = parse_side(side_text);
    const Slope fast = bypass_attach(dividing, ruling, side);

    Report rep{"bypass",
               {"--dividing", std::string(dividing_text), "--ruling", std::string(ruling_text), "--side",
                std::string(side_text)},
               Json::object(),
               {},
               0};
    if (oracle)
        rep.args.push_back("--oracle");
    rep.result.set("dividing", to_json(dividing))
        .set("ruling", to_json(ruling))
        .set("side", to_string(side))
        .set("result", to_json(fast))
        .set("result_text", fast.str())
        .set("farey_edge", farey_edge(fast, dividing));

    std::ostringstream os;
    os << "dividing " << dividing.str() << ", ruling " << ruling.str() << ", " << to_string(side) << " bypass\n"
       << "new dividing slope  " << fast.str() << "\n";
    if (oracle) {
        const Slope checked = bypass_oracle(dividing, ruling, side);
        rep.result.set("oracle", to_json(checked)).set("agree", checked == fast);
        os << "oracle              " << checked.str() << (checked == fast ? "  (agrees)" : "  (DISAGREES)") << "\n";
        if (!(checked == fast))
            rep.exit_code = 1;
    }
    rep.text = os.str();
    return rep;
}

Report seifert_report(std::string_view spec)
{
    const SeifertData sd = parse_seifert(spec);
    const Int h1 = h1_order(sd);
    const IntMatrix link = linking_matrix(sd);
    const auto tags = detect_family(sd);

    Json r = Json::array(), p = Json::array(), q = Json::array(), u = Json::array(), v = Json::array();
    Json attaching = Json::array();
    for (std::size_t i = 0; i < 3; ++i) {
        r.push(to_json(sd.r[i]));
        p.push(sd.conv[i].p);
        q.push(sd.conv[i].q);
        u.push(sd.conv[i].u);
        v.push(sd.conv[i].v);
        attaching.push(unimat_json(sd.attaching[i]));
    }
    Report rep{"seifert", {std::string(spec)}, Json::object(), {}, 0};
    rep.result.set("input", std::string(spec))
        .set("normalized", to_string(sd))
        .set("e0", sd.e0)
        .set("r", std::move(r))
        .set("p", std::move(p))
        .set("q", std::move(q))
        .set("u", std::move(u))
        .set("v", std::move(v))
        .set("attaching", std::move(attaching))
        .set("sum", to_json(sd.invariant_sum()))
        .set("family", tags_json(tags))
        .set("h1", h1)
        .set("matrix", matrix_json(link));

    std::ostringstream os;
    os << "manifold     " << to_string(sd) << "\n"
       << "e0           " << sd.e0 << "\n"
       << "sum r_i      " << rational_text(sd.invariant_sum()) << "\n";
    for (std::size_t i = 0; i < 3; ++i) {
        const Convergents& c = sd.conv[i];
        os << "r" << i + 1 << " = " << rational_text(sd.r[i]) << "   p=" << c.p << " q=" << c.q << " u=" << c.u
           << " v=" << c.v << "   A" << i + 1 << " = " << sd.attaching[i].str() << "\n";
    }
    os << "family       " << tags_text(tags) << "\n"
       << "|H1|         " << (h1 == 0 ? std::string("infinite (b1 > 0)") : h1.get_str()) << "\n"
       << "linking matrix (" << link.rows() << "x" << link.cols() << ")\n";
    for (std::size_t i = 0; i < link.rows(); ++i) {
        os << "  ";
        for (std::size_t j = 0; j < link.cols(); ++j) {
            std::string cell = link(i, j).get_str();
            os << std::string(cell.size() < 3 ? 3 - cell.size() : 0, ' ') << cell;
        }
        os << "\n";
    }
    rep.text = os.str();
    return rep;
}

Report slopes_report(std::string_view spec, std::string_view n1_text, std::optional<std::string> n2_text,
                     std::optional<std::string> n3_text)
{
    const SeifertData sd = parse_seifert(spec);
    const Int n1 = parse_twisting(n1_text, "--n1");
    if (n1 >= 0)
        throw DomainError("--n1 must be negative");

    Report rep{"slopes", {std::string(spec), "--n1", std::string(n1_text)}, Json::object(), {}, 0};
    std::ostringstream os;
    rep.result.set("normalized", to_string(sd)).set("n1", n1);
    os << "manifold     " << to_string(sd) << "\n";

    Json measured = Json::object();
    const Slope s1 = measured_slope(1, sd, n1);
    measured.set("s1", to_json(s1));
    os << "s1(n1=" << n1 << ")     " << s1.str() << "\n";

    const auto stepped = s_n1_stepwise(sd, n1);
    std::optional<Int> n2;
    if (n2_text) {
        rep.args.insert(rep.args.end(), {"--n2", *n2_text});
        n2 = parse_twisting(*n2_text, "--n2");
    } else if (stepped) {
        n2 = stepped->n2;
    }
    if (n2) {
        const Slope s2 = measured_slope(2, sd, *n2);
        measured.set("n2", *n2).set("s2", to_json(s2));
        os << "s2(n2=" << *n2 << ")     " << s2.str() << "\n";
    }
    if (n3_text) {
        rep.args.insert(rep.args.end(), {"--n3", *n3_text});
        const Int n3 = parse_twisting(*n3_text, "--n3");
        const Slope s3 = measured_slope(3, sd, n3);
        measured.set("n3", n3).set("s3", to_json(s3));
        os << "s3(n3=" << n3 << ")     " << s3.str() << "\n";
    }
    rep.result.set("measured", std::move(measured));

    const SlopeCoeffs k = slope_coeffs(sd);
    const Slope closed = s_n1(k, sd, n1);
    rep.result.set("coeffs", coeffs_json(k)).set("s_n1", to_json(closed));
    os << "A = " << rational_text(k.A) << "  C = " << rational_text(k.C) << "  F = " << rational_text(k.F)
       << "  D = " << rational_text(k.D) << "\n"
       << "s_n1 on dV3  " << closed.str() << "\n";

    if (stepped) {
        rep.result.set("stepwise", Json::object()
                                       .set("n2", stepped->n2)
                                       .set("rounded", to_json(stepped->rounded))
                                       .set("on_v3", to_json(stepped->on_v3))
                                       .set("agrees", stepped->on_v3 == closed));
        os << "edge rounding (n2=" << stepped->n2 << ")  " << stepped->rounded.str() << " -> " << stepped->on_v3.str()
           << (stepped->on_v3 == closed ? "  (matches closed form)" : "  (MISMATCH)") << "\n";
    } else {
        rep.result.set("stepwise", nullptr);
        os << "edge rounding  no n2 < 0 balances q1 n1 + v1 = q2 n2 + v2\n";
    }

    if (k.A >= 0 && k.A < Rational(1, 4)) {
        rep.result.set("limit", nullptr);
        os << "limit        not analysed: A in [0, 1/4)\n";
    } else {
        const LimitAnalysis l = limit_analysis(k, sd);
        rep.result.set("limit", limit_json(l));
        os << "limit        " << l.limit.str() << (l.increasing ? "  increasing" : "  not increasing")
           << (l.constant ? " (constant)" : "") << " as n1 -> -inf\n"
           << "threshold    " << l.threshold.str() << "  limit <= threshold: " << (l.threshold_ok ? "yes" : "no")
           << "  rule: " << (l.threshold_rule ? "yes" : "no") << "\n";
    }
    rep.text = os.str();
    return rep;
}

Report floer_report(long n, std::optional<std::pair<long, long>> index)
{
    if (n < 1)
        throw DomainError("--n must be >= 1");
    Report rep{"floer", {"--n", std::to_string(n)}, Json::object(), {}, 0};
    std::ostringstream os;

    std::vector<ContactIndex> indices;
    if (index) {
        rep.args.insert(rep.args.end(), {"--index", std::to_string(index->first) + "," + std::to_string(index->second)});
        ContactIndex idx{n, index->first, index->second};
        if (!idx.valid())
            throw DomainError("invalid contact index " + idx.str());
        indices.push_back(idx);
    } else {
        indices = index_set(n);
    }

    Json grid = Json::array();
    for (long jp : ExpansionVector(n).grid())
        grid.push(jp);

    Json table = Json::array();
    Json obstructed = Json::array();
    long stein = 0;
    os << "M_n with n = " << n << ": " << index_set(n).size() << " contact structures, theta = " << kThetaMn
       << ", class degree " << kContactClassDegree << "\n"
       << "basis c(xi_0,j') for j' in";
    for (long jp : ExpansionVector(n).grid())
        os << " " << jp;
    os << "\n";
    for (const ContactIndex& idx : indices) {
        const ExpansionVector v = expansion(idx);
        const HalfLaurent image = laurent_image(idx);
        const bool blocked = stein_obstructed(idx);
        const Int sign = idx.i % 2 ? -1 : 1;
        bool image_matches = true;
        for (long jp : v.grid())
            image_matches = image_matches && image.coefficient(jp) == sign * v.at(jp);
        if (idx.i == 0)
            ++stein;
        if (blocked)
            obstructed.push(Json::Array{Json(idx.i), Json(idx.j)});
        table.push(Json::object()
                       .set("i", idx.i)
                       .set("j", idx.j)
                       .set("coefficients", int_array(v.coefficients()))
                       .set("laurent", image.str())
                       .set("laurent_matches", image_matches)
                       .set("stein_fillable", idx.i == 0)
                       .set("stein_obstructed", blocked));
        os << "  (" << idx.i << "," << idx.j << ")  [";
        for (std::size_t k = 0; k < v.coefficients().size(); ++k)
            os << (k ? " " : "") << v.coefficients()[k];
        os << "]  " << image.str() << (idx.i == 0 ? "  Stein" : "") << (blocked ? "  not Stein fillable" : "")
           << "\n";
    }
    const bool distinct = pairwise_distinct(n);
    rep.result.set("n", n)
        .set("theta", kThetaMn)
        .set("degree", kContactClassDegree)
        .set("grid", std::move(grid))
        .set("classes", std::move(table))
        .set("distinct", distinct)
        .set("obstructed", std::move(obstructed))
        .set("stein_count", stein);
    os << "pairwise distinct: " << (distinct ? "yes" : "no") << "\n";
    rep.text = os.str();
    return rep;
}

Report theta_report(std::string_view diagram_json)
{
    const SurgeryDiagram d = parse_diagram_json(diagram_json);
    const ThetaValue v = theta(d);
    Report rep{"theta", {}, Json::object(), {}, 0};
    rep.result.set("m", static_cast<long>(d.size()))
        .set("c1sq", to_json(v.c1_squared))
        .set("sigma", v.sigma)
        .set("chi", v.chi)
        .set("theta", to_json(v.theta));
    std::ostringstream os;
    os << "2-handles  " << d.size() << "\n"
       << "c1^2       " << rational_text(v.c1_squared) << "\n"
       << "sigma      " << v.sigma << "\n"
       << "chi        " << v.chi << "\n"
       << "theta      " << rational_text(v.theta) << "\n";
    rep.text = os.str();
    return rep;
}

Report classify_report(std::string_view spec)
{
    const SeifertData sd = parse_seifert(spec);
    const ClassificationResult res = classify(sd);
    const Certificate& cert = res.certificate;

    Json normalized = Json::array();
    for (const Rational& r : sd.r)
        normalized.push(to_json(r));

    Json fill = Json::object().set("kind", res.fillability.str());
    if (res.fillability.all_strong)
        fill.set("stein_lower", res.fillability.stein_lower)
            .set("non_stein_lower", res.fillability.non_stein_lower)
            .set("all_strong", res.fillability.all_strong);
    if (res.fillability.kind == Fillability::Kind::torsion)
        fill.set("stein_fillable_at_most", 1).set("torsion_free_stein", true);

    Json t_values = Json::array();
    for (const Int& t : cert.t_values)
        t_values.push(t);
    Json certificate = Json::object();
    certificate.set("case", cert.case_tag)
        .set("tags", tags_json(cert.tags))
        .set("t_values", std::move(t_values))
        .set("t_product", cert.t_product)
        .set("shortcut_product", cert.shortcut_product);
    if (cert.coeffs)
        certificate.set("coeffs", coeffs_json(*cert.coeffs));
    if (cert.limit)
        certificate.set("limit", limit_json(*cert.limit));
    if (cert.imbalance)
        certificate.set("imbalance", Json::object()
                                         .set("step", cert.imbalance->equal_denominators ? "I" : "II")
                                         .set("bound", cert.imbalance->bound)
                                         .set("below", cert.imbalance->below)
                                         .set("holds", cert.imbalance->holds));
    if (!cert.per_k.empty()) {
        Json per_k = Json::array();
        for (const UpperBoundTerm& term : cert.per_k)
            per_k.push(Json::object()
                           .set("k", term.k)
                           .set("twisting", term.twisting)
                           .set("rounded", to_json(term.rounded))
                           .set("boundary", to_json(term.boundary))
                           .set("count", term.count));
        certificate.set("per_k", std::move(per_k));
    }
    if (cert.index_count)
        certificate.set("index_count", *cert.index_count);
    if (cert.obstructed_count)
        certificate.set("obstructed_count", *cert.obstructed_count);
    if (!cert.note.empty())
        certificate.set("note", cert.note);

    Report rep{"classify", {std::string(spec)}, Json::object(), {}, 0};
    rep.result.set("input", std::string(spec))
        .set("normalized", std::move(normalized))
        .set("manifold", to_string(sd))
        .set("e0", sd.e0)
        .set("sum", to_json(sd.invariant_sum()))
        .set("status", to_string(res.status));
    if (res.count)
        rep.result.set("count", *res.count);
    rep.result.set("fillability", std::move(fill)).set("certificate", std::move(certificate));
    rep.exit_code = res.status == CountStatus::unknown ? 2 : 0;

    std::ostringstream os;
    os << "manifold     " << to_string(sd) << "\n"
       << "sum r_i      " << rational_text(sd.invariant_sum()) << "\n"
       << "case         " << cert.case_tag << "  [" << tags_text(cert.tags) << "]\n"
       << "status       " << to_string(res.status);
    if (res.count)
        os << "  count = " << *res.count;
    os << "\n"
       << "fillability  " << res.fillability.str();
    if (res.fillability.all_strong)
        os << "  (>= " << res.fillability.stein_lower << " Stein, >= " << res.fillability.non_stein_lower
           << " not Stein, all strongly fillable)";
    os << "\n"
       << "T(r_i)       " << cert.t_values[0] << " " << cert.t_values[1] << " " << cert.t_values[2]
       << "  product " << cert.t_product << ", solid torus assembly " << cert.shortcut_product << "\n";
    if (cert.limit)
        os << "limit        " << cert.limit->limit.str() << ", threshold " << cert.limit->threshold.str()
           << ", limit <= threshold: " << (cert.limit->threshold_ok ? "yes" : "no") << "\n";
    if (cert.imbalance)
        os << "imbalance    step " << (cert.imbalance->equal_denominators ? "I" : "II") << ": |q1 n1 + v1| > "
           << cert.imbalance->bound << " for n1 < -" << cert.imbalance->below << ": "
           << (cert.imbalance->holds ? "holds" : "FAILS") << "\n";
    for (const UpperBoundTerm& term : cert.per_k)
        os << "  k=" << term.k << "  tw=" << term.twisting << "  rounded " << term.rounded.str() << "  dV3 slope "
           << term.boundary.str() << "  count " << term.count << "\n";
    if (!cert.note.empty())
        os << "note         " << cert.note << "\n";
    rep.text = os.str();
    return rep;
}

Report selftest_report()
{
    const auto suites = run_selftest();
    Report rep{"selftest", {}, Json::object(), {}, 0};
    Json list = Json::array();
    std::ostringstream os;
    bool all = true;
    for (const SuiteResult& s : suites) {
        all = all && s.passed;
        list.push(Json::object()
                      .set("name", s.name)
                      .set("passed", s.passed)
                      .set("cases", s.cases)
                      .set("detail", s.detail));
        os << (s.passed ? "PASS  " : "FAIL  ") << s.name << "  (" << s.cases << " cases)";
        if (!s.detail.empty())
            os << "  " << s.detail;
        os << "\n";
    }
    rep.result.set("suites", std::move(list)).set("passed", all);
    os << (all ? "all suites passed" : "some suites FAILED") << "\n";
    rep.exit_code = all ? 0 : 1;
    rep.text = os.str();
    return rep;
}

}  // namespace tightsf
