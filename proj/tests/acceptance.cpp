// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "tightsf/classifier.hpp"
#include "tightsf/contfrac.hpp"
#include "tightsf/convex_calc.hpp"
#include "tightsf/farey.hpp"
#include "tightsf/floer.hpp"
#include "tightsf/linalg.hpp"
#include "tightsf/seifert.hpp"
#include "tightsf/theta.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>

using namespace tightsf;

namespace {

class Tally {
public:
    void check(bool ok, const std::function<std::string()>& what)
    {
        ++cases_;
        if (!ok && first_failure_.empty())
            first_failure_ = what();
        failed_ = failed_ || !ok;
    }
    bool passed() const { return !failed_; }
    long cases() const { return cases_; }
    const std::string& failure() const { return first_failure_; }

private:
    bool failed_ = false;
    long cases_ = 0;
    std::string first_failure_;
};

std::vector<Rational> fractions(long qmax)
{
    std::vector<Rational> out;
    for (long q = 2; q <= qmax; ++q)
        for (long p = 1; p < q; ++p)
            if (std::gcd(p, q) == 1)
                out.emplace_back(p, q);
    return out;
}

template <class F>
void each_triple(const std::vector<Rational>& fr, F&& f)
{
    for (std::size_t a = 0; a < fr.size(); ++a)
        for (std::size_t b = a; b < fr.size(); ++b)
            for (std::size_t c = b; c < fr.size(); ++c)
                f(fr[a], fr[b], fr[c]);
}

bool same_line(const Slope& a, const Slope& b)
{
    auto [x1, y1] = slope_vec(a);
    auto [x2, y2] = slope_vec(b);
    return x1 * y2 == x2 * y1;
}

std::string str(long n)
{
    return std::to_string(n);
}

void criterion1(Tally& t)
{
    for (long n = 1; n <= 20; ++n) {
        const ClassificationResult r = classify(mn_manifold(n));
        t.check(r.status == CountStatus::exact && r.count && *r.count == n * (n + 1) / 2 &&
                    r.fillability.stein_lower == n && r.fillability.non_stein_lower == n / 2,
                [&] { return "n = " + str(n); });
    }
}

void criterion2(Tally& t)
{
    each_triple(fractions(12), [&](const Rational& a, const Rational& b, const Rational& c) {
        const Rational sum = a + b + c;
        if (sum >= 2 && sum < Rational(9, 4))
            return;
        const SeifertData sd = normalize({a, b, c}, Int(-2));
        const ClassificationResult r = classify(sd);
        const Int product = t_count(a) * t_count(b) * t_count(c);
        Int assembled = 1;
        for (const Rational& x : {a, b, c})
            assembled *= honda_count(evaluate(reverse_shift(expand(Slope(Int(-x.get_den()), x.get_num())))));
        t.check(r.status == CountStatus::exact && r.count && *r.count == product && assembled == product,
                [&] { return to_string(sd); });
    });
}

void criterion3(Tally& t)
{
    auto count_of = [](const char* s) { return classify(parse_seifert(s)); };
    const auto a = count_of("-2;1/2,2/3,6/7");
    t.check(a.status == CountStatus::exact && a.count && *a.count == 1, [] { return "(1/2, 2/3, 6/7)"; });
    const auto b = count_of("-2;1/2,2/3,9/11");
    t.check(b.status == CountStatus::exact && b.count && *b.count == 2, [] { return "(1/2, 2/3, 9/11)"; });
    for (const char* s : {"-2;1/2,3/4,3/4", "-2;1/2,2/3,5/6", "-2;2/3,2/3,2/3"})
        t.check(count_of(s).status == CountStatus::infinite, [&] { return std::string(s); });
}

void criterion4(Tally& t)
{
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<long> den(2, 40);
    auto random_fraction = [&](long qlo, long qhi) {
        const long q = std::uniform_int_distribution<long>(qlo, qhi)(rng);
        long p;
        do
            p = std::uniform_int_distribution<long>(1, q - 1)(rng);
        while (std::gcd(p, q) != 1);
        return Rational(p, q);
    };
    long found = 0;
    for (long attempt = 0; found < 500 && attempt < 200000; ++attempt) {
        const SeifertData sd = normalize({random_fraction(2, 40), random_fraction(2, 40), random_fraction(2, 40)}, Int(-2));
        const Int n1 = -std::uniform_int_distribution<long>(1, 80)(rng);
        const auto stepped = s_n1_stepwise(sd, n1);
        if (!stepped)
            continue;
        ++found;
        t.check(s_n1(slope_coeffs(sd), sd, n1) == stepped->on_v3,
                [&] { return "closed form at " + to_string(sd) + ", n1 = " + n1.get_str(); });
    }
    t.check(found == 500, [&] { return "only " + str(found) + " admissible tuples"; });

    for (long k = 6; k <= 12; ++k) {
        const SeifertData sd = normalize({Rational(1, 2), Rational(2, 3), Rational(k, k + 1)}, Int(-2));
        const SlopeCoeffs c = slope_coeffs(sd);
        for (long n1 = -1; n1 >= -50; --n1)
            t.check(same_line(s_n1(c, sd, Int(n1)),
                              Slope::from_vector(Int((k - 6) * n1 + k - 3), Int(-((k - 5) * n1 + k - 2)))),
                    [&] { return "k = " + str(k) + ", n1 = " + str(n1); });
    }

    long guides = 0;
    while (guides < 20) {
        const Rational r = random_fraction(7, 200);
        if (r < Rational(4, 5) || r >= Rational(5, 6))
            continue;
        ++guides;
        const SeifertData sd = normalize({Rational(1, 2), Rational(2, 3), r}, Int(-2));
        const SlopeCoeffs c = slope_coeffs(sd);
        const Convergents& c3 = sd.conv[2];
        for (long n1 = -1; n1 >= -50; --n1) {
            const Slope want = Slope::from_vector(Int((5 * c3.v - 6 * c3.u) * n1 + 2 * c3.v - 3 * c3.u),
                                                  Int((6 * c3.p - 5 * c3.q) * n1 + 3 * c3.p - 2 * c3.q));
            t.check(same_line(s_n1(c, sd, Int(n1)), want),
                    [&] { return "r3 = " + to_string(r) + ", n1 = " + str(n1); });
        }
    }
}

void criterion5(Tally& t)
{
    for (long n = 1; n <= 20; ++n) {
        const SeifertData sd = mn_manifold(n);
        Int total = 0;
        for (long k = 0; k <= n - 1; ++k) {
            const Slope s1 = measured_slope(1, sd, Int(-3 * k - 1));
            const Slope s2 = measured_slope(2, sd, Int(-2 * k - 1));
            const Slope rounded = rounded_slope(s1, s2, Int(-6 * k - 1));
            const Slope boundary = to_v3_coordinates(sd, rounded);
            t.check(rounded == Slope(Int(-k), Int(6 * k + 1)) && boundary == Slope(k - n),
                    [&] { return "n = " + str(n) + ", k = " + str(k); });
            total += honda_count(boundary);
        }
        t.check(total == n * (n + 1) / 2 && mn_upper_bound(n).total == total,
                [&] { return "total at n = " + str(n); });
    }
}

void criterion6(Tally& t)
{
    for (const Rational& r : fractions(100)) {
        const Slope x(Int(-r.get_den()), r.get_num());
        const NegContFrac cf = expand(x);
        const Convergents c = convergents(x);
        t.check(cf.is_canonical() && evaluate(cf) == x, [&] { return "eval(expand(" + x.str() + "))"; });
        t.check(c.p * c.v - c.q * c.u == 1 && c.p >= c.u && c.u >= 0 && c.q >= c.v && c.v > 0,
                [&] { return "convergents of " + x.str(); });
        t.check(evaluate(reverse_shift(cf)) == Slope(Int(c.p - c.q), Int(c.v - c.u)),
                [&] { return "reverse shift of " + x.str(); });
    }
    for (long n = 2; n <= 30; ++n) {
        std::vector<Int> want{-2, -2, -2, -2, -3};
        want.resize(want.size() + static_cast<std::size_t>(n - 2), Int(-2));
        t.check(expand(Slope(Int(-(6 * n - 1)), Int(5 * n - 1))).entries == want, [&] { return "n = " + str(n); });
    }
}

void criterion7(Tally& t)
{
    std::vector<Slope> slopes{Slope::infinity()};
    for (long q = 1; q <= 30; ++q)
        for (long p = -q; p <= q; ++p)
            if (std::gcd(p, q) == 1)
                slopes.emplace_back(Int(p), Int(q));
    auto compare = [&](const Slope& d, const Slope& r) {
        for (Side side : {Side::front, Side::back})
            t.check(bypass_attach(d, r, side) == bypass_oracle(d, r, side),
                    [&] { return d.str() + " / " + r.str() + " " + to_string(side); });
    };
    for (const Slope& d : slopes)
        for (const Slope& r : slopes)
            if (!(d == r))
                compare(d, r);

    std::mt19937_64 rng(50);
    std::uniform_int_distribution<long> den(1, 50);
    for (long added = 0; added < 1000;) {
        const long q1 = den(rng), q2 = den(rng);
        const Slope d{Int(std::uniform_int_distribution<long>(-3 * q1, 3 * q1)(rng)), Int(q1)};
        const Slope r{Int(std::uniform_int_distribution<long>(-3 * q2, 3 * q2)(rng)), Int(q2)};
        if (d == r)
            continue;
        compare(d, r);
        ++added;
    }
}

void criterion8(Tally& t)
{
    for (long n = 1; n <= 15; ++n) {
        for (const ContactIndex& idx : index_set(n)) {
            const ExpansionVector v = expansion(idx);
            const HalfLaurent image = laurent_image(idx);
            const Int sign = idx.i % 2 ? -1 : 1;
            bool ok = true;
            for (long jp : v.grid())
                ok = ok && image.coefficient(jp) == sign * v.at(jp);
            for (const auto& term : image.terms())
                ok = ok && v.on_grid(term.first);
            t.check(ok, [&] { return "image of " + idx.str(); });
        }
        t.check(pairwise_distinct(n), [&] { return "distinct at n = " + str(n); });
    }
    for (long n = 1; n <= 30; ++n) {
        const auto idx = index_set(n);
        t.check(std::count_if(idx.begin(), idx.end(), stein_obstructed) == n / 2,
                [&] { return "obstructed count at n = " + str(n); });
    }
}

void criterion9(Tally& t)
{
    t.check(theta(SurgeryDiagram{}).theta == -2, [] { return "empty diagram"; });
    t.check(theta(SurgeryDiagram{e8_matrix(), std::vector<Int>(8, Int(0))}).theta == 6, [] { return "E8"; });

    std::mt19937_64 rng(9);
    std::uniform_int_distribution<long> entry(-3, 3);
    std::uniform_int_distribution<std::size_t> size(1, 6);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t m = size(rng);
        IntMatrix l = IntMatrix::square(m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i; j < m; ++j)
                l(i, j) = l(j, i) = entry(rng);
        IntMatrix p = IntMatrix::square(m);
        for (std::size_t i = 0; i < m; ++i)
            p(i, i) = 1;
        std::uniform_int_distribution<std::size_t> pick(0, m - 1);
        for (std::size_t step = 0; step < 3 * m; ++step) {
            IntMatrix e = IntMatrix::square(m);
            for (std::size_t i = 0; i < m; ++i)
                e(i, i) = 1;
            const std::size_t a = pick(rng), b = pick(rng);
            if (a == b)
                e(a, a) = -1;
            else
                e(a, b) = entry(rng);
            p = multiply(p, e);
        }
        const IntMatrix moved = multiply(transpose(p), multiply(l, p));
        t.check(abs(determinant(p)) == 1 && signature(moved) == signature(l),
                [&] { return "signature changed under congruence, trial " + str(trial); });
    }
}

void criterion10(Tally& t)
{
    const auto fr = fractions(12);
    for (long e0 : {-3L, -2L, -1L})
        each_triple(fr, [&](const Rational& a, const Rational& b, const Rational& c) {
            const SeifertData sd = normalize({a, b, c}, Int(e0));
            const Int h = h1_order(sd);
            t.check(h == abs(determinant(linking_matrix(sd))), [&] { return to_string(sd); });
            if (a + b + c == -e0)
                t.check(h == 0, [&] { return "degenerate " + to_string(sd); });
        });
    for (long n = 1; n <= 20; ++n)
        t.check(h1_order(mn_manifold(n)) == 1, [&] { return "M_n, n = " + str(n); });
}

}  // namespace

int main()
{
    const std::vector<std::pair<const char*, void (*)(Tally&)>> criteria{
        {"counts on the n-family, n <= 20", criterion1},
        {"product counts, q <= 12", criterion2},
        {"spot values", criterion3},
        {"closed-form slope calculus", criterion4},
        {"upper-bound chain for the n-family", criterion5},
        {"continued fraction identities", criterion6},
        {"bypass rule equals Farey search", criterion7},
        {"contact class model", criterion8},
        {"theta calculator", criterion9},
        {"homology orders", criterion10},
    };
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Tally t;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].second(t);
        } catch (const std::exception& e) {
            t.check(false, [&] { return std::string("exception: ") + e.what(); });
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s criterion %zu: %s (%ld checks, %.1fs)", t.passed() ? "PASS" : "FAIL", i + 1,
                    criteria[i].first, t.cases(), secs);
        if (!t.passed())
            std::printf(" first failure: %s", t.failure().c_str());
        std::printf("\n");
        std::fflush(stdout);
        all = all && t.passed();
    }
    return all ? 0 : 1;
}
