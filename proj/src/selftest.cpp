#include "tightsf/selftest.hpp"

#include "tightsf/classifier.hpp"
#include "tightsf/contfrac.hpp"
#include "tightsf/convex_calc.hpp"
#include "tightsf/farey.hpp"
#include "tightsf/floer.hpp"
#include "tightsf/linalg.hpp"
#include "tightsf/seifert.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <numeric>
#include <random>
#include <thread>

namespace tightsf {

namespace {

class Suite {
public:
    explicit Suite(std::string name) { result_.name = std::move(name); }

    void check(bool ok, const std::function<std::string()>& what)
    {
        ++result_.cases;
        if (!ok && result_.passed) {
            result_.passed = false;
            result_.detail = what();
        }
    }

    void add_cases(long n) { result_.cases += n; }

    // Runs body and turns an exception into a failure.
    SuiteResult run(const std::function<void(Suite&)>& body)
    {
        try {
            body(*this);
        } catch (const std::exception& e) {
            result_.passed = false;
            if (result_.detail.empty())
                result_.detail = std::string("exception: ") + e.what();
        }
        return result_;
    }

private:
    SuiteResult result_;
};

// Proper fractions p/q in (0, 1), lowest terms, q <= qmax.
std::vector<Rational> proper_fractions(long qmax)
{
    std::vector<Rational> out;
    for (long q = 2; q <= qmax; ++q)
        for (long p = 1; p < q; ++p)
            if (std::gcd(p, q) == 1)
                out.emplace_back(p, q);
    return out;
}

bool same_line(const Slope& a, const Slope& b)
{
    auto [x1, y1] = slope_vec(a);
    auto [x2, y2] = slope_vec(b);
    return x1 * y2 == x2 * y1;
}

void contfrac_suite(Suite& s)
{
    for (const Rational& r : proper_fractions(100)) {
        const Slope x(Int(-r.get_den()), r.get_num());
        const NegContFrac cf = expand(x);
        s.check(cf.is_canonical() && evaluate(cf) == x, [&] { return "eval(expand(" + x.str() + "))"; });
        const Convergents c = convergents(x);
        s.check(c.p * c.v - c.q * c.u == 1, [&] { return "pv - qu != 1 at " + x.str(); });
        s.check(c.q >= c.v && c.v > 0 && c.p >= c.u && c.u >= 0, [&] { return "convergent bounds at " + x.str(); });
        s.check(evaluate(reverse_shift(cf)) == Slope(Int(c.p - c.q), Int(c.v - c.u)),
                [&] { return "reverse_shift at " + x.str(); });
    }
    for (long n = 2; n <= 30; ++n) {
        const Slope x(Int(-(6 * n - 1)), Int(5 * n - 1));
        std::vector<Int> want{-2, -2, -2, -2, -3};
        want.resize(want.size() + static_cast<std::size_t>(n - 2), Int(-2));
        s.check(expand(x).entries == want, [&] { return "expansion pattern at n = " + std::to_string(n); });
    }
}

void shortcut_suite(Suite& s)
{
    for (const Rational& r : proper_fractions(100)) {
        const Slope x(Int(-r.get_den()), r.get_num());
        const Int direct = t_count(r);
        const Int assembled = honda_count(evaluate(reverse_shift(expand(x))));
        s.check(direct == assembled && direct >= 1, [&] { return "T(" + to_string(r) + ") vs solid torus count"; });
    }
}

std::vector<Slope> farey_sweep_slopes()
{
    std::vector<Slope> out{Slope::infinity()};
    for (long q = 1; q <= 30; ++q)
        for (long p = -q; p <= q; ++p)
            if (std::gcd(p, q) == 1)
                out.emplace_back(Int(p), Int(q));
    return out;
}

void farey_suite(Suite& s)
{
    const std::vector<Slope> slopes = farey_sweep_slopes();
    std::vector<std::pair<Slope, Slope>> pairs;
    for (const Slope& d : slopes)
        for (const Slope& r : slopes)
            if (!(d == r))
                pairs.emplace_back(d, r);

    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<long> den(1, 50);
    for (long added = 0; added < 1000;) {
        long q1 = den(rng), q2 = den(rng);
        long p1 = std::uniform_int_distribution<long>(-3 * q1, 3 * q1)(rng);
        long p2 = std::uniform_int_distribution<long>(-3 * q2, 3 * q2)(rng);
        const Slope d{Int(p1), Int(q1)}, r{Int(p2), Int(q2)};
        if (d == r)
            continue;
        pairs.emplace_back(d, r);
        ++added;
    }

    std::atomic<std::size_t> next{0};
    std::atomic<long> cases{0};
    std::mutex failure_lock;
    std::string failure;
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(256);
            if (i >= pairs.size())
                return;
            std::size_t end = std::min(pairs.size(), i + 256);
            for (; i < end; ++i) {
                for (Side side : {Side::front, Side::back}) {
                    const auto& [d, r] = pairs[i];
                    Slope fast = bypass_attach(d, r, side);
                    Slope slow = bypass_oracle(d, r, side);
                    ++cases;
                    if (!(fast == slow)) {
                        std::lock_guard<std::mutex> lock(failure_lock);
                        if (failure.empty())
                            failure = "dividing " + d.str() + ", ruling " + r.str() + ", " + to_string(side) +
                                      ": fast " + fast.str() + ", oracle " + slow.str();
                    }
                }
            }
        }
    };
    unsigned n_threads = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    std::vector<std::thread> threads;
    for (unsigned t = 0; t < n_threads; ++t)
        threads.emplace_back(worker);
    for (std::thread& t : threads)
        t.join();
    s.add_cases(cases.load() - 1);
    s.check(failure.empty(), [&] { return failure; });
}

SeifertData random_data(std::mt19937_64& rng, long qmax)
{
    std::uniform_int_distribution<long> den(2, qmax);
    std::array<Rational, 3> r;
    for (Rational& x : r) {
        long q = den(rng);
        long p;
        do {
            p = std::uniform_int_distribution<long>(1, q - 1)(rng);
        } while (std::gcd(p, q) != 1);
        x = Rational(p, q);
    }
    return normalize(r, Int(-2));
}

void slope_suite(Suite& s)
{
    std::mt19937_64 rng(7);
    long found = 0;
    for (long attempt = 0; found < 500 && attempt < 200000; ++attempt) {
        const SeifertData sd = random_data(rng, 40);
        const Int n1 = -std::uniform_int_distribution<long>(1, 80)(rng);
        const auto stepped = s_n1_stepwise(sd, n1);
        if (!stepped)
            continue;
        ++found;
        const Slope closed = s_n1(slope_coeffs(sd), sd, n1);
        s.check(closed == stepped->on_v3, [&] {
            return to_string(sd) + " n1 = " + n1.get_str() + ": closed " + closed.str() + ", stepwise " +
                   stepped->on_v3.str();
        });
    }
    s.check(found == 500, [&] { return "only " + std::to_string(found) + " admissible tuples"; });

    for (long k = 6; k <= 12; ++k) {
        const SeifertData sd = normalize({Rational(1, 2), Rational(2, 3), Rational(k, k + 1)}, Int(-2));
        const SlopeCoeffs c = slope_coeffs(sd);
        for (long n1 = -1; n1 >= -50; --n1) {
            const Slope want = Slope::from_vector(Int((k - 6) * n1 + k - 3), Int(-((k - 5) * n1 + k - 2)));
            s.check(same_line(s_n1(c, sd, Int(n1)), want),
                    [&] { return "k-family k = " + std::to_string(k) + ", n1 = " + std::to_string(n1); });
        }
    }

    for (const Rational& r : proper_fractions(100)) {
        if (r < Rational(4, 5) || r >= Rational(5, 6))
            continue;
        const SeifertData sd = normalize({Rational(1, 2), Rational(2, 3), r}, Int(-2));
        const SlopeCoeffs c = slope_coeffs(sd);
        const Convergents& c3 = sd.conv[2];
        for (long n1 = -1; n1 >= -50; --n1) {
            const Slope want = Slope::from_vector(Int((5 * c3.v - 6 * c3.u) * n1 + 2 * c3.v - 3 * c3.u),
                                                  Int((6 * c3.p - 5 * c3.q) * n1 + 3 * c3.p - 2 * c3.q));
            s.check(same_line(s_n1(c, sd, Int(n1)), want),
                    [&] { return "guide formula at r3 = " + to_string(r) + ", n1 = " + std::to_string(n1); });
        }
    }
}

void chain_suite(Suite& s)
{
    for (long n = 1; n <= 20; ++n) {
        const SeifertData sd = mn_manifold(n);
        const UpperBound ub = mn_upper_bound(n);
        for (long k = 0; k < n; ++k) {
            const Int m1 = -3 * k - 1, m2 = -2 * k - 1;
            const Slope rounded = rounded_slope(measured_slope(1, sd, m1), measured_slope(2, sd, m2), Int(-6 * k - 1));
            const Slope boundary = to_v3_coordinates(sd, rounded);
            s.check(rounded == Slope(Int(-k), Int(6 * k + 1)) && boundary == Slope(k - n) &&
                        honda_count(boundary) == n - k,
                    [&] { return "chain at n = " + std::to_string(n) + ", k = " + std::to_string(k); });
        }
        s.check(ub.total == n * (n + 1) / 2 && static_cast<long>(index_set(n).size()) == n * (n + 1) / 2,
                [&] { return "upper bound total at n = " + std::to_string(n); });
    }
}

void floer_suite(Suite& s)
{
    for (long n = 1; n <= 15; ++n) {
        for (const ContactIndex& idx : index_set(n)) {
            const ExpansionVector v = expansion(idx);
            const HalfLaurent image = laurent_image(idx);
            // equal as classes: the two sides differ by the sign (-1)^i
            const Int sign = idx.i % 2 ? -1 : 1;
            bool ok = true;
            for (const auto& [e, c] : image.terms())
                ok = ok && v.on_grid(e) && sign * v.at(e) == c;
            for (long jp : v.grid())
                ok = ok && image.coefficient(jp) == sign * v.at(jp);
            s.check(ok, [&] { return "Laurent image vs expansion at " + idx.str(); });
        }
        s.check(pairwise_distinct(n), [&] { return "classes not distinct at n = " + std::to_string(n); });
    }
    for (long n = 1; n <= 30; ++n) {
        const auto idx = index_set(n);
        const long blocked = std::count_if(idx.begin(), idx.end(), stein_obstructed);
        s.check(blocked == n / 2, [&] { return "obstructed count at n = " + std::to_string(n); });
    }
}

void homology_suite(Suite& s)
{
    const std::vector<Rational> fr = proper_fractions(12);
    for (long e0 : {-2L, -1L}) {
        for (std::size_t a = 0; a < fr.size(); ++a)
            for (std::size_t b = a; b < fr.size(); ++b)
                for (std::size_t c = b; c < fr.size(); ++c) {
                    const SeifertData sd = normalize({fr[a], fr[b], fr[c]}, Int(e0));
                    s.check(h1_order(sd) == abs(determinant(linking_matrix(sd))),
                            [&] { return "h1 vs det at " + to_string(sd); });
                }
    }
    for (long n = 1; n <= 20; ++n)
        s.check(h1_order(mn_manifold(n)) == 1, [&] { return "M_n not a homology sphere, n = " + std::to_string(n); });
}

void product_suite(Suite& s)
{
    const std::vector<Rational> fr = proper_fractions(12);
    for (std::size_t a = 0; a < fr.size(); ++a)
        for (std::size_t b = a; b < fr.size(); ++b)
            for (std::size_t c = b; c < fr.size(); ++c) {
                const Rational sum = fr[a] + fr[b] + fr[c];
                if (sum >= 2 && sum < Rational(9, 4))
                    continue;
                const SeifertData sd = normalize({fr[a], fr[b], fr[c]}, Int(-2));
                const ClassificationResult res = classify(sd);
                const Certificate& cert = res.certificate;
                if (cert.case_tag != "SumGE9over4" && cert.case_tag != "SumLT2")
                    continue;
                s.check(res.status == CountStatus::exact && res.count && *res.count == cert.t_product &&
                            cert.t_product == cert.shortcut_product &&
                            cert.t_product == t_count(fr[a]) * t_count(fr[b]) * t_count(fr[c]),
                        [&] { return "product count at " + to_string(sd); });
            }
}

}  // namespace

std::vector<SuiteResult> run_selftest()
{
    std::vector<SuiteResult> out;
    out.push_back(Suite("continued fractions and convergents, q <= 100").run(contfrac_suite));
    out.push_back(Suite("T(r) equals the solid torus assembly, q <= 100").run(shortcut_suite));
    out.push_back(Suite("bypass rule equals exhaustive Farey search").run(farey_suite));
    out.push_back(Suite("closed-form dV3 slope equals edge rounding").run(slope_suite));
    out.push_back(Suite("M_n upper-bound chain, n <= 20").run(chain_suite));
    out.push_back(Suite("contact class expansions, n <= 30").run(floer_suite));
    out.push_back(Suite("|H1| equals |det| of the plumbing, q <= 12").run(homology_suite));
    out.push_back(Suite("product counts, q <= 12").run(product_suite));
    return out;
}

}  // namespace tightsf
