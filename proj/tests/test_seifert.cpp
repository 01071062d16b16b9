#include <doctest.h>

#include "tightsf/linalg.hpp"
#include "tightsf/seifert.hpp"

#include <algorithm>
#include <numeric>

using namespace tightsf;

namespace {

std::vector<Rational> fractions(long qmax)
{
    std::vector<Rational> out;
    for (long q = 2; q <= qmax; ++q)
        for (long p = 1; p < q; ++p)
            if (std::gcd(p, q) == 1)
                out.emplace_back(p, q);
    return out;
}

// Cofactor expansion along the first row; only used on small matrices.
Int brute_det(const IntMatrix& m)
{
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    if (n == 1)
        return m(0, 0);
    Int total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m(0, c) == 0)
            continue;
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0, jj = 0; j < n; ++j)
                if (j != c)
                    minor(i - 1, jj++) = m(i, j);
        Int term = m(0, c) * brute_det(minor);
        total += c % 2 ? Int(-term) : term;
    }
    return total;
}

}  // namespace

TEST_SUITE("seifert") {

TEST_CASE("normalization")
{
    const SeifertData a = normalize({Rational(1, 2), Rational(-1, 3), Rational(-1, 3)}, Int(0));
    CHECK(a.e0 == -2);
    CHECK(a.r == std::array<Rational, 3>{Rational(1, 2), Rational(2, 3), Rational(2, 3)});

    const SeifertData b = normalize({Rational(6, 7), Rational(1, 2), Rational(2, 3)}, Int(-2));
    CHECK(b.e0 == -2);
    CHECK(b.r == std::array<Rational, 3>{Rational(1, 2), Rational(2, 3), Rational(6, 7)});

    for (long n = 1; n <= 20; ++n) {
        const SeifertData c = normalize({Rational(1, 2), Rational(-1, 3), Rational(-n, 6 * n + 1)}, Int(0));
        const SeifertData d = normalize({Rational(1, 2), Rational(2, 3), Rational(5 * n + 1, 6 * n + 1)}, Int(-2));
        CHECK(c == d);
    }
    CHECK_THROWS_WITH_AS(normalize({Rational(1), Rational(1, 2), Rational(1, 3)}, Int(0)),
                         doctest::Contains("fewer than three singular fibers"), DomainError);
}

TEST_CASE("normalize is idempotent")
{
    for (const Rational& x : fractions(9))
        for (const Rational& y : fractions(7)) {
            if (x == y)
                continue;
            const SeifertData a = normalize({x + 3, -y, x - y}, Int(1));
            const SeifertData b = normalize(a.r, a.e0);
            CHECK(a == b);
        }
}

TEST_CASE("parsing")
{
    CHECK(parse_seifert("-2;1/2,2/3,11/13") == normalize({Rational(1, 2), Rational(2, 3), Rational(11, 13)}, Int(-2)));
    CHECK(parse_seifert("M(-2; 1/2, 2/3, 11/13)") == parse_seifert("-2;1/2,2/3,11/13"));
    CHECK(parse_seifert("1/2,-1/3,-2/13") == parse_seifert("-2;1/2,2/3,11/13"));
    CHECK(parse_seifert("M(1/2, -1/3, -2/13)") == parse_seifert("-2;1/2,2/3,11/13"));
    CHECK(to_string(parse_seifert("1/2,-1/3,-2/13")) == "M(-2; 1/2, 2/3, 11/13)");
    CHECK_THROWS_AS(parse_seifert(""), ParseError);
    CHECK_THROWS_AS(parse_seifert("1/2,2/3"), ParseError);
    CHECK_THROWS_AS(parse_seifert("-2;1/2,x,1/3"), ParseError);
    CHECK_THROWS_AS(parse_seifert("-2;1/2,1/0,1/3"), ParseError);
    CHECK_THROWS_AS(parse_seifert("-2;1/2,2,1/3"), DomainError);
}

TEST_CASE("attaching matrices are unimodular, q <= 100")
{
    const auto fr = fractions(100);
    for (std::size_t i = 0; i < fr.size(); i += 7) {
        const SeifertData sd = normalize({fr[i], fr[(i * 31) % fr.size()], fr[(i * 17 + 5) % fr.size()]}, Int(-2));
        for (int k = 0; k < 3; ++k) {
            const Convergents& c = sd.conv[k];
            CHECK(sd.attaching[k] == UniMat(c.q, c.v, Int(-c.p), Int(-c.u)));
            CHECK(sd.attaching[k].det() == 1);
            CHECK(sd.measuring_matrix(k + 1).det() == 1);
        }
    }
    CHECK_THROWS_AS(parse_seifert("-2;1/2,2/3,6/7").measuring_matrix(4), DomainError);
}

TEST_CASE("homology order examples")
{
    CHECK(h1_order(parse_seifert("-2;1/2,2/3,5/6")) == 0);
    CHECK(h1_order(parse_seifert("-2;1/2,2/3,11/13")) == 1);
    CHECK(h1_order(parse_seifert("-2;1/2,1/2,1/2")) == 4);
    CHECK(h1_order(parse_seifert("-2;1/2,3/4,3/4")) == 0);
    CHECK(h1_order(parse_seifert("-2;2/3,2/3,2/3")) == 0);
}

TEST_CASE("plumbing matrix examples")
{
    const IntMatrix m = linking_matrix(parse_seifert("-2;1/2,1/2,1/2"));
    IntMatrix want(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        want(i, i) = -2;
    for (std::size_t i = 1; i < 4; ++i)
        want(0, i) = want(i, 0) = 1;
    CHECK(m == want);
    CHECK(abs(determinant(m)) == 4);
    CHECK(abs(determinant(linking_matrix(parse_seifert("-2;1/2,2/3,6/7")))) == 1);

    const IntMatrix l = linking_matrix(parse_seifert("-2;1/2,2/3,11/13"));
    CHECK(l.rows() == 10);
    CHECK(l.is_symmetric());
    for (std::size_t i = 0; i < l.rows(); ++i)
        for (std::size_t j = 0; j < l.cols(); ++j)
            if (i != j)
                CHECK((l(i, j) == 0 || l(i, j) == 1));
}

TEST_CASE("|H1| = |det| of the plumbing, q <= 12")
{
    const auto fr = fractions(12);
    long checked = 0;
    for (long e0 : {-3L, -2L, -1L})
        for (std::size_t a = 0; a < fr.size(); ++a)
            for (std::size_t b = a; b < fr.size(); ++b)
                for (std::size_t c = b; c < fr.size(); ++c) {
                    const SeifertData sd = normalize({fr[a], fr[b], fr[c]}, Int(e0));
                    const IntMatrix m = linking_matrix(sd);
                    const Int d = abs(determinant(m));
                    CHECK(h1_order(sd) == d);
                    if (m.rows() <= 7)
                        CHECK(abs(brute_det(m)) == d);
                    ++checked;
                }
    CHECK(checked == 3 * 16215);
}

TEST_CASE("family detection")
{
    using K = FamilyKind;
    auto lead = [](const char* s) { return detect_family(parse_seifert(s)).front(); };
    CHECK(lead("-2;1/2,3/4,3/4").kind == K::torus_bundle);
    CHECK(lead("-2;1/2,2/3,5/6").kind == K::torus_bundle);
    CHECK(lead("-2;2/3,2/3,2/3").kind == K::torus_bundle);
    CHECK(lead("-2;1/2,2/3,11/13") == FamilyTag{K::thm2_family, 2});
    CHECK(lead("-2;1/2,3/4,4/5").kind == K::gap_other);
    CHECK(lead("-1;1/2,2/3,5/6").kind == K::wrong_e0);
    CHECK(lead("-2;7/9,7/9,7/9").kind == K::sum_ge_9_4);
    CHECK(lead("-2;1/2,2/3,9/11").kind == K::sum_lt_2);
    CHECK(lead("-2;1/3,5/6,5/6").kind == K::degenerate_sum_2);

    const auto both = detect_family(parse_seifert("-2;1/2,2/3,6/7"));
    REQUIRE(both.size() >= 2);
    CHECK(both[0] == FamilyTag{K::thm2_family, 1});
    CHECK(both[1] == FamilyTag{K::thm1_case3, 6});
    CHECK(both[0].str() == "Thm2Family(n=1)");

    for (long k = 7; k <= 40; ++k) {
        const auto tags = detect_family(normalize({Rational(1, 2), Rational(2, 3), Rational(k, k + 1)}, Int(-2)));
        CHECK(std::find(tags.begin(), tags.end(), FamilyTag{K::thm1_case3, k}) != tags.end());
    }
}

TEST_CASE("the n-family sits in the gap 2 < sum < 9/4")
{
    for (long n = 1; n <= 50; ++n) {
        const SeifertData sd = normalize({Rational(1, 2), Rational(2, 3), Rational(5 * n + 1, 6 * n + 1)}, Int(-2));
        CHECK(sd.invariant_sum() > 2);
        CHECK(sd.invariant_sum() < Rational(9, 4));
        CHECK(detect_family(sd).front() == FamilyTag{FamilyKind::thm2_family, n});
        CHECK(h1_order(sd) == 1);
    }
}

}
