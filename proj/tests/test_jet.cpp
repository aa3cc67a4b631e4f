#include <doctest.h>

#include <random>

#include "optomech/jet.hpp"
#include "test_support.hpp"

using namespace optomech;
using Complex = std::complex<double>;

namespace {

Complex rc(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    return {u(rng), u(rng)};
}

} // namespace

TEST_CASE("jet addition is componentwise")
{
    const Jet1 a{{1.0, 0.0}, {0.0, 0.0}};
    const Jet1 b{{0.0, 0.0}, {1.0, 0.0}};
    const Jet1 s = a + b;
    CHECK(s.val == Complex(1.0, 0.0));
    CHECK(s.eps == Complex(1.0, 0.0));

    const Jet1 u{{0.0, 1.0}, {2.0, 0.0}};
    const Jet1 z = u + Jet1{{0.0, -1.0}, {-2.0, 0.0}};
    CHECK(std::abs(z.val) == 0.0);
    CHECK(std::abs(z.eps) == 0.0);

    const Jet1 p{{2.0, 1.0}, {3.0, 0.0}};
    const Jet1 q{{1.0, -1.0}, {1.0, 0.0}};
    CHECK((p + q).val == Complex(3.0, 0.0));
    CHECK((p + q).eps == Complex(4.0, 0.0));
}

TEST_CASE("jet multiplication truncates at first order")
{
    const Jet1 a{{1.0, 0.0}, {1.0, 0.0}};
    const Jet1 aa = a * a;
    CHECK(aa.val == Complex(1.0, 0.0));
    CHECK(aa.eps == Complex(2.0, 0.0)); // (1+eps)^2 -> 1 + 2 eps, no eps^2

    const Jet1 e{{0.0, 0.0}, {1.0, 0.0}};
    const Jet1 ee = e * e;
    CHECK(std::abs(ee.val) == 0.0);
    CHECK(std::abs(ee.eps) == 0.0); // eps^2 discarded

    const Jet1 b{{2.0, 0.0}, {3.0, 0.0}};
    const Jet1 c{{5.0, 0.0}, {0.0, 0.0}};
    CHECK((b * c).val == Complex(10.0, 0.0));
    CHECK((b * c).eps == Complex(15.0, 0.0));
}

TEST_CASE("jet inverse")
{
    CHECK(inv(Jet1{1.0}).val == Complex(1.0, 0.0));
    CHECK(inv(Jet1{2.0}).val == Complex(0.5, 0.0));
    const Jet1 g = inv(Jet1{{1.0, 0.0}, {1.0, 0.0}});
    CHECK(g.val == Complex(1.0, 0.0));
    CHECK(g.eps == Complex(-1.0, 0.0)); // geometric series to first order

    CHECK_THROWS_AS((void)inv(Jet1{{0.0, 0.0}, {1.0, 0.0}}), DivisionByZeroVal);
}

TEST_CASE("jet field axioms under truncation")
{
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 200; ++i) {
        const Jet1 a{rc(rng), rc(rng)};
        const Jet1 b{rc(rng), rc(rng)};
        const Jet1 c{rc(rng), rc(rng)};
        // commutativity and associativity
        CHECK(std::abs((a * b).val - (b * a).val) <= 1e-12);
        CHECK(std::abs((a * b).eps - (b * a).eps) <= 1e-12);
        const Jet1 l = (a * b) * c;
        const Jet1 r = a * (b * c);
        CHECK(std::abs(l.val - r.val) <= 1e-12 * (1.0 + std::abs(l.val)));
        CHECK(std::abs(l.eps - r.eps) <= 1e-12 * (1.0 + std::abs(l.eps)));
        // distributivity
        const Jet1 d1 = a * (b + c);
        const Jet1 d2 = a * b + a * c;
        CHECK(std::abs(d1.val - d2.val) <= 1e-12 * (1.0 + std::abs(d1.val)));
        CHECK(std::abs(d1.eps - d2.eps) <= 1e-12 * (1.0 + std::abs(d1.eps)));
        // a * a^{-1} = 1 + 0 eps
        if (std::abs(a.val) > 1e-3) {
            const Jet1 unit = a * inv(a);
            CHECK(std::abs(unit.val - 1.0) <= 1e-12);
            CHECK(std::abs(unit.eps) <= 1e-12 * (1.0 + std::abs(a.eps / a.val)));
        }
    }
}

TEST_CASE("jet eps equals central finite difference of the same expression")
{
    // f(z0 + eps z1, w0 + eps w1) rebuilt with plain complex numbers at
    // eps = +-h; the jet eps part must match [f(+h) - f(-h)]/(2h).
    auto expr = [](auto a, auto b) {
        const auto one = decltype(a)(1.0);
        return (a * b + one) / (b * b + a + decltype(a)(Complex(3.0, 0.5))) + a * a * b;
    };
    std::mt19937_64 rng(77);
    const double h = 1e-6;
    for (int i = 0; i < 100; ++i) {
        const Complex a0 = rc(rng), a1 = rc(rng), b0 = rc(rng), b1 = rc(rng);
        Jet1 jet;
        try {
            jet = expr(Jet1{a0, a1}, Jet1{b0, b1});
        } catch (const DivisionByZeroVal&) {
            continue;
        }
        const Complex fp = expr(a0 + h * a1, b0 + h * b1);
        const Complex fm = expr(a0 - h * a1, b0 - h * b1);
        const Complex fd = (fp - fm) / (2.0 * h);
        CHECK(std::abs(jet.eps - fd) <= 1e-6 * (1.0 + std::abs(jet.eps)));
        CHECK(std::abs(jet.val - expr(a0, b0)) <= 1e-12 * (1.0 + std::abs(jet.val)));
    }
}

TEST_CASE("norm and conj")
{
    const Jet1 a{{3.0, 4.0}, {1.0, -2.0}};
    const Jet1 n = norm(a);
    CHECK(n.val == Complex(25.0, 0.0));
    CHECK(std::abs(n.eps - 2.0 * std::real(std::conj(a.val) * a.eps)) == 0.0);
    const Jet1 c = conj(a);
    CHECK(c.val == std::conj(a.val));
    CHECK(c.eps == std::conj(a.eps));
    CHECK(at_eps(a, 0.5) == a.val + 0.5 * a.eps);
}
