#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stq/xprop.hpp"

using namespace stq;
using namespace stq::xprop;

namespace {

ModeGrid test_grid(int n = 48)
{
    ModeGrid g;
    g.per_axis = n;
    g.box = 32.0;
    return g;
}

}  // namespace

TEST_CASE("ordering symmetry and tensor structure of the x1-ordered sum")
{
    ModeGrid grid = test_grid(32);
    OrderedPairSample s;
    s.x = {0.4, 1.7, 0.9, -0.6};
    s.y = {-0.2, -1.1, -0.4, 0.8};
    s.mu = s.nu = 0;

    const cplx fwd = x1_ordered_two_point(s, grid).value;
    OrderedPairSample swapped = s;
    std::swap(swapped.x, swapped.y);
    const cplx bwd = x1_ordered_two_point(swapped, grid).value;
    CHECK(std::abs(fwd - bwd) <= 1e-15 * std::abs(fwd));

    s.nu = 2;
    CHECK(std::abs(x1_ordered_two_point(s, grid).value) == 0.0);

    CHECK_THROWS_AS(x1_ordered_two_point(OrderedPairSample{{0, 1, 0, 0}, {1, 1, 0, 0}, 0, 0}, grid),
                    std::invalid_argument);
}

TEST_CASE("t-ordered sum: mirrored separations agree and match the closed form")
{
    ModeGrid grid = test_grid(48);
    OrderedPairSample s;
    s.x = {1.2, 1.5, 0.7, 0.3};
    s.y = {0.1, -0.8, -0.9, -0.4};
    s.mu = s.nu = 0;

    const cplx a = t_ordered_two_point(s, grid).value;
    OrderedPairSample m = s;
    std::swap(m.x, m.y);
    const cplx b = t_ordered_two_point(m, grid).value;
    CHECK(std::abs(a - b) <= 1e-15 * std::abs(a));

    // completing the spectral window lands the sum on the closed form
    const cplx cf = closed_form_feynman(s).value;
    const double completed = a.real() + window_tail_completion(s, grid);
    CHECK(std::abs(completed - cf.real()) / std::abs(cf.real()) <= 0.02);
}

TEST_CASE("closed form: decay, signature ratio, and branch flip")
{
    OrderedPairSample s;
    s.x = {0.0, 2.0, 0.0, 0.0};
    s.y = {0.0, 0.0, 0.0, 0.0};
    s.mu = s.nu = 0;
    const cplx near = closed_form_feynman(s).value;
    s.x[1] = 4.0;
    const cplx far = closed_form_feynman(s).value;
    CHECK(std::abs(far) == doctest::Approx(std::abs(near) / 4.0).epsilon(1e-12));

    s.mu = s.nu = 1;
    const cplx d11 = closed_form_feynman(s).value;
    s.mu = s.nu = 0;
    const cplx d00 = closed_form_feynman(s).value;
    CHECK((d11 / d00).real() == doctest::Approx(-1.0).epsilon(1e-12));

    const cplx plus = closed_form_feynman(s, 0.3).value;
    const cplx minus = closed_form_feynman(s, -0.3).value;
    CHECK(std::abs(plus - std::conj(minus)) <= 1e-15);

    OrderedPairSample cone;
    cone.x = {1.0, 1.0, 0.0, 0.0};
    cone.y = {0.0, 0.0, 0.0, 0.0};
    CHECK_THROWS_AS(closed_form_feynman(cone), std::domain_error);
}

TEST_CASE("closed form is validated by direct quadrature of the defining integral")
{
    for (double r : {1.5, 2.5, 4.0}) {
        OrderedPairSample s;
        s.x = {0.0, r, 0.0, 0.0};
        s.y = {0.0, 0.0, 0.0, 0.0};
        s.mu = s.nu = 0;
        const cplx cf = closed_form_feynman(s).value;
        const cplx q = feynman_quadrature_equal_time(r).value;
        CHECK(std::abs(q - cf) / std::abs(cf) <= 0.02);
    }
}

TEST_CASE("equivalence suite at a reduced lattice")
{
    EquivalenceOptions opt;
    opt.samples = 8;
    opt.reference = test_grid(48);
    opt.pair_tolerance = 0.03;   // reduced lattice, looser budget than the acceptance gate
    opt.pair_allowed_failures = 1;
    opt.closed_form_tolerance = 0.08;
    ResidualReport rep = propagator_equivalence_suite(opt);
    for (const Check& c : rep.checks) {
        // the refinement trend is only meaningful from the reference lattice
        // upward; at 48 -> 24 the coarse grid sits outside the asymptotic range
        if (c.name == "median_deviation_after_refinement") continue;
        INFO(c.name, " value=", c.value, " tol=", c.tolerance);
        CHECK(c.pass);
    }
}

TEST_CASE("first-order interaction operators: hermiticity and antihermitian expansion term")
{
    InteractionOperators ops = first_order_interaction(0.3);
    CHECK(ops.dim == 256);
    const Eigen::MatrixXcd h = Eigen::MatrixXcd(ops.h_int);
    CHECK((h - h.adjoint()).cwiseAbs().maxCoeff() <= 1e-12);
    const Eigen::MatrixXcd s1 = Eigen::MatrixXcd(ops.s_first_order);
    CHECK((s1 + s1.adjoint()).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(h.cwiseAbs().maxCoeff() > 0.0);
}
