#include <doctest.h>

#include "qlmor/error.hpp"
#include "qlmor/fixtures.hpp"
#include "qlmor/interpolation.hpp"
#include "qlmor/sampling.hpp"
#include "support.hpp"

using namespace qlmor;
using test::Gen;

namespace
{

ErrorCode code_of(auto&& f)
{
    try
    {
        f();
    }
    catch (const Error& e)
    {
        return e.code();
    }
    FAIL("no qlmor::Error thrown");
    return ErrorCode::InvalidArgument;
}

TangentialData random_two_sided(Gen& g, Index r, Index m, Index p)
{
    std::vector<cplx> sig, mu;
    CMatrix b, c;
    test::random_closed_points(g, r, m, sig, b);
    test::random_closed_points(g, r, p, mu, c, Domain::Continuous, false);
    return TangentialData::two_sided(sig, mu, b, c);
}

} // namespace

TEST_CASE("Loewner pencil equals the projected matrices")
{
    Gen g(31);
    for (int trial = 0; trial < 10; ++trial)
    {
        const StateSpaceModel M = test::random_stable_model(g, 6, 2, 3);
        const TangentialData data = random_two_sided(g, 4, 2, 3);
        const ExactSampler ex(M);
        const LoewnerPencil P = build_pencil(data, build_sample_set(ex, data, std::nullopt));

        // V^ columns (sigma_j I - A)^{-1} B b_j, W^* rows c_i C (mu_i I - A)^{-1}.
        const CMatrix A = M.A.cast<cplx>(), B = M.B.cast<cplx>(), C = M.C.cast<cplx>();
        const CMatrix I = CMatrix::Identity(6, 6);
        CMatrix V(6, 4), Ws(4, 6);
        for (Index j = 0; j < 4; ++j)
        {
            V.col(j)  = (data.sigma[static_cast<std::size_t>(j)] * I - A).fullPivLu().solve(B * data.b.col(j));
            Ws.row(j) = (data.mu[static_cast<std::size_t>(j)] * I - A).transpose().fullPivLu()
                            .solve((data.c.row(j) * C).transpose()).transpose();
        }
        CHECK(test::rel_err(P.L, Ws * V) < 1e-10);
        CHECK(test::rel_err(P.Ls, Ws * A * V) < 1e-10);
        // Shift identity: Ls(i,j) - sigma_j L(i,j) = -w_i b_j.
        for (Index i = 0; i < 4; ++i)
            for (Index j = 0; j < 4; ++j)
            {
                const cplx lhs = P.Ls(i, j) - data.sigma[static_cast<std::size_t>(j)] * P.L(i, j);
                const cplx rhs = -(P.W_stack.row(i) * data.b.col(j))(0);
                CHECK(std::abs(lhs - rhs) <= 1e-10 * (1.0 + std::abs(rhs)));
            }
    }
}

TEST_CASE("Hermite pencil diagonal")
{
    Gen g(32);
    const StateSpaceModel M = test::random_stable_model(g, 5, 2, 2);
    std::vector<cplx> sig;
    CMatrix b;
    test::random_closed_points(g, 3, 2, sig, b);
    const TangentialData data = TangentialData::hermite_data(sig, b, b.transpose());
    const ExactSampler ex(M);
    const SampleSet s  = build_sample_set(ex, data, std::nullopt);
    const LoewnerPencil P = build_pencil(data, s);
    for (Index i = 0; i < 3; ++i)
    {
        const cplx si = sig[static_cast<std::size_t>(i)];
        const cplx cd = (data.c.row(i) * s.hermite_diag->col(i))(0);
        CHECK(std::abs(P.L(i, i) + cd) < 1e-12 * (1.0 + std::abs(cd)));
        const cplx want = -(data.c.row(i) * (s.right.col(i) + si * s.hermite_diag->col(i)))(0);
        CHECK(std::abs(P.Ls(i, i) - want) < 1e-12 * (1.0 + std::abs(want)));
    }
}

TEST_CASE("LF ROM interpolates exact samples")
{
    Gen g(33);
    for (int trial = 0; trial < 20; ++trial)
    {
        const Index n = g.integer(3, 8), m = g.integer(1, 3), p = g.integer(1, 3);
        const Index r = g.integer(1, std::min<Index>(4, n));
        const StateSpaceModel M = test::random_stable_model(g, n, m, p);
        const TangentialData data = random_two_sided(g, r, m, p);
        const ExactSampler ex(M);
        const ComplexRom rom = lf_rom(build_pencil(data, build_sample_set(ex, data, std::nullopt)));
        const InterpolationReport rep = verify_interpolation(make_oracle(M), rom, data);
        CHECK(rep.max_right() < 1e-8);
        CHECK(rep.max_left() < 1e-8);
        CHECK(rep.hermite.empty());
    }
}

TEST_CASE("coincident and invalid points")
{
    const TangentialData bad = TangentialData::two_sided({cplx(1, 0)}, {cplx(1, 0)}, CMatrix::Ones(1, 1),
                                                         CMatrix::Ones(1, 1));
    SampleSet s{CMatrix::Ones(1, 1), CMatrix::Ones(1, 1), std::nullopt};
    CHECK(code_of([&] { (void)build_pencil(bad, s); }) == ErrorCode::CoincidentPoints);

    const TangentialData lhp = TangentialData::two_sided({cplx(-1, 0)}, {cplx(2, 0)}, CMatrix::Ones(1, 1),
                                                         CMatrix::Ones(1, 1));
    CHECK(code_of([&] { lhp.check_points(Domain::Continuous); }) == ErrorCode::NonPositiveRealPart);
    const TangentialData disk = TangentialData::two_sided({cplx(0.5, 0)}, {cplx(2, 0)}, CMatrix::Ones(1, 1),
                                                          CMatrix::Ones(1, 1));
    CHECK(code_of([&] { disk.check_points(Domain::Discrete); }) == ErrorCode::PointInsideUnitDisk);
    CHECK(code_of([&] { (void)TangentialData::two_sided({1.0, 2.0}, {3.0}, CMatrix::Ones(1, 2),
                                                        CMatrix::Ones(2, 1)).check_shape(); }) ==
          ErrorCode::DimensionMismatch);
}

TEST_CASE("order above the McMillan degree gives a singular Loewner matrix")
{
    const StateSpaceModel G = test::first_order(1.0);
    const TangentialData data = TangentialData::two_sided({1.0, 2.0}, {3.0, 4.0}, CMatrix::Ones(1, 2),
                                                          CMatrix::Ones(2, 1));
    const ExactSampler ex(G);
    const LoewnerPencil P = build_pencil(data, build_sample_set(ex, data, std::nullopt));
    CHECK(code_of([&] { (void)lf_rom(P); }) == ErrorCode::SingularLoewner);
}

TEST_CASE("conjugate pairing and realification")
{
    const TangentialData ex1 = fixtures::example1_data();
    const auto pr = ex1.right_pairing();
    REQUIRE(pr.has_value());
    CHECK(pr->pairs == std::vector<std::pair<Index, Index>>{{0, 1}, {2, 3}});
    CHECK(pr->reals.empty());
    CHECK(ex1.left_pairing().has_value());

    CMatrix b = ex1.b;
    b(0, 1) += 0.1;
    CHECK_FALSE(find_conjugate_pairing(ex1.sigma, b).has_value());

    Gen g(34);
    for (int trial = 0; trial < 10; ++trial)
    {
        const StateSpaceModel M = test::random_stable_model(g, 7, 2, 2);
        const TangentialData data = random_two_sided(g, 5, 2, 2);
        const ExactSampler exs(M);
        const ComplexRom rom = lf_rom(build_pencil(data, build_sample_set(exs, data, std::nullopt)));
        const auto pairing   = data.right_pairing();
        REQUIRE(pairing.has_value());
        const StateSpaceModel real = realify_rom(rom, *pairing);
        for (cplx s : {cplx(0.2, 1.0), cplx(3.0, -2.0)})
            CHECK(test::rel_err(eval_tf(real, s), eval_tf(rom, s)) < 1e-10);
    }

    // A complex ROM that is not closed under conjugation cannot be realified.
    const ComplexRom cz(CMatrix::Constant(1, 1, cplx(-1.0, 2.0)), CMatrix::Ones(1, 1), CMatrix::Ones(1, 1));
    CHECK(code_of([&] { (void)realify_rom(cz, ConjugatePairing{{}, {0}}); }) == ErrorCode::NotConjugateClosed);
}

TEST_CASE("Hermite LF ROM matches derivatives")
{
    Gen g(35);
    for (int trial = 0; trial < 10; ++trial)
    {
        const StateSpaceModel M = test::random_stable_model(g, 6, 2, 2);
        std::vector<cplx> sig;
        CMatrix b;
        test::random_closed_points(g, 3, 2, sig, b);
        const TangentialData data = TangentialData::hermite_data(sig, b, b.transpose());
        const ExactSampler ex(M);
        const ComplexRom rom = lf_rom(build_pencil(data, build_sample_set(ex, data, std::nullopt)));
        const InterpolationReport rep = verify_interpolation(make_oracle(M), rom, data);
        CHECK(rep.max_right() < 1e-8);
        CHECK(rep.max_left() < 1e-8);
        CHECK(rep.max_hermite() < 1e-6);
    }
}
