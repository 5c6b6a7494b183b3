#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include <qextract/oracle.hpp>
#include <qextract/phase_space.hpp>
#include <qextract/states.hpp>

using namespace qextract;
using cd = std::complex<double>;

namespace {

double max_diff(const QuasiDistribution& a, const QuasiDistribution& b, const GridSpec& g)
{
    return max_abs_difference(evaluate_on_grid(a, g), evaluate_on_grid(b, g));
}

} // namespace

TEST(GridSpec, Parse)
{
    const auto g = parse_grid_spec("-2:3:11,-1:1:5");
    EXPECT_EQ(g.re_min, -2.0);
    EXPECT_EQ(g.re_max, 3.0);
    EXPECT_EQ(g.n_re, 11);
    EXPECT_EQ(g.n_im, 5);
    EXPECT_EQ(g.re(10), 3.0);
    EXPECT_DOUBLE_EQ(g.re(2), -1.0);
    for (const char* bad : {"", "1:2:3", "-1:1:5,-1:1:5x", "1:-1:5,-1:1:5", "-1:1:1,-1:1:5", "a:b:c,d:e:f"})
        EXPECT_THROW(parse_grid_spec(bad), std::invalid_argument) << bad;
}

TEST(Grid, SmallVacuumAndFockGrids)
{
    const auto vac = evaluate_on_grid(fock_wigner(0), GridSpec::square(1.0, 3));
    EXPECT_DOUBLE_EQ(vac.at(1, 1), 2.0 / std::numbers::pi);
    EXPECT_DOUBLE_EQ(vac.at(0, 0), 2.0 / std::numbers::pi * std::exp(-4.0));
    const auto one = evaluate_on_grid(fock_wigner(1), GridSpec::square(1.0, 3));
    EXPECT_DOUBLE_EQ(one.at(1, 1), -2.0 / std::numbers::pi);
    EXPECT_DOUBLE_EQ(one.min(), -2.0 / std::numbers::pi);
}

TEST(Grid, RowMajorLayout)
{
    GridSpec spec{0.0, 1.0, 2, 10.0, 12.0, 3};
    const QuasiDistribution p{0.0, [](cd a) { return a.real() + a.imag(); }, "plane"};
    const auto g = evaluate_on_grid(p, spec);
    ASSERT_EQ(g.values.size(), 6u);
    EXPECT_EQ(g.values[0], 10.0);
    EXPECT_EQ(g.values[1], 11.0);
    EXPECT_EQ(g.values[2], 11.0);
    EXPECT_EQ(g.values[5], 13.0);
}

TEST(Grid, Normalization)
{
    const auto spec = GridSpec::square(6.0, 201);
    for (int n = 0; n <= 3; ++n)
        EXPECT_NEAR(grid_integral(evaluate_on_grid(fock_wigner(n), spec)), 1.0, 1e-10);
}

TEST(ConvertOrder, IdentityAndOrderError)
{
    const auto w = fock_wigner(1);
    const auto same = convert_s_order(w, 0.0);
    EXPECT_EQ(same(cd(0.3, 0.2)), w(cd(0.3, 0.2)));
    EXPECT_THROW(convert_s_order(w, 0.5), OrderError);
}

TEST(ConvertOrder, VacuumToHusimi)
{
    const auto q = convert_s_order(fock_wigner(0), -1.0);
    for (double r : {0.0, 0.5, 1.3, 2.5}) {
        const cd a = std::polar(r, 0.4);
        EXPECT_NEAR(q(a), std::exp(-r * r) / std::numbers::pi, 1e-14);
    }
}

TEST(ConvertOrder, MatchesOracleAtIntermediateOrders)
{
    const auto rho = oracle::build_state(make_cat(1.5), oracle::cat_cutoff(1.5));
    const auto w = cat_wigner(1.5);
    for (double s : {-0.3, -1.0, -1.7}) {
        const auto p = convert_s_order(w, s);
        for (double x : {-2.0, 0.0, 0.6, 1.5})
            for (double y : {-0.5, 0.0, 0.9})
                EXPECT_NEAR(p(cd(x, y)), oracle::wigner_from_density_matrix(rho, cd(x, y), s), 1e-10) << s;
    }
    const auto q1 = convert_s_order(fock_wigner(1), -1.0);
    for (double r : {0.0, 0.7, 1.9})
        EXPECT_NEAR(q1(r), oracle::wigner_from_density_matrix(DensityMatrix::fock(1, 2), r, -1.0), 1e-13);
}

TEST(ExtractState, LosslessIsIdentity)
{
    const auto w = cat_wigner(2.0);
    const auto out = extract_state(w, 1.0, 0.0);
    for (double x : {-2.0, 0.0, 1.0})
        EXPECT_DOUBLE_EQ(out(cd(x, 0.3)), w(cd(x, 0.3)));
}

TEST(ExtractState, MatchesClosedForms)
{
    const auto g = GridSpec::square(5.0, 41);
    EXPECT_LT(max_diff(extract_state(fock_wigner(1), 0.71, 0.0), fock_output_wigner(1, 0.71), g), 1e-12);
    EXPECT_LT(max_diff(extract_state(cat_wigner(3.0), 0.952, 0.0), cat_output_wigner(3.0, 0.952), g), 1e-12);
}

TEST(ExtractState, OrdersAndValidity)
{
    EXPECT_DOUBLE_EQ(source_order_for(0.5, 0.0), -1.0);
    EXPECT_DOUBLE_EQ(extraction_width(0.0, 0.5, 0.0), 0.5);
    // Husimi output from a Wigner cavity at any eta: s' = 1 - 2/eta <= 0.
    const auto q = extract_state(fock_wigner(0), 0.8, -1.0);
    EXPECT_NEAR(q(0.0), 1.0 / std::numbers::pi, 1e-14);
    // Output order above what the cavity Husimi function can reach.
    const auto husimi = convert_s_order(fock_wigner(1), -1.0);
    EXPECT_THROW(extract_state(husimi, 0.9, 0.0), ValidityError);
    EXPECT_THROW(extract_state(fock_wigner(1), 0.0, 0.0), std::domain_error);
    EXPECT_THROW(extract_state(fock_wigner(1), 1.2, 0.0), std::domain_error);
}

TEST(WignerConvolution, VacuumIsFixedPoint)
{
    const auto g = GridSpec::square(3.0, 31);
    const auto out = wigner_convolution(fock_wigner(0), 0.6, g);
    EXPECT_LT(max_abs_difference(out, evaluate_on_grid(fock_wigner(0), g)), 1e-12);
    EXPECT_TRUE(out.warnings.empty());
    EXPECT_EQ(out.metadata.path, "convolution");
}

TEST(WignerConvolution, MatchesClosedForms)
{
    const auto g = GridSpec::square(5.0, 41);
    EXPECT_LT(max_abs_difference(wigner_convolution(fock_wigner(1), 0.99, g), evaluate_on_grid(fock_output_wigner(1, 0.99), g)),
              1e-8);
    EXPECT_LT(max_abs_difference(wigner_convolution(cat_wigner(3.0), 0.84, g), evaluate_on_grid(cat_output_wigner(3.0, 0.84), g)),
              1e-8);
}

TEST(WignerConvolution, Rejections)
{
    const auto g = GridSpec::square(1.0, 3);
    EXPECT_THROW(wigner_convolution(fock_wigner(1), 1.0, g), std::domain_error);
    EXPECT_THROW(wigner_convolution(fock_wigner(1), 0.0, g), std::domain_error);
    EXPECT_THROW(wigner_convolution(convert_s_order(fock_wigner(1), -0.5), 0.5, g), OrderError);
    EXPECT_THROW(convolve_extraction(fock_wigner(1), 1.0, 0.0, g), ValidityError);
}

TEST(WignerConvolution, TailWarning)
{
    auto w = fock_wigner(3);
    w.support_radius = 1.0;
    EXPECT_FALSE(wigner_convolution(w, 0.5, GridSpec::square(1.0, 5)).warnings.empty());
}

TEST(ConvolveExtraction, HusimiOutputMatchesExtractState)
{
    const auto g = GridSpec::square(4.0, 21);
    const auto direct = convolve_extraction(cat_wigner(2.0), 0.7, -1.0, g);
    EXPECT_LT(max_abs_difference(direct, evaluate_on_grid(extract_state(cat_wigner(2.0), 0.7, -1.0), g)), 1e-10);
}

TEST(Properties, OrderConversionSemigroup)
{
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> u(0.05, 0.9), x(-2.5, 2.5);
    const auto w = cat_wigner(1.3);
    for (int trial = 0; trial < 6; ++trial) {
        const double s1 = -u(rng), s2 = s1 - u(rng);
        const auto two_step = convert_s_order(convert_s_order(w, s1), s2);
        const auto one_step = convert_s_order(w, s2);
        for (int k = 0; k < 5; ++k) {
            const cd a(x(rng), x(rng));
            EXPECT_NEAR(two_step(a), one_step(a), 1e-10);
        }
    }
}

TEST(Properties, ExtractionComposes)
{
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> u(0.8, 1.0), x(-3.0, 3.0);
    const SmoothingOptions opts{24};
    for (int trial = 0; trial < 4; ++trial) {
        const double e1 = u(rng), e2 = u(rng);
        const auto w = trial % 2 ? cat_wigner(2.0) : fock_wigner(2);
        const auto two_step = extract_state(extract_state(w, e1, 0.0, opts), e2, 0.0, opts);
        const auto one_step = extract_state(w, e1 * e2, 0.0);
        for (int k = 0; k < 3; ++k) {
            const cd a(x(rng), x(rng));
            EXPECT_NEAR(two_step(a), one_step(a), 1e-8);
        }
    }
}

TEST(Properties, ParityPreservedByExtraction)
{
    std::mt19937_64 rng(47);
    std::uniform_real_distribution<double> u(0.1, 1.0), x(-3.0, 3.0);
    for (int trial = 0; trial < 20; ++trial) {
        const auto out = extract_state(fock_wigner(trial % 4), u(rng), 0.0);
        const cd a(x(rng), x(rng));
        EXPECT_NEAR(out(a), out(-a), 1e-14);
    }
}

TEST(Properties, ConvolutionAgreesWithExtractState)
{
    std::mt19937_64 rng(53);
    std::uniform_real_distribution<double> u(0.1, 0.98);
    const auto g = GridSpec::square(4.0, 17);
    for (int trial = 0; trial < 6; ++trial) {
        const double eta = u(rng);
        const auto w = trial % 2 ? cat_wigner(1.0 + trial / 2) : fock_wigner(trial);
        EXPECT_LT(max_abs_difference(wigner_convolution(w, eta, g), evaluate_on_grid(extract_state(w, eta, 0.0), g)), 1e-8)
            << eta;
    }
}
