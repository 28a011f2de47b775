#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gfbm/ensemble.hpp>
#include <gfbm/errors.hpp>
#include <gfbm/estimators.hpp>
#include <gfbm/grid.hpp>
#include <gfbm/kernel.hpp>
#include <gfbm/sample_cholesky.hpp>
#include <gfbm/sample_circulant.hpp>

#include <Eigen/Dense>

#include <cmath>
#include <cstring>
#include <random>
#include <vector>

#include "oracles.hpp"

using gfbm::GfbmParams;
using gfbm::SampleSpec;
using gfbm::TimeGrid;

TEST_CASE("covariance matrix and Cholesky factor of the textbook 2x2 case") {
    // Standard BM on {1, 2}: cov = [[1,1],[1,2]], L = [[1,0],[1,1]].
    GfbmParams bm(1.0, 0.0, 0.5);
    auto grid = TimeGrid::uniform(2.0, 2);
    auto cov = gfbm::build_covariance_matrix(bm, grid);
    REQUIRE(cov.rows() == 2);
    CHECK(cov(0, 0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(cov(0, 1) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(cov(1, 1) == doctest::Approx(2.0).epsilon(1e-15));

    auto factor = gfbm::cholesky_factor(cov);
    CHECK(factor.jitter == 0.0);
    CHECK(factor.lower(0, 0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(factor.lower(1, 0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(factor.lower(1, 1) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(factor.lower(0, 1) == 0.0);
}

TEST_CASE("Cholesky factor reconstructs the covariance") {
    for (auto params : {GfbmParams(1, 1, 0.75), GfbmParams(2, -1, 0.4),
                        GfbmParams(1, 0, 0.3)}) {
        auto grid = TimeGrid::uniform(3.0, 64);
        auto cov = gfbm::build_covariance_matrix(params, grid);
        auto factor = gfbm::cholesky_factor(cov);
        Eigen::MatrixXd rebuilt = factor.lower * factor.lower.transpose();
        rebuilt.diagonal().array() -= factor.jitter;
        const double scale = cov.cwiseAbs().maxCoeff();
        CHECK((rebuilt - cov).cwiseAbs().maxCoeff() <= 1e-8 * scale);
    }
}

TEST_CASE("covariance matrices are numerically positive semidefinite") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> adist(-2.0, 2.0);
    std::uniform_real_distribution<double> hdist(0.1, 0.9);
    for (int rep = 0; rep < 20; ++rep) {
        const double a = adist(rng), b = adist(rng), h = hdist(rng);
        if (a == 0.0 && b == 0.0) continue;
        GfbmParams params(a, b, h);
        auto grid = TimeGrid::uniform(2.0, 48);
        auto cov = gfbm::build_covariance_matrix(params, grid);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov);
        CHECK(solver.eigenvalues().minCoeff() >= -1e-8 * cov.trace());
    }
}

TEST_CASE("near-degenerate grids still factor through the jitter ladder") {
    // Three nearly coincident times give a covariance within rounding of
    // rank one; the sampler must either factor it cleanly or rescue the
    // factorization with a recorded diagonal shift, never crash.
    const double t = 1.0;
    std::vector<double> pts{0.0, t, std::nextafter(t, 2.0),
                            std::nextafter(std::nextafter(t, 2.0), 2.0)};
    auto grid = TimeGrid::from_points(pts);
    GfbmParams params(1.0, 1.0, 0.75);
    gfbm::CholeskySampler sampler(params, grid);
    CHECK(sampler.jitter() >= 0.0);
    std::vector<double> path(grid.size());
    sampler.generate_path(7, 0, path);
    for (double v : path) CHECK(std::isfinite(v));
    CHECK(path[0] == 0.0);
}

TEST_CASE("samplers are deterministic and partition-independent") {
    GfbmParams params(1.0, -2.0, 0.6);
    auto grid = TimeGrid::uniform(1.0, 32);
    SampleSpec spec{5, 4242, gfbm::SampleMethod::Cholesky};

    auto a = gfbm::sample_cholesky(params, grid, spec);
    auto b = gfbm::sample_cholesky(params, grid, spec);
    CHECK(std::memcmp(a.path(0).data(), b.path(0).data(),
                      sizeof(double) * a.n_points() * a.n_paths()) == 0);

    // Path i of a 5-path run equals path i drawn alone by a fresh sampler.
    gfbm::CholeskySampler chol(params, grid);
    std::vector<double> alone(grid.size());
    for (std::uint64_t i = 0; i < 5; ++i) {
        chol.generate_path(4242, i, alone);
        for (std::size_t k = 0; k < grid.size(); ++k)
            CHECK(alone[k] == a.value(i, k));
    }

    spec.method = gfbm::SampleMethod::Circulant;
    auto c = gfbm::sample_circulant(params, grid, spec);
    auto d = gfbm::sample_circulant(params, grid, spec);
    CHECK(std::memcmp(c.path(0).data(), d.path(0).data(),
                      sizeof(double) * c.n_points() * c.n_paths()) == 0);
    gfbm::CirculantSampler circ(params, grid);
    for (std::uint64_t i = 0; i < 5; ++i) {
        circ.generate_path(4242, i, alone);
        for (std::size_t k = 0; k < grid.size(); ++k)
            CHECK(alone[k] == c.value(i, k));
    }

    // Different seeds decorrelate.
    SampleSpec other{5, 4243, gfbm::SampleMethod::Circulant};
    auto e = gfbm::sample_circulant(params, grid, other);
    CHECK(e.value(0, grid.size() - 1) != c.value(0, grid.size() - 1));
}

TEST_CASE("paths start at exactly zero") {
    GfbmParams params(1.0, 1.0, 0.25);
    auto grid = TimeGrid::uniform(1.0, 16);
    for (auto method : {gfbm::SampleMethod::Cholesky, gfbm::SampleMethod::Circulant}) {
        SampleSpec spec{3, 11, method};
        auto ens = method == gfbm::SampleMethod::Cholesky
                       ? gfbm::sample_cholesky(params, grid, spec)
                       : gfbm::sample_circulant(params, grid, spec);
        for (std::size_t i = 0; i < ens.n_paths(); ++i) CHECK(ens.value(i, 0) == 0.0);
    }
}

TEST_CASE("circulant embedding spectrum is admissible across the H range") {
    auto grid = TimeGrid::uniform(1.0, 256);
    for (double h = 0.1; h < 0.95; h += 0.1) {
        GfbmParams params(1.0, 1.0, h);
        gfbm::CirculantSampler sampler(params, grid);
        CHECK(sampler.embedding_size() >= 4 * 256);
        CHECK((sampler.embedding_size() & (sampler.embedding_size() - 1)) == 0);
        CHECK(sampler.min_eigenvalue() >= -1e-9 * sampler.max_eigenvalue());
        CHECK(sampler.max_eigenvalue() > 0.0);
    }
}

TEST_CASE("fgn autocovariance ties to the unit-lag kernel") {
    CHECK(gfbm::fgn_autocovariance(0.75, 1, 1.0) ==
          doctest::Approx(gfbm::r_b(0.75, 1)).epsilon(1e-15));
    CHECK(gfbm::fgn_autocovariance(0.75, -3, 1.0) ==
          doctest::Approx(gfbm::fgn_autocovariance(0.75, 3, 1.0)).epsilon(1e-15));
    CHECK(gfbm::fgn_autocovariance(0.6, 0, 0.5) ==
          doctest::Approx(gfbm::abs_pow_2h(0.5, 0.6)).epsilon(1e-15));
    // Scaling in the step is exact x^{2H} homogeneity.
    CHECK(gfbm::fgn_autocovariance(0.3, 5, 0.25) ==
          doctest::Approx(gfbm::abs_pow_2h(0.25, 0.3) * gfbm::r_b(0.3, 5))
              .epsilon(1e-14));
}

TEST_CASE("both samplers reproduce the covariance within Monte Carlo bands") {
    auto grid = TimeGrid::uniform(1.0, 8);
    for (auto params : {GfbmParams(1, 1, 0.75), GfbmParams(2, -1, 0.4)}) {
        SampleSpec spec{20000, 515, gfbm::SampleMethod::Cholesky};
        auto chol = gfbm::sample_cholesky(params, grid, spec);
        auto scan1 = gfbm::covariance_discrepancy_scan(chol, params);
        CHECK(scan1.passed);

        spec.method = gfbm::SampleMethod::Circulant;
        spec.seed = 516;
        auto circ = gfbm::sample_circulant(params, grid, spec);
        auto scan2 = gfbm::covariance_discrepancy_scan(circ, params);
        CHECK(scan2.passed);

        auto cross = gfbm::cross_method_covariance_check(chol, circ);
        CHECK(cross.passed);
    }
}

TEST_CASE("closed-form covariance agrees with a from-scratch Monte Carlo oracle") {
    // Brute-force oracle: hand-rolled 4x4 Cholesky + Mersenne Twister, no
    // shared code with the library path. Validates the collected covariance
    // formula distributionally.
    GfbmParams params(1.0, 1.0, 0.75);
    const std::array<double, 4> times{0.25, 0.5, 0.75, 1.0};
    std::array<std::array<double, 4>, 4> cov{};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            cov[i][j] = oracle::gfbm_cov(1.0, 1.0, 0.75, times[i], times[j]);

    oracle::TinyGaussian<4> sampler(cov);
    std::mt19937_64 rng(2357);
    const int n = 200000;
    std::vector<double> prod02(n), prod13(n), sq3(n);
    for (int k = 0; k < n; ++k) {
        auto z = sampler.draw(rng);
        prod02[k] = z[0] * z[2];
        prod13[k] = z[1] * z[3];
        sq3[k] = z[3] * z[3];
    }
    auto m1 = oracle::mean_and_se(prod02);
    auto m2 = oracle::mean_and_se(prod13);
    auto m3 = oracle::mean_and_se(sq3);
    CHECK(std::fabs(m1.mean - gfbm::covariance(params, 0.25, 0.75)) < 5.0 * m1.se);
    CHECK(std::fabs(m2.mean - gfbm::covariance(params, 0.5, 1.0)) < 5.0 * m2.se);
    CHECK(std::fabs(m3.mean - gfbm::variance(params, 1.0)) < 5.0 * m3.se);
}

TEST_CASE("circulant paths scale exactly with the grid under matched seeds") {
    // Dilating the grid by L multiplies the increment autocovariance by
    // L^{2H} and leaves the normal draws untouched, so matched-seed paths
    // are related by L^H up to FFT rounding.
    GfbmParams params(1.0, 1.0, 0.75);
    const std::size_t n = 64;
    SampleSpec spec{4, 909, gfbm::SampleMethod::Circulant};
    auto base = gfbm::sample_circulant(params, TimeGrid::uniform(1.0, n), spec);
    auto wide = gfbm::sample_circulant(params, TimeGrid::uniform(4.0, n), spec);

    const double scale = std::pow(4.0, params.hurst());
    double sup = 0.0, err = 0.0;
    for (std::size_t i = 0; i < base.n_paths(); ++i) {
        for (std::size_t k = 0; k < base.n_points(); ++k) {
            sup = std::max(sup, std::fabs(wide.value(i, k)));
            err = std::max(err, std::fabs(wide.value(i, k) - scale * base.value(i, k)));
        }
    }
    CHECK(err <= 1e-10 * sup);
}

TEST_CASE("sampler error handling") {
    GfbmParams params(1.0, 0.0, 0.5);

    // The dense factorization refuses grids past its cap.
    auto long_grid = TimeGrid::uniform(1.0, 5000);
    CHECK_THROWS_AS(gfbm::CholeskySampler(params, long_grid), std::invalid_argument);
    CHECK_THROWS_WITH_AS(gfbm::CholeskySampler(params, long_grid),
                         doctest::Contains("4096"), std::invalid_argument);

    // Method/spec mismatches are refused rather than silently redirected.
    auto grid = TimeGrid::uniform(1.0, 8);
    SampleSpec wrong{1, 1, gfbm::SampleMethod::Circulant};
    CHECK_THROWS_AS(gfbm::sample_cholesky(params, grid, wrong), std::invalid_argument);
    wrong.method = gfbm::SampleMethod::Cholesky;
    CHECK_THROWS_AS(gfbm::sample_circulant(params, grid, wrong), std::invalid_argument);

    // The circulant sampler needs a uniform grid.
    auto ragged = TimeGrid::from_points({0.0, 0.5, 2.0});
    CHECK_THROWS_AS(gfbm::CirculantSampler(params, ragged), std::invalid_argument);

    // Output span of the wrong length.
    gfbm::CholeskySampler sampler(params, grid);
    std::vector<double> short_out(3);
    CHECK_THROWS_AS(sampler.generate_path(1, 0, short_out), std::invalid_argument);
}

TEST_CASE("method names round-trip") {
    CHECK(gfbm::to_string(gfbm::SampleMethod::Cholesky) == "cholesky");
    CHECK(gfbm::to_string(gfbm::SampleMethod::Circulant) == "circulant");
    CHECK(gfbm::sample_method_from_string("cholesky") == gfbm::SampleMethod::Cholesky);
    CHECK(gfbm::sample_method_from_string("circulant") == gfbm::SampleMethod::Circulant);
    CHECK_THROWS_AS(gfbm::sample_method_from_string("fft"), std::invalid_argument);
}
