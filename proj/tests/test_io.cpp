#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gfbm/ensemble.hpp>
#include <gfbm/errors.hpp>
#include <gfbm/grid.hpp>
#include <gfbm/io.hpp>
#include <gfbm/params.hpp>
#include <gfbm/sample_circulant.hpp>

#include <cstdio>
#include <cstdlib>
#include <random>
#include <sstream>
#include <string>

using gfbm::GfbmParams;
using gfbm::SampleSpec;
using gfbm::TimeGrid;

TEST_CASE("format_double produces shortest exact representations") {
    CHECK(gfbm::format_double(1.0) == "1");
    CHECK(gfbm::format_double(0.1) == "0.1");
    CHECK(gfbm::format_double(-2.5) == "-2.5");
    CHECK(gfbm::format_double(0.0) == "0");

    std::mt19937_64 rng(4);
    std::normal_distribution<double> normal(0.0, 100.0);
    for (int i = 0; i < 1000; ++i) {
        const double x = normal(rng);
        const std::string s = gfbm::format_double(x);
        CHECK(std::strtod(s.c_str(), nullptr) == x);
    }
}

TEST_CASE("ensemble CSV round trip is byte-identical and value-exact") {
    GfbmParams params(1.0, -2.0, 0.35);
    auto grid = TimeGrid::uniform(2.0, 16);
    SampleSpec spec{3, 8899, gfbm::SampleMethod::Circulant};
    auto original = gfbm::sample_circulant(params, grid, spec);

    std::ostringstream first;
    gfbm::write_ensemble_csv(original, first);

    std::istringstream in(first.str());
    auto loaded = gfbm::read_ensemble_csv(in);

    CHECK(loaded.params().a() == params.a());
    CHECK(loaded.params().b() == params.b());
    CHECK(loaded.params().hurst() == params.hurst());
    CHECK(loaded.spec().seed == spec.seed);
    CHECK(loaded.spec().method == gfbm::SampleMethod::Circulant);
    REQUIRE(loaded.n_paths() == original.n_paths());
    REQUIRE(loaded.n_points() == original.n_points());
    for (std::size_t i = 0; i < original.n_paths(); ++i)
        for (std::size_t k = 0; k < original.n_points(); ++k)
            CHECK(loaded.value(i, k) == original.value(i, k));
    for (std::size_t k = 0; k < original.n_points(); ++k)
        CHECK(loaded.grid().points()[k] == grid.points()[k]);

    std::ostringstream second;
    gfbm::write_ensemble_csv(loaded, second);
    CHECK(first.str() == second.str());
}

TEST_CASE("the header line carries the generation parameters") {
    GfbmParams params(0.5, 0.5, 0.5);
    auto grid = TimeGrid::uniform(1.0, 2);
    SampleSpec spec{1, 7, gfbm::SampleMethod::Cholesky};
    gfbm::SampleProvenance prov;
    prov.method = spec.method;
    prov.seed = spec.seed;
    gfbm::PathEnsemble ens(params, grid, spec, prov);

    std::ostringstream out;
    gfbm::write_ensemble_csv(ens, out);
    const std::string text = out.str();
    CHECK(text.rfind("# gfbm a=0.5 b=0.5 H=0.5 seed=7 method=cholesky\n", 0) == 0);
    CHECK(text.find("t,path_0\n") != std::string::npos);
}

namespace {

gfbm::PathEnsemble parse(const std::string& text) {
    std::istringstream in(text);
    return gfbm::read_ensemble_csv(in);
}

}  // namespace

TEST_CASE("malformed files are rejected with the offending position") {
    const std::string header = "# gfbm a=1 b=0 H=0.5 seed=1 method=cholesky\n";

    SUBCASE("unparseable value names line and field") {
        try {
            parse(header + "t,path_0\n0,0\n0.5,oops\n");
            FAIL("expected csv_parse_error");
        } catch (const gfbm::csv_parse_error& e) {
            CHECK(e.line() == 4);
            CHECK(e.column() == 2);
            CHECK(std::string(e.what()).find("line 4") != std::string::npos);
        }
    }

    SUBCASE("missing metadata line") {
        CHECK_THROWS_AS(parse("t,path_0\n0,0\n1,0.5\n"), gfbm::csv_parse_error);
    }

    SUBCASE("wrong first column name") {
        CHECK_THROWS_AS(parse(header + "time,path_0\n0,0\n1,0.5\n"),
                        gfbm::csv_parse_error);
    }

    SUBCASE("time must start at exactly zero") {
        CHECK_THROWS_AS(parse(header + "t,path_0\n0.25,0\n1,0.5\n"),
                        gfbm::csv_parse_error);
    }

    SUBCASE("first row must be the deterministic zero") {
        CHECK_THROWS_AS(parse(header + "t,path_0\n0,0.125\n1,0.5\n"),
                        gfbm::csv_parse_error);
    }

    SUBCASE("time must be strictly increasing") {
        CHECK_THROWS_AS(parse(header + "t,path_0\n0,0\n1,0.5\n1,0.7\n"),
                        gfbm::csv_parse_error);
    }

    SUBCASE("rows must have a consistent field count") {
        try {
            parse(header + "t,path_0,path_1\n0,0,0\n1,0.5\n");
            FAIL("expected csv_parse_error");
        } catch (const gfbm::csv_parse_error& e) {
            CHECK(e.line() == 4);
        }
    }

    SUBCASE("truncated input") {
        CHECK_THROWS_AS(parse(header + "t,path_0\n"), gfbm::csv_parse_error);
        CHECK_THROWS_AS(parse(""), gfbm::csv_parse_error);
        CHECK_THROWS_AS(parse(header), gfbm::csv_parse_error);
    }

    SUBCASE("bad metadata values") {
        CHECK_THROWS_AS(parse("# gfbm a=x b=0 H=0.5 seed=1 method=cholesky\n"
                              "t,path_0\n0,0\n1,0.5\n"),
                        gfbm::csv_parse_error);
        CHECK_THROWS_AS(parse("# gfbm a=1 b=0 H=0.5 seed=1 method=warp\n"
                              "t,path_0\n0,0\n1,0.5\n"),
                        gfbm::csv_parse_error);
    }
}

TEST_CASE("file-path variants agree with the stream variants") {
    GfbmParams params(1.0, 1.0, 0.6);
    auto grid = TimeGrid::uniform(1.0, 4);
    SampleSpec spec{2, 313, gfbm::SampleMethod::Circulant};
    auto ens = gfbm::sample_circulant(params, grid, spec);

    const std::string path = "roundtrip_io_test.csv";
    gfbm::write_ensemble_csv(ens, path);
    auto loaded = gfbm::read_ensemble_csv(path);
    CHECK(loaded.n_paths() == 2);
    CHECK(loaded.value(1, 4) == ens.value(1, 4));
    std::remove(path.c_str());

    CHECK_THROWS_WITH_AS(gfbm::read_ensemble_csv(std::string("does_not_exist.csv")),
                         doctest::Contains("cannot open"), std::runtime_error);
}
