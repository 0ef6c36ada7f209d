#include "fixtures.hpp"
#include "oracles.hpp"

#include "toric/catalog.hpp"
#include "toric/kstability.hpp"

#include <doctest.h>

#include <random>

using namespace toric;

namespace {

std::vector<Fan> test_fans() {
    std::vector<Fan> fans;
    for (const auto& name : catalog_list()) fans.push_back(catalog_get(name).fan);
    fans.push_back(fixtures::p112());
    fans.push_back(fixtures::cube());
    return fans;
}

LatticeVector random_primitive(std::mt19937_64& rng, std::size_t dim) {
    std::uniform_int_distribution<int> c(-9, 9);
    while (true) {
        LatticeVector v(dim);
        for (auto& x : v) x = c(rng);
        if (!v.is_zero()) return primitive_vector(v);
    }
}

bool in_cone(const Fan& f, std::size_t k, const LatticeVector& v) {
    for (const auto& facet : cone_facets(f, k))
        if (dot(facet.inward_normal, v) < 0) return false;
    return true;
}

}  // namespace

TEST_CASE("F1 invariants") {
    ToricFano x(catalog_get("F1").fan);
    CHECK(x.barycenter() == RationalVector{Rational(1, 12), Rational(1, 6)});
    CHECK(x.beta_ray(0) == Rational(13, 12));
    CHECK(x.beta_ray(1) == Rational(7, 6));
    CHECK(x.beta_ray(2) == Rational(13, 12));
    CHECK(x.beta_ray(3) == Rational(5, 6));
    auto d = delta_toric(x);
    CHECK(d.delta == Rational(6, 7));
    CHECK(d.minimizing_rays == std::vector<std::size_t>{1});
    CHECK(kstability_verdict(x) == Verdict::KUnstable);
    CHECK(vojta_eligible_rays(x) == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("dP7 invariants") {
    Fan f = catalog_get("dP7").fan;
    auto r = analyze(f);
    CHECK(r.barycenter == RationalVector{Rational(4, 21), Rational(-2, 21)});
    CHECK(r.betas == std::vector<Rational>{Rational(25, 21), Rational(19, 21), Rational(19, 21), Rational(23, 21),
                                           Rational(23, 21)});
    CHECK(r.delta == Rational(21, 25));
    CHECK(r.minimizing_rays == std::vector<std::size_t>{0});
    CHECK(r.verdict == Verdict::KUnstable);
    CHECK(r.eligible_rays == std::vector<std::size_t>{0, 3, 4});
    CHECK(r.anticanonical_volume == 7);
    CHECK(r.smooth);
}

TEST_CASE("ties are reported") {
    auto d = delta_toric(fixtures::p2());
    CHECK(d.delta == Rational(1));
    CHECK(d.minimizing_rays == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("singular and non-simplicial fans") {
    auto r = analyze(fixtures::p112());
    // P_{-K} has vertices (-1,-1), (3,-1), (-1,1); barycenter (1/3, -1/3)
    CHECK(r.barycenter == RationalVector{Rational(1, 3), Rational(-1, 3)});
    CHECK(r.anticanonical_volume == 8);
    CHECK(r.verdict == Verdict::KUnstable);
    CHECK_FALSE(r.smooth);
    auto c = analyze(fixtures::cube());
    CHECK(c.verdict == Verdict::KSemistable);
    CHECK_FALSE(c.simplicial);
}

TEST_CASE("verdict and route names") {
    CHECK(to_string(Verdict::KSemistable) == "K_SEMISTABLE");
    CHECK(to_string(Verdict::KUnstable) == "K_UNSTABLE");
    CHECK(parse_verdict("K_UNSTABLE") == Verdict::KUnstable);
    CHECK_FALSE(parse_verdict("unstable"));
    CHECK(to_string(Route::TheoremB) == "THEOREM_B");
    CHECK(parse_route("C") == Route::TheoremC);
    CHECK(parse_route("THEOREM_B") == Route::TheoremB);
    CHECK_FALSE(parse_route("D"));
}

TEST_CASE("toric valuations") {
    CHECK(beta_toric_valuation(catalog_get("P1xP1").fan, LatticeVector{1, 1}) == 2);
    CHECK(log_discrepancy(fixtures::p2(), LatticeVector{1, 1}) == 2);
    CHECK(log_discrepancy(catalog_get("F1").fan, LatticeVector{1, 1}) == 2);
    CHECK_THROWS_AS(log_discrepancy(fixtures::p2(), LatticeVector{0, 0}), Error);
    CHECK_THROWS_AS(beta_toric_valuation(fixtures::p2(), LatticeVector{0, 0}), Error);
    CHECK_THROWS_AS(log_discrepancy(fixtures::p2(), LatticeVector{1, 0, 0}), std::invalid_argument);
}

TEST_CASE("ray valuations reduce to the divisorial invariants") {
    for (const auto& f : test_fans()) {
        ToricFano x(f);
        for (std::size_t i = 0; i < f.ray_count(); ++i) {
            CHECK(x.log_discrepancy(f.ray(i)) == 1);
            CHECK(x.beta_toric_valuation(f.ray(i)) == x.beta_ray(i));
        }
    }
}

TEST_CASE("valuation invariants are homogeneous of degree one") {
    std::mt19937_64 rng(3);
    for (const auto& f : test_fans()) {
        ToricFano x(f);
        for (int trial = 0; trial < 20; ++trial) {
            const auto v = random_primitive(rng, f.dim());
            for (long k : {2L, 5L}) {
                LatticeVector kv = v * Integer(k);
                CHECK(x.log_discrepancy(kv) == x.log_discrepancy(v) * Rational(k));
                CHECK(x.beta_toric_valuation(kv) == x.beta_toric_valuation(v) * Rational(k));
            }
        }
    }
}

TEST_CASE("log discrepancy does not depend on the chosen cone") {
    std::mt19937_64 rng(17);
    for (const auto& f : test_fans()) {
        auto data = require_q_fano(f);
        std::vector<LatticeVector> probes(f.rays());
        // sums of two rays of a common cone lie on walls or inside cones
        for (const auto& c : f.max_cones())
            for (std::size_t a = 0; a < c.rays.size(); ++a)
                for (std::size_t b = a + 1; b < c.rays.size(); ++b) probes.push_back(f.ray(c.rays[a]) + f.ray(c.rays[b]));
        for (int t = 0; t < 20; ++t) probes.push_back(random_primitive(rng, f.dim()));
        for (const auto& v : probes) {
            std::optional<Rational> value;
            int containing = 0;
            for (std::size_t k = 0; k < f.max_cones().size(); ++k) {
                if (!in_cone(f, k, v)) continue;
                ++containing;
                const Rational a = -dot(data.cartier_vertices[k], v);
                if (value)
                    CHECK(a == *value);
                else
                    value = a;
            }
            CHECK(containing >= 1);
            CHECK(log_discrepancy(f, v) == *value);
        }
    }
}

TEST_CASE("random valuations never beat the ray minimum") {
    std::mt19937_64 rng(99);
    for (const auto& f : test_fans()) {
        ToricFano x(f);
        const Rational delta = delta_toric(x).delta;
        for (int trial = 0; trial < 100; ++trial) {
            const auto v = random_primitive(rng, f.dim());
            CHECK(x.log_discrepancy(v) / x.beta_toric_valuation(v) >= delta);
        }
    }
}

TEST_CASE("random Q-Fano polygons: betas from the shoelace barycenter") {
    std::mt19937_64 rng(123);
    int seen = 0;
    while (seen < 100) {
        auto r = oracle::random_q_fano_2d(rng);
        if (!r) continue;
        ++seen;
        auto poly = oracle::anticanonical_polygon(r->cyclic);
        auto report = analyze(r->fan);
        Rational min_beta = report.betas.front(), max_beta = report.betas.front();
        for (std::size_t i = 0; i < r->fan.ray_count(); ++i) {
            const auto& v = r->fan.ray(i);
            const Rational expect = poly.centroid[0] * Rational(v[0]) + poly.centroid[1] * Rational(v[1]) + Rational(1);
            CHECK(report.betas[i] == expect);
            min_beta = std::min(min_beta, report.betas[i]);
            max_beta = std::max(max_beta, report.betas[i]);
        }
        CHECK(report.delta == Rational(1) / max_beta);
        CHECK(report.delta <= Rational(1));
        CHECK(min_beta <= Rational(1));
        CHECK(max_beta >= Rational(1));
        CHECK_FALSE(report.eligible_rays.empty());
        CHECK((report.delta == Rational(1)) == report.barycenter.is_zero());
    }
}

TEST_CASE("non-Fano input is rejected") {
    Fan f2(2, {{1, 0}, {0, 1}, {-1, 2}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK_THROWS_AS(ToricFano{f2}, NotQFanoError);
    CHECK_THROWS_AS(analyze(f2), NotQFanoError);
}

TEST_CASE("route C on P2 with all rays") {
    ToricFano x(fixtures::p2());
    auto c = vojta_certificate(x, Route::TheoremC, {0, 1, 2});
    CHECK(c.valid());
    CHECK_FALSE(c.first_failure());
    CHECK(c.component_betas == std::vector<Rational>{1, 1, 1});
    CHECK(c.sum_divisor_beta == Rational(1, 3));
    REQUIRE(c.checks.size() == 5);
    CHECK(c.checks[0].id == "c1");
    CHECK(c.checks[2].position);
    CHECK(c.checks.back().id == "sum_divisor_beta");
    CHECK_FALSE(c.checks.back().gating);
    CHECK_FALSE(c.checks.back().passed);
}

TEST_CASE("route C on F1 always fails at c1") {
    ToricFano x(catalog_get("F1").fan);
    for (std::size_t k = 1; k <= 4; ++k)
        for_each_subset(4, k, [&](const std::vector<std::size_t>& rays) {
            auto c = vojta_certificate(x, Route::TheoremC, rays);
            CHECK_FALSE(c.valid());
            CHECK(c.first_failure() == std::string("c1"));
        });
}

TEST_CASE("route C with repeated rays fails at c2") {
    ToricFano x(fixtures::p2());
    auto c = vojta_certificate(x, Route::TheoremC, {0, 0});
    CHECK(c.first_failure() == std::string("c2"));
}

TEST_CASE("route C on P1xP1 reports both general position readings") {
    ToricFano x(catalog_get("P1xP1").fan);
    auto c = vojta_certificate(x, Route::TheoremC, {0, 1});
    CHECK(c.valid());
    CHECK(c.general_position_reading == "lenient");
    REQUIRE(c.checks[2].position);
    CHECK_FALSE(c.checks[2].position->general_position_strict);
    CHECK(c.checks[2].position->general_position_lenient);
}

TEST_CASE("route B on P2 with one ray") {
    ToricFano x(fixtures::p2());
    auto c = vojta_certificate(x, Route::TheoremB, {0}, 0);
    CHECK(c.valid());
    auto all = vojta_certificate(x, Route::TheoremB, {0, 1, 2}, 1);
    CHECK(all.valid());
    REQUIRE(all.checks[1].equivalences.size() == 3);
    for (const auto& w : all.checks[1].equivalences) {
        CHECK(w.u);
        CHECK(w.integral);
    }
}

TEST_CASE("route B failures") {
    ToricFano p1p1(catalog_get("P1xP1").fan);
    CHECK(vojta_certificate(p1p1, Route::TheoremB, {0, 2}, 0).first_failure() == std::string("b2"));

    ToricFano f1(catalog_get("F1").fan);
    CHECK(vojta_certificate(f1, Route::TheoremB, {3}, 3).first_failure() == std::string("b1"));

    ToricFano p2(fixtures::p2());
    auto repeated = vojta_certificate(p2, Route::TheoremB, {0, 0}, 0);
    CHECK(repeated.first_failure() == std::string("b3"));

    CHECK_THROWS_AS(vojta_certificate(p2, Route::TheoremB, {0}), std::invalid_argument);
    CHECK_THROWS_AS(vojta_certificate(p2, Route::TheoremC, {}), std::invalid_argument);
    CHECK_THROWS_AS(vojta_certificate(p2, Route::TheoremC, {7}), std::out_of_range);
    CHECK_THROWS_AS(vojta_certificate(p2, Route::TheoremB, {0}, 9), std::out_of_range);
}

TEST_CASE("route B needs an integral linear equivalence") {
    // rays span an index-3 sublattice: D_0 - D_1 is only Q-principal
    Fan f(2, {{2, 1}, {-1, 1}, {-1, -2}}, {{0, 1}, {1, 2}, {2, 0}});
    ToricFano x(f);
    auto c = vojta_certificate(x, Route::TheoremB, {1}, 0);
    CHECK(c.first_failure() == std::string("b2"));
    REQUIRE(c.checks[1].equivalences.size() == 1);
    const auto& w = c.checks[1].equivalences[0];
    REQUIRE(w.u);
    CHECK_FALSE(w.integral);
    CHECK(*w.u == RationalVector{Rational(-2, 3), Rational(1, 3)});
}

TEST_CASE("route C gates on every component beta") {
    // on P(1,1,2) the barycenter is nonzero so c1 fails first; the
    // component check is still computed
    ToricFano x(fixtures::p112());
    auto c = vojta_certificate(x, Route::TheoremC, {0, 1, 2});
    CHECK(c.first_failure() == std::string("c1"));
    CHECK(c.component_betas.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(c.component_betas[i] == x.beta_ray(i));
}
