#include <cmath>
#include <vector>

#include "doctest.h"
#include "sentinel/error.hpp"
#include "sentinel/metrics.hpp"
#include "sentinel/rng.hpp"

using namespace sentinel;

TEST_CASE("metric identities hold on random confusion matrices") {
    Rng rng(404);
    for (int trial = 0; trial < 200; ++trial) {
        Confusion c;
        c.tp = uint64_t(rng.range(1, 500));
        c.fp = uint64_t(rng.range(1, 500));
        c.tn = uint64_t(rng.range(1, 500));
        c.fn = uint64_t(rng.range(1, 500));
        MetricsReport m = compute_metrics(c);
        REQUIRE(m.accuracy.has_value());
        REQUIRE(m.precision.has_value());
        REQUIRE(m.recall.has_value());
        REQUIRE(m.f1.has_value());
        REQUIRE(m.fpr.has_value());
        REQUIRE(m.fnr.has_value());
        double tp = double(c.tp), fp = double(c.fp), tn = double(c.tn), fn = double(c.fn);
        CHECK(*m.accuracy == (tp + tn) / (tp + tn + fp + fn));
        CHECK(*m.precision == tp / (tp + fp));
        CHECK(*m.recall == tp / (tp + fn));
        CHECK(*m.fpr == fp / (fp + tn));
        CHECK(*m.fnr == fn / (fn + tp));
        double f1 = 2.0 * *m.precision * *m.recall / (*m.precision + *m.recall);
        CHECK(*m.f1 == doctest::Approx(f1).epsilon(1e-12));
        CHECK(*m.fnr == doctest::Approx(1.0 - *m.recall).epsilon(1e-12));
    }
}

TEST_CASE("zero denominators leave metrics undefined instead of dividing") {
    SUBCASE("no predicted positives") {
        MetricsReport m = compute_metrics({0, 0, 10, 5});
        CHECK_FALSE(m.precision.has_value());
        CHECK(m.recall.has_value());
        CHECK_FALSE(m.f1.has_value());
    }
    SUBCASE("no actual positives") {
        MetricsReport m = compute_metrics({0, 3, 10, 0});
        CHECK_FALSE(m.recall.has_value());
        CHECK_FALSE(m.fnr.has_value());
        CHECK(m.fpr.has_value());
    }
    SUBCASE("no actual negatives") {
        MetricsReport m = compute_metrics({5, 0, 0, 2});
        CHECK_FALSE(m.fpr.has_value());
        CHECK(m.recall.has_value());
    }
    SUBCASE("empty confusion") {
        MetricsReport m = compute_metrics({0, 0, 0, 0});
        CHECK_FALSE(m.accuracy.has_value());
        CHECK_FALSE(m.precision.has_value());
        CHECK_FALSE(m.recall.has_value());
        CHECK_FALSE(m.f1.has_value());
        CHECK_FALSE(m.fpr.has_value());
        CHECK_FALSE(m.fnr.has_value());
    }
    SUBCASE("perfect precision and recall give f1 of one") {
        MetricsReport m = compute_metrics({10, 0, 10, 0});
        CHECK(*m.accuracy == 1.0);
        CHECK(*m.f1 == 1.0);
    }
}

TEST_CASE("undefined metrics print as na") {
    CHECK(metric_text(std::nullopt) == "na");
    CHECK(metric_text(0.5) == "0.5");
    CHECK(metric_text(1.0) == "1");
}

TEST_CASE("roc curve runs from the origin to (1,1) and never steps backwards") {
    Rng rng(405);
    std::vector<ScoredSample> samples;
    for (int i = 0; i < 400; ++i)
        samples.push_back({rng.next_double(), rng.next_u64() % 3 != 0});
    RocCurve roc = roc_curve(samples);
    REQUIRE(roc.points.size() >= 2);
    CHECK(roc.points.front().fpr == 0.0);
    CHECK(roc.points.front().tpr == 0.0);
    CHECK(roc.points.back().fpr == 1.0);
    CHECK(roc.points.back().tpr == 1.0);
    for (size_t i = 1; i < roc.points.size(); ++i) {
        CHECK(roc.points[i].fpr >= roc.points[i - 1].fpr);
        CHECK(roc.points[i].tpr >= roc.points[i - 1].tpr);
        CHECK(roc.points[i].threshold <= roc.points[i - 1].threshold);
    }
}

TEST_CASE("tied scores collapse into a single sweep step") {
    // two positives at 0.9, two negatives at 0.1, one of each at 0.5
    std::vector<ScoredSample> samples = {
        {0.9, true}, {0.9, true}, {0.5, true}, {0.5, false}, {0.1, false}, {0.1, false},
    };
    RocCurve roc = roc_curve(samples);
    // origin + one point per distinct score
    CHECK(roc.points.size() == 4);
    CHECK(roc.auc == doctest::Approx(17.0 / 18.0).epsilon(1e-12));
}

TEST_CASE("separable scores reach a perfect area under the curve") {
    std::vector<ScoredSample> samples;
    Rng rng(406);
    for (int i = 0; i < 100; ++i) {
        samples.push_back({0.6 + 0.4 * rng.next_double(), true});
        samples.push_back({0.4 * rng.next_double(), false});
    }
    RocCurve roc = roc_curve(samples);
    CHECK(roc.auc == 1.0);
}

TEST_CASE("uninformative scores hover near one half") {
    Rng rng(407);
    std::vector<ScoredSample> samples;
    for (int i = 0; i < 20000; ++i)
        samples.push_back({rng.next_double(), rng.next_u64() % 2 == 0});
    RocCurve roc = roc_curve(samples);
    CHECK(roc.auc == doctest::Approx(0.5).epsilon(0.04));
}

TEST_CASE("a single-class sample set has no curve") {
    std::vector<ScoredSample> all_pos = {{0.3, true}, {0.7, true}};
    CHECK_THROWS_AS(roc_curve(all_pos), Error);
    std::vector<ScoredSample> all_neg = {{0.3, false}, {0.7, false}};
    CHECK_THROWS_AS(roc_curve(all_neg), Error);
    CHECK_THROWS_AS(roc_curve({}), Error);
}
