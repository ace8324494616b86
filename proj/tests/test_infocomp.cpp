#include "doctest.h"

#include <cmath>
#include <vector>

#include "catcomp/infocomp.hpp"
#include "catcomp/structure.hpp"
#include "oracles.hpp"

using namespace catcomp;
using doctest::Approx;

namespace {

// Enumerate size-n subsets of {0..d-1} in lexicographic order, independently
// of the library's iteration helper.
std::vector<std::vector<int>> subsets_lex(int d, int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> pick;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(pick.size()) == n) {
            out.push_back(pick);
            return;
        }
        for (int i = start; i < d; ++i) {
            pick.push_back(i);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

const CategoryStructure shj(int type) {
    switch (type) {
        case 1: return oracle::make({"000", "001", "010", "011"});
        case 2: return oracle::make({"000", "001", "110", "111"});
        case 3: return oracle::make({"000", "001", "010", "101"});
        case 4: return oracle::make({"000", "001", "010", "100"});
        case 5: return oracle::make({"000", "001", "010", "111"});
        default: return oracle::make({"000", "011", "101", "110"});
    }
}

} // namespace

TEST_SUITE_BEGIN("infocomp");

TEST_CASE("entropy term") {
    CHECK(entropy_term(0.0) == 0.0);
    CHECK(entropy_term(1.0) == 0.0);
    CHECK(entropy_term(0.5) == Approx(0.5).epsilon(1e-12));
    // -0.75 * log2(0.75)
    CHECK(entropy_term(0.75) == Approx(0.311278124459133).epsilon(1e-12));
    CHECK_THROWS_AS(entropy_term(-0.01), RangeError);
    CHECK_THROWS_AS(entropy_term(1.01), RangeError);
}

TEST_CASE("cell entropy") {
    const auto s = shj(2); // A = {000,001,110,111}
    // one A member and one B member -> one full bit
    CHECK(cell_entropy(s, {0, 2}) == Approx(1.0).epsilon(1e-12));
    // one A member among four -> H(1/4)
    CHECK(cell_entropy(s, {1, 2, 3, 4}) == Approx(0.811278124459133).epsilon(1e-12));
    // pure cells carry no uncertainty
    CHECK(cell_entropy(s, {0, 1}) == 0.0);
    CHECK(cell_entropy(s, {2, 3}) == 0.0);
    CHECK_THROWS_AS(cell_entropy(s, {}), RangeError);
}

TEST_CASE("level uncertainties of the worked six-way example") {
    const auto s = shj(2);
    CHECK(level_uncertainties(s, 0) == std::vector<double>{1.0});
    CHECK(level_uncertainties(s, 1) == std::vector<double>{1.0, 1.0, 1.0});
    // lexicographic subset order: {0,1} resolves the category -> leading 0
    const auto u2 = level_uncertainties(s, 2);
    REQUIRE(u2.size() == 3);
    CHECK(u2[0] == 0.0);
    CHECK(u2[1] == Approx(1.0).epsilon(1e-12));
    CHECK(u2[2] == Approx(1.0).epsilon(1e-12));
    CHECK(level_uncertainties(s, 3) == std::vector<double>{0.0});
    CHECK_THROWS_AS(level_uncertainties(s, -1), RangeError);
    CHECK_THROWS_AS(level_uncertainties(s, 4), RangeError);
}

TEST_CASE("level metric matches the printed per-level values") {
    CHECK(level_metric(shj(3), 1, min_aggregator()) ==
          Approx(0.811278124459133).epsilon(1e-12)); // prints 0.81
    CHECK(level_metric(shj(5), 1, mean_aggregator()) ==
          Approx((0.811278124459133 + 2.0) / 3.0).epsilon(1e-12)); // prints 0.94
    CHECK(level_metric(shj(1), 2, mean_aggregator()) ==
          Approx(1.0 / 3.0).epsilon(1e-12)); // prints 0.33
    CHECK_THROWS_AS(level_metric(shj(1), 1, weighted_aggregator(0.5)), RangeError);
}

TEST_CASE("aggregate metric: six-way worked example") {
    const auto profile = aggregate_metric(shj(2), min_aggregator());
    CHECK(profile.dims == 3);
    REQUIRE(profile.u_vectors.size() == 4);
    CHECK(profile.u_vectors[0] == std::vector<double>{1.0});
    CHECK(profile.u_levels[0] == Approx(1.0).epsilon(1e-12));
    CHECK(profile.u_levels[1] == Approx(1.0).epsilon(1e-12));
    CHECK(profile.u_levels[2] == 0.0);
    CHECK(profile.u_levels[3] == 0.0);
    CHECK(profile.u_hat == Approx(2.0).epsilon(1e-12));

    const auto mean_profile = aggregate_metric(shj(2), mean_aggregator());
    CHECK(mean_profile.u_hat == Approx(8.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("aggregate metric: small-catalog spot values") {
    // antipodal pair in two dimensions: both aggregators give 2
    const auto diag = oracle::make({"00", "11"});
    CHECK(aggregate_metric(diag, min_aggregator()).u_hat == Approx(2.0).epsilon(1e-12));
    CHECK(aggregate_metric(diag, mean_aggregator()).u_hat == Approx(2.0).epsilon(1e-12));

    // singleton in d dimensions: u(n) = H(2^(n-d)) / 2^n, closed form
    for (int d = 2; d <= 4; ++d) {
        std::vector<Stimulus> one{0};
        const CategoryStructure s(d, one);
        double expected = 0.0;
        for (int n = 0; n < d; ++n) {
            const double pa = std::ldexp(1.0, n - d); // 2^(n-d)
            const double h = -pa * std::log2(pa) - (1 - pa) * std::log2(1 - pa);
            expected += h / (1 << n);
        }
        for (const auto& g : {min_aggregator(), mean_aggregator()}) {
            CHECK(aggregate_metric(s, g).u_hat == Approx(expected).epsilon(1e-12));
        }
    }
    // the 4-dimensional singleton evaluates to 0.936892 (prints as 0.94)
    const CategoryStructure single4(4, std::vector<Stimulus>{0});
    CHECK(aggregate_metric(single4, min_aggregator()).u_hat ==
          Approx(0.936892).epsilon(1e-5));
}

TEST_CASE("weighted two-level blend") {
    CHECK(weighted_two_level(shj(2), 1.0) == Approx(1.0).epsilon(1e-12));
    CHECK(weighted_two_level(shj(2), 0.0) == Approx(0.0).epsilon(1e-12));
    CHECK(weighted_two_level(shj(2), 0.25) == Approx(0.25).epsilon(1e-12));
    for (double alpha : {0.0, 0.3, 1.0})
        CHECK(weighted_two_level(shj(6), alpha) == Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(weighted_two_level(shj(2), -0.1), RangeError);
    CHECK_THROWS_AS(weighted_two_level(shj(2), 1.1), RangeError);
    CHECK_THROWS_AS(weighted_two_level(oracle::make({"0"}), 0.5), RangeError);
}

TEST_CASE("every level entry equals the conditional-entropy oracle") {
    for (int d = 2; d <= 4; ++d) {
        for (int p = 1; p <= (1 << d) / 2; ++p) {
            for (const auto& cls : enumerate_classes(d, p)) {
                for (int n = 0; n <= d; ++n) {
                    const auto entries = level_uncertainties(cls, n);
                    const auto subsets = subsets_lex(d, n);
                    REQUIRE(entries.size() == subsets.size());
                    for (size_t i = 0; i < subsets.size(); ++i) {
                        CHECK(std::abs(entries[i] -
                                       oracle::conditional_entropy(cls, subsets[i])) <=
                              1e-12);
                    }
                }
            }
        }
    }
}

TEST_CASE("profile properties hold on every small class") {
    for (int d = 2; d <= 4; ++d) {
        for (int p = 1; p <= (1 << d) / 2; ++p) {
            for (const auto& cls : enumerate_classes(d, p)) {
                const auto pmin = aggregate_metric(cls, min_aggregator());
                const auto pmean = aggregate_metric(cls, mean_aggregator());
                // conditioning on more dimensions never raises uncertainty
                for (int n = 0; n < d; ++n) {
                    CHECK(pmin.u_levels[n + 1] <= pmin.u_levels[n] + 1e-12);
                    CHECK(pmean.u_levels[n + 1] <= pmean.u_levels[n] + 1e-12);
                }
                // endpoints
                CHECK(pmin.u_levels[d] == 0.0);
                const double pa = static_cast<double>(p) / (1 << d);
                CHECK(pmin.u_levels[0] ==
                      Approx(entropy_term(pa) + entropy_term(1 - pa)).epsilon(1e-12));
                // dominance and range
                CHECK(pmin.u_hat <= pmean.u_hat + 1e-12);
                CHECK(pmin.u_hat >= 0.0);
                CHECK(pmean.u_hat <= d + 1e-12);
            }
        }
    }
}

TEST_CASE("the metric is invariant over orbits and complementation") {
    for (int d = 2; d <= 3; ++d) {
        for (int p = 1; p <= (1 << d) / 2; ++p) {
            for (const auto& cls : enumerate_classes(d, p)) {
                const double umin = aggregate_metric(cls, min_aggregator()).u_hat;
                const double umean = aggregate_metric(cls, mean_aggregator()).u_hat;
                for (const auto& member : symmetry_orbit(cls)) {
                    CHECK(aggregate_metric(member, min_aggregator()).u_hat ==
                          Approx(umin).epsilon(1e-12));
                    CHECK(aggregate_metric(member, mean_aggregator()).u_hat ==
                          Approx(umean).epsilon(1e-12));
                }
                CHECK(aggregate_metric(complement(cls), min_aggregator()).u_hat ==
                      Approx(umin).epsilon(1e-12));
            }
        }
    }
}

TEST_SUITE_END();
