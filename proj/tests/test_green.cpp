#include <doctest.h>

#include "hallq/green.hpp"

using namespace hallq;

namespace {

DimVector dv(std::vector<int> v) { return DimVector(std::move(v)); }

}  // namespace

TEST_CASE("two sides on the crossing instance") {
    for (long long q : {2, 3}) {
        HallContext ctx(preset_quiver("a2"), q);
        ClassKey S1{dv({1, 0}), 0}, S2{dv({0, 1}), 0};
        Rational expected((q - 1) * (q - 1));
        CHECK(green_lhs(ctx, S1, S2, S2, S1) == expected);
        CHECK(green_rhs(ctx, S1, S2, S2, S1) == expected);
    }
}

TEST_CASE("empty-part degeneration") {
    HallContext ctx(preset_quiver("a2"), 3);
    ClassKey zero = empty_class(ctx);
    auto t11 = ctx.table(dv({1, 1}));
    for (size_t i = 0; i < t11->num_classes(); ++i) {
        ClassKey a{dv({1, 1}), int(i)};
        Rational a_alpha(t11->aut(int(i)));
        CHECK(green_lhs(ctx, a, zero, a, zero) == a_alpha);
        CHECK(green_rhs(ctx, a, zero, a, zero) == a_alpha);
        // mismatched primed class kills both sides
        for (size_t j = 0; j < t11->num_classes(); ++j) {
            if (j == i) continue;
            ClassKey ap{dv({1, 1}), int(j)};
            CHECK(green_lhs(ctx, a, zero, ap, zero) == Rational(0));
            CHECK(green_rhs(ctx, a, zero, ap, zero) == Rational(0));
        }
    }
}

TEST_CASE("frame mismatch is an error") {
    HallContext ctx(preset_quiver("a2"), 2);
    ClassKey S1{dv({1, 0}), 0}, S2{dv({0, 1}), 0};
    CHECK_THROWS(green_lhs(ctx, S1, S1, S1, S2));
    CHECK_THROWS(green_rhs(ctx, S1, S1, S1, S2));
}

TEST_CASE("sweep on a small bound") {
    HallContext ctx(preset_quiver("a2"), 2);
    GreenReport report = sweep_green(ctx, 2, false);
    CHECK(report.all_equal);
    CHECK(!report.instances.empty());
    for (const auto& inst : report.instances) {
        CHECK(!inst.lhs.is_negative());
        CHECK(!inst.rhs.is_negative());
    }
    // serialization shapes
    CHECK(report.to_tsv().find("alpha\tbeta") == 0);
    CHECK(report.to_json().find("\"all_equal\": true") != std::string::npos);
}

TEST_CASE("sweeps over proper prime-power fields") {
    for (long long q : {4, 8, 9}) {
        HallContext ctx(preset_quiver("a2"), q);
        CHECK(sweep_green(ctx, 2, false).all_equal);
    }
    HallContext kron(preset_quiver("kronecker"), 4);
    CHECK(sweep_green(kron, 2, false).all_equal);
}

TEST_CASE("bialgebra defect vanishes for the unit against everything") {
    HallContext ctx(preset_quiver("a2"), 2);
    ClassKey zero = empty_class(ctx);
    ClassKey S1{dv({1, 0}), 0};
    for (int sign : {+1, -1}) {
        CHECK(bialgebra_defect(ctx, zero, S1, sign).is_zero());
        CHECK(bialgebra_defect(ctx, S1, zero, sign).is_zero());
        CHECK(bialgebra_defect(ctx, zero, zero, sign).is_zero());
    }
}

TEST_CASE("exactly one twist sign survives") {
    for (long long q : {2, 3}) {
        HallContext ctx(preset_quiver("a2"), q);
        ClassKey S1{dv({1, 0}), 0}, S2{dv({0, 1}), 0};
        bool plus = bialgebra_defect(ctx, S1, S2, +1).is_zero();
        bool minus = bialgebra_defect(ctx, S1, S2, -1).is_zero();
        CHECK(plus);
        CHECK_FALSE(minus);

        auto sweep = determine_twist_sign(ctx, 2);
        REQUIRE(sweep.surviving_signs.size() == 1);
        CHECK(sweep.surviving_signs[0] == +1);
    }
}

TEST_CASE("sweeps on the remaining preset shapes") {
    HallContext d4(preset_quiver("d4"), 2);
    CHECK(sweep_green(d4, 3, false).all_equal);
    HallContext a3(preset_quiver("a3"), 2);
    CHECK(sweep_green(a3, 3, false).all_equal);
}
