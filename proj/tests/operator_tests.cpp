#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rb/generate.hpp"
#include "rb/rb_check.hpp"

using namespace rb;

namespace {

const RationalField Q;

template <typename Field>
LinearOperator<Field> op(const AlgebraSpec<Field>& spec,
                         std::initializer_list<std::initializer_list<long>> rows) {
    Matrix<typename Field::Scalar> m(spec.dim(), spec.dim());
    Eigen::Index i = 0;
    for (const auto& row : rows) {
        Eigen::Index j = 0;
        for (long v : row)
            m(i, j++) = spec.field.from_int(v);
        ++i;
    }
    return {spec, std::move(m)};
}

} // namespace

TEST_CASE("apply reads columns in the basis (1, x1, ..., xn)") {
    const AlgebraSpec<RationalField> spec(Q, 1);
    const auto id = identity_operator(spec);
    const auto zero = zero_operator(spec);

    RandomSource rs(2);
    for (int i = 0; i < 50; ++i) {
        const auto x = random_element(spec, rs, 10);
        CHECK(apply(id, x) == x);
        CHECK(is_zero(apply(zero, x)));
    }

    // column 0 is the image of 1
    const auto towards_x1 = op(spec, {{0, 0}, {1, 0}});
    CHECK(apply(towards_x1, one_element(spec)) == basis_element(spec, 1));

    const AlgebraSpec<RationalField> other(Q, 2);
    CHECK_THROWS_AS(apply(towards_x1, one_element(other)), SpecMismatchError);
}

TEST_CASE("operator algebra") {
    const AlgebraSpec<RationalField> spec(Q, 1);
    const auto nil = op(spec, {{0, 0}, {1, 0}});
    CHECK(compose(nil, nil) == zero_operator(spec));  // strictly lower triangular squares to zero

    const auto id = identity_operator(spec);
    CHECK(compose(id, nil) == nil);
    CHECK(compose(nil, id) == nil);
    CHECK(Rat(1) * nil == nil);
    CHECK(nil + zero_operator(spec) == nil);
    CHECK(nil - nil == zero_operator(spec));
    CHECK(Rat(-1) * id == -id);

    const AlgebraSpec<RationalField> other(Q, 2);
    CHECK_THROWS_AS(compose(nil, identity_operator(other)), SpecMismatchError);

    SUBCASE("matrix shape is validated") {
        CHECK_THROWS_AS(LinearOperator<RationalField>(spec, Matrix<Rat>::Zero(3, 3)), SpecMismatchError);
        CHECK_THROWS_AS(LinearOperator<RationalField>(spec, Matrix<Rat>::Zero(2, 3)), SpecMismatchError);
    }
}

TEST_CASE("rb_check: known verdicts") {
    const AlgebraSpec<RationalField> line(Q, 1);

    SUBCASE("zero operator holds at every weight") {
        for (long w : {0L, 1L, 2L, -3L}) {
            CHECK(rb_check(zero_operator(line), Rat(w)).holds());
        }
        CHECK(rb_check(zero_operator(line), Rat::parse("1/2")).holds());
    }

    SUBCASE("minus identity holds at weight 1") {
        CHECK(rb_check(-identity_operator(line), Rat(1)).holds());
    }

    SUBCASE("identity fails weight 0 with witness (0,0), lhs 1, rhs 2") {
        const auto res = rb_check(identity_operator(line), Rat(0));
        REQUIRE_FALSE(res.holds());
        CHECK(res.witness->i == 0);
        CHECK(res.witness->j == 0);
        CHECK(res.witness->lhs == one_element(line));
        CHECK(res.witness->rhs == Rat(2) * one_element(line));
    }

    SUBCASE("the n = 2 nilpotent example holds at weight 0") {
        const AlgebraSpec<RationalField> spec(Q, 2);
        const auto P = op(spec, {{0, 0, 0}, {1, 0, 1}, {0, 0, 0}});
        CHECK(rb_check(P, Rat(0)).holds());
    }

    SUBCASE("minus twice the identity holds at weight 2") {
        CHECK(rb_check(Rat(-2) * identity_operator(line), Rat(2)).holds());
        CHECK_FALSE(rb_check(Rat(-2) * identity_operator(line), Rat(1)).holds());
    }
}

TEST_CASE("rb_check agrees with direct evaluation on random pairs") {
    RandomSource rs(31);
    const AlgebraSpec<RationalField> spec(Q, 2);
    const AlgebraSpec<PrimeField> spec5(PrimeField(5), 2);

    int holding = 0;
    for (int trial = 0; trial < 500; ++trial) {
        // a mix of certified RB operators and arbitrary (usually non-RB) maps
        const long w_int = trial % 2;
        const Rat w(w_int);
        LinearOperator<RationalField> P = [&] {
            switch (trial % 4) {
                case 0:
                    return make_weight0_operator(
                        random_weight0_data(Q, spec.n, trial % 2, GenConfig{static_cast<std::uint64_t>(trial)}),
                        spec);
                case 1:
                    return make_weight1_operator(
                        random_weight1_data(Q, spec.n, trial % 3, -1, GenConfig{static_cast<std::uint64_t>(trial)}),
                        spec);
                default:
                    return LinearOperator<RationalField>(spec, random_matrix(Q, 3, 3, rs, 5));
            }
        }();

        const bool verdict = rb_check(P, w).holds();
        holding += verdict;
        const auto x = random_element(spec, rs, 6);
        const auto y = random_element(spec, rs, 6);
        if (verdict) {
            CHECK(rb_identity_at(P, x, y, w));
        } else {
            // identity evaluated at the witness pair must indeed differ
            const auto& wit = *rb_check(P, w).witness;
            CHECK_FALSE(rb_identity_at(P, basis_element(spec, wit.i), basis_element(spec, wit.j), w));
        }
        // commutativity of R: the verdict at (x, y) matches (y, x)
        CHECK(rb_identity_at(P, x, y, w) == rb_identity_at(P, y, x, w));
    }
    CHECK(holding > 100);  // the constructed half all hold

    for (int trial = 0; trial < 200; ++trial) {
        const auto m = random_matrix(spec5.field, 3, 3, rs, 0);
        const LinearOperator<PrimeField> P(spec5, m);
        const Fp w(trial % 2, 5);
        const bool verdict = rb_check(P, w).holds();
        const auto x = random_element(spec5, rs, 0);
        const auto y = random_element(spec5, rs, 0);
        if (verdict)
            CHECK(rb_identity_at(P, x, y, w));
    }
}

TEST_CASE("rb_check is deterministic") {
    const AlgebraSpec<RationalField> spec(Q, 3);
    RandomSource rs(77);
    for (int i = 0; i < 50; ++i) {
        const LinearOperator<RationalField> P(spec, random_matrix(Q, 4, 4, rs, 10));
        const auto r1 = rb_check(P, Rat(0));
        const auto r2 = rb_check(P, Rat(0));
        REQUIRE(r1.holds() == r2.holds());
        if (!r1.holds()) {
            CHECK(r1.witness->i == r2.witness->i);
            CHECK(r1.witness->j == r2.witness->j);
            CHECK(r1.witness->lhs == r2.witness->lhs);
            CHECK(r1.witness->rhs == r2.witness->rhs);
        }
    }
}
