#include <doctest.h>

#include <map>

#include "anosov/graded_ring.hpp"
#include "anosov/json_io.hpp"

using namespace anosov;

namespace {

// Independent Betti oracle: expand the Poincare polynomial
// prod_g (1 + t^deg + ... + t^{(nilp-1) deg}) coefficient by coefficient.
std::vector<long> poincare_coefficients(const GradedRingDescription& ring) {
    std::vector<long> coeff{1};
    for (const auto& g : ring.generators()) {
        std::vector<long> next(coeff.size() + static_cast<std::size_t>((g.nilpotency - 1) * g.degree), 0);
        for (std::size_t i = 0; i < coeff.size(); ++i)
            for (int e = 0; e < g.nilpotency; ++e)
                next[i + static_cast<std::size_t>(e * g.degree)] += coeff[i];
        coeff = std::move(next);
    }
    return coeff;
}

GradedRingDescription example_ring_s1s2s3(int n1) {
    return sphere_product_ring({{1, n1}, {2, 2}, {3, 2}});
}

} // namespace

TEST_CASE("canonical ordered basis of H^3 for (S^1)^4 x (S^2)^2 x (S^3)^2") {
    auto ring = example_ring_s1s2s3(4);
    auto basis = build_basis(ring, 3);
    REQUIRE(basis.size() == 14);
    std::vector<std::string> expected{
        "x1^3",           "x2^3",           "x1^1*x1^2",      "x1^1*x2^2",
        "x2^1*x1^2",      "x2^1*x2^2",      "x3^1*x1^2",      "x3^1*x2^2",
        "x4^1*x1^2",      "x4^1*x2^2",      "x1^1*x2^1*x3^1", "x1^1*x2^1*x4^1",
        "x1^1*x3^1*x4^1", "x2^1*x3^1*x4^1"};
    for (std::size_t i = 0; i < basis.size(); ++i) CHECK(basis[i].to_string(ring) == expected[i]);
}

TEST_CASE("basis edge cases") {
    auto s2s2 = sphere_product_ring({{2, 2}});
    auto basis2 = build_basis(s2s2, 2);
    REQUIRE(basis2.size() == 2);
    CHECK(basis2[0].to_string(s2s2) == "x1^1");
    CHECK(basis2[1].to_string(s2s2) == "x2^1");

    auto basis0 = build_basis(s2s2, 0);
    REQUIRE(basis0.size() == 1);
    CHECK(basis0[0].is_unit());

    CHECK_THROWS_AS(build_basis(s2s2, -1), std::domain_error);
    CHECK_THROWS_AS(build_basis(s2s2, 5), std::domain_error);
}

TEST_CASE("basis determinism") {
    auto ring = example_ring_s1s2s3(2);
    for (int d = 0; d <= ring.top_degree(); ++d) CHECK(build_basis(ring, d) == build_basis(ring, d));
}

TEST_CASE("betti numbers against the Poincare polynomial oracle") {
    std::vector<GradedRingDescription> rings{
        torus_ring(2),
        torus_ring(4),
        example_ring_s1s2s3(2),
        example_ring_s1s2s3(4),
        sphere_product_ring({{2, 2}}),
        sphere_product_ring({{3, 2}, {5, 1}}),
        ring_product(projective_space_ring(2), torus_ring(2)),
    };
    for (const auto& ring : rings) {
        auto oracle = poincare_coefficients(ring);
        REQUIRE(static_cast<int>(oracle.size()) == ring.top_degree() + 1);
        for (int d = 0; d <= ring.top_degree(); ++d)
            CHECK(betti(ring, d) == oracle[static_cast<std::size_t>(d)]);
    }
}

TEST_CASE("betti examples") {
    CHECK(betti(torus_ring(2), 1) == 2);
    CHECK(betti(example_ring_s1s2s3(2), 4) == 7);
    CHECK(euler_characteristic(sphere_product_ring({{2, 2}})) == 4);
    CHECK(euler_characteristic(torus_ring(3)) == 0);
}

TEST_CASE("cup product examples") {
    auto ring = example_ring_s1s2s3(4);
    auto basis1 = build_basis(ring, 1);
    auto basis3 = build_basis(ring, 3);

    // x1^1 cup x1^1 = 0 (sphere class squares to zero)
    auto sq = cup(ring, basis1[0], basis1[0]);
    CHECK(sq.zero);

    // odd * odd anticommute: x2^3 cup x1^3 = -(x1^3 cup x2^3)
    const Monomial& a = basis3[0];  // x1^3
    const Monomial& b = basis3[1];  // x2^3
    auto ab = cup(ring, a, b);
    auto ba = cup(ring, b, a);
    REQUIRE_FALSE(ab.zero);
    REQUIRE_FALSE(ba.zero);
    CHECK(ab.monomial == ba.monomial);
    CHECK(ab.sign == 1);
    CHECK(ba.sign == -1);

    // CP^2: a cup a = +a^2, nonzero below the nilpotency.
    auto cp2 = projective_space_ring(2);
    auto deg2 = build_basis(cp2, 0 + 2);
    auto aa = cup(cp2, deg2[0], deg2[0]);
    REQUIRE_FALSE(aa.zero);
    CHECK(aa.sign == 1);
    CHECK(aa.monomial.exponents == std::vector<int>{2});
    // and a^2 cup a = 0 (nilpotency 3)
    auto cube = cup(cp2, aa.monomial, deg2[0]);
    CHECK(cube.zero);
}

TEST_CASE("graded commutativity and associativity, exhaustive on small rings") {
    std::vector<GradedRingDescription> rings{
        example_ring_s1s2s3(2),                       // top degree 12
        ring_product(projective_space_ring(2), torus_ring(2)),  // top degree 6
        sphere_product_ring({{3, 2}, {5, 1}}),        // top degree 11
    };
    for (const auto& ring : rings) {
        std::vector<Monomial> all;
        for (int d = 0; d <= ring.top_degree(); ++d)
            for (const auto& m : build_basis(ring, d)) all.push_back(m);

        for (const auto& a : all)
            for (const auto& b : all) {
                auto ab = cup(ring, a, b);
                auto ba = cup(ring, b, a);
                CHECK(ab.zero == ba.zero);
                if (!ab.zero) {
                    CHECK(ab.monomial == ba.monomial);
                    int koszul = (a.degree(ring) * b.degree(ring)) % 2 == 0 ? 1 : -1;
                    CHECK(ab.sign == koszul * ba.sign);
                }
            }

        // Associativity over all triples (signs included).
        for (const auto& a : all)
            for (const auto& b : all)
                for (const auto& c : all) {
                    auto ab = cup(ring, a, b);
                    auto bc = cup(ring, b, c);
                    auto left = ab.zero ? SignedMonomial::make_zero() : cup(ring, ab.monomial, c);
                    auto right = bc.zero ? SignedMonomial::make_zero() : cup(ring, a, bc.monomial);
                    int left_sign = ab.zero || left.zero ? 0 : ab.sign * left.sign;
                    int right_sign = bc.zero || right.zero ? 0 : bc.sign * right.sign;
                    CHECK(left_sign == right_sign);
                    if (left_sign != 0) CHECK(left.monomial == right.monomial);
                }
    }
}

TEST_CASE("intersection pairing examples") {
    auto s2s2 = sphere_product_ring({{2, 2}});
    CHECK(intersection_pairing(s2s2, 2) == IntMatrix{{Int(0), Int(1)}, {Int(1), Int(0)}});
    CHECK(intersection_pairing(s2s2, 0) == IntMatrix{{Int(1)}});

    auto t2 = torus_ring(2);
    CHECK(intersection_pairing(t2, 1) == IntMatrix{{Int(0), Int(1)}, {Int(-1), Int(0)}});
}

TEST_CASE("Poincare symmetry of Betti numbers and pairings") {
    std::vector<GradedRingDescription> rings{
        example_ring_s1s2s3(2),
        torus_ring(4),
        ring_product(projective_space_ring(2), torus_ring(2)),
    };
    for (const auto& ring : rings) {
        const int top = ring.top_degree();
        for (int d = 0; d <= top; ++d) {
            CHECK(betti(ring, d) == betti(ring, top - d));
            IntMatrix p = intersection_pairing(ring, d);
            IntMatrix q = intersection_pairing(ring, top - d);
            // Graded symmetry: P_d = (-1)^{d(top-d)} Q^T.
            int sign = (d * (top - d)) % 2 == 0 ? 1 : -1;
            CHECK(p == q.transpose().scaled(Int(sign)));
            // Unimodularity of the pairing (Poincare duality).
            CHECK(abs_int(p.det()) == 1);
        }
    }
}

TEST_CASE("ring validation") {
    CHECK_THROWS_AS(GradedRingDescription({Generator{"x", 3, 3}}), std::domain_error);
    CHECK_THROWS_AS(GradedRingDescription({Generator{"x", 1, 2}, Generator{"x", 1, 2}}),
                    std::domain_error);
    CHECK_THROWS_AS(GradedRingDescription({Generator{"x", 2, 2}, Generator{"y", 1, 2}}),
                    std::domain_error);
    CHECK_THROWS_AS(GradedRingDescription({Generator{"x", 0, 2}}), std::domain_error);
}

TEST_CASE("ring JSON round trip") {
    auto ring = ring_product(projective_space_ring(2), torus_ring(2));
    auto j = to_json(ring);
    auto back = ring_from_json(j);
    CHECK(back.top_degree() == ring.top_degree());
    REQUIRE(back.generators().size() == ring.generators().size());
    for (std::size_t i = 0; i < back.generators().size(); ++i) {
        CHECK(back.generators()[i].label == ring.generators()[i].label);
        CHECK(back.generators()[i].degree == ring.generators()[i].degree);
        CHECK(back.generators()[i].nilpotency == ring.generators()[i].nilpotency);
    }

    auto mono = build_basis(ring, 3)[0];
    auto mj = monomial_to_json(ring, mono);
    CHECK(monomial_from_json(ring, mj) == mono);
}
