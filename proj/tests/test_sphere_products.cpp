#include <doctest.h>

#include <map>
#include <random>

#include "anosov/json_io.hpp"
#include "anosov/sphere_products.hpp"

using namespace anosov;

namespace {

const IntMatrix kCatMap{{Int(2), Int(1)}, {Int(1), Int(1)}};

SphereProductSpec spec_s1s2s3(int n1) {
    return SphereProductSpec{{{1, n1}, {2, 2}, {3, 2}}};
}

std::vector<std::vector<int>> alphas(const std::vector<Splitting>& splittings) {
    std::vector<std::vector<int>> out;
    for (const auto& s : splittings) out.push_back(s.alpha);
    return out;
}

// Multiset of (label, count) per degree, for comparing tables irrespective of
// within-degree order.
std::map<std::string, long> degree_multiset(const BlockDecomposition& table, int d) {
    std::map<std::string, long> out;
    for (const auto& entry : table.per_degree[static_cast<std::size_t>(d)])
        out[entry.label] += entry.multiplicity.convert_to<long>();
    return out;
}

} // namespace

TEST_CASE("splitting enumeration follows the first-difference order") {
    auto spec = spec_s1s2s3(2);
    auto splits4 = enumerate_splittings(spec, 4);
    CHECK(alphas(splits4) ==
          std::vector<std::vector<int>>{{0, 2, 0}, {1, 0, 1}, {2, 1, 0}});
    // Basis sizes 1 + 4 + 2 = 7 = b_4.
    long total = 0;
    for (const auto& s : splits4) {
        long size = 1;
        if (s.alpha[0] == 1) size *= 2;      // choose 1 of 2 circles
        if (s.alpha[0] == 2) size *= 1;
        if (s.alpha[1] == 1) size *= 2;      // choose 1 of 2 even spheres
        if (s.alpha[2] == 1) size *= 2;      // choose 1 of 2 odd spheres
        total += size;
    }
    CHECK(total == betti(spec.to_ring(), 4));

    CHECK(alphas(enumerate_splittings(spec, 0)) == std::vector<std::vector<int>>{{0, 0, 0}});

    auto wide = SphereProductSpec{{{1, 4}, {2, 2}, {3, 2}}};
    CHECK(alphas(enumerate_splittings(wide, 3)) ==
          std::vector<std::vector<int>>{{0, 0, 1}, {1, 1, 0}, {3, 0, 0}});
}

TEST_CASE("splitting oddness and parity") {
    auto spec = spec_s1s2s3(2);
    for (int d = 0; d <= spec.dimension(); ++d)
        for (const auto& s : enumerate_splittings(spec, d)) {
            CHECK(s.parity == d % 2);
            bool odd = s.alpha[1] == 0;  // the even factor is the middle one
            CHECK(s.is_odd == odd);
        }
}

TEST_CASE("block construction") {
    auto spec = spec_s1s2s3(2);
    GeneratorBlocks blocks;
    blocks.by_dim[1] = kCatMap;
    blocks.by_dim[3] = kCatMap;

    // Purely even splitting: 1x1 identity.
    auto even_split = enumerate_splittings(spec, 4)[0];  // (0,2,0)
    CHECK(block(spec, blocks, even_split) == IntMatrix::identity(1));
    CHECK(block_label(spec, even_split) == "Id");

    // Mixed splitting (1,0,1): A1 (x) A3, 4x4.
    auto mixed = enumerate_splittings(spec, 4)[1];
    auto b = block(spec, blocks, mixed);
    CHECK(b.rows() == 4);
    CHECK(b == kronecker(kCatMap, kCatMap));
    CHECK(block_label(spec, mixed) == "A1(x)A3");

    // Top exterior power hits the determinant.
    auto spec35 = SphereProductSpec{{{3, 2}, {5, 1}}};
    GeneratorBlocks blocks35;
    blocks35.by_dim[3] = kCatMap;
    blocks35.by_dim[5] = IntMatrix::identity(1);
    Splitting top_wedge;
    top_wedge.alpha = {2, 0};
    CHECK(block(spec35, blocks35, top_wedge) == IntMatrix{{Int(1)}});
}

TEST_CASE("block table matches the reference block lists") {
    auto spec = spec_s1s2s3(2);
    GeneratorBlocks blocks;
    blocks.by_dim[1] = kCatMap;
    blocks.by_dim[3] = kCatMap;
    auto table = block_table(spec, blocks);
    CHECK(table.even_generator_total == 2);

    using MS = std::map<std::string, long>;
    CHECK(degree_multiset(table, 0) == MS{{"Id", 1}});
    CHECK(degree_multiset(table, 1) == MS{{"A1", 1}});
    CHECK(degree_multiset(table, 2) == MS{{"A1^2", 1}, {"Id", 2}});
    CHECK(degree_multiset(table, 3) == MS{{"A3", 1}, {"A1", 2}});
    CHECK(degree_multiset(table, 4) == MS{{"A1(x)A3", 1}, {"Id", 1}, {"A1^2", 2}});
    CHECK(degree_multiset(table, 5) == MS{{"A3", 2}, {"A1", 1}, {"A1^2(x)A3", 1}});
    CHECK(degree_multiset(table, 6) == MS{{"A3^2", 1}, {"A1(x)A3", 2}, {"A1^2", 1}});
    CHECK(degree_multiset(table, 7) == MS{{"A1(x)A3^2", 1}, {"A3", 1}, {"A1^2(x)A3", 2}});
    CHECK(degree_multiset(table, 8) == MS{{"A3^2", 2}, {"A1^2(x)A3^2", 1}, {"A1(x)A3", 1}});
    CHECK(degree_multiset(table, 9) == MS{{"A1(x)A3^2", 2}, {"A1^2(x)A3", 1}});
    CHECK(degree_multiset(table, 10) == MS{{"A3^2", 1}, {"A1^2(x)A3^2", 2}});
    CHECK(degree_multiset(table, 11) == MS{{"A1(x)A3^2", 1}});
    CHECK(degree_multiset(table, 12) == MS{{"A1^2(x)A3^2", 1}});

    // Every odd-splitting block appears exactly 2^e = 4 times in total.
    std::map<std::string, long> appearances;
    for (int d = 0; d <= spec.dimension(); ++d)
        for (const auto& [label, count] : degree_multiset(table, d)) appearances[label] += count;
    for (const auto& [label, count] : appearances) CHECK(count == 4);

    // Dimensions add up to the Betti numbers.
    auto ring = spec.to_ring();
    for (int d = 0; d <= spec.dimension(); ++d)
        CHECK(table.dimension_at(d) == betti(ring, d));
}

TEST_CASE("block table: torus has a single wedge block per degree") {
    SphereProductSpec torus{{{1, 4}}};
    GeneratorBlocks blocks;
    blocks.by_dim[1] = IntMatrix::identity(4);
    auto table = block_table(torus, blocks);
    CHECK(table.even_generator_total == 0);
    for (int d = 0; d <= 4; ++d) {
        REQUIRE(table.per_degree[static_cast<std::size_t>(d)].size() == 1);
        const auto& entry = table.per_degree[static_cast<std::size_t>(d)][0];
        CHECK(entry.multiplicity == 1);
        CHECK(entry.matrix.rows() == static_cast<std::size_t>(betti(torus.to_ring(), d)));
    }
}

TEST_CASE("block table: pure even product is all identity blocks") {
    SphereProductSpec s2s2{{{2, 2}}};
    auto table = block_table(s2s2, GeneratorBlocks{});
    for (int d = 0; d <= 4; ++d)
        for (const auto& entry : table.per_degree[static_cast<std::size_t>(d)]) {
            CHECK(entry.label == "Id");
            CHECK(entry.matrix == IntMatrix::identity(1));
        }
}

TEST_CASE("even generator order") {
    auto s2s2 = sphere_product_ring({{2, 2}});
    SphereProductSpec spec{{{2, 2}}};

    CHECK(even_generator_order(spec, GradedAutomorphism::identity(s2s2)) == 1);

    GeneratorImages swap;
    swap.images["x1^1"] = {Int(0), Int(1)};
    swap.images["x2^1"] = {Int(1), Int(0)};
    CHECK(even_generator_order(spec, induce(s2s2, swap)) == 2);

    // Signed permutations have order dividing 4.
    GeneratorImages signed_swap;
    signed_swap.images["x1^1"] = {Int(0), Int(-1)};
    signed_swap.images["x2^1"] = {Int(1), Int(0)};
    long order = even_generator_order(spec, induce(s2s2, signed_swap));
    CHECK(order == 4);
}

TEST_CASE("filtration invariance") {
    SphereProductSpec spec{{{1, 2}, {2, 1}}};
    auto ring = spec.to_ring();

    CHECK(filtration_invariance_test(spec, GradedAutomorphism::identity(ring)));

    GeneratorImages images;
    images.images["x1^1"] = {Int(2), Int(1)};
    images.images["x2^1"] = {Int(1), Int(1)};
    images.images["x1^2"] = {Int(1), Int(0)};
    CHECK(filtration_invariance_test(spec, induce(ring, images)));

    // Swapping the two degree-2 basis monomials (generator and t1 t2) maps a
    // later splitting block into an earlier one.
    GradedAutomorphism crossed = GradedAutomorphism::identity(ring);
    crossed.degree_matrices[2] = IntMatrix{{Int(0), Int(1)}, {Int(1), Int(0)}};
    CHECK_FALSE(filtration_invariance_test(spec, crossed));
}

TEST_CASE("random induced automorphisms stay filtration-invariant") {
    std::mt19937_64 rng(53);
    std::uniform_int_distribution<int> coef(-2, 2);
    SphereProductSpec spec{{{1, 3}, {3, 1}}};
    auto ring = spec.to_ring();
    for (int trial = 0; trial < 50; ++trial) {
        IntMatrix a = IntMatrix::identity(3);
        for (int s = 0; s < 5; ++s) {
            int i = static_cast<int>(rng() % 3), j = static_cast<int>(rng() % 3);
            if (i == j) continue;
            IntMatrix e = IntMatrix::identity(3);
            e.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = coef(rng);
            a = a * e;
        }
        GeneratorImages images;
        for (int i = 0; i < 3; ++i) {
            std::vector<Int> row(3);
            for (int j = 0; j < 3; ++j)
                row[static_cast<std::size_t>(j)] =
                    a.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
            images.images["x" + std::to_string(i + 1) + "^1"] = row;
        }
        images.images["x1^2"] = {Int(1), Int(coef(rng))};  // mix the triple product in
        auto aut = induce(ring, images);
        CHECK(filtration_invariance_test(spec, aut));
    }
}

TEST_CASE("growth checker for products with an even factor") {
    SphereProductSpec spec{{{2, 1}, {3, 2}}};
    GeneratorBlocks blocks;
    blocks.by_dim[3] = kCatMap;
    auto result = theorem16_check(spec, blocks);
    CHECK(result.applicable);
    CHECK(result.even_power == 2);
    CHECK(result.growth.kind == GrowthVerdict::Kind::Coefficient);
    CHECK(result.leading_coefficient == 2);
    CHECK(result.excludes_transitive);
    CHECK_FALSE(result.excludes_all);

    SphereProductSpec s2s2{{{2, 2}}};
    auto bounded = theorem16_check(s2s2, GeneratorBlocks{});
    CHECK(bounded.excludes_all);
    CHECK(bounded.growth.kind == GrowthVerdict::Kind::Bounded);

    // All identity blocks: Lambda is the constant chi. With an odd factor
    // present chi = 0, so the classifier reports the (stronger) identically
    // zero kind; either way there is no Anosov-compatible growth.
    SphereProductSpec spec2{{{2, 1}, {3, 2}}};
    GeneratorBlocks id_blocks;
    id_blocks.by_dim[3] = IntMatrix::identity(2);
    auto trivial = theorem16_check(spec2, id_blocks);
    CHECK((trivial.growth.kind == GrowthVerdict::Kind::Bounded ||
           trivial.growth.kind == GrowthVerdict::Kind::IdenticallyZero));
    CHECK(trivial.excludes_all);

    // A purely even product with identity blocks is genuinely bounded.
    SphereProductSpec even_only{{{2, 2}, {4, 1}}};
    auto even_trivial = theorem16_check(even_only, GeneratorBlocks{});
    CHECK(even_trivial.growth.kind == GrowthVerdict::Kind::Bounded);
    CHECK(even_trivial.excludes_all);

    SphereProductSpec odd_only{{{3, 2}}};
    CHECK_THROWS_AS(static_cast<void>(theorem16_check(odd_only, blocks)), std::domain_error);
}

TEST_CASE("odd-dimension-once cancellation") {
    SphereProductSpec spec{{{3, 2}, {5, 1}}};
    GeneratorBlocks blocks;
    blocks.by_dim[3] = kCatMap;
    auto result = theorem17_check(spec, blocks, 5, 20);
    CHECK(result.pairing_verified);
    REQUIRE(result.sequence_generic.size() == 20);
    for (const auto& v : result.sequence_generic) CHECK(v == 0);
    CHECK(result.sequence_generic == result.sequence_pairing);

    // S^1 x S^2 with the circle block [-1]: reduced by squaring, then zero.
    SphereProductSpec s1s2{{{1, 1}, {2, 1}}};
    GeneratorBlocks minus;
    minus.by_dim[1] = -IntMatrix::identity(1);
    auto circle = theorem17_check(s1s2, minus, 1, 10);
    for (const auto& v : circle.sequence_generic) CHECK(v == 0);

    // Hypothesis violations.
    CHECK_THROWS_AS(static_cast<void>(theorem17_check(spec, blocks, 4, 5)), std::domain_error);
    CHECK_THROWS_AS(static_cast<void>(theorem17_check(spec, blocks, 3, 5)), std::domain_error);
}

TEST_CASE("hundred random SL(2,Z) blocks cancel on (S^3)^2 x S^5") {
    std::mt19937_64 rng(59);
    std::uniform_int_distribution<int> coef(-2, 2);
    SphereProductSpec spec{{{3, 2}, {5, 1}}};
    int done = 0;
    while (done < 100) {
        IntMatrix a = IntMatrix::identity(2);
        for (int s = 0; s < 4; ++s) {
            IntMatrix e = IntMatrix::identity(2);
            int c = coef(rng);
            if (rng() % 2) e.at(0, 1) = c;
            else e.at(1, 0) = c;
            a = a * e;
        }
        bool small = true;
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                if (abs_int(a.at(i, j)) > 10) small = false;
        if (!small) continue;
        GeneratorBlocks blocks;
        blocks.by_dim[3] = a;
        auto result = theorem17_check(spec, blocks, 5, 10);
        for (const auto& v : result.sequence_generic) CHECK(v == 0);
        ++done;
    }
}

TEST_CASE("bundle-shaped trace reduction between paired degrees") {
    // For a product with one even factor (middle identity), the blocks of
    // degree k with the even generator present equal the blocks of degree
    // k - 2n without it.
    SphereProductSpec spec{{{1, 2}, {2, 1}}};
    GeneratorBlocks blocks;
    blocks.by_dim[1] = kCatMap;
    auto table = block_table(spec, blocks);
    for (int k = 2; k <= spec.dimension(); ++k) {
        std::map<std::string, long> with_even, below;
        for (const auto& entry : table.per_degree[static_cast<std::size_t>(k)])
            if (entry.splitting.alpha[1] == 1)
                with_even[entry.label] += entry.multiplicity.convert_to<long>();
        for (const auto& entry : table.per_degree[static_cast<std::size_t>(k - 2)])
            if (entry.splitting.alpha[1] == 0)
                below[entry.label] += entry.multiplicity.convert_to<long>();
        CHECK(with_even == below);
    }
}

TEST_CASE("sphere spec JSON round trip") {
    auto spec = spec_s1s2s3(2);
    auto j = to_json(spec);
    auto back = sphere_spec_from_json(j);
    REQUIRE(back.factors.size() == spec.factors.size());
    for (std::size_t i = 0; i < back.factors.size(); ++i) {
        CHECK(back.factors[i].dim == spec.factors[i].dim);
        CHECK(back.factors[i].count == spec.factors[i].count);
    }
}
