#include "doctest.h"

#include <cstdint>
#include <vector>

#include "finring/axioms.hpp"
#include "finring/classify.hpp"
#include "finring/construct.hpp"
#include "finring/errors.hpp"
#include "finring/ideal.hpp"
#include "finring/module.hpp"
#include "finring/ring.hpp"

#include "support/naive.hpp"

using namespace finring;

namespace {

Ideal gen_ix(const Ring& r, const std::vector<std::size_t>& ixs) {
    std::vector<Element> gens;
    for (auto i : ixs) gens.push_back(r.element(i));
    return ideal_generate(r, gens);
}

Ring shifted_zmod_table(std::size_t n, std::size_t shift) {
    auto val = [&](std::size_t i) { return (i + shift) % n; };
    auto idx = [&](std::size_t v) { return (v + n - shift % n) % n; };
    std::vector<std::uint16_t> add(n * n), mul(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            add[i * n + j] = static_cast<std::uint16_t>(idx((val(i) + val(j)) % n));
            mul[i * n + j] = static_cast<std::uint16_t>(idx((val(i) * val(j)) % n));
        }
    return table_ring("shifted" + std::to_string(n), n, std::move(add), std::move(mul));
}

}  // namespace

TEST_CASE("products split componentwise") {
    Ring p = product(zmod(2), zmod(3));
    CHECK(p.size() == 6);
    CHECK(p.descriptor() == "product(Z/2, Z/3)");
    for (std::size_t x = 0; x < p.size(); ++x)
        for (std::size_t y = 0; y < p.size(); ++y) {
            auto [a1, b1] = product_split(p, x);
            auto [a2, b2] = product_split(p, y);
            CHECK(p.add_ix(x, y) == product_join(p, (a1 + a2) % 2, (b1 + b2) % 3));
            CHECK(p.mul_ix(x, y) == product_join(p, (a1 * a2) % 2, (b1 * b2) % 3));
        }
    CHECK(p.display_ix(product_join(p, 1, 2)) == "(1, 2)");
    CHECK(check_ring_axioms(p).all_pass);
    CHECK_THROWS_AS(product(zmod(2), zmod(1)), DegenerateRingError);
}

TEST_CASE("remainder coordinates give an isomorphism with the product of coprime factors") {
    Ring z6 = zmod(6);
    Ring p = product(zmod(2), zmod(3));
    std::vector<std::size_t> f(6);
    for (std::size_t x = 0; x < 6; ++x) f[x] = product_join(p, x % 2, x % 3);
    CHECK(naive::is_isomorphism(z6, p, f));
    CHECK(ring_isomorphic(z6, p));
}

TEST_CASE("quotients are coset rings with canonical representatives") {
    Ring r = zmod(12);
    Ring q = quotient(r, gen_ix(r, {4}));
    CHECK(q.size() == 4);  // 12 / |{0,4,8}|
    CHECK(q.descriptor() == "quot(Z/12, ideal(4))");
    CHECK(quotient_rep_ix(q, 0) == 0);
    CHECK(quotient_coset_ix(q, 8) == 0);
    CHECK(q.add_ix(quotient_coset_ix(q, 3), quotient_coset_ix(q, 2)) == quotient_coset_ix(q, 5));
    CHECK(q.mul_ix(quotient_coset_ix(q, 3), quotient_coset_ix(q, 2)) == quotient_coset_ix(q, 6));
    CHECK(ring_isomorphic(q, zmod(4)));
    CHECK(check_ring_axioms(q).all_pass);

    CHECK(ring_isomorphic(quotient(r, gen_ix(r, {})), r));
    Ring z = quotient(r, gen_ix(r, {1}));
    CHECK(z.size() == 1);
    CHECK(z.is_zero_ring());
}

TEST_CASE("polynomial quotients with an irreducible modulus are fields") {
    Ring f4 = poly_quotient_ints(zmod(2), {1, 1, 1});
    CHECK(f4.size() == 4);
    CHECK(f4.descriptor() == "polyquot(Z/2, [1, 1, 1])");
    CHECK(is_field(f4));
    CHECK(units_count(f4) == 3);
    std::size_t x = poly_quotient_from_coeffs(f4, {0, 1});
    CHECK(f4.display_ix(x) == "x");
    CHECK(f4.mul_ix(x, x) == poly_quotient_from_coeffs(f4, {1, 1}));  // x^2 = x + 1
    CHECK(poly_quotient_coeffs(f4, f4.mul_ix(x, x)) == std::vector<std::size_t>{1, 1});
    CHECK(check_ring_axioms(f4).all_pass);
}

TEST_CASE("degree one quotients collapse to the base") {
    Ring r = poly_quotient_ints(zmod(6), {0, 1});  // x = 0
    CHECK(r.size() == 6);
    CHECK(ring_isomorphic(r, zmod(6)));
}

TEST_CASE("square zero polynomial rings are local and not reduced") {
    Ring r = poly_quotient_ints(zmod(4), {0, 0, 1});
    CHECK(r.size() == 16);
    CHECK(poly_quotient_degree(r) == 2);
    CHECK(is_local(r));
    CHECK_FALSE(is_reduced(r));
    CHECK(check_ring_axioms(r).all_pass);
    std::size_t x = poly_quotient_from_coeffs(r, {0, 1});
    CHECK(r.mul_ix(x, x) == r.zero_ix());
}

TEST_CASE("non monic or constant moduli are rejected") {
    CHECK_THROWS_AS(poly_quotient_ints(zmod(4), {1, 2}), PreconditionError);
    CHECK_THROWS_AS(poly_quotient_ints(zmod(4), {1}), PreconditionError);
    CHECK_THROWS_AS(poly_quotient_ints(zmod(4), {}), PreconditionError);
}

TEST_CASE("square zero extension follows the pair law") {
    Ring a = zmod(4);
    RingModule e = module_free(a, 1);
    Ring t = idealization(a, e);
    CHECK(t.size() == 16);
    CHECK(t.descriptor() == "idealize(Z/4, free(1))");
    for (std::size_t x = 0; x < t.size(); ++x)
        for (std::size_t y = 0; y < t.size(); ++y) {
            auto [a1, e1] = idealization_split(t, x);
            auto [a2, e2] = idealization_split(t, y);
            CHECK(t.add_ix(x, y) == idealization_join(t, (a1 + a2) % 4, (e1 + e2) % 4));
            CHECK(t.mul_ix(x, y) ==
                  idealization_join(t, (a1 * a2) % 4, (a1 * e2 + a2 * e1) % 4));
        }
    // the embedded module squares to zero
    for (std::size_t e1 = 0; e1 < 4; ++e1)
        for (std::size_t e2 = 0; e2 < 4; ++e2)
            CHECK(t.mul_ix(idealization_join(t, 0, e1), idealization_join(t, 0, e2)) ==
                  t.zero_ix());
    CHECK(check_ring_axioms(t).all_pass);
    CHECK_FALSE(is_reduced(t));
}

TEST_CASE("extension by the zero module is the base ring") {
    Ring a = zmod(6);
    Ring t = idealization(a, module_free(a, 0));
    CHECK(t.size() == 6);
    CHECK(ring_isomorphic(t, a));
}

TEST_CASE("duplication follows the pair law on ideal slots") {
    Ring r = zmod(4);
    Ring d = duplication(r, gen_ix(r, {2}));
    CHECK(d.size() == 8);
    CHECK(d.descriptor() == "dup(Z/4, ideal(2))");
    for (std::size_t x = 0; x < d.size(); ++x)
        for (std::size_t y = 0; y < d.size(); ++y) {
            auto [r1, e1] = duplication_parts(d, x);
            auto [r2, e2] = duplication_parts(d, y);
            CHECK(d.add_ix(x, y) == duplication_index(d, (r1 + r2) % 4, (e1 + e2) % 4));
            CHECK(d.mul_ix(x, y) ==
                  duplication_index(d, (r1 * r2) % 4, (r1 * e2 + r2 * e1 + e1 * e2) % 4));
        }
    CHECK(check_ring_axioms(d).all_pass);
    CHECK_THROWS_AS(duplication_index(d, 0, 1), PreconditionError);  // 1 is outside the ideal
}

TEST_CASE("the embedded view maps duplication into the double product") {
    Ring r = zmod(4);
    Ring d = duplication(r, gen_ix(r, {2}));
    Ring p = product(r, r);
    for (std::size_t x = 0; x < d.size(); ++x)
        for (std::size_t y = 0; y < d.size(); ++y) {
            auto [a1, b1] = duplication_embedded_view(d, x);
            auto [a2, b2] = duplication_embedded_view(d, y);
            auto [sa, sb] = duplication_embedded_view(d, d.add_ix(x, y));
            auto [ma, mb] = duplication_embedded_view(d, d.mul_ix(x, y));
            CHECK(product_join(p, sa, sb) ==
                  p.add_ix(product_join(p, a1, b1), product_join(p, a2, b2)));
            CHECK(product_join(p, ma, mb) ==
                  p.mul_ix(product_join(p, a1, b1), product_join(p, a2, b2)));
        }
    std::size_t one = d.one_ix();
    auto [oa, ob] = duplication_embedded_view(d, one);
    CHECK(oa == 1);
    CHECK(ob == 1);
    CHECK(d.display_ix(one) == "(1, 1)");
}

TEST_CASE("duplication along the whole ring is the double product") {
    Ring r = zmod(4);
    Ring d = duplication(r, gen_ix(r, {1}));
    Ring p = product(r, r);
    REQUIRE(d.size() == p.size());
    std::vector<std::size_t> f(d.size());
    for (std::size_t x = 0; x < d.size(); ++x) {
        auto [a, b] = duplication_embedded_view(d, x);
        f[x] = product_join(p, a, b);
    }
    CHECK(naive::is_isomorphism(d, p, f));
}

TEST_CASE("duplication along the zero ideal is the base") {
    Ring r = zmod(6);
    Ring d = duplication(r, gen_ix(r, {}));
    CHECK(d.size() == 6);
    CHECK(ring_isomorphic(d, r));
}

TEST_CASE("duplication along a square zero ideal matches the module extension tables") {
    Ring r = zmod(4);
    Ideal i = gen_ix(r, {2});
    Ring d = duplication(r, i);
    Ring t = idealization(r, module_from_ideal(i));
    REQUIRE(d.size() == t.size());
    for (std::size_t x = 0; x < d.size(); ++x) {
        CHECK(d.neg_ix(x) == t.neg_ix(x));
        for (std::size_t y = 0; y < d.size(); ++y) {
            CHECK(d.add_ix(x, y) == t.add_ix(x, y));
            CHECK(d.mul_ix(x, y) == t.mul_ix(x, y));
        }
    }
}

TEST_CASE("free modules are coordinate vectors") {
    Ring a = zmod(4);
    RingModule m = module_free(a, 2);
    CHECK(m.size() == 16);
    CHECK(m.zero_ix() == 0);
    std::size_t b0 = module_free_basis_ix(m, 0), b1 = module_free_basis_ix(m, 1);
    CHECK(module_components(m, b0) == std::vector<std::size_t>{1, 0});
    CHECK(module_components(m, b1) == std::vector<std::size_t>{0, 1});
    std::size_t v = module_from_components(m, {3, 2});
    CHECK(m.add_ix(v, v) == module_from_components(m, {2, 0}));
    CHECK(m.scalar_ix(3, v) == module_from_components(m, {1, 2}));
    CHECK(module_free_rank(m) == 2);
    CHECK(check_module_axioms(m).all_pass);
    CHECK(module_free(a, 0).size() == 1);
}

TEST_CASE("quotient modules act through representatives") {
    Ring a = zmod(12);
    RingModule m = module_quotient(a, gen_ix(a, {4}));
    CHECK(m.size() == 4);
    CHECK(m.zero_ix() == 0);
    CHECK(module_quotient_coset_ix(m, 8) == 0);
    CHECK(module_quotient_rep_ix(m, 0) == 0);
    std::size_t c3 = module_quotient_coset_ix(m, 3);
    CHECK(m.scalar_ix(2, c3) == module_quotient_coset_ix(m, 6));
    CHECK(check_module_axioms(m).all_pass);
}

TEST_CASE("ideal member modules act by ring multiplication") {
    Ring a = zmod(4);
    RingModule m = module_from_ideal(gen_ix(a, {2}));
    CHECK(m.size() == 2);
    CHECK(module_ideal_member_ix(m, 0) == 0);
    CHECK(module_ideal_member_ix(m, 1) == 2);
    CHECK(m.scalar_ix(3, 1) == 1);  // 3 * 2 = 2
    CHECK(m.scalar_ix(2, 1) == 0);  // 2 * 2 = 0
    CHECK(check_module_axioms(m).all_pass);
}

TEST_CASE("direct sums multiply sizes and decode componentwise") {
    Ring a = zmod(4);
    RingModule s = module_direct_sum({module_free(a, 1), module_quotient(a, gen_ix(a, {2}))});
    CHECK(s.size() == 8);
    CHECK(module_direct_sum_parts(s).size() == 2);
    std::size_t v = module_from_components(s, {3, 1});
    CHECK(module_components(s, v) == std::vector<std::size_t>{3, 1});
    CHECK(s.scalar_ix(2, v) == module_from_components(s, {2, 0}));
    CHECK(check_module_axioms(s).all_pass);
}

TEST_CASE("modules over displaced zero tables still pin zero at slot zero") {
    Ring t = shifted_zmod_table(5, 3);
    REQUIRE(t.zero_ix() != 0);
    RingModule m = module_free(t, 1);
    CHECK(m.zero_ix() == 0);
    for (std::size_t a = 0; a < t.size(); ++a) CHECK(m.scalar_ix(a, 0) == 0);
    CHECK(m.scalar_ix(t.zero_ix(), 1) == 0);
    CHECK(check_module_axioms(m).all_pass);
    Ring ext = idealization(t, m);
    CHECK(check_ring_axioms(ext).all_pass);
    CHECK(ring_isomorphic(ext, poly_quotient_ints(zmod(5), {0, 0, 1})));
}

TEST_CASE("module axiom checks downgrade above the cap") {
    AxiomReport rep = check_module_axioms(module_free(zmod(600), 1));
    CHECK(rep.downgraded);
    CHECK(rep.all_pass);
}

TEST_CASE("isomorphism testing separates the order four rings") {
    Ring z4 = zmod(4);
    Ring klein = product(zmod(2), zmod(2));
    Ring f4 = poly_quotient_ints(zmod(2), {1, 1, 1});
    Ring x2 = poly_quotient_ints(zmod(2), {0, 0, 1});
    Ring rings[] = {z4, klein, f4, x2};
    for (const Ring& a : rings)
        for (const Ring& b : rings) CHECK(ring_isomorphic(a, b) == a.same(b));
    CHECK(ring_isomorphic(zmod(1), quotient(z4, ideal_generate(z4, {z4.element(1)}))));
    CHECK_FALSE(ring_isomorphic(zmod(4), zmod(8)));
    CHECK_THROWS_AS(ring_isomorphic(zmod(100), zmod(100)), CapExceededError);
}

TEST_CASE("structure accessors reject the wrong kind") {
    CHECK_THROWS_AS(zmod_modulus(product(zmod(2), zmod(2))), PreconditionError);
    CHECK_THROWS_AS(product_left(zmod(4)), PreconditionError);
    CHECK_THROWS_AS(base_of(zmod(4)), PreconditionError);
    CHECK(zmod_modulus(zmod(9)) == 9);
    Ring z4d = zmod(4);
    Ring d = duplication(z4d, gen_ix(z4d, {2}));
    // accessors reach the originals
    CHECK(base_of(d).descriptor() == "Z/4");
    CHECK(duplication_ideal(d).member_count() == 2);
}

TEST_CASE("element literals match the grammar forms") {
    Ring p = product(zmod(2), zmod(3));
    CHECK(element_literal(p, product_join(p, 1, 2)) == "(1, 2)");
    Ring f4 = poly_quotient_ints(zmod(2), {1, 1, 1});
    CHECK(element_literal(f4, poly_quotient_from_coeffs(f4, {1, 1})) == "[1, 1]");
    Ring z9 = zmod(9);
    CHECK(element_literal(z9, 7) == "7");
    Ideal i = gen_ix(z9, {3, 6});
    CHECK(ideal_literal(i) == "ideal(3)");
    CHECK(module_literal(module_free(z9, 2)) == "free(2)");
    CHECK(module_literal(module_quotient(z9, i)) == "quotmod(ideal(3))");
}
