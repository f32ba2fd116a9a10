#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <vector>

#include "finring/axioms.hpp"
#include "finring/classify.hpp"
#include "finring/construct.hpp"
#include "finring/errors.hpp"
#include "finring/ring.hpp"

#include "support/naive.hpp"

using namespace finring;

namespace {

// Z/n stored as explicit tables with index i holding the value (i + shift) % n,
// so the additive identity sits away from index 0.
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

std::vector<Ring> classify_samples() {
    return {zmod(12), zmod(8), product(zmod(2), zmod(4)), poly_quotient_ints(zmod(2), {1, 1, 1}),
            poly_quotient_ints(zmod(4), {0, 0, 1}), shifted_zmod_table(6, 2)};
}

}  // namespace

TEST_CASE("residue ring arithmetic matches modular arithmetic") {
    for (std::size_t n = 2; n <= 12; ++n) {
        Ring r = zmod(n);
        REQUIRE(r.size() == n);
        CHECK(r.zero_ix() == 0);
        CHECK(r.one_ix() == 1 % n);
        for (std::size_t a = 0; a < n; ++a) {
            CHECK(r.neg_ix(a) == (n - a) % n);
            CHECK(r.display_ix(a) == std::to_string(a));
            for (std::size_t b = 0; b < n; ++b) {
                CHECK(r.add_ix(a, b) == (a + b) % n);
                CHECK(r.mul_ix(a, b) == (a * b) % n);
            }
        }
    }
}

TEST_CASE("integer images fold through the characteristic") {
    Ring r = zmod(7);
    CHECK(r.int_image_ix(0) == 0);
    CHECK(r.int_image_ix(9) == 2);
    CHECK(r.int_image_ix(-1) == 6);
    CHECK(r.int_image_ix(-15) == 6);
    CHECK(r.int_image_ix(700000000001LL) == 700000000001LL % 7);
    CHECK(r.pow_ix(3, 6) == 1);  // little Fermat
    CHECK(r.pow_ix(3, 1) == 3);
}

TEST_CASE("degenerate moduli") {
    CHECK_THROWS_AS(zmod(0), PreconditionError);
    Ring z1 = zmod(1);
    CHECK(z1.size() == 1);
    CHECK(z1.is_zero_ring());
    CHECK(z1.zero_ix() == z1.one_ix());
}

TEST_CASE("universe cap rejects oversized rings") {
    Caps caps;
    caps.universe_max = 1000;
    try {
        zmod(1001, caps);
        FAIL("expected CapExceededError");
    } catch (const CapExceededError& e) {
        CHECK(e.cap_name() == "universe_max");
        CHECK(e.limit() == 1000);
        CHECK(e.requested() == 1001);
    }
}

TEST_CASE("element handles are owner checked") {
    Ring r = zmod(6), s = zmod(6);
    Element e = r.element(3);
    CHECK(r.index_of(e) == 3);
    CHECK_THROWS_AS(s.index_of(e), RingMismatchError);
    CHECK_THROWS_AS(r.element(6), PreconditionError);
    CHECK(r.add(r.element(4), r.element(5)) == r.element(3));
    CHECK(r.mul(r.element(4), r.element(5)) == r.element(2));
}

TEST_CASE("unit and zero-divisor masks match definition scans") {
    for (const Ring& r : classify_samples()) {
        const auto& um = r.units_mask();
        const auto& zm = r.zero_divisor_mask();
        REQUIRE(um.size() == r.size());
        REQUIRE(zm.size() == r.size());
        for (std::size_t x = 0; x < r.size(); ++x) {
            CHECK(bool(um[x]) == naive::is_unit(r, x));
            CHECK(bool(zm[x]) == naive::is_zero_divisor(r, x));
        }
    }
}

TEST_CASE("every element of a nonzero finite ring is a unit or a zero-divisor, never both") {
    for (const Ring& r : classify_samples()) {
        const auto& um = r.units_mask();
        const auto& zm = r.zero_divisor_mask();
        for (std::size_t x = 0; x < r.size(); ++x) CHECK(bool(um[x]) != bool(zm[x]));
    }
}

TEST_CASE("elementwise classification agrees with scans") {
    for (const Ring& r : classify_samples()) {
        for (std::size_t x = 0; x < r.size(); ++x) {
            Element e = r.element(x);
            CHECK(is_unit(r, e) == naive::is_unit(r, x));
            CHECK(is_zero_divisor(r, e) == naive::is_zero_divisor(r, x));
            CHECK(is_regular(r, e) == !naive::is_zero_divisor(r, x));
            CHECK(is_nilpotent(r, e) == naive::is_nilpotent(r, x));
            CHECK(is_nilpotent_ix(r, x) == naive::is_nilpotent(r, x));
        }
        auto zd = zero_divisor_set(r);
        CHECK(zd.size() == naive::zero_divisors(r).size());
        CHECK(std::is_sorted(zd.begin(), zd.end()));
    }
}

TEST_CASE("classification rejects the zero ring") {
    Ring z1 = zmod(1);
    CHECK_THROWS_AS(is_unit(z1, z1.element(0)), DegenerateRingError);
    CHECK_THROWS_AS(is_reduced(z1), DegenerateRingError);
    CHECK_THROWS_AS(is_local(z1), DegenerateRingError);
}

TEST_CASE("ring level predicates on pinned rings") {
    CHECK(is_reduced(zmod(6)));
    CHECK_FALSE(is_reduced(zmod(12)));
    CHECK(is_local(zmod(4)));
    CHECK(is_local(zmod(8)));
    CHECK_FALSE(is_local(zmod(6)));
    CHECK(is_field(zmod(5)));
    CHECK_FALSE(is_field(zmod(4)));
    Ring f4 = poly_quotient_ints(zmod(2), {1, 1, 1});
    CHECK(is_field(f4));
    CHECK(is_local(f4));
    CHECK(is_reduced(f4));
    CHECK(units_count(f4) == 3);
    CHECK(units_count(zmod(12)) == 4);
    Ring x2 = poly_quotient_ints(zmod(2), {0, 0, 1});
    CHECK_FALSE(is_field(x2));
    CHECK(is_local(x2));
    CHECK_FALSE(is_reduced(x2));
}

TEST_CASE("additive orders divide the group order") {
    Ring r = zmod(12);
    CHECK(additive_order_ix(r, 0) == 1);
    CHECK(additive_order_ix(r, 1) == 12);
    CHECK(additive_order_ix(r, 4) == 3);
    CHECK(additive_order_ix(r, 6) == 2);
    for (const Ring& s : classify_samples())
        for (std::size_t x = 0; x < s.size(); ++x) CHECK(s.size() % additive_order_ix(s, x) == 0);
}

TEST_CASE("table fixtures may put zero anywhere") {
    Ring t = shifted_zmod_table(6, 2);
    CHECK(t.size() == 6);
    CHECK(t.zero_ix() == 4);  // index holding value 0 under shift 2
    CHECK(t.mul_ix(t.one_ix(), t.one_ix()) == t.one_ix());
    AxiomReport rep = check_ring_axioms(t);
    CHECK(rep.all_pass);
    CHECK(is_local(t) == is_local(zmod(6)));
    CHECK(units_count(t) == units_count(zmod(6)));
}

TEST_CASE("table fixtures without identities are rejected") {
    // 2x2 all-zero multiplication has no unit element
    std::vector<std::uint16_t> add{0, 1, 1, 0};
    std::vector<std::uint16_t> mul{0, 0, 0, 0};
    CHECK_THROWS_AS(table_ring("broken", 2, add, mul), PreconditionError);
}

TEST_CASE("ring axioms hold on built rings in full mode") {
    for (const Ring& r : classify_samples()) {
        AxiomReport rep = check_ring_axioms(r);
        CHECK(rep.all_pass);
        CHECK(rep.mode == AxiomMode::Kind::full);
        CHECK_FALSE(rep.downgraded);
        CHECK(rep.samples == 0);
        CHECK(rep.ring == r.descriptor());
        for (const auto& c : rep.checks) {
            CHECK(c.pass);
            CHECK_FALSE(c.witness.has_value());
        }
    }
}

TEST_CASE("a corrupted table is caught with a rendered witness") {
    std::size_t n = 6;
    std::vector<std::uint16_t> add(n * n), mul(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            add[i * n + j] = static_cast<std::uint16_t>((i + j) % n);
            mul[i * n + j] = static_cast<std::uint16_t>((i * j) % n);
        }
    mul[2 * n + 2] = 5;  // 2*2 = 5 breaks distributivity, identities survive
    Ring bad = table_ring("corrupt6", n, std::move(add), std::move(mul));
    AxiomReport rep = check_ring_axioms(bad);
    CHECK_FALSE(rep.all_pass);
    bool found = false;
    for (const auto& c : rep.checks)
        if (!c.pass) {
            found = true;
            REQUIRE(c.witness.has_value());
            CHECK_FALSE(c.witness->rendered.empty());
        }
    CHECK(found);
}

TEST_CASE("full axiom requests downgrade above the cap") {
    Ring big = zmod(600);  // over the default full-check cap
    AxiomReport rep = check_ring_axioms(big);
    CHECK(rep.downgraded);
    CHECK(rep.mode == AxiomMode::Kind::sampled);
    CHECK(rep.samples > 0);
    CHECK(rep.all_pass);
}

TEST_CASE("sampled mode is seeded and deterministic") {
    Ring r = zmod(97);
    AxiomReport a = check_ring_axioms(r, AxiomMode::Sampled(50), 123);
    AxiomReport b = check_ring_axioms(r, AxiomMode::Sampled(50), 123);
    CHECK(a.all_pass);
    CHECK(a.samples == 50);
    CHECK(a.mode == AxiomMode::Kind::sampled);
    CHECK(b.samples == a.samples);
    const char* names[] = {"add_associative", "add_commutative", "zero_identity",
                           "additive_inverse", "mul_associative", "mul_commutative",
                           "one_identity",     "left_distributive", "right_distributive"};
    for (const char* name : names) {
        bool present = false;
        for (const auto& c : a.checks) present = present || c.axiom == name;
        CHECK_MESSAGE(present, name);
    }
}
