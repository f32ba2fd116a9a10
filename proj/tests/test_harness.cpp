#include "doctest.h"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "finring/classify.hpp"
#include "finring/construct.hpp"
#include "finring/errors.hpp"
#include "finring/harness.hpp"
#include "finring/ideal.hpp"
#include "finring/ring.hpp"

using namespace finring;

namespace {

Ideal gen_ix(const Ring& r, const std::vector<std::size_t>& ixs) {
    std::vector<Element> gens;
    for (auto i : ixs) gens.push_back(r.element(i));
    return ideal_generate(r, gens);
}

std::string detail_of(const CheckResult& res, const std::string& key) {
    for (const auto& [k, v] : res.details)
        if (k == key) return v;
    FAIL("missing detail ", key);
    return {};
}

std::vector<std::string> descriptors(const std::vector<Ring>& corpus) {
    std::vector<std::string> out;
    for (const Ring& r : corpus) out.push_back(r.descriptor());
    return out;
}

}  // namespace

TEST_CASE("corpus generation is deterministic and sorted") {
    CorpusSpec spec;
    spec.max_size = 48;
    auto a = generate_corpus(spec);
    auto b = generate_corpus(spec);
    CHECK(descriptors(a) == descriptors(b));
    for (std::size_t k = 1; k < a.size(); ++k) {
        bool ordered = a[k - 1].size() < a[k].size() ||
                       (a[k - 1].size() == a[k].size() &&
                        a[k - 1].descriptor() < a[k].descriptor());
        CHECK(ordered);
    }
    for (const Ring& r : a) {
        CHECK(r.size() >= 2);
        CHECK(r.size() <= 48);
    }
}

TEST_CASE("the default moduli ladder runs from two to twenty seven") {
    CorpusSpec spec;
    auto m = spec.effective_moduli();
    REQUIRE(m.size() == 26);
    CHECK(m.front() == 2);
    CHECK(m.back() == 27);
    spec.moduli = {4, 9};
    CHECK(spec.effective_moduli() == std::vector<std::size_t>{4, 9});
    spec.max_size = 16;
    auto names = descriptors(generate_corpus(spec));
    CHECK(std::find(names.begin(), names.end(), "Z/4") != names.end());
    CHECK(std::find(names.begin(), names.end(), "Z/9") != names.end());
    CHECK(std::find(names.begin(), names.end(), "Z/5") == names.end());
}

TEST_CASE("restricted moduli restrict the corpus") {
    CorpusSpec spec;
    spec.moduli = {2};
    spec.max_size = 8;
    auto corpus = generate_corpus(spec);
    CHECK_FALSE(corpus.empty());
    bool has_z2 = false;
    for (const Ring& r : corpus) {
        // everything is built from Z/2, so sizes are powers of two
        CHECK((r.size() & (r.size() - 1)) == 0);
        has_z2 = has_z2 || r.descriptor() == "Z/2";
    }
    CHECK(has_z2);
}

TEST_CASE("the small corpus is rich and duplicate free") {
    CorpusSpec spec;
    spec.max_size = 64;
    auto corpus = generate_corpus(spec);
    CHECK(corpus.size() >= 100);
    auto descs = descriptors(corpus);
    std::set<std::string> names(descs.begin(), descs.end());
    CHECK(names.size() == corpus.size());
    // the four pairwise distinct rings with four elements all appear
    std::size_t fours = 0;
    for (const Ring& r : corpus)
        if (r.size() == 4) ++fours;
    CHECK(fours == 4);
    // and they stay pairwise non isomorphic
    std::vector<Ring> size4;
    for (const Ring& r : corpus)
        if (r.size() == 4) size4.push_back(r);
    for (std::size_t i = 0; i < size4.size(); ++i)
        for (std::size_t j = i + 1; j < size4.size(); ++j)
            CHECK_FALSE(ring_isomorphic(size4[i], size4[j]));
}

TEST_CASE("free extension transfer on pinned instances") {
    CheckResult res = check_free_extension_transfer(zmod(4), 1);
    CHECK(res.check_id == "thm2.2");
    CHECK(res.instance == "A=Z/4;k=1");
    CHECK(res.holds);
    CHECK(res.counterexample.empty());
    CHECK_FALSE(res.note.empty());
    CHECK(detail_of(res, "extension_size") == "16");
    CHECK(detail_of(res, "base_is_A") == "true");
    CHECK(detail_of(res, "extension_is_A") == "true");
    CHECK(detail_of(res, "base_is_strong_A") == detail_of(res, "extension_is_strong_A"));

    CheckResult prod = check_free_extension_transfer(product(zmod(2), zmod(3)), 2);
    CHECK(prod.holds);
    CHECK(detail_of(prod, "base_is_strong_A") == "false");
    CHECK(detail_of(prod, "extension_is_strong_A") == "false");
}

TEST_CASE("field extension check needs a field") {
    CheckResult res = check_field_free_extension(poly_quotient_ints(zmod(2), {1, 1, 1}), 2);
    CHECK(res.check_id == "lem2.6");
    CHECK(res.instance == "K=polyquot(Z/2, [1, 1, 1]);n=2");
    CHECK(res.holds);
    CHECK(detail_of(res, "extension_is_A") == "true");
    CHECK(detail_of(res, "extension_is_strong_A") == "true");
    CHECK_THROWS_AS(check_field_free_extension(zmod(4), 1), PreconditionError);
}

TEST_CASE("duplication transfer on pinned instances") {
    Ring r = zmod(4);
    CheckResult res = check_duplication_transfer(r, gen_ix(r, {2}));
    CHECK(res.check_id == "thm3.1");
    CHECK(res.instance == "R=Z/4;I=ideal(2)");
    CHECK(res.holds);
    CHECK(detail_of(res, "ideal_is_regular") == "false");
    CHECK(detail_of(res, "duplication_is_strong_A") == "true");

    CheckResult whole = check_duplication_transfer(r, gen_ix(r, {1}));
    CHECK(whole.holds);
    CHECK(detail_of(whole, "ideal_is_regular") == "true");
    // duplication along the whole ring is the double product, never strong
    CHECK(detail_of(whole, "duplication_is_strong_A") == "false");
    CHECK(detail_of(whole, "duplication_is_A") == detail_of(whole, "base_is_A"));
}

TEST_CASE("product transfer on pinned instances") {
    CheckResult res = check_product_transfer(zmod(2), zmod(3));
    CHECK(res.check_id == "ex2.1");
    CHECK(res.instance == "R1=Z/2;R2=Z/3");
    CHECK(res.holds);
    CHECK(detail_of(res, "product_is_A") == "true");
    CHECK(detail_of(res, "product_is_strong_A") == "false");
    CHECK(detail_of(res, "strong_failure_generators") == "(0, 1), (1, 0)");
}

TEST_CASE("coincidence check compares both tables and guards the square") {
    Ring r = zmod(4);
    CheckResult res = check_idealization_coincidence(r, gen_ix(r, {2}));
    CHECK(res.check_id == "coincidence");
    CHECK(res.holds);
    CHECK(detail_of(res, "tables_identical") == "true");
    CHECK(detail_of(res, "size") == "8");

    Ring z8 = zmod(8);
    CHECK_THROWS_AS(check_idealization_coincidence(z8, gen_ix(z8, {2})), PreconditionError);
}

TEST_CASE("duplications of fields stay reduced") {
    Ring k = zmod(5);
    CheckResult zero_side = check_duplication_reduced(k, gen_ix(k, {}));
    CHECK(zero_side.check_id == "reduced");
    CHECK(zero_side.instance == "K=Z/5;I=ideal()");
    CHECK(zero_side.holds);
    CheckResult whole = check_duplication_reduced(k, gen_ix(k, {1}));
    CHECK(whole.instance == "K=Z/5;I=ideal(1)");
    CHECK(whole.holds);
    Ring z6 = zmod(6);
    CHECK_THROWS_AS(check_duplication_reduced(z6, gen_ix(z6, {})), PreconditionError);
}

TEST_CASE("families sweep the corpus and hold everywhere") {
    CorpusSpec spec;
    spec.max_size = 16;
    auto corpus = generate_corpus(spec);
    const char* ids[] = {"thm2.2", "lem2.6", "thm3.1", "ex2.1", "coincidence", "reduced"};
    for (const char* id : ids) {
        auto results = run_check_family(id, corpus);
        CHECK_FALSE(results.empty());
        for (std::size_t k = 0; k < results.size(); ++k) {
            CHECK(results[k].check_id == id);
            CHECK_MESSAGE(results[k].holds, results[k].instance, ": ",
                          results[k].counterexample);
            if (k > 0) CHECK(results[k - 1].instance < results[k].instance);
        }
    }
    CHECK_THROWS_AS(run_check_family("thm9.9", corpus), PreconditionError);
}

TEST_CASE("results replay from their instance strings alone") {
    CorpusSpec spec;
    spec.max_size = 9;
    auto corpus = generate_corpus(spec);
    const char* ids[] = {"thm2.2", "lem2.6", "thm3.1", "ex2.1", "coincidence", "reduced"};
    for (const char* id : ids) {
        auto results = run_check_family(id, corpus);
        REQUIRE_FALSE(results.empty());
        for (const auto& res : results) {
            CheckResult again = replay(res);
            CHECK(again.check_id == res.check_id);
            CHECK(again.instance == res.instance);
            CHECK(again.holds == res.holds);
            CHECK(again.counterexample == res.counterexample);
            CHECK(again.details == res.details);
        }
    }
}

TEST_CASE("replay rejects malformed instances") {
    CheckResult res;
    res.check_id = "thm2.2";
    res.instance = "A=Z/4";  // k missing
    CHECK_THROWS_AS(replay(res), PreconditionError);
    res.instance = "bogus";
    CHECK_THROWS_AS(replay(res), PreconditionError);
}

TEST_CASE("the duplication search over proper ideals finds nothing") {
    CorpusSpec spec;
    spec.max_size = 12;
    SearchReport report = search_duplication_strong_converse(spec, Method::fast, 144);
    CHECK(report.corpus_rings > 0);
    CHECK(report.instances_examined > 0);
    CHECK(report.dup_size_cap == 144);
    CHECK(report.hits.empty());
}

TEST_CASE("scope notes disclose the finite setting") {
    auto notes = finite_analog_notes();
    CHECK(notes.size() >= 6);
    for (const auto& n : notes) CHECK_FALSE(n.empty());
}
