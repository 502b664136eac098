#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fsseq/document.hpp"
#include "fsseq/errors.hpp"
#include "helpers.hpp"

using namespace fsseq;

namespace {
const std::string data_dir = FSS_DATA_DIR;
}

TEST_CASE("bundled two-generator dataset parses to the expected complex") {
    ComplexDocument doc = load_document(data_dir + "/sigma235.fss");
    auto [c, caps] = doc.build();
    CHECK(c.band_r() == 0);
    CHECK(c.size() == 2);
    CHECK(c.generator("a_alpha").sf == 1);
    CHECK(c.generator("a_beta").sf == 5);
    CHECK(c.full_boundary().is_zero());
    REQUIRE(caps.size() == 4);
    CapOperator nu = doc.cap_operator("nu");
    CHECK(nu.cls().nu_exp == 1);
    REQUIRE(nu.entries().size() == 1);
    CHECK(nu.entries()[0].coeff == 2);
    CHECK(doc.cap_operator("mu").entries().empty());
}

TEST_CASE("empty generator list is a valid empty complex") {
    ComplexDocument doc = parse_document("band_r 0/1\n");
    FilteredComplex c = doc.to_complex();
    CHECK(c.size() == 0);
    CHECK(validate_complex(c).ok());
}

TEST_CASE("cs on the band edge is a validation error") {
    ComplexDocument doc = parse_document("band_r 1/2\ngenerator id=a sf=0 cs=1/2\n");
    CHECK_THROWS_AS(doc.to_complex(), ValidationError);
}

TEST_CASE("comments and plain-integer rationals are accepted") {
    ComplexDocument doc = parse_document(
        "# heading comment\n"
        "band_r 0  # trailing comment\n"
        "generator id=a sf=1 cs=1/2\n");
    CHECK(doc.band_r == 0);
    CHECK(doc.generators.size() == 1);
}

TEST_CASE("parse errors carry line numbers") {
    SUBCASE("malformed rational") {
        try {
            parse_document("band_r 0/1\ngenerator id=a sf=1 cs=0.5\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line == 2);
        }
    }
    SUBCASE("unknown record") {
        CHECK_THROWS_AS(parse_document("band_r 0/1\nfrobnicate x=1\n"), ParseError);
    }
    SUBCASE("missing field") {
        CHECK_THROWS_AS(parse_document("band_r 0/1\ngenerator id=a sf=1\n"), ParseError);
    }
    SUBCASE("missing band record") {
        CHECK_THROWS_AS(parse_document("generator id=a sf=1 cs=1/2\n"), ParseError);
    }
    SUBCASE("zero denominator") {
        CHECK_THROWS_AS(parse_document("band_r 1/0\n"), ParseError);
    }
    SUBCASE("capentry for an undeclared cap") {
        CHECK_THROWS_AS(
            parse_document("band_r 0/1\ncapentry cap=nu from=a to=b coeff=1\n"), ParseError);
    }
}

TEST_CASE("duplicate ids are rejected at parse time") {
    CHECK_THROWS_AS(
        parse_document("band_r 0/1\ngenerator id=a sf=1 cs=1/2\ngenerator id=a sf=2 cs=1/3\n"),
        DuplicateId);
    CHECK_THROWS_AS(
        parse_document("band_r 0/1\ncap name=nu nu_exp=1 mu_exp=0\ncap name=nu nu_exp=2 mu_exp=0\n"),
        DuplicateId);
}

TEST_CASE("emit is canonical and round-trips") {
    ComplexDocument doc = load_document(data_dir + "/sigma235.fss");
    std::string emitted = emit_document(doc);
    ComplexDocument again = parse_document(emitted);
    CHECK(emit_document(again) == emitted);
    CHECK(again.generators.size() == doc.generators.size());
    CHECK(again.caps.size() == doc.caps.size());
    // emit sorts: generators by (sf, id), caps by name
    CHECK(emitted.find("a_alpha") < emitted.find("a_beta"));
    CHECK(emitted.find("cap name=mu") < emitted.find("cap name=nu "));
}

TEST_CASE("validation errors from build list the offending rule") {
    ComplexDocument doc = parse_document(
        "band_r 0/1\n"
        "generator id=a sf=5 cs=1/4\n"
        "generator id=b sf=4 cs=3/4\n"
        "boundary from=a to=b coeff=1\n");
    CHECK_THROWS_WITH_AS(doc.build(), doctest::Contains("cs"), ValidationError);
}

TEST_CASE("bundled first-differential dataset") {
    ComplexDocument doc = load_document(data_dir + "/d1demo.fss");
    FilteredComplex c = doc.to_complex();
    CHECK(c.size() == 2);
    CHECK(total_homology_mod8(c).groups.empty());
    HomologyTable t = graded_homology(c);
    CHECK(t.invariants_at(0).free_rank == 1);
    CHECK(t.invariants_at(7).free_rank == 1);
}

TEST_CASE("relifted documents stay parseable") {
    ComplexDocument doc = load_document(data_dir + "/sigma235.fss");
    auto [c, caps] = doc.build();
    ComplexDocument shifted = make_document(relift(c), caps);
    ComplexDocument back = parse_document(emit_document(shifted));
    CHECK(back.band_r == 1);
    CHECK(back.generators[0].sf == -7);
}
