#include "braidseq/garside.hpp"
#include "braidseq/quasitoric.hpp"

#include <catch2/catch_amalgamated.hpp>

using braidseq::BraidWord;
using braidseq::QuasitoricFamily;
using braidseq::format_braid;
using braidseq::parse_braid;

TEST_CASE("family parsing and naming", "[quasitoric]") {
    REQUIRE(braidseq::parse_family("A") == QuasitoricFamily::A);
    REQUIRE(braidseq::parse_family("a") == QuasitoricFamily::A);
    REQUIRE(braidseq::parse_family("B") == QuasitoricFamily::B);
    REQUIRE(braidseq::parse_family("b") == QuasitoricFamily::B);
    REQUIRE_THROWS_AS(braidseq::parse_family("C"), std::invalid_argument);
    REQUIRE_THROWS_AS(braidseq::parse_family(""), std::invalid_argument);
    REQUIRE(braidseq::family_letter(QuasitoricFamily::A) == 'A');
    REQUIRE(braidseq::family_letter(QuasitoricFamily::B) == 'B');
}

TEST_CASE("quasitoric braid words", "[quasitoric]") {
    REQUIRE(format_braid(braidseq::quasitoric_braid(QuasitoricFamily::A, 3)) == "1 -2 1 -2 1 -2");
    REQUIRE(format_braid(braidseq::quasitoric_braid(QuasitoricFamily::B, 2)) == "1 2 -3 1 2 -3");
    REQUIRE(braidseq::quasitoric_braid(QuasitoricFamily::A, 5).strands() == 3);
    REQUIRE(braidseq::quasitoric_braid(QuasitoricFamily::B, 5).strands() == 4);
    REQUIRE(braidseq::quasitoric_braid(QuasitoricFamily::A, 0).length() == 0);
    REQUIRE_THROWS_AS(braidseq::quasitoric_braid(QuasitoricFamily::A, -1), std::invalid_argument);
}

TEST_CASE("closure component structure", "[quasitoric]") {
    for (int q = 1; q <= 12; ++q) {
        CAPTURE(q);
        REQUIRE(braidseq::closure_components(braidseq::quasitoric_braid(QuasitoricFamily::A, q))
                == (q % 3 == 0 ? 3 : 1));
        const int b_expect = (q % 4 == 0) ? 4 : (q % 2 == 0 ? 2 : 1);
        REQUIRE(braidseq::closure_components(braidseq::quasitoric_braid(QuasitoricFamily::B, q))
                == b_expect);
    }
}

TEST_CASE("pattern positions", "[quasitoric]") {
    auto pattern = [](QuasitoricFamily f, int q) {
        return braidseq::unknotting_pattern(f, q).positions;
    };

    REQUIRE(pattern(QuasitoricFamily::A, 1).empty());
    REQUIRE(pattern(QuasitoricFamily::A, 2) == std::vector<int>{2});
    REQUIRE(pattern(QuasitoricFamily::A, 4) == std::vector<int>{2, 5});
    REQUIRE(pattern(QuasitoricFamily::A, 5) == std::vector<int>{4, 9});
    REQUIRE(pattern(QuasitoricFamily::A, 6) == std::vector<int>{2, 5, 8, 11});
    REQUIRE(pattern(QuasitoricFamily::A, 7) == std::vector<int>{2, 5, 8, 11});
    REQUIRE(pattern(QuasitoricFamily::A, 8) == std::vector<int>{2, 5, 8, 11, 14});

    REQUIRE(pattern(QuasitoricFamily::B, 1).empty());
    REQUIRE(pattern(QuasitoricFamily::B, 2) == std::vector<int>{5});
    REQUIRE(pattern(QuasitoricFamily::B, 3) == std::vector<int>{3, 8});
    REQUIRE(pattern(QuasitoricFamily::B, 4) == std::vector<int>{3, 8, 10, 11});
    REQUIRE(pattern(QuasitoricFamily::B, 7) == std::vector<int>{3, 8, 10, 11, 15, 20});

    REQUIRE_THROWS_AS(braidseq::unknotting_pattern(QuasitoricFamily::A, -2),
                      std::invalid_argument);
}

TEST_CASE("pattern size always meets the bound", "[quasitoric]") {
    for (int q = 0; q <= 48; ++q) {
        for (QuasitoricFamily f : {QuasitoricFamily::A, QuasitoricFamily::B}) {
            CAPTURE(braidseq::family_letter(f), q);
            REQUIRE(static_cast<long long>(braidseq::unknotting_pattern(f, q).positions.size())
                    == braidseq::unknotting_bound(f, q));
        }
    }

    SECTION("spot values") {
        REQUIRE(braidseq::unknotting_bound(QuasitoricFamily::A, 7) == 4);
        REQUIRE(braidseq::unknotting_bound(QuasitoricFamily::A, 8) == 5);
        REQUIRE(braidseq::unknotting_bound(QuasitoricFamily::B, 5) == 4);
        REQUIRE(braidseq::unknotting_bound(QuasitoricFamily::B, 3) == 2);
        REQUIRE(braidseq::unknotting_bound(QuasitoricFamily::B, 4) == 4);
    }
}

TEST_CASE("patterns trivialize every knot closure", "[quasitoric]") {
    for (int q = 1; q <= 12; ++q) {
        if (q % 3 != 0) {
            CAPTURE(q);
            REQUIRE(braidseq::quasitoric_check(QuasitoricFamily::A, q).is_unknot_after_pattern);
        }
        if (q % 2 != 0) {
            CAPTURE(q);
            REQUIRE(braidseq::quasitoric_check(QuasitoricFamily::B, q).is_unknot_after_pattern);
        }
    }
}

TEST_CASE("patterns trivialize the link closures too", "[quasitoric]") {
    // the pattern flips never merge components, so these cannot become
    // unknots; they become trivial braids (full unlinks) instead
    for (int q : {3, 6, 9, 12}) {
        CAPTURE(q);
        const auto r = braidseq::quasitoric_check(QuasitoricFamily::A, q);
        REQUIRE_FALSE(r.is_unknot_after_pattern);
        REQUIRE(r.fp.components == 3);
        REQUIRE(braidseq::is_trivial_braid(r.flipped));
        REQUIRE(r.fp.jones == braidseq::unlink_fingerprint(3).jones);
    }
    for (int q : {4, 8, 12}) {
        CAPTURE(q);
        const auto r = braidseq::quasitoric_check(QuasitoricFamily::B, q);
        REQUIRE(r.fp.components == 4);
        REQUIRE(braidseq::is_trivial_braid(r.flipped));
        REQUIRE(r.fp.jones == braidseq::unlink_fingerprint(4).jones);
    }
    for (int q : {2, 6, 10}) {
        CAPTURE(q);
        const auto r = braidseq::quasitoric_check(QuasitoricFamily::B, q);
        REQUIRE(r.fp.components == 2);
        REQUIRE(r.fp.jones == braidseq::unlink_fingerprint(2).jones);
    }
}

TEST_CASE("flipped words in closed form for small q", "[quasitoric]") {
    SECTION("family B at q = 4 is the canonical trivial word, letter for letter") {
        const auto r = braidseq::quasitoric_check(QuasitoricFamily::B, 4);
        REQUIRE(r.flipped == braidseq::trivial_braid_word(3));
    }

    SECTION("family B at q = 3 is its 9-letter prefix") {
        const auto r = braidseq::quasitoric_check(QuasitoricFamily::B, 3);
        REQUIRE(format_braid(r.flipped) == "1 2 3 1 2 -3 1 -2 -3");
        const auto t = braidseq::trivial_braid_word(3).letters();
        REQUIRE(std::equal(r.flipped.letters().begin(), r.flipped.letters().end(), t.begin()));
        REQUIRE(braidseq::braids_equal(r.flipped, parse_braid("3 2 1", 4)));
        REQUIRE(r.is_unknot_after_pattern);
    }

    SECTION("family A at q = 4 extends the 3-strand trivial word by one period") {
        const auto r = braidseq::quasitoric_check(QuasitoricFamily::A, 4);
        REQUIRE(format_braid(r.flipped) == "1 2 1 -2 -1 -2 1 -2");
        const auto t = braidseq::trivial_braid_word(2).letters();
        REQUIRE(std::equal(t.begin(), t.end(), r.flipped.letters().begin()));
        REQUIRE(braidseq::braids_equal(r.flipped, parse_braid("1 -2", 3)));
        REQUIRE(r.is_unknot_after_pattern);
    }
}

TEST_CASE("quasitoric JSON layout", "[quasitoric]") {
    const auto j = braidseq::quasitoric_to_json(braidseq::quasitoric_check(QuasitoricFamily::A, 4));
    REQUIRE(j.dump()
            == "{\"family\":\"A\",\"q\":4,\"pattern\":[2,5],\"bound\":2,"
               "\"is_unknot_after_pattern\":true,\"fingerprint\":{\"components\":1,"
               "\"jones\":\"1*t^0\",\"alexander\":\"1*t^0\",\"determinant\":1,"
               "\"signature\":0}}");
}
