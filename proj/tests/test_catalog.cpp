#include "braidseq/catalog.hpp"
#include "braidseq/torus.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>

using braidseq::Catalog;
using braidseq::CatalogEntry;
using braidseq::parse_braid;

namespace {

CatalogEntry entry(const std::string& label, const braidseq::BraidWord& w,
                   const std::string& provenance = "test") {
    CatalogEntry e;
    e.label = label;
    e.fp = braidseq::fingerprint(w);
    e.provenance = provenance;
    return e;
}

struct TempPath {
    std::filesystem::path path;
    explicit TempPath(const char* name)
        : path(std::filesystem::temp_directory_path() /
               (std::string("braidseq-test-") + name + "-" + std::to_string(std::rand()))) {}
    ~TempPath() { std::filesystem::remove(path); }
};

}   // namespace

TEST_CASE("a fresh catalog holds the unknot anchor", "[catalog]") {
    const Catalog c = Catalog::seeded();
    REQUIRE(c.size() == 1);
    const CatalogEntry* u = c.find("unknot");
    REQUIRE(u != nullptr);
    REQUIRE(u->provenance == "seed");
    REQUIRE(u->claimed_u == 0);
    REQUIRE(u->fp.is_unknot());
    REQUIRE(c.find("missing") == nullptr);
}

TEST_CASE("adding entries", "[catalog]") {
    Catalog c = Catalog::seeded();
    c.add(entry("trefoil", parse_braid("1 1 1", 2)));
    REQUIRE(c.size() == 2);
    REQUIRE(c.find("trefoil") != nullptr);

    SECTION("re-adding the same fingerprint refreshes metadata") {
        CatalogEntry e = entry("trefoil", parse_braid("1 1 1", 2), "second pass");
        e.claimed_u = 1;
        REQUIRE_NOTHROW(c.add(e));
        REQUIRE(c.size() == 2);
        REQUIRE(c.find("trefoil")->provenance == "second pass");
        REQUIRE(c.find("trefoil")->claimed_u == 1);
    }

    SECTION("a label cannot change meaning") {
        REQUIRE_THROWS_AS(c.add(entry("trefoil", parse_braid("1 1 1 1 1", 2))),
                          std::runtime_error);
    }

    SECTION("empty labels are rejected") {
        REQUIRE_THROWS_AS(c.add(entry("", parse_braid("1", 2))), std::invalid_argument);
    }
}

TEST_CASE("fingerprint lookup", "[catalog]") {
    Catalog c = Catalog::seeded();
    const braidseq::BraidWord tref = parse_braid("1 1 1", 2);
    c.add(entry("trefoil", tref));
    c.add(entry("figure-eight", parse_braid("1 -2 1 -2", 3)));

    SECTION("exact matches by invariants, not by word") {
        // same knot from a different braid word
        const braidseq::BraidWord conj = parse_braid("1 1 1 2", 3);
        const auto labels = c.lookup(braidseq::fingerprint(conj));
        REQUIRE(labels == std::vector<std::string>{"trefoil"});
        REQUIRE(c.lookup(braidseq::fingerprint(parse_braid("1 1", 2))).empty());
    }

    SECTION("mirror matches are reported separately") {
        const auto m = c.lookup_with_mirrors(braidseq::fingerprint(tref.inverse()));
        REQUIRE(m.exact.empty());
        REQUIRE(m.mirror == std::vector<std::string>{"trefoil"});

        // an amphichiral knot is an exact match only; the mirror list is
        // reserved for labels that match in no other way
        const auto f = c.lookup_with_mirrors(braidseq::fingerprint(parse_braid("1 -2 1 -2", 3)));
        REQUIRE(f.exact == std::vector<std::string>{"figure-eight"});
        REQUIRE(f.mirror.empty());
    }
}

TEST_CASE("JSON round trip", "[catalog]") {
    Catalog c = Catalog::seeded();
    c.add(entry("trefoil", parse_braid("1 1 1", 2)));
    CatalogEntry hopf = entry("hopf", parse_braid("1 1", 2));
    hopf.claimed_u = 1;
    c.add(hopf);

    const auto j = c.to_json();
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 3);
    // map storage keeps labels sorted
    REQUIRE(j[0]["label"] == "hopf");
    REQUIRE(j[1]["label"] == "trefoil");
    REQUIRE(j[2]["label"] == "unknot");

    const Catalog back = Catalog::from_json(j);
    REQUIRE(back.size() == 3);
    REQUIRE(back.to_json().dump() == j.dump());
    REQUIRE(*back.find("hopf") == *c.find("hopf"));

    REQUIRE_THROWS_AS(Catalog::from_json(nlohmann::json::object()), std::runtime_error);
}

TEST_CASE("file persistence", "[catalog]") {
    TempPath tmp("persist");

    SECTION("save and load round trip") {
        Catalog c = Catalog::seeded();
        c.add(entry("trefoil", parse_braid("1 1 1", 2)));
        c.save(tmp.path.string());
        const Catalog back = Catalog::load(tmp.path.string());
        REQUIRE(back.to_json().dump() == c.to_json().dump());
    }

    SECTION("a missing file loads as the seeded store") {
        const Catalog c = Catalog::load(tmp.path.string());
        REQUIRE(c.size() == 1);
        REQUIRE(c.find("unknot") != nullptr);
    }

    SECTION("a corrupt file is an error, not a reset") {
        std::ofstream(tmp.path) << "not json {";
        REQUIRE_THROWS_AS(Catalog::load(tmp.path.string()), std::runtime_error);
    }
}
