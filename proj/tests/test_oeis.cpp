#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "riocirc/azseq.hpp"
#include "riocirc/errors.hpp"
#include "riocirc/oeis.hpp"

using namespace riocirc;

namespace {

OeisOptions offline_options() {
    OeisOptions opt;
    opt.offline = true;
    opt.fixture_dir = RIOCIRC_TEST_DATA_DIR;
    opt.base_url = "http://127.0.0.1:1";  // must never be contacted
    return opt;
}

std::vector<mpz_class> ints(std::initializer_list<long> values) {
    std::vector<mpz_class> out;
    for (long v : values) out.emplace_back(v);
    return out;
}

}  // namespace

TEST_CASE("b-file parsing") {
    const BFile b = parse_bfile("A000001", "0 1\n1 3\n2 10\n");
    REQUIRE(b.entries.size() == 3);
    CHECK(b.entries[0] == std::pair<long long, mpz_class>{0, mpz_class(1)});
    CHECK(b.entries[2].second == 10);

    const BFile commented = parse_bfile("A000001", "# header\n1 1\n");
    CHECK(commented.entries.size() == 1);

    CHECK_THROWS_WITH_AS(parse_bfile("A000001", "1 x\n"), doctest::Contains("line 1"),
                         ParseError);
    CHECK_THROWS_AS(parse_bfile("A000001", "2 1\n1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_bfile("A000001", "1 2 3\n"), ParseError);
    CHECK(parse_bfile("A000001", "").entries.empty());
}

TEST_CASE("parse then serialize round-trips the fixtures byte-for-byte") {
    for (const std::string name : {"b000108.txt", "b001700.txt", "b088218.txt", "b002740.txt"}) {
        std::ifstream in(std::string(RIOCIRC_TEST_DATA_DIR) + "/" + name, std::ios::binary);
        REQUIRE(in.good());
        std::ostringstream buf;
        buf << in.rdbuf();
        const std::string text = buf.str();
        CHECK(serialize_bfile(parse_bfile("A", text)) == text);
    }
}

TEST_CASE("catalan numbers match A000108") {
    const OeisClient client(offline_options());
    std::vector<mpz_class> terms;
    for (unsigned long n = 0; n < 20; ++n) terms.push_back(catalan(n));
    const MatchReport report = client.check_sequence(terms, "A000108");
    CHECK(report.matched);
    CHECK(report.offset_used == 0);
    CHECK_FALSE(report.abs_compared);
}

TEST_CASE("theorem-6 magnitudes match A001700 and A088218") {
    const OeisClient client(offline_options());
    std::vector<mpz_class> magnitudes;
    for (const auto& r : theorem6_sequence(Rational(1), Rational(1), 9))
        magnitudes.push_back(abs(r.numerator()));

    const MatchReport direct = client.check_sequence(magnitudes, "A001700");
    CHECK(direct.matched);
    CHECK(direct.offset_used == 0);

    // A088218 carries an extra leading 1; the offset search absorbs it.
    const MatchReport shifted = client.check_sequence(magnitudes, "A088218");
    CHECK(shifted.matched);
    CHECK(shifted.offset_used == 1);
}

TEST_CASE("signed sequences fall back to absolute-value comparison") {
    const OeisClient client(offline_options());
    std::vector<mpz_class> signed_terms;
    for (const auto& r : theorem6_sequence(Rational(1), Rational(1), 7))
        signed_terms.push_back(r.numerator());
    const MatchReport report = client.check_sequence(signed_terms, "A001700");
    CHECK(report.matched);
    CHECK(report.abs_compared);
}

TEST_CASE("c^2 magnitudes match A002740") {
    const OeisClient client(offline_options());
    const auto column = c_power_column(csum_expansion(12, 3), 2);
    std::vector<mpz_class> magnitudes;
    for (std::size_t n = 4; n < column.size(); ++n)
        magnitudes.push_back(abs(column[n].numerator()));
    const MatchReport report = client.check_sequence(magnitudes, "A002740");
    CHECK(report.matched);
    CHECK(report.offset_used == 3);  // fixture starts at index 0 with three zeros
}

TEST_CASE("mismatches are reported with a position") {
    const OeisClient client(offline_options());
    const MatchReport report = client.check_sequence(ints({1, 1, 2, 5, 99}), "A000108");
    CHECK_FALSE(report.matched);
    CHECK(report.matched_prefix == 4);
    CHECK(report.detail.find("position 4") != std::string::npos);
}

TEST_CASE("offline mode with no fixture is unavailable, not a mismatch") {
    OeisOptions opt = offline_options();
    const OeisClient client(opt);
    CHECK_THROWS_AS(client.fetch("A999999"), UnavailableError);
    CHECK_THROWS_AS(client.check_sequence(ints({1, 2, 3}), "A999999"), UnavailableError);
    CHECK_THROWS_AS(client.check_sequence({}, "A000108"), DomainError);
    CHECK_THROWS_AS(client.fetch("nonsense"), ParseError);
}

TEST_CASE("cache lookups serve saved b-files when offline") {
    const std::string cache = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                              "/riocirc_oeis_cache_test";
    std::filesystem::create_directories(cache);
    {
        std::ofstream out(cache + "/b999998.txt", std::ios::trunc);
        out << "0 4\n1 8\n2 15\n";
    }
    OeisOptions opt;
    opt.offline = true;
    opt.fixture_dir = "/nonexistent";
    opt.cache_dir = cache;
    const OeisClient client(opt);
    const BFile b = client.fetch("A999998");
    REQUIRE(b.entries.size() == 3);
    CHECK(b.entries[2].second == 15);
    const MatchReport report = client.check_sequence(ints({4, 8, 15}), "A999998");
    CHECK(report.matched);
    std::filesystem::remove_all(cache);
}

TEST_CASE("options read the environment") {
    ::setenv("OEIS_OFFLINE", "1", 1);
    ::setenv("OEIS_CACHE_DIR", "/tmp/riocirc-test-cache", 1);
    ::setenv("OEIS_BASE_URL", "http://example.invalid", 1);
    const OeisOptions opt = OeisOptions::from_environment();
    CHECK(opt.offline);
    CHECK(opt.cache_dir == "/tmp/riocirc-test-cache");
    CHECK(opt.base_url == "http://example.invalid");
    ::unsetenv("OEIS_CACHE_DIR");
    ::unsetenv("OEIS_BASE_URL");
}
