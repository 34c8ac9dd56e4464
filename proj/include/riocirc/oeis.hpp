#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace riocirc {

/// Parsed OEIS b-file: ordered (index, value) pairs.
struct BFile {
    std::string id;
    std::vector<std::pair<long long, mpz_class>> entries;

    /// Value at an absolute b-file index; nullptr when absent.
    const mpz_class* value_at(long long index) const;
};

/// Parses b-file text ("index value" per line, '#' comments ignored).
/// Throws ParseError with the line number for malformed or non-increasing
/// input.
BFile parse_bfile(const std::string& id, const std::string& text);

/// Canonical "index value\n" rendering; inverse of parse_bfile on
/// comment-free input.
std::string serialize_bfile(const BFile& bfile);

struct MatchReport {
    std::string id;
    std::size_t offered = 0;         // terms supplied
    std::size_t matched_prefix = 0;  // longest aligned prefix that agreed
    long long offset_used = 0;
    bool abs_compared = false;  // sign-stripping alignment was needed
    bool matched = false;
    std::string detail;
};

struct OeisOptions {
    bool offline = false;     // OEIS_OFFLINE=1: fixtures/cache only
    std::string fixture_dir;  // OEIS_FIXTURE_DIR, falls back to the repo data dir
    std::string cache_dir;    // OEIS_CACHE_DIR, empty disables caching
    std::string base_url;     // OEIS_BASE_URL, default https://oeis.org

    static OeisOptions from_environment();
};

/// Fetches and checks OEIS b-files. Resolution order: fixture directory,
/// cache directory, then (unless offline) the network, caching the download
/// with a write-then-rename.
class OeisClient {
public:
    OeisClient() : options_(OeisOptions::from_environment()) {}
    explicit OeisClient(OeisOptions options) : options_(std::move(options)) {}

    const OeisOptions& options() const { return options_; }

    /// Throws UnavailableError when no source can provide the b-file.
    BFile fetch(const std::string& id) const;

    /// Aligns `terms` against the b-file trying offsets 0..max_offset;
    /// falls back to absolute-value comparison for signed sequences.
    MatchReport check_sequence(const std::vector<mpz_class>& terms, const std::string& id,
                               long long max_offset = 3) const;

private:
    OeisOptions options_;
};

}  // namespace riocirc
