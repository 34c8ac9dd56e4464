#include "riocirc/oeis.hpp"

#include <unistd.h>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "riocirc/errors.hpp"

#ifdef RIOCIRC_WITH_HTTP
#ifdef RIOCIRC_WITH_OPENSSL
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif
#include <httplib.h>
#endif

namespace riocirc {

namespace fs = std::filesystem;

namespace {

std::string env_or(const char* name, const std::string& fallback) {
    const char* value = std::getenv(name);
    return value && *value ? std::string(value) : fallback;
}

// "A001700" -> "001700"; accepts a bare number too.
std::string sequence_digits(const std::string& id) {
    std::string digits = id;
    if (!digits.empty() && (digits[0] == 'A' || digits[0] == 'a')) digits.erase(0, 1);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                       [](unsigned char ch) { return std::isdigit(ch); }))
        throw ParseError("malformed OEIS id '" + id + "'");
    while (digits.size() < 6) digits.insert(digits.begin(), '0');
    return digits;
}

std::string bfile_name(const std::string& id) {
    return "b" + sequence_digits(id) + ".txt";
}

bool read_file(const fs::path& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream buf;
    buf << in.rdbuf();
    out = buf.str();
    return true;
}

void write_file_atomic(const fs::path& path, const std::string& text) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
    const fs::path tmp = path.string() + ".tmp" + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) return;
        out << text;
    }
    fs::rename(tmp, path, ec);
    if (ec) fs::remove(tmp, ec);
}

#ifdef RIOCIRC_WITH_HTTP
std::string http_get(const std::string& base_url, const std::string& path) {
    std::string host = base_url;
    bool https = false;
    if (host.rfind("https://", 0) == 0) {
        host.erase(0, 8);
        https = true;
    } else if (host.rfind("http://", 0) == 0) {
        host.erase(0, 7);
    }
    while (!host.empty() && host.back() == '/') host.pop_back();

    auto run = [&](auto& client) -> std::string {
        client.set_follow_location(true);
        client.set_connection_timeout(10);
        client.set_read_timeout(20);
        auto res = client.Get(path);
        if (!res || res->status != 200)
            throw UnavailableError("GET " + base_url + path + " failed" +
                                   (res ? " with status " + std::to_string(res->status) : ""));
        return res->body;
    };
    if (https) {
#ifdef RIOCIRC_WITH_OPENSSL
        httplib::SSLClient client(host);
        return run(client);
#else
        throw UnavailableError("built without TLS; set OEIS_BASE_URL to an http:// mirror");
#endif
    }
    httplib::Client client(host);
    return run(client);
}
#endif

}  // namespace

const mpz_class* BFile::value_at(long long index) const {
    const auto it = std::lower_bound(
        entries.begin(), entries.end(), index,
        [](const std::pair<long long, mpz_class>& e, long long i) { return e.first < i; });
    if (it == entries.end() || it->first != index) return nullptr;
    return &it->second;
}

BFile parse_bfile(const std::string& id, const std::string& text) {
    BFile bfile;
    bfile.id = id;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;

        std::istringstream fields(line);
        std::string index_tok, value_tok, extra;
        fields >> index_tok >> value_tok;
        if (value_tok.empty())
            throw ParseError("b-file line " + std::to_string(lineno) + ": expected 'index value'");
        if (fields >> extra)
            throw ParseError("b-file line " + std::to_string(lineno) + ": trailing token '" +
                             extra + "'");
        long long index = 0;
        try {
            std::size_t used = 0;
            index = std::stoll(index_tok, &used);
            if (used != index_tok.size()) throw std::invalid_argument(index_tok);
        } catch (const std::exception&) {
            throw ParseError("b-file line " + std::to_string(lineno) + ": bad index '" +
                             index_tok + "'");
        }
        mpz_class value;
        if (value.set_str(value_tok, 10) != 0)
            throw ParseError("b-file line " + std::to_string(lineno) + ": bad value '" +
                             value_tok + "'");
        if (!bfile.entries.empty() && index <= bfile.entries.back().first)
            throw ParseError("b-file line " + std::to_string(lineno) +
                             ": indices must be strictly increasing");
        bfile.entries.emplace_back(index, std::move(value));
    }
    return bfile;
}

std::string serialize_bfile(const BFile& bfile) {
    std::ostringstream out;
    for (const auto& [index, value] : bfile.entries) out << index << " " << value.get_str() << "\n";
    return out.str();
}

OeisOptions OeisOptions::from_environment() {
    OeisOptions opt;
    const std::string offline = env_or("OEIS_OFFLINE", "");
    opt.offline = offline == "1" || offline == "true" || offline == "yes";
#ifdef RIOCIRC_OEIS_FIXTURES
    opt.fixture_dir = env_or("OEIS_FIXTURE_DIR", RIOCIRC_OEIS_FIXTURES);
#else
    opt.fixture_dir = env_or("OEIS_FIXTURE_DIR", "data/oeis");
#endif
    opt.cache_dir = env_or("OEIS_CACHE_DIR", "");
    opt.base_url = env_or("OEIS_BASE_URL", "https://oeis.org");
    return opt;
}

BFile OeisClient::fetch(const std::string& id) const {
    const std::string name = bfile_name(id);
    std::string text;
    if (!options_.fixture_dir.empty() && read_file(fs::path(options_.fixture_dir) / name, text))
        return parse_bfile(id, text);
    if (!options_.cache_dir.empty() && read_file(fs::path(options_.cache_dir) / name, text))
        return parse_bfile(id, text);
    if (options_.offline)
        throw UnavailableError("offline mode and no fixture or cached b-file for " + id);
#ifdef RIOCIRC_WITH_HTTP
    const std::string path = "/A" + sequence_digits(id) + "/" + name;
    text = http_get(options_.base_url, path);
    BFile parsed = parse_bfile(id, text);  // validate before caching
    if (!options_.cache_dir.empty()) write_file_atomic(fs::path(options_.cache_dir) / name, text);
    return parsed;
#else
    throw UnavailableError("built without HTTP support and no fixture for " + id);
#endif
}

MatchReport OeisClient::check_sequence(const std::vector<mpz_class>& terms, const std::string& id,
                                       long long max_offset) const {
    if (terms.empty()) throw DomainError("cannot match an empty term list");
    const BFile bfile = fetch(id);
    if (bfile.entries.empty()) throw UnavailableError("b-file for " + id + " has no entries");
    const long long base = bfile.entries.front().first;

    MatchReport report;
    report.id = id;
    report.offered = terms.size();

    const auto try_alignment = [&](bool absolute) {
        for (long long offset = 0; offset <= max_offset; ++offset) {
            std::size_t prefix = 0;
            for (std::size_t i = 0; i < terms.size(); ++i) {
                const mpz_class* value = bfile.value_at(base + offset + static_cast<long long>(i));
                if (!value) break;
                const mpz_class lhs = absolute ? mpz_class(abs(terms[i])) : terms[i];
                if (lhs != *value) break;
                ++prefix;
            }
            if (prefix > report.matched_prefix ||
                (prefix == report.matched_prefix && !report.matched)) {
                report.matched_prefix = prefix;
                report.offset_used = offset;
                report.abs_compared = absolute;
            }
            if (prefix == terms.size()) {
                report.matched = true;
                report.matched_prefix = prefix;
                report.offset_used = offset;
                report.abs_compared = absolute;
                return true;
            }
        }
        return false;
    };

    if (!try_alignment(false)) try_alignment(true);
    if (report.matched) {
        report.detail = "all " + std::to_string(report.offered) + " terms matched at offset " +
                        std::to_string(report.offset_used) +
                        (report.abs_compared ? " (absolute values)" : "");
    } else {
        report.detail = "mismatch at position " + std::to_string(report.matched_prefix) +
                        " (best offset " + std::to_string(report.offset_used) + ")";
    }
    return report;
}

}  // namespace riocirc
