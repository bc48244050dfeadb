#pragma once

// Corpus manifest: a tab-separated text file, one record per corpus entry.
//
//   # comment lines (kept verbatim, in order, ahead of the records)
//   id <TAB> lo <TAB> hi <TAB> claim <TAB> equality_points <TAB> statement
//
// equality_points is a comma-separated list, "-" for none, or "all" when the
// claim is tight on the whole domain. Numbers are written in the shortest
// form that reads back to the same double, so parse + serialize reproduces
// the file byte for byte.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

#include "sincsum/corpus.hpp"
#include "sincsum/error.hpp"

namespace sincsum {

struct ManifestEntry {
    std::string id;
    double lo = 0.0;
    double hi = 0.0;
    Claim claim = Claim::nonnegative;
    std::vector<double> equality_points;
    bool all_points = false;
    std::string statement;

    bool operator==(const ManifestEntry&) const = default;
};

struct CorpusManifest {
    std::vector<std::string> preamble; // comment lines, without the newline
    std::vector<ManifestEntry> entries;
};

class manifest_parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::string format_double(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

inline double parse_double(const std::string& s)
{
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw manifest_parse_error("manifest: bad number '" + s + "'");
    return v;
}

namespace manifest_detail {

    inline std::vector<std::string> split(const std::string& s, char sep)
    {
        std::vector<std::string> out;
        std::string cur;
        for (char c : s) {
            if (c == sep) {
                out.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        out.push_back(cur);
        return out;
    }

    inline std::string points_field(const ManifestEntry& e)
    {
        if (e.all_points)
            return "all";
        if (e.equality_points.empty())
            return "-";
        std::string s;
        for (std::size_t i = 0; i < e.equality_points.size(); ++i) {
            if (i)
                s += ',';
            s += format_double(e.equality_points[i]);
        }
        return s;
    }

} // namespace manifest_detail

inline CorpusManifest parse_manifest(const std::string& text)
{
    CorpusManifest m;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty())
            throw manifest_parse_error("manifest: empty line " + std::to_string(lineno));
        if (line[0] == '#') {
            if (!m.entries.empty())
                throw manifest_parse_error("manifest: comment after records at line " + std::to_string(lineno));
            m.preamble.push_back(line);
            continue;
        }
        const auto f = manifest_detail::split(line, '\t');
        if (f.size() != 6)
            throw manifest_parse_error("manifest: line " + std::to_string(lineno) + " needs 6 tab-separated fields");
        ManifestEntry e;
        e.id = f[0];
        e.lo = parse_double(f[1]);
        e.hi = parse_double(f[2]);
        if (f[3] == "nonnegative")
            e.claim = Claim::nonnegative;
        else if (f[3] == "nonpositive")
            e.claim = Claim::nonpositive;
        else
            throw manifest_parse_error("manifest: unknown claim '" + f[3] + "'");
        if (f[4] == "all")
            e.all_points = true;
        else if (f[4] != "-")
            for (const auto& p : manifest_detail::split(f[4], ','))
                e.equality_points.push_back(parse_double(p));
        e.statement = f[5];
        m.entries.push_back(std::move(e));
    }
    if (!text.empty() && text.back() != '\n')
        throw manifest_parse_error("manifest: missing final newline");
    return m;
}

inline std::string serialize_manifest(const CorpusManifest& m)
{
    std::string out;
    for (const auto& p : m.preamble)
        out += p + '\n';
    for (const auto& e : m.entries) {
        out += e.id + '\t' + format_double(e.lo) + '\t' + format_double(e.hi) + '\t' + to_string(e.claim) + '\t' +
               manifest_detail::points_field(e) + '\t' + e.statement + '\n';
    }
    return out;
}

inline ManifestEntry manifest_entry_for(const CertifiedInequality& q)
{
    return {q.id, q.domain.lo, q.domain.hi, q.claim, q.tight_everywhere ? std::vector<double>{} : q.equality_points,
            q.tight_everywhere, q.statement};
}

inline CorpusManifest manifest_from_corpus(const std::vector<CertifiedInequality>& entries = corpus())
{
    CorpusManifest m;
    m.preamble = {"# sincsum inequality corpus",
                  "# id\tlo\thi\tclaim\tequality_points\tstatement"};
    for (const auto& q : entries)
        m.entries.push_back(manifest_entry_for(q));
    return m;
}

inline CorpusManifest load_manifest(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw manifest_parse_error("manifest: cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_manifest(ss.str());
}

struct ManifestReport {
    bool passed = true;
    std::vector<std::string> orphans;     // in the manifest, not registered
    std::vector<std::string> missing;     // registered, not in the manifest
    std::vector<std::string> duplicates;  // repeated ids
    std::vector<std::string> mismatches;  // id: field that differs
    std::vector<std::string> not_tight;   // id@x where |expr| > 1e-12
    double worst_equality_residual = 0.0; // max |expr| over the listed points
};

inline constexpr double equality_tolerance = 1e-12;

inline ManifestReport manifest_check(const CorpusManifest& m,
                                     const std::vector<CertifiedInequality>& registry = corpus())
{
    ManifestReport rep;
    std::map<std::string, const CertifiedInequality*> reg;
    for (const auto& q : registry)
        reg[q.id] = &q;

    std::set<std::string> seen;
    for (const auto& e : m.entries) {
        if (!seen.insert(e.id).second) {
            rep.duplicates.push_back(e.id);
            continue;
        }
        const auto it = reg.find(e.id);
        if (it == reg.end()) {
            rep.orphans.push_back(e.id);
            continue;
        }
        const CertifiedInequality& q = *it->second;
        const ManifestEntry want = manifest_entry_for(q);
        if (e.lo != want.lo || e.hi != want.hi)
            rep.mismatches.push_back(e.id + ": domain");
        if (e.claim != want.claim)
            rep.mismatches.push_back(e.id + ": claim");
        if (e.all_points != want.all_points || e.equality_points != want.equality_points)
            rep.mismatches.push_back(e.id + ": equality_points");
        if (e.statement != want.statement)
            rep.mismatches.push_back(e.id + ": statement");

        std::vector<double> pts = e.equality_points;
        if (e.all_points)
            for (int i = 0; i <= 8; ++i)
                pts.push_back(e.lo + (e.hi - e.lo) * i / 8.0);
        for (double x : pts) {
            const double v = std::fabs(q.expression.point(x));
            rep.worst_equality_residual = std::max(rep.worst_equality_residual, v);
            if (!(v <= equality_tolerance))
                rep.not_tight.push_back(e.id + "@" + format_double(x));
        }
    }
    for (const auto& q : registry)
        if (!seen.count(q.id))
            rep.missing.push_back(q.id);

    rep.passed = rep.orphans.empty() && rep.missing.empty() && rep.duplicates.empty() && rep.mismatches.empty() &&
                 rep.not_tight.empty();
    return rep;
}

} // namespace sincsum
