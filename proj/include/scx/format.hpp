#pragma once

#include <charconv>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "scx/complex.hpp"
#include "scx/error.hpp"

namespace scx {

// scx v1: line-based text, LF newlines.
//   # scx v1 d=<d> n=<n>
//   # optional comment lines
//   one facet per line: d vertex ids, strictly increasing, space-separated

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

inline bool parse_int(std::string_view tok, long long& value) {
    const char* begin = tok.data();
    const char* end = begin + tok.size();
    auto res = std::from_chars(begin, end, value);
    return res.ec == std::errc{} && res.ptr == end;
}

inline long long parse_header_field(std::string_view tok, std::string_view key) {
    if (tok.size() <= key.size() || tok.substr(0, key.size()) != key)
        fail(errc::bad_header, "expected header token " + std::string(key) + "<int>");
    long long v;
    if (!parse_int(tok.substr(key.size()), v) || v < 0)
        fail(errc::bad_header, "bad value in header token " + std::string(tok));
    return v;
}

}  // namespace detail

inline std::string serialize_complex(const PureComplex& c,
                                     const std::vector<std::string>& comments = {}) {
    std::ostringstream os;
    os << "# scx v1 d=" << c.facet_size() << " n=" << c.ambient_vertices() << "\n";
    for (const auto& line : comments) os << "# " << line << "\n";
    for (const auto& f : c.facets()) {
        for (std::size_t i = 0; i < f.size(); ++i) os << (i ? " " : "") << f[i];
        os << "\n";
    }
    return os.str();
}

inline PureComplex parse_complex(std::string_view text) {
    std::size_t pos = 0;
    bool have_header = false;
    int d = 0, n = 0;
    std::vector<std::vector<int>> facets;

    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;

        auto toks = detail::split_ws(line);
        if (!have_header) {
            if (toks.empty()) {
                if (pos > text.size()) break;
                fail(errc::bad_header, "missing `# scx v1 d=<d> n=<n>` header");
            }
            if (toks.size() != 5 || toks[0] != "#" || toks[1] != "scx" || toks[2] != "v1")
                fail(errc::bad_header, "first line must be `# scx v1 d=<d> n=<n>`");
            d = static_cast<int>(detail::parse_header_field(toks[3], "d="));
            n = static_cast<int>(detail::parse_header_field(toks[4], "n="));
            if (d < 1) fail(errc::bad_header, "header requires d >= 1");
            have_header = true;
            continue;
        }
        if (toks.empty()) continue;            // blank line
        if (toks[0].front() == '#') continue;  // comment

        std::vector<int> facet;
        facet.reserve(toks.size());
        for (auto tok : toks) {
            long long v;
            if (!detail::parse_int(tok, v))
                fail(errc::facet_size_mismatch, "facet line contains a non-integer token");
            if (v < 0 || v >= n)
                fail(errc::vertex_out_of_range,
                     "vertex " + std::to_string(v) + " outside [0, " + std::to_string(n) + ")");
            facet.push_back(static_cast<int>(v));
        }
        if (static_cast<int>(facet.size()) != d)
            fail(errc::facet_size_mismatch, "facet line has " + std::to_string(facet.size()) +
                                                " vertices, expected " + std::to_string(d));
        facets.push_back(std::move(facet));
    }
    if (!have_header) fail(errc::bad_header, "missing `# scx v1 d=<d> n=<n>` header");
    // PureComplex validates ordering, ranges, and duplicate facets
    return PureComplex(d, n, std::move(facets));
}

}  // namespace scx
