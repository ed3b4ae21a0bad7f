#ifndef BICOHOM_IO_HPP
#define BICOHOM_IO_HPP

#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "bicohom/double_complex.hpp"
#include "bicohom/rational.hpp"

namespace bicohom {

/**
 * Canonical text form. Line-oriented, UTF-8, bit-exact round trip:
 *
 *   bicomplex <name>
 *   n <nat>                              (optional)
 *   space <p> <q> <dim>
 *   del <p> <q> <row> <col> <num>/<den>
 *   delbar <p> <q> <row> <col> <num>/<den>
 *   conj <p> <q> <row> <col> <num>/<den>
 *
 * (p,q) on a map line is the source bidegree; row/col are zero-based.
 * Lines starting with '#' are comments. The serializer sorts spaces by
 * (p,q) and entries by (p,q,row,col), so equal complexes serialize to
 * equal bytes.
 */
inline std::string serialize(const DoubleComplex& c) {
    std::ostringstream out;
    out << "bicomplex " << c.name() << "\n";
    if (c.complex_dimension()) out << "n " << *c.complex_dimension() << "\n";
    for (const auto& [b, d] : c.dims()) out << "space " << b.p << " " << b.q << " " << d << "\n";
    auto dump = [&](const char* keyword, const std::map<Bidegree, Matrix>& maps) {
        for (const auto& [b, m] : maps) {
            for (const auto& [rc, v] : m.entries()) {
                out << keyword << " " << b.p << " " << b.q << " " << rc.first << " "
                    << rc.second << " " << format_rational(v) << "\n";
            }
        }
    };
    dump("del", c.del_entries());
    dump("delbar", c.delbar_entries());
    dump("conj", c.conj_entries());
    return out.str();
}

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

inline int parse_int(const std::string& tok, int line) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, "expected integer, got '" + tok + "'");
    }
}

struct RawEntry {
    int line;
    Bidegree at;
    int row, col;
    Rational value;
};

}  // namespace detail

/// Parses the text format; throws ParseError (with line number) on bad
/// syntax, out-of-range indices, or duplicates. The result is canonical
/// but not yet validated.
inline DoubleComplex parse_complex(std::istream& in) {
    std::string line;
    int lineno = 0;
    bool have_header = false;
    DoubleComplex c;
    std::map<Bidegree, int> space_line;  // duplicate detection
    std::map<std::string, std::vector<detail::RawEntry>> raw;  // keyword -> entries

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto toks = detail::split_ws(line);
        if (toks.empty()) continue;
        const std::string& kw = toks[0];
        if (!have_header) {
            if (kw != "bicomplex") throw ParseError(lineno, "expected 'bicomplex <name>' header");
            const auto pos = line.find("bicomplex");
            std::string name = line.substr(pos + 9);
            const auto first = name.find_first_not_of(" \t");
            c.set_name(first == std::string::npos ? "" : name.substr(first));
            have_header = true;
            continue;
        }
        if (kw == "bicomplex") throw ParseError(lineno, "duplicate header");
        if (kw == "n") {
            if (toks.size() != 2) throw ParseError(lineno, "expected 'n <nat>'");
            const int n = detail::parse_int(toks[1], lineno);
            if (n < 0) throw ParseError(lineno, "n must be nonnegative");
            c.set_complex_dimension(n);
        } else if (kw == "space") {
            if (toks.size() != 4) throw ParseError(lineno, "expected 'space <p> <q> <dim>'");
            const Bidegree b{detail::parse_int(toks[1], lineno), detail::parse_int(toks[2], lineno)};
            const int d = detail::parse_int(toks[3], lineno);
            if (d < 0) throw ParseError(lineno, "space dimension must be nonnegative");
            if (space_line.count(b)) throw ParseError(lineno, "duplicate space " + to_string(b));
            space_line[b] = d;
            if (d > 0) c.set_dim(b, d);
        } else if (kw == "del" || kw == "delbar" || kw == "conj") {
            if (toks.size() != 6)
                throw ParseError(lineno, "expected '" + kw + " <p> <q> <row> <col> <num>/<den>'");
            detail::RawEntry e;
            e.line = lineno;
            e.at = {detail::parse_int(toks[1], lineno), detail::parse_int(toks[2], lineno)};
            e.row = detail::parse_int(toks[3], lineno);
            e.col = detail::parse_int(toks[4], lineno);
            try {
                e.value = parse_rational(toks[5]);
            } catch (const BadNumber& bad) {
                throw ParseError(lineno, bad.what());
            }
            raw[kw].push_back(e);
        } else {
            throw ParseError(lineno, "unknown keyword '" + kw + "'");
        }
    }
    if (!have_header) throw ParseError(lineno + 1, "missing 'bicomplex <name>' header");

    auto build = [&](const char* kw, auto target_of, auto setter) {
        auto it = raw.find(kw);
        if (it == raw.end()) return;
        std::map<Bidegree, Matrix> maps;
        for (const auto& e : it->second) {
            const Bidegree tgt = target_of(e.at);
            auto mit = maps.find(e.at);
            if (mit == maps.end())
                mit = maps.emplace(e.at, Matrix(c.dim(tgt), c.dim(e.at))).first;
            if (e.row < 0 || e.row >= c.dim(tgt) || e.col < 0 || e.col >= c.dim(e.at))
                throw ParseError(e.line, std::string(kw) + " entry (" + std::to_string(e.row) +
                                             "," + std::to_string(e.col) +
                                             ") out of range for spaces at " + to_string(e.at) +
                                             " -> " + to_string(tgt));
            if (mit->second.at(e.row, e.col) != 0)
                throw ParseError(e.line, std::string("duplicate ") + kw + " entry at " +
                                             to_string(e.at));
            mit->second.set(e.row, e.col, e.value);
        }
        for (const auto& [b, m] : maps) setter(b, m);
    };
    build("del", [](const Bidegree& b) { return Bidegree{b.p + 1, b.q}; },
          [&](const Bidegree& b, const Matrix& m) { c.set_del(b, m); });
    build("delbar", [](const Bidegree& b) { return Bidegree{b.p, b.q + 1}; },
          [&](const Bidegree& b, const Matrix& m) { c.set_delbar(b, m); });
    build("conj", [](const Bidegree& b) { return Bidegree{b.q, b.p}; },
          [&](const Bidegree& b, const Matrix& m) { c.set_conj(b, m); });
    return c;
}

inline DoubleComplex parse_complex(const std::string& text) {
    std::istringstream in(text);
    return parse_complex(in);
}

/// FNV-1a content hash of the canonical serialization, 16 hex digits.
/// Reports stamp inputs with it so identical inputs are detectable.
inline std::string digest(const DoubleComplex& c) {
    const std::string bytes = serialize(c);
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : bytes) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

}  // namespace bicohom

#endif  // BICOHOM_IO_HPP
