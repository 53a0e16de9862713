#include "qfano/design_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace qfano {

namespace {

[[noreturn]] void fail(int line, const std::string& why) {
    throw ParseError("line " + std::to_string(line) + ": " + why);
}

Vec parse_vec(const std::string& s, int q, int line) {
    if (s.empty() || s.size() > kMaxAmbient) fail(line, "bad vector '" + s + "'");
    Vec v;
    v.n = (int)s.size();
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] >= '0' + q) fail(line, "digit out of range in '" + s + "'");
        v.c[i] = (uint8_t)(s[i] - '0');
    }
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
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

} // namespace

std::string emit_design(const Field& f, const Design& d) {
    std::ostringstream out;
    out << "#qfd 1\n";
    out << "#field q=" << f.p() << "^" << f.m() << " poly=";
    for (size_t i = 0; i < f.poly().size(); ++i) out << (i ? "," : "") << f.poly()[i];
    out << " alpha=" << f.alpha() << "\n";
    out << "#ambient n=" << d.n << "\n";
    for (const Block& b : d.blocks)
        out << (char)b.tag << " k=" << b.s.k << " " << to_string(b.s) << "\n";
    return out.str();
}

ParsedDesign parse_design(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    auto next_line = [&]() {
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty()) return true;
        }
        return false;
    };

    if (!next_line() || line != "#qfd 1") fail(lineno ? lineno : 1, "missing '#qfd 1' header");

    int p = 0, m = 0, alpha = -1;
    std::string polystr;
    if (!next_line() || sscanf(line.c_str(), "#field q=%d^%d", &p, &m) != 2)
        fail(lineno, "missing or malformed '#field' header");
    {
        auto pos = line.find("poly=");
        auto apos = line.find("alpha=");
        if (pos == std::string::npos || apos == std::string::npos)
            fail(lineno, "field header needs poly= and alpha=");
        polystr = line.substr(pos + 5, line.find(' ', pos) - pos - 5);
        alpha = std::atoi(line.c_str() + apos + 6);
    }
    if (p < 2 || m < 1) fail(lineno, "unsupported field parameters");
    Field field = [&]() -> Field {
        try {
            return Field(p, m);
        } catch (const std::invalid_argument& e) {
            fail(lineno, e.what());
        }
    }();
    {
        std::string want;
        for (size_t i = 0; i < field.poly().size(); ++i)
            want += (i ? "," : "") + std::to_string(field.poly()[i]);
        if (polystr != want) fail(lineno, "unsupported field polynomial '" + polystr + "'");
        if (alpha != field.alpha()) fail(lineno, "unexpected alpha " + std::to_string(alpha));
    }

    int n = 0;
    if (!next_line() || sscanf(line.c_str(), "#ambient n=%d", &n) != 1 || n < 1 ||
        n > kMaxAmbient)
        fail(lineno, "missing or malformed '#ambient' header");

    ParsedDesign out{field, {}};
    out.design.q = field.q();
    out.design.n = n;
    out.design.k = -1;
    while (next_line()) {
        if (line[0] == '#') continue;
        char tag;
        int k;
        char rest[128];
        if (sscanf(line.c_str(), "%c k=%d %127s", &tag, &k, rest) != 3)
            fail(lineno, "malformed block line");
        if (std::string("0ABCD").find(tag) == std::string::npos)
            fail(lineno, std::string("unknown tag '") + tag + "'");
        std::vector<Vec> gens;
        for (const std::string& vs : split(rest, ';')) {
            Vec v = parse_vec(vs, field.q(), lineno);
            if (v.n != n) fail(lineno, "vector length does not match ambient");
            gens.push_back(v);
        }
        Subspace s = canonicalize(field, gens);
        if (s.k != k) fail(lineno, "basis rank does not match k=" + std::to_string(k));
        if (out.design.k < 0) out.design.k = k;
        if (out.design.k != k) fail(lineno, "mixed block dimensions");
        out.design.blocks.push_back({(BlockTag)tag, s});
    }
    if (out.design.k < 0) fail(lineno, "design has no blocks");
    out.design.sort_blocks();
    return out;
}

std::string emit_parallelism(const Parallelism& p) {
    std::ostringstream out;
    for (const Spread& s : p) {
        for (size_t i = 0; i < s.size(); ++i) {
            if (i) out << ";";
            out << to_string(s[i].rows[0]) << "," << to_string(s[i].rows[1]);
        }
        out << "\n";
    }
    return out.str();
}

Parallelism parse_parallelism(const Field& f, const std::string& text) {
    Parallelism out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        Spread spread;
        for (const std::string& member : split(line, ';')) {
            std::vector<std::string> basis = split(member, ',');
            if (basis.size() != 2) fail(lineno, "spread member needs two basis vectors");
            Subspace s = canonicalize(
                f, {parse_vec(basis[0], f.q(), lineno), parse_vec(basis[1], f.q(), lineno)});
            if (s.n != 4 || s.k != 2) fail(lineno, "member is not a 2-subspace of F_q^4");
            spread.push_back(s);
        }
        out.push_back(spread);
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

} // namespace qfano
