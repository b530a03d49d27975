#include "cy4/json_io.hpp"

#include <fstream>
#include <sstream>

namespace cy4 {

using nlohmann::json;

json to_json(const EisensteinInt& x) { return json::array({x.a, x.b}); }

json to_json(const Mat3& m) {
    json rows = json::array();
    for (int r = 0; r < 3; ++r) {
        json row = json::array();
        for (int c = 0; c < 3; ++c) row.push_back(to_json(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return json{{"rows", std::move(rows)}};
}

json to_json(const TorusPoint& q) {
    json v = json::array();
    for (const auto& z : q.v) v.push_back(to_json(z));
    return json{{"m", q.m}, {"v", std::move(v)}};
}

json to_json(const CharPoly& cp) {
    return json{{"tr", to_json(cp.tr)}, {"c2", to_json(cp.c2)}, {"det", to_json(cp.det)}};
}

json to_json(const FixedLocusSummary& s) {
    json factors = json::array();
    for (const auto& d : s.invariant_factors) factors.push_back(to_json(d));
    return json{{"complex_dimension", s.complex_dimension},
                {"component_count", s.component_count},
                {"invariant_factors", std::move(factors)}};
}

namespace {

const char* profile_name(TraceProfile p) {
    switch (p) {
    case TraceProfile::Surface: return "SURFACE";
    case TraceProfile::Pointwise: return "POINTWISE";
    default: return "OTHER";
    }
}

json quasi_to_json(const std::optional<std::int64_t>& q) {
    if (q.has_value()) return *q;
    return "POSITIVE_DIMENSIONAL";
}

} // namespace

json to_json(const MatrixReport& r) {
    return json{{"in_gl3", r.in_gl3},
                {"involutive", r.involutive},
                {"det_minus_one", r.det_minus_one},
                {"trace_profile", profile_name(r.trace_profile)},
                {"fixed_locus", to_json(r.fixed_locus)},
                {"theta_count", r.theta_count},
                {"quasi_fixed", json::array({quasi_to_json(r.quasi_fixed_1), quasi_to_json(r.quasi_fixed_2)})},
                {"admissible", r.admissible}};
}

json to_json(const PairReport& r) {
    json order;
    if (!r.product_invertible)
        order = nullptr;
    else if (r.product_order.has_value())
        order = *r.product_order;
    else
        order = "INFINITE";
    json out{{"report1", to_json(r.first)},
             {"report2", to_json(r.second)},
             {"product_order", std::move(order)},
             {"pair_admissible", r.pair_admissible}};
    if (r.euler.has_value()) out["euler"] = to_json(*r.euler);
    return out;
}

json to_json(const EulerBreakdown& b) {
    return json{{"chi_y", b.chi_Y},           {"chi_s1", b.chi_S1},
                {"chi_s2", b.chi_S2},         {"chi_xtilde1", b.chi_Xtilde1},
                {"chi_xtilde2", b.chi_Xtilde2}, {"chi_x1", b.chi_X1},
                {"chi_x2", b.chi_X2},         {"chi_m", b.chi_M}};
}

json to_json(const SearchRecord& r) {
    return json{{"idx", r.idx},
                {"a1", to_json(r.a1)},
                {"a2", to_json(r.a2)},
                {"chi_s1", r.chi_s1},
                {"chi_s2", r.chi_s2},
                {"chi_m", r.chi_m},
                {"product_charpoly", to_json(r.product_charpoly)},
                {"key", r.key}};
}

json to_json(const Checkpoint& c) {
    return json{{"cursor", c.cursor}, {"emitted", c.emitted}, {"config_hash", c.config_hash}};
}

json to_json(const SearchSummary& s) {
    json hist = json::object();
    for (const auto& [chi, count] : s.chi_histogram) hist[std::to_string(chi)] = count;
    return json{{"pairs_found", s.pairs_found}, {"distinct_keys", s.distinct_keys}, {"chi_histogram", std::move(hist)}};
}

json to_json(const ConjectureReport& r) {
    json hist = json::object();
    for (const auto& [chi, count] : r.chi_histogram) hist[std::to_string(chi)] = count;
    json ces = json::array();
    for (const auto& rec : r.counterexamples) {
        json ce = to_json(rec);
        ce["flag"] = "CONJECTURE_COUNTEREXAMPLE";
        ces.push_back(std::move(ce));
    }
    return json{{"pairs", r.pairs},
                {"chi_histogram", std::move(hist)},
                {"all_chi_m_108", r.all_chi_m_108},
                {"counterexamples", std::move(ces)},
                {"verdict", r.verdict}};
}

namespace {

std::int64_t int_field(const json& j, const char* where) {
    if (!j.is_number_integer()) throw ParseError(std::string(where) + ": expected an integer");
    return j.get<std::int64_t>();
}

const json& member(const json& j, const char* key, const char* where) {
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string(where) + ": missing field \"" + key + "\"");
    return j.at(key);
}

} // namespace

EisensteinInt eisenstein_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw ParseError("ring element must be a two-element integer array [a, b]");
    return EisensteinInt{int_field(j[0], "ring element"), int_field(j[1], "ring element")};
}

Mat3 mat3_from_json(const json& j) {
    const json& rows = member(j, "rows", "matrix json");
    if (!rows.is_array() || rows.size() != 3) throw ParseError("matrix json: \"rows\" must hold 3 rows");
    Mat3 m;
    for (int r = 0; r < 3; ++r) {
        const json& row = rows[static_cast<std::size_t>(r)];
        if (!row.is_array() || row.size() != 3)
            throw ParseError("matrix json: row " + std::to_string(r) + " must hold 3 entries");
        for (int c = 0; c < 3; ++c) {
            try {
                m.at(r, c) = eisenstein_from_json(row[static_cast<std::size_t>(c)]);
            } catch (const ParseError& e) {
                throw ParseError("matrix json: rows[" + std::to_string(r) + "][" + std::to_string(c) +
                                 "]: " + e.what());
            }
        }
    }
    return m;
}

CharPoly char_poly_from_json(const json& j) {
    return CharPoly{eisenstein_from_json(member(j, "tr", "charpoly")),
                    eisenstein_from_json(member(j, "c2", "charpoly")),
                    eisenstein_from_json(member(j, "det", "charpoly"))};
}

SearchRecord record_from_json(const json& j) {
    SearchRecord r;
    r.idx = int_field(member(j, "idx", "record"), "record idx");
    r.a1 = mat3_from_json(member(j, "a1", "record"));
    r.a2 = mat3_from_json(member(j, "a2", "record"));
    r.chi_s1 = static_cast<int>(int_field(member(j, "chi_s1", "record"), "record chi_s1"));
    r.chi_s2 = static_cast<int>(int_field(member(j, "chi_s2", "record"), "record chi_s2"));
    r.chi_m = static_cast<int>(int_field(member(j, "chi_m", "record"), "record chi_m"));
    r.product_charpoly = char_poly_from_json(member(j, "product_charpoly", "record"));
    const json& key = member(j, "key", "record");
    if (!key.is_string()) throw ParseError("record key: expected a string");
    r.key = key.get<std::string>();
    return r;
}

Checkpoint checkpoint_from_json(const json& j) {
    Checkpoint c;
    c.cursor = int_field(member(j, "cursor", "checkpoint"), "checkpoint cursor");
    c.emitted = int_field(member(j, "emitted", "checkpoint"), "checkpoint emitted");
    const json& h = member(j, "config_hash", "checkpoint");
    if (!h.is_string()) throw ParseError("checkpoint config_hash: expected a string");
    c.config_hash = h.get<std::string>();
    return c;
}

namespace {

// Text-form scanner. Positions are 1-based offsets into the scanned string
// (after unicode-minus normalization).
struct Scanner {
    const std::string& s;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("matrix text, position " + std::to_string(pos + 1) + ": " + what);
    }

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\n' || s[pos] == '\r')) ++pos;
    }

    bool at_end() const { return pos >= s.size(); }

    char peek() const { return pos < s.size() ? s[pos] : '\0'; }

    void expect(char c, const char* context) {
        skip_ws();
        if (peek() != c) fail(std::string("expected '") + c + "' " + context);
        ++pos;
    }

    std::int64_t digits() {
        if (pos >= s.size() || s[pos] < '0' || s[pos] > '9') fail("expected a digit");
        std::int64_t v = 0;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
            int d = s[pos] - '0';
            if (v > (INT64_MAX - d) / 10) fail("coefficient too large");
            v = v * 10 + d;
            ++pos;
        }
        return v;
    }

    std::int64_t sign() {
        if (peek() == '-') {
            ++pos;
            return -1;
        }
        if (peek() == '+') ++pos;
        return 1;
    }

    // "a", "w", "b*w", or "a+b*w" (with "a+w" for b = 1).
    EisensteinInt entry() {
        skip_ws();
        std::int64_t sg = sign();
        if (peek() == 'w') {
            ++pos;
            return EisensteinInt{0, sg};
        }
        std::int64_t n = digits();
        if (peek() == '*') {
            ++pos;
            if (peek() != 'w') fail("expected 'w' after '*'");
            ++pos;
            return EisensteinInt{0, sg * n};
        }
        EisensteinInt out{sg * n, 0};
        skip_ws();
        if (peek() == '+' || peek() == '-') {
            std::int64_t sg2 = sign();
            skip_ws();
            if (peek() == 'w') {
                ++pos;
                out.b = sg2;
            } else {
                std::int64_t b = digits();
                if (peek() != '*') fail("expected '*w' in the w-part");
                ++pos;
                if (peek() != 'w') fail("expected 'w' after '*'");
                ++pos;
                out.b = sg2 * b;
            }
        }
        return out;
    }
};

std::string normalize_minus(const std::string& s) {
    static const std::string minus = "\xE2\x88\x92";
    std::string out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size();) {
        if (s.compare(i, minus.size(), minus) == 0) {
            out += '-';
            i += minus.size();
        } else {
            out += s[i];
            ++i;
        }
    }
    return out;
}

Mat3 parse_text(const std::string& raw) {
    const std::string s = normalize_minus(raw);
    Scanner sc{s};
    Mat3 m;
    sc.expect('[', "to open the matrix");
    for (int r = 0; r < 3; ++r) {
        if (r > 0) sc.expect(',', "between rows (3 rows expected)");
        sc.expect('[', "to open a row");
        for (int c = 0; c < 3; ++c) {
            if (c > 0) sc.expect(',', "between entries (3 entries per row)");
            m.at(r, c) = sc.entry();
        }
        sc.expect(']', "to close the row (3 entries per row)");
    }
    sc.expect(']', "to close the matrix (3 rows expected)");
    sc.skip_ws();
    if (!sc.at_end()) sc.fail("unexpected trailing characters");
    return m;
}

Mat3 parse_any(const std::string& source, bool allow_path) {
    std::size_t first = source.find_first_not_of(" \t\n\r");
    if (first == std::string::npos) throw ParseError("empty matrix source");
    char c = source[first];
    if (c == '{') {
        json j;
        try {
            j = json::parse(source);
        } catch (const std::exception& e) {
            throw ParseError(std::string("matrix json: ") + e.what());
        }
        return mat3_from_json(j);
    }
    if (c == '[') return parse_text(source);
    if (!allow_path)
        throw ParseError("expected a matrix (text form starts with '[', json with '{')");
    std::ifstream in(source);
    if (!in) throw ParseError("cannot read matrix file: " + source);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_any(buf.str(), false);
}

} // namespace

Mat3 parse_matrix(const std::string& source) { return parse_any(source, true); }

std::string render_matrix_text(const Mat3& m) {
    std::string out = "[";
    for (int r = 0; r < 3; ++r) {
        if (r > 0) out += ',';
        out += '[';
        for (int c = 0; c < 3; ++c) {
            if (c > 0) out += ',';
            out += to_string(m.at(r, c));
        }
        out += ']';
    }
    out += ']';
    return out;
}

} // namespace cy4
