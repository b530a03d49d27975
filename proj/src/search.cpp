#include "cy4/search.hpp"

#include <algorithm>
#include <exception>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include <omp.h>

#include "cy4/conditions.hpp"
#include "cy4/json_io.hpp"
#include "cy4/torus.hpp"

namespace cy4 {

namespace {

int resolve_threads(int workers) { return workers > 0 ? workers : omp_get_max_threads(); }

void check_bound(int bound) {
    if (bound < 1 || bound > 3) throw std::invalid_argument("coefficient bound must lie in [1, 3]");
}

bool in_box(const EisensteinInt& x, int bound) {
    return x.a >= -bound && x.a <= bound && x.b >= -bound && x.b <= bound;
}

// Entry values [-B,B]^2 ordered lexicographically by (a, b), matching the
// flat-index decode used by the unpruned scan.
std::vector<EisensteinInt> box_values(int bound) {
    std::vector<EisensteinInt> out;
    for (std::int64_t a = -bound; a <= bound; ++a)
        for (std::int64_t b = -bound; b <= bound; ++b) out.push_back(EisensteinInt{a, b});
    return out;
}

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
}

void append_eis(std::string& s, const EisensteinInt& x) {
    s += std::to_string(x.a);
    s += ',';
    s += std::to_string(x.b);
}

void append_charpoly(std::string& s, const CharPoly& cp) {
    append_eis(s, cp.tr);
    s += ';';
    append_eis(s, cp.c2);
    s += ';';
    append_eis(s, cp.det);
}

bool eis_less(const EisensteinInt& x, const EisensteinInt& y) {
    return x.a != y.a ? x.a < y.a : x.b < y.b;
}

} // namespace

std::vector<Mat3> enumerate_involutions(int bound, int workers) {
    check_bound(bound);
    const std::vector<EisensteinInt> box = box_values(bound);
    const std::int64_t side = static_cast<std::int64_t>(box.size());
    const std::int64_t rows = side * side * side;
    const int threads = resolve_threads(workers);
    const EisensteinInt one = eis_one;

    std::vector<std::vector<Mat3>> chunks(static_cast<std::size_t>(rows));
    std::exception_ptr eptr = nullptr;

#pragma omp parallel for num_threads(threads) schedule(dynamic)
    for (std::int64_t r0 = 0; r0 < rows; ++r0) {
        try {
            std::array<EisensteinInt, 3> top;
            top[0] = box[static_cast<std::size_t>(r0 / (side * side))];
            top[1] = box[static_cast<std::size_t>((r0 / side) % side)];
            top[2] = box[static_cast<std::size_t>(r0 % side)];
            auto& sink = chunks[static_cast<std::size_t>(r0)];

            for (std::int64_t r1 = 0; r1 < rows; ++r1) {
                std::array<EisensteinInt, 3> mid;
                mid[0] = box[static_cast<std::size_t>(r1 / (side * side))];
                mid[1] = box[static_cast<std::size_t>((r1 / side) % side)];
                mid[2] = box[static_cast<std::size_t>(r1 % side)];

                // Admissibility needs trace 1, which pins the last diagonal
                // entry as soon as the first two rows are chosen.
                EisensteinInt a22 = one - top[0] - mid[1];
                if (!in_box(a22, bound)) continue;

                // s[i][j] = delta_ij - A_i0 A_0j - A_i1 A_1j; the rows 0 and 1
                // of A^2 = I read A_i2 * A_2j = s[i][j].
                EisensteinInt s[2][3];
                for (int j = 0; j < 3; ++j) {
                    s[0][j] = eis_zero - top[0] * top[j] - top[1] * mid[j];
                    s[1][j] = eis_zero - mid[0] * top[j] - mid[1] * mid[j];
                }
                s[0][0] = s[0][0] + one;
                s[1][1] = s[1][1] + one;

                auto leaf = [&](const std::array<EisensteinInt, 3>& bot) {
                    Mat3 a = Mat3::from_rows({top, mid, bot});
                    if (is_admissible_matrix(a)) sink.push_back(a);
                };

                if (!is_zero(top[2]) || !is_zero(mid[2])) {
                    // Some row i <= 1 has A_i2 != 0: the third row is the
                    // exact quotient s[i][j] / A_i2 or nothing at all.
                    const int d = is_zero(top[2]) ? 1 : 0;
                    const EisensteinInt& c = d == 0 ? top[2] : mid[2];
                    std::array<EisensteinInt, 3> bot;
                    bool ok = true;
                    for (int j = 0; j < 3 && ok; ++j) {
                        auto [q, rem] = divmod(s[d][j], c);
                        ok = is_zero(rem) && in_box(q, bound);
                        bot[static_cast<std::size_t>(j)] = q;
                    }
                    if (!ok || !(bot[2] == a22)) continue;
                    // Cross-check the other constrained row.
                    const int o = 1 - d;
                    const EisensteinInt& co = o == 0 ? top[2] : mid[2];
                    for (int j = 0; j < 3 && ok; ++j)
                        ok = co * bot[static_cast<std::size_t>(j)] == s[o][j];
                    if (ok) leaf(bot);
                } else {
                    // Row 2 is unconstrained by rows 0 and 1, which must
                    // already square correctly on their own.
                    bool ok = true;
                    for (int i = 0; i < 2 && ok; ++i)
                        for (int j = 0; j < 3 && ok; ++j) ok = is_zero(s[i][j]);
                    if (!ok) continue;
                    for (const EisensteinInt& e20 : box)
                        for (const EisensteinInt& e21 : box) leaf({e20, e21, a22});
                }
            }
        } catch (...) {
#pragma omp critical
            if (!eptr) eptr = std::current_exception();
        }
    }
    if (eptr) std::rethrow_exception(eptr);

    std::vector<Mat3> out;
    for (auto& chunk : chunks) out.insert(out.end(), chunk.begin(), chunk.end());
    return out;
}

std::vector<Mat3> brute_force_involution_scan(int bound, int workers) {
    check_bound(bound);
    if (bound != 1)
        throw std::invalid_argument("the unpruned scan walks (2B+1)^18 matrices and supports only bound 1");
    const std::vector<EisensteinInt> box = box_values(1);
    const std::int64_t side = 9;
    const std::int64_t rows = side * side * side;
    const std::int64_t rest = rows * rows;
    const int threads = resolve_threads(workers);
    const EisensteinInt minus_one{-1, 0};

    std::vector<std::vector<Mat3>> chunks(static_cast<std::size_t>(rows));
    std::exception_ptr eptr = nullptr;

#pragma omp parallel for num_threads(threads) schedule(dynamic)
    for (std::int64_t c = 0; c < rows; ++c) {
        try {
            Mat3 a;
            a.e[0] = box[static_cast<std::size_t>(c / (side * side))];
            a.e[1] = box[static_cast<std::size_t>((c / side) % side)];
            a.e[2] = box[static_cast<std::size_t>(c % side)];
            auto& sink = chunks[static_cast<std::size_t>(c)];

            for (std::int64_t t = 0; t < rest; ++t) {
                std::int64_t v = t;
                for (int k = 8; k >= 3; --k) {
                    a.e[static_cast<std::size_t>(k)] = box[static_cast<std::size_t>(v % side)];
                    v /= side;
                }
                bool ok = true;
                for (int i = 0; i < 3 && ok; ++i)
                    for (int j = 0; j < 3 && ok; ++j) {
                        EisensteinInt s;
                        for (int k = 0; k < 3; ++k) s = s + a.at(i, k) * a.at(k, j);
                        ok = s == (i == j ? eis_one : eis_zero);
                    }
                if (ok && det(a) == minus_one) sink.push_back(a);
            }
        } catch (...) {
#pragma omp critical
            if (!eptr) eptr = std::current_exception();
        }
    }
    if (eptr) std::rethrow_exception(eptr);

    std::vector<Mat3> out;
    for (auto& chunk : chunks) out.insert(out.end(), chunk.begin(), chunk.end());
    return out;
}

std::string dedup_key(const Mat3& a1, const Mat3& a2) {
    Mat3 p = a1 * a2;
    CharPoly cp1 = char_poly(p);
    CharPoly cp2 = char_poly(p * p);

    EisensteinInt t1a = trace(a1), t1b = trace(a2);
    if (eis_less(t1b, t1a)) std::swap(t1a, t1b);
    EisensteinInt t3a = trace(a1 * a2 * a1), t3b = trace(a2 * a1 * a2);
    if (eis_less(t3b, t3a)) std::swap(t3a, t3b);
    int tha = theta_intersection_count(a1), thb = theta_intersection_count(a2);
    if (thb < tha) std::swap(tha, thb);

    std::string s = "cp[";
    append_charpoly(s, cp1);
    s += "]|cp2[";
    append_charpoly(s, cp2);
    s += "]|t1[";
    append_eis(s, t1a);
    s += ';';
    append_eis(s, t1b);
    s += "]|t3[";
    append_eis(s, t3a);
    s += ';';
    append_eis(s, t3b);
    s += "]|th[";
    s += std::to_string(tha);
    s += ';';
    s += std::to_string(thb);
    s += ']';
    return s;
}

std::string config_hash(const SearchConfig& config, const std::vector<Mat3>& matrices) {
    std::string data = "bound=" + std::to_string(config.coeff_bound) +
                       ";dedup=" + std::to_string(config.dedup ? 1 : 0) +
                       ";n=" + std::to_string(matrices.size()) + ";";
    for (const Mat3& m : matrices) {
        for (const EisensteinInt& x : m.e) {
            append_eis(data, x);
            data += ';';
        }
        data += '|';
    }
    return fnv1a_hex(data);
}

namespace {

struct PairSlot {
    bool keep = false;
    int chi_s1 = 0;
    int chi_s2 = 0;
    CharPoly cp;
    std::string key;
};

// Tolerates one torn final line (a crash between flush and checkpoint);
// anything else malformed is an error.
std::vector<SearchRecord> read_output_lenient(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read search output file: " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) lines.push_back(line);
    std::vector<SearchRecord> out;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        try {
            out.push_back(record_from_json(nlohmann::json::parse(lines[i])));
        } catch (const std::exception&) {
            if (i + 1 == lines.size()) break;
            throw std::runtime_error("corrupt search output file: " + path + " line " + std::to_string(i + 1));
        }
    }
    return out;
}

void write_checkpoint_atomic(const std::string& path, const Checkpoint& ck) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write checkpoint file: " + tmp);
        out << to_json(ck).dump() << '\n';
        if (!out.flush()) throw std::runtime_error("cannot write checkpoint file: " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

} // namespace

SearchSummary run_pair_scan(const std::vector<Mat3>& matrices, const SearchConfig& config) {
    if (config.output_path.empty()) throw std::invalid_argument("search output path must be set");
    if (config.block_size < 1) throw std::invalid_argument("search block size must be positive");

    const std::int64_t n = static_cast<std::int64_t>(matrices.size());
    std::vector<std::int64_t> offsets(static_cast<std::size_t>(n) + 1);
    for (std::int64_t i = 0; i <= n; ++i)
        offsets[static_cast<std::size_t>(i)] = i * n - i * (i - 1) / 2;
    const std::int64_t total_pairs = offsets[static_cast<std::size_t>(n)];

    std::vector<int> thetas(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i)
        thetas[static_cast<std::size_t>(i)] = theta_intersection_count(matrices[static_cast<std::size_t>(i)]);

    const std::string hash = config_hash(config, matrices);

    // Resume state: records already on disk that the checkpoint vouches for.
    std::int64_t cursor = 0;
    std::vector<SearchRecord> kept;
    if (!config.checkpoint_path.empty() && std::filesystem::exists(config.checkpoint_path)) {
        std::ifstream in(config.checkpoint_path);
        if (!in) throw std::runtime_error("cannot read checkpoint file: " + config.checkpoint_path);
        Checkpoint ck;
        try {
            ck = checkpoint_from_json(nlohmann::json::parse(in));
        } catch (const std::exception& e) {
            throw std::runtime_error("corrupt checkpoint file: " + config.checkpoint_path + ": " + e.what());
        }
        if (ck.config_hash != hash)
            throw std::runtime_error("checkpoint was written by a different search configuration");
        if (ck.cursor < 0 || ck.cursor > total_pairs || ck.emitted < 0)
            throw std::runtime_error("checkpoint cursor out of range");
        cursor = ck.cursor;
        if (std::filesystem::exists(config.output_path)) {
            for (SearchRecord& rec : read_output_lenient(config.output_path))
                if (rec.idx < cursor) kept.push_back(std::move(rec));
        }
        if (static_cast<std::int64_t>(kept.size()) != ck.emitted)
            throw std::runtime_error("search output file does not match checkpoint");
    }

    // Rewrite the vouched-for prefix (drops records past the cursor and any
    // torn line), then append from the cursor onward.
    {
        std::ofstream out(config.output_path, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open output file: " + config.output_path);
        for (const SearchRecord& rec : kept) out << to_json(rec).dump() << '\n';
        if (!out.flush()) throw std::runtime_error("cannot write output file: " + config.output_path);
    }

    std::unordered_set<std::string> seen;
    SearchSummary summary;
    for (const SearchRecord& rec : kept) {
        seen.insert(rec.key);
        ++summary.pairs_found;
        ++summary.chi_histogram[rec.chi_m];
    }
    std::int64_t emitted = static_cast<std::int64_t>(kept.size());
    kept.clear();
    kept.shrink_to_fit();

    std::ofstream out(config.output_path, std::ios::app);
    if (!out) throw std::runtime_error("cannot open output file: " + config.output_path);

    const int threads = resolve_threads(config.workers);

    while (cursor < total_pairs) {
        const std::int64_t block_end = std::min(cursor + config.block_size, total_pairs);
        const std::int64_t len = block_end - cursor;
        std::vector<PairSlot> slots(static_cast<std::size_t>(len));
        std::exception_ptr eptr = nullptr;

#pragma omp parallel for num_threads(threads) schedule(dynamic, 64)
        for (std::int64_t t = 0; t < len; ++t) {
            try {
                const std::int64_t idx = cursor + t;
                const auto it = std::upper_bound(offsets.begin(), offsets.end(), idx);
                const std::int64_t i = (it - offsets.begin()) - 1;
                const std::int64_t j = i + (idx - offsets[static_cast<std::size_t>(i)]);
                const Mat3& a1 = matrices[static_cast<std::size_t>(i)];
                const Mat3& a2 = matrices[static_cast<std::size_t>(j)];
                if (element_order(a1 * a2).has_value()) continue;
                PairSlot& slot = slots[static_cast<std::size_t>(t)];
                slot.keep = true;
                slot.chi_s1 = 2 * thetas[static_cast<std::size_t>(i)];
                slot.chi_s2 = 2 * thetas[static_cast<std::size_t>(j)];
                slot.cp = char_poly(a1 * a2);
                slot.key = dedup_key(a1, a2);
            } catch (...) {
#pragma omp critical
                if (!eptr) eptr = std::current_exception();
            }
        }
        if (eptr) std::rethrow_exception(eptr);

        for (std::int64_t t = 0; t < len; ++t) {
            PairSlot& slot = slots[static_cast<std::size_t>(t)];
            if (!slot.keep) continue;
            const bool fresh = seen.insert(slot.key).second;
            if (config.dedup && !fresh) continue;
            const std::int64_t idx = cursor + t;
            const auto it = std::upper_bound(offsets.begin(), offsets.end(), idx);
            const std::int64_t i = (it - offsets.begin()) - 1;
            const std::int64_t j = i + (idx - offsets[static_cast<std::size_t>(i)]);
            SearchRecord rec;
            rec.idx = idx;
            rec.a1 = matrices[static_cast<std::size_t>(i)];
            rec.a2 = matrices[static_cast<std::size_t>(j)];
            rec.chi_s1 = slot.chi_s1;
            rec.chi_s2 = slot.chi_s2;
            rec.chi_m = 3 * (slot.chi_s1 + slot.chi_s2);
            rec.product_charpoly = slot.cp;
            rec.key = std::move(slot.key);
            out << to_json(rec).dump() << '\n';
            ++emitted;
            ++summary.pairs_found;
            ++summary.chi_histogram[rec.chi_m];
        }
        if (!out.flush()) throw std::runtime_error("cannot write output file: " + config.output_path);

        cursor = block_end;
        if (!config.checkpoint_path.empty())
            write_checkpoint_atomic(config.checkpoint_path, Checkpoint{cursor, emitted, hash});
    }

    if (!config.checkpoint_path.empty() && total_pairs == 0)
        write_checkpoint_atomic(config.checkpoint_path, Checkpoint{0, 0, hash});

    summary.distinct_keys = static_cast<std::int64_t>(seen.size());
    return summary;
}

SearchSummary run_search(const SearchConfig& config) {
    check_bound(config.coeff_bound);
    std::vector<Mat3> matrices = enumerate_involutions(config.coeff_bound, config.workers);
    return run_pair_scan(matrices, config);
}

std::vector<SearchRecord> load_records(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open records file: " + path);
    std::vector<SearchRecord> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            out.push_back(record_from_json(nlohmann::json::parse(line)));
        } catch (const std::exception& e) {
            throw ParseError("records file " + path + " line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

ConjectureReport conjecture_report(const std::vector<SearchRecord>& records) {
    ConjectureReport rep;
    rep.pairs = static_cast<std::int64_t>(records.size());
    for (const SearchRecord& rec : records) {
        ++rep.chi_histogram[rec.chi_m];
        if (rec.chi_m != 108) rep.counterexamples.push_back(rec);
    }
    rep.all_chi_m_108 = rep.counterexamples.empty();
    if (records.empty())
        rep.verdict = "no records";
    else if (rep.all_chi_m_108)
        rep.verdict = "all chi_m = 108";
    else
        rep.verdict = "CONJECTURE_COUNTEREXAMPLE: " + std::to_string(rep.counterexamples.size()) +
                      " record(s) with chi_m != 108";
    return rep;
}

} // namespace cy4
