#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cy4/mat3.hpp"

namespace cy4 {

struct SearchConfig {
    int coeff_bound = 1;
    int workers = 0;
    std::string output_path;
    std::string checkpoint_path;
    bool dedup = true;
    /// Pairs per flush/checkpoint cycle. Tuning knob, not part of the
    /// resumability contract (excluded from config_hash).
    std::int64_t block_size = 65536;
};

struct SearchRecord {
    std::int64_t idx = 0;
    Mat3 a1;
    Mat3 a2;
    int chi_s1 = 0;
    int chi_s2 = 0;
    int chi_m = 0;
    CharPoly product_charpoly;
    std::string key;
};

struct Checkpoint {
    std::int64_t cursor = 0;
    std::int64_t emitted = 0;
    std::string config_hash;
};

struct SearchSummary {
    std::int64_t pairs_found = 0;
    std::int64_t distinct_keys = 0;
    std::map<int, std::int64_t> chi_histogram;
};

struct ConjectureReport {
    std::int64_t pairs = 0;
    std::map<int, std::int64_t> chi_histogram;
    std::vector<SearchRecord> counterexamples;
    bool all_chi_m_108 = false;
    std::string verdict;
};

/// Every admissible matrix with entry coefficients in [-bound, bound], in
/// lexicographic order of the 18-coefficient tuple (row-major entries, a
/// before b). Backtracks row by row: the third row is forced by exact
/// division from the first two via A^2 = I, and the trace-1 requirement pins
/// the last diagonal entry. bound must lie in [1, 3].
std::vector<Mat3> enumerate_involutions(int bound, int workers = 0);

/// Slow full-space scan at bound 1 with no pruning, for cross-checking the
/// enumerator. Returns every matrix with A^2 = I and det = -1 (any trace),
/// in the same lexicographic order.
std::vector<Mat3> brute_force_involution_scan(int bound, int workers = 0);

/// Conjugation- and swap-invariant fingerprint of a pair: characteristic
/// polynomials of A1 A2 and (A1 A2)^2, sorted traces of the alternating
/// words of length 1 and 3, sorted theta counts.
std::string dedup_key(const Mat3& a1, const Mat3& a2);

/// Hash tying a checkpoint to the search it belongs to: bound, dedup flag,
/// and the enumerated matrix list. Worker count and paths excluded so a
/// resume may change them.
std::string config_hash(const SearchConfig& config, const std::vector<Mat3>& matrices);

/// Scan all unordered pairs (i <= j) of the given admissible matrices in
/// deterministic index order, keep those whose product has infinite order,
/// and append one JSONL record per kept pair (first occurrence per key when
/// dedup is on) to config.output_path. Checkpoints to config.checkpoint_path
/// when set, and resumes from it when it already exists; the bytes appended
/// after a resume match an uninterrupted run.
SearchSummary run_pair_scan(const std::vector<Mat3>& matrices, const SearchConfig& config);

/// enumerate_involutions + run_pair_scan.
SearchSummary run_search(const SearchConfig& config);

std::vector<SearchRecord> load_records(const std::string& path);

/// Aggregate chi_m over records; any record with chi_m != 108 is flagged as
/// a counterexample. Informational: counterexamples are findings, not
/// failures.
ConjectureReport conjecture_report(const std::vector<SearchRecord>& records);

} // namespace cy4
