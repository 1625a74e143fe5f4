#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "lexirank/dyadic.hpp"
#include "lexirank/medal_word.hpp"

namespace lexirank {

// Order-preserving injection of medal words into the dyadic rationals of
// [0, 1): the word (w1, ..., wL) maps to the number whose binary
// expansion is w1 ones, a zero, w2 ones, a zero, ..., a zero, wL ones.
// Equivalently R(w) = sum_n 2^-(w1+...+w_{n-1}+n-1) * (1 - 2^-w_n).
// lex_compare(u, v) and the numeric order of their ranks always agree,
// and decode_rank inverts the map exactly.
Dyadic encode_rank(const MedalWord& word);
MedalWord decode_rank(const Dyadic& rank);

// Convenience for general rational input; throws NotDyadicRank when the
// value is not an encodable dyadic in [0, 1).
MedalWord decode_rank(const Rational& rank);

// One scored table row: the word, its rank, and the printed forms (the
// full binary expansion and the decimal truncated to the digit budget).
struct RankedRow {
    std::string label;
    MedalWord word;
    Dyadic rank;
    std::string binary;
    std::string decimal;
};

// Ranks every entry and sorts best-first (descending rank); ties broken
// by label to keep output deterministic. `digits` is the decimal budget.
std::vector<RankedRow> build_table(
    const std::vector<std::pair<std::string, MedalWord>>& entries, int digits);

struct MedalRecord {
    std::string label;
    MedalWord word;
};

// Parsed CSV: the records in file order plus the number of medal columns
// the header declared (words may be canonically shorter).
struct CsvTable {
    std::vector<MedalRecord> records;
    std::size_t medal_columns = 0;
};

// Reads "label,c1,...,cK" CSV with a mandatory header line. Quoted fields
// with "" escapes are supported. Every data row must match the header's
// field count (ParseError with the 1-based line number otherwise); a
// negative count is a DomainError. Blank lines are skipped.
CsvTable ingest_csv(std::istream& input);

enum class TableFormat { text, csv, json };

// Renders rows in the chosen format. Medal columns are padded with zeros
// up to max(longest word, min_medal_columns). text = aligned columns,
// csv = machine-readable with header, json = one JSON object per line.
std::string render_table(const std::vector<RankedRow>& rows, TableFormat format,
                         std::size_t min_medal_columns = 0);

}  // namespace lexirank
