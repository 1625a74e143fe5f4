#include "lexirank/lexrank.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace lexirank {

namespace {

// Hard ceiling on the encoded expansion length. Words are unbounded in
// principle, but a single letter near 2^30 already means a gigabit
// mantissa; fail fast instead of exhausting memory.
constexpr unsigned long long kMaxEncodedBits = 100'000'000;

}  // namespace

Dyadic encode_rank(const MedalWord& word) {
    if (word.empty()) {
        return Dyadic();
    }
    const auto& letters = word.letters();
    unsigned long long total_bits = letters.size() - 1;  // one 0 between letters
    for (const auto w : letters) {
        total_bits += w;
        if (w > kMaxEncodedBits || total_bits > kMaxEncodedBits) {
            throw DomainError("medal counts too large to encode (limit " +
                              std::to_string(kMaxEncodedBits) + " bits)");
        }
    }
    Integer mantissa = 0;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        const auto w = letters[i];
        // append w ones ...
        mantissa <<= w;
        Integer ones = 1;
        ones <<= w;
        ones -= 1;
        mantissa += ones;
        // ... and a separating zero between consecutive letters
        if (i + 1 < letters.size()) {
            mantissa <<= 1;
        }
    }
    return Dyadic(std::move(mantissa), static_cast<unsigned long>(total_bits));
}

MedalWord decode_rank(const Dyadic& rank) {
    if (rank.is_zero()) {
        return MedalWord();
    }
    // Split the expansion at its 0 bits; the run lengths of 1s in between
    // are the letters. Canonicity (odd mantissa) makes the last run >= 1.
    const std::string expansion = rank.to_binary_string();
    std::vector<MedalWord::Letter> letters;
    MedalWord::Letter run = 0;
    for (std::size_t i = 2; i < expansion.size(); ++i) {
        if (expansion[i] == '1') {
            ++run;
        } else {
            letters.push_back(run);
            run = 0;
        }
    }
    letters.push_back(run);
    return MedalWord(std::move(letters));
}

MedalWord decode_rank(const Rational& rank) {
    return decode_rank(Dyadic::from_rational(rank));
}

std::vector<RankedRow> build_table(
    const std::vector<std::pair<std::string, MedalWord>>& entries, int digits) {
    std::vector<RankedRow> rows;
    rows.reserve(entries.size());
    for (const auto& [label, word] : entries) {
        Dyadic rank = encode_rank(word);
        std::string binary = rank.to_binary_string();
        std::string decimal = rank.to_decimal_string(digits);
        rows.push_back(
            {label, word, std::move(rank), std::move(binary), std::move(decimal)});
    }
    std::stable_sort(rows.begin(), rows.end(),
                     [](const RankedRow& a, const RankedRow& b) {
                         if (a.rank != b.rank) {
                             return a.rank > b.rank;  // best first
                         }
                         return a.label < b.label;
                     });
    return rows;
}

namespace {

std::string trim(const std::string& text) {
    std::size_t begin = 0;
    std::size_t end = text.size();
    while (begin < end && (text[begin] == ' ' || text[begin] == '\t')) ++begin;
    while (end > begin && (text[end - 1] == ' ' || text[end - 1] == '\t')) --end;
    return text.substr(begin, end - begin);
}

std::vector<std::string> split_csv_line(const std::string& line,
                                        std::size_t line_no) {
    std::vector<std::string> fields;
    std::size_t i = 0;
    while (true) {
        std::string field;
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        if (i < line.size() && line[i] == '"') {
            ++i;
            bool closed = false;
            while (i < line.size()) {
                if (line[i] == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                    field += '"';
                    i += 2;
                } else if (line[i] == '"') {
                    ++i;
                    closed = true;
                    break;
                } else {
                    field += line[i++];
                }
            }
            if (!closed) {
                throw ParseError(
                    "line " + std::to_string(line_no) + ": unterminated quote",
                    line_no);
            }
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
            if (i < line.size() && line[i] != ',') {
                throw ParseError("line " + std::to_string(line_no) +
                                     ": text after closing quote",
                                 line_no);
            }
        } else {
            std::size_t start = i;
            while (i < line.size() && line[i] != ',') ++i;
            field = trim(line.substr(start, i - start));
        }
        fields.push_back(std::move(field));
        if (i < line.size() && line[i] == ',') {
            ++i;
            continue;
        }
        break;
    }
    return fields;
}

MedalWord::Letter parse_count(const std::string& field, std::size_t line_no) {
    if (field.empty()) {
        throw ParseError("line " + std::to_string(line_no) + ": empty medal count",
                         line_no);
    }
    if (field[0] == '-') {
        throw DomainError("line " + std::to_string(line_no) +
                          ": negative medal count '" + field + "'");
    }
    MedalWord::Letter value = 0;
    const auto [ptr, ec] =
        std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec == std::errc::result_out_of_range) {
        throw DomainError("line " + std::to_string(line_no) +
                          ": medal count out of range '" + field + "'");
    }
    if (ec != std::errc() || ptr != field.data() + field.size()) {
        throw ParseError("line " + std::to_string(line_no) +
                             ": medal count is not a nonnegative integer: '" +
                             field + "'",
                         line_no);
    }
    return value;
}

}  // namespace

CsvTable ingest_csv(std::istream& input) {
    CsvTable table;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(input, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (trim(line).empty()) {
            continue;
        }
        const auto fields = split_csv_line(line, line_no);
        if (!header_seen) {
            if (fields.size() < 2) {
                throw ParseError("line " + std::to_string(line_no) +
                                     ": header needs a label column and at "
                                     "least one medal column",
                                 line_no);
            }
            table.medal_columns = fields.size() - 1;
            header_seen = true;
            continue;
        }
        if (fields.size() != table.medal_columns + 1) {
            throw ParseError("line " + std::to_string(line_no) + ": expected " +
                                 std::to_string(table.medal_columns + 1) +
                                 " fields, got " + std::to_string(fields.size()),
                             line_no);
        }
        std::vector<MedalWord::Letter> letters;
        letters.reserve(fields.size() - 1);
        for (std::size_t k = 1; k < fields.size(); ++k) {
            letters.push_back(parse_count(fields[k], line_no));
        }
        table.records.push_back({fields[0], MedalWord(std::move(letters))});
    }
    if (!header_seen) {
        throw ParseError("line 1: missing header row", 1);
    }
    return table;
}

namespace {

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"") == std::string::npos) {
        return field;
    }
    std::string out = "\"";
    for (const char c : field) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

std::string render_csv(const std::vector<RankedRow>& rows, std::size_t columns) {
    std::string out = "country";
    for (std::size_t k = 1; k <= columns; ++k) {
        out += ",c" + std::to_string(k);
    }
    out += ",binary,decimal\n";
    for (const auto& row : rows) {
        out += csv_quote(row.label);
        for (std::size_t k = 0; k < columns; ++k) {
            out += ',' + std::to_string(row.word.letter(k));
        }
        out += ',' + row.binary + ',' + row.decimal + '\n';
    }
    return out;
}

std::string render_json(const std::vector<RankedRow>& rows, std::size_t columns) {
    std::string out;
    for (const auto& row : rows) {
        nlohmann::ordered_json object;
        object["country"] = row.label;
        auto& medals = object["medals"] = nlohmann::ordered_json::array();
        for (std::size_t k = 0; k < columns; ++k) {
            medals.push_back(row.word.letter(k));
        }
        object["binary"] = row.binary;
        object["decimal"] = row.decimal;
        out += object.dump();
        out += '\n';
    }
    return out;
}

std::string render_text(const std::vector<RankedRow>& rows, std::size_t columns) {
    const std::string label_header = "Country";
    const std::string medals_header = "Medals";
    const std::string binary_header = "Binary";

    std::size_t label_width = label_header.size();
    std::vector<std::size_t> count_widths(columns, 1);
    std::size_t binary_width = binary_header.size();
    for (const auto& row : rows) {
        label_width = std::max(label_width, row.label.size());
        binary_width = std::max(binary_width, row.binary.size());
        for (std::size_t k = 0; k < columns; ++k) {
            count_widths[k] = std::max(
                count_widths[k], std::to_string(row.word.letter(k)).size());
        }
    }
    std::size_t group_width = columns == 0 ? 0 : columns - 1;
    for (const auto w : count_widths) {
        group_width += w;
    }
    group_width = std::max(group_width, medals_header.size());

    std::string out;
    auto pad = [&out](const std::string& text, std::size_t width) {
        out += text;
        out.append(width - text.size(), ' ');
    };
    pad(label_header, label_width + 2);
    pad(medals_header, group_width + 2);
    pad(binary_header, binary_width + 2);
    out += "Decimal\n";
    for (const auto& row : rows) {
        pad(row.label, label_width + 2);
        std::string group;
        for (std::size_t k = 0; k < columns; ++k) {
            const std::string count = std::to_string(row.word.letter(k));
            if (k > 0) {
                group += ' ';
            }
            group.append(count_widths[k] - count.size(), ' ');
            group += count;
        }
        pad(group, group_width + 2);
        pad(row.binary, binary_width + 2);
        out += row.decimal;
        out += '\n';
    }
    return out;
}

}  // namespace

std::string render_table(const std::vector<RankedRow>& rows, TableFormat format,
                         std::size_t min_medal_columns) {
    std::size_t columns = min_medal_columns;
    for (const auto& row : rows) {
        columns = std::max(columns, row.word.length());
    }
    switch (format) {
        case TableFormat::csv:
            return render_csv(rows, columns);
        case TableFormat::json:
            return render_json(rows, columns);
        case TableFormat::text:
        default:
            return render_text(rows, columns);
    }
}

}  // namespace lexirank
