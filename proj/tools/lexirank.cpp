#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "lexirank/lexirank.hpp"

namespace {

using namespace lexirank;

struct Options {
    int precision = 7;
    std::string base_text = "1000000";
    int depth = 10;
    std::string format = "text";
};

std::string ordering_name(std::strong_ordering order) {
    if (order < 0) return "less";
    if (order > 0) return "greater";
    return "equal";
}

TableFormat table_format(const std::string& name) {
    if (name == "csv") return TableFormat::csv;
    if (name == "json") return TableFormat::json;
    return TableFormat::text;
}

std::string format_binary64(double value) {
    char buffer[64];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
    return std::string(buffer, ptr);
}

void run_rank(const Options& options, const std::string& word_text) {
    const MedalWord word = parse_word(word_text);
    const Dyadic rank = encode_rank(word);
    std::cout << rank.to_binary_string() << "  "
              << rank.to_decimal_string(options.precision) << "\n";
}

void run_unrank(const std::string& binary_text) {
    const Dyadic rank = Dyadic::from_binary_string(binary_text);
    std::cout << decode_rank(rank).to_string() << "\n";
}

void run_table(const Options& options, const std::string& path) {
    CsvTable table;
    if (path == "-") {
        table = ingest_csv(std::cin);
    } else {
        std::ifstream input(path);
        if (!input) {
            throw Error("cannot open file: " + path);
        }
        table = ingest_csv(input);
    }
    std::vector<std::pair<std::string, MedalWord>> entries;
    entries.reserve(table.records.size());
    for (auto& record : table.records) {
        entries.emplace_back(std::move(record.label), std::move(record.word));
    }
    const auto rows = build_table(entries, options.precision);
    std::cout << render_table(rows, table_format(options.format),
                              table.medal_columns);
}

void run_gross(const Options& options, const std::string& expr_text,
               bool has_second, const std::string& second_text, bool evaluate) {
    const ExprPtr expr = parse_expression(expr_text, Dialect::gross);
    const Grossnumeral left = evaluate_gross(*expr);
    if (has_second) {
        const ExprPtr second = parse_expression(second_text, Dialect::gross);
        const Grossnumeral right = evaluate_gross(*second);
        std::cout << ordering_name(compare(left, right)) << "; left is "
                  << to_string(classify(left)) << "\n";
        return;
    }
    if (evaluate) {
        const Rational base = parse_rational(options.base_text);
        std::cout << eval_at_base(left, base).to_string() << "\n";
        return;
    }
    std::cout << left.to_string() << "\n";
}

void run_lc(const Options& options, const std::string& expr_text,
            bool has_derive, const std::string& derive_text,
            const std::string& at_text, int order) {
    if (has_derive) {
        const ExprPtr function = parse_expression(derive_text, Dialect::lc,
                                                  /*allow_x=*/true);
        const Rational at = parse_rational(at_text);
        const double value = derivative(
            [&](const LCNumber& x) {
                return evaluate_lc(*function, options.depth, x);
            },
            at, order, options.depth);
        std::cout << format_binary64(value) << "\n";
        return;
    }
    const ExprPtr expr = parse_expression(expr_text, Dialect::lc);
    // Hide float dust: coefficients below 1e-12 are display noise here.
    std::cout << evaluate_lc(*expr, options.depth).to_string(1e-12) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    Options options;

    CLI::App app{
        "lexirank: exact lexicographic medal ranking plus height-1 "
        "grossnumeral and truncated Levi-Civita calculators"};
    app.require_subcommand(1);

    app.add_option("--precision", options.precision,
                   "fractional decimal digits printed for ranks")
        ->check(CLI::Range(1, 1000000))
        ->capture_default_str();
    app.add_option("--base", options.base_text,
                   "evaluation base for gross --eval; any constant "
                   "expression, e.g. 1000000 or 10^6")
        ->capture_default_str();
    app.add_option("--depth", options.depth,
                   "series truncation depth for lc (number of terms kept)")
        ->check(CLI::Range(2, 100000))
        ->capture_default_str();
    app.add_option("--format", options.format,
                   "table output format: text, csv, or json")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->envname("LEXIRANK_FORMAT")
        ->capture_default_str();

    std::string word_text;
    auto* rank = app.add_subcommand(
        "rank", "encode a medal word as its dyadic rank in [0,1)");
    rank->add_option("word", word_text,
                     "comma-separated medal counts, e.g. 13,11,9")
        ->required();
    rank->fallthrough();

    std::string binary_text;
    auto* unrank = app.add_subcommand(
        "unrank", "decode a binary rank (\"0.1101...\" or \"0\") back to its "
                  "medal word");
    unrank->add_option("rank", binary_text, "binary expansion of the rank")
        ->required();
    unrank->fallthrough();

    std::string csv_path;
    auto* table = app.add_subcommand(
        "table", "rank every row of a medal CSV and print the sorted table");
    table->add_option("csv", csv_path, "path to label,c1,...,cK CSV ('-' for stdin)")
        ->required();
    table->fallthrough();

    std::string gross_expr;
    std::string gross_second;
    bool gross_eval = false;
    auto* gross = app.add_subcommand(
        "gross", "height-1 grossnumeral calculator: canonical form, "
                 "comparison, or exact evaluation at a base");
    auto* gross_expr_opt =
        gross->add_option("expr", gross_expr, "grossnumeral expression in G")
            ->required();
    auto* gross_second_opt = gross->add_option(
        "expr2", gross_second, "optional second expression to compare against");
    auto* gross_eval_opt = gross->add_flag(
        "--eval", gross_eval, "substitute the base (see --base) for G exactly");
    gross_eval_opt->excludes(gross_second_opt);
    (void)gross_expr_opt;
    gross->fallthrough();
    gross->footer(
        "Infinity and comparison:\n"
        "  A height-1 grossnumeral is classified infinite exactly when its\n"
        "  leading exponent is positive. The tempting general criterion\n"
        "  \"infinite iff at least one grosspower is greater than zero\" is\n"
        "  rejected here because it fails beyond height 1: G^(G^-1) has a\n"
        "  positive grosspower, yet it must be infinitely close to 1 (one\n"
        "  plus an infinitesimal), not infinite. No algorithm is known that\n"
        "  decides comparisons between such towers, so any expression with G\n"
        "  inside an exponent is refused with exit code 2 instead of being\n"
        "  guessed at.");

    std::string lc_expr;
    std::string lc_derive;
    std::string lc_at = "0";
    int lc_order = 1;
    auto* lc = app.add_subcommand(
        "lc", "truncated Levi-Civita calculator: evaluate expressions in the "
              "infinitesimal d, or extract exact-order derivatives");
    auto* lc_expr_opt =
        lc->add_option("expr", lc_expr, "expression in the infinitesimal d");
    auto* lc_derive_opt = lc->add_option(
        "--derive", lc_derive,
        "expression in x to differentiate algebraically (no step sizes)");
    auto* lc_at_opt =
        lc->add_option("--at", lc_at, "evaluation point for --derive (rational)");
    auto* lc_order_opt = lc->add_option(
        "--order", lc_order, "derivative order for --derive (1 <= order < depth)");
    lc_derive_opt->excludes(lc_expr_opt);
    lc_derive_opt->needs(lc_at_opt);
    lc_derive_opt->needs(lc_order_opt);
    lc_at_opt->needs(lc_derive_opt);
    lc_order_opt->needs(lc_derive_opt);
    lc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (rank->parsed()) {
            run_rank(options, word_text);
        } else if (unrank->parsed()) {
            run_unrank(binary_text);
        } else if (table->parsed()) {
            run_table(options, csv_path);
        } else if (gross->parsed()) {
            run_gross(options, gross_expr, gross_second_opt->count() > 0,
                      gross_second, gross_eval);
        } else if (lc->parsed()) {
            const bool has_derive = lc_derive_opt->count() > 0;
            if (!has_derive && lc_expr_opt->count() == 0) {
                std::cerr << "error: lc needs an expression or --derive\n";
                return 1;
            }
            run_lc(options, lc_expr, has_derive, lc_derive, lc_at, lc_order);
        }
        return 0;
    } catch (const HeightUnsupported& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const TransferUnavailable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
