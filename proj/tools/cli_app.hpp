#ifndef LEHMER_TOOLS_CLI_APP_HPP
#define LEHMER_TOOLS_CLI_APP_HPP

// Command-line front end. run() is the whole program minus process setup so
// tests can drive it with argument vectors and string streams.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <cmath>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <lehmer/lehmer.hpp>

namespace lehmer::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerification = 2;

inline constexpr const char* kDigitsEnv = "LEHMER_DIGITS";

enum class Format { text, csv, json };

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// k values from "a", "a:b" or "a:b:step".
inline std::vector<long> parse_k_range(std::string_view text)
{
    std::vector<long> parts;
    std::size_t start = 0;
    for (;;) {
        const std::size_t colon = text.find(':', start);
        const std::string piece(text.substr(start, colon == std::string_view::npos ? text.npos : colon - start));
        std::size_t used = 0;
        long value = 0;
        try {
            value = std::stol(piece, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (piece.empty() || used != piece.size()) {
            throw UsageError("invalid --k value '" + std::string(text) + "'");
        }
        parts.push_back(value);
        if (colon == std::string_view::npos) {
            break;
        }
        start = colon + 1;
    }
    if (parts.size() > 3) {
        throw UsageError("invalid --k value '" + std::string(text) + "': expected a, a:b or a:b:step");
    }
    const long first = parts[0];
    const long last = parts.size() > 1 ? parts[1] : first;
    const long step = parts.size() > 2 ? parts[2] : 1;
    if (step < 1 || last < first) {
        throw UsageError("invalid --k range '" + std::string(text) + "'");
    }
    std::vector<long> ks;
    for (long k = first; k <= last; k += step) {
        ks.push_back(k);
    }
    return ks;
}

struct RunConfig {
    std::string command;
    std::optional<std::string> k;
    std::optional<long> k_max;
    std::string z = "2";
    long digits = 120;
    bool digits_given = false;
    long terms = 7;
    Format format = Format::text;
    std::string output;
    std::string suite;
    bool strict = false;
    unsigned threads = 1;
};

/// One output cell; JSON renders integers as numbers and everything else as strings.
struct Cell {
    enum class Kind { integer, text, null };
    Kind kind = Kind::text;
    std::string value;

    static Cell integer(long v) { return {Kind::integer, std::to_string(v)}; }
    static Cell str(std::string v) { return {Kind::text, std::move(v)}; }
    static Cell null() { return {Kind::null, ""}; }
};

using Row = std::vector<Cell>;

struct Table {
    std::vector<std::string> columns;
    std::vector<Row> rows;
};

struct CommandResult {
    Table table;
    std::vector<std::string> failures; // verbatim diffs, one per failing case
};

inline std::string render(const Table& table, Format format)
{
    std::ostringstream out;
    switch (format) {
    case Format::json: {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const Row& row : table.rows) {
            nlohmann::ordered_json obj = nlohmann::ordered_json::object();
            for (std::size_t i = 0; i < table.columns.size(); ++i) {
                const Cell& c = row[i];
                if (c.kind == Cell::Kind::integer) {
                    obj[table.columns[i]] = std::stol(c.value);
                } else if (c.kind == Cell::Kind::null) {
                    obj[table.columns[i]] = nullptr;
                } else {
                    obj[table.columns[i]] = c.value;
                }
            }
            arr.push_back(std::move(obj));
        }
        out << arr.dump(2) << '\n';
        break;
    }
    case Format::csv: {
        auto field = [](const std::string& s) {
            if (s.find_first_of(",\"\n") == std::string::npos) {
                return s;
            }
            std::string q = "\"";
            for (char ch : s) {
                q += ch;
                if (ch == '"') {
                    q += '"';
                }
            }
            return q + "\"";
        };
        for (std::size_t i = 0; i < table.columns.size(); ++i) {
            out << (i ? "," : "") << field(table.columns[i]);
        }
        out << '\n';
        for (const Row& row : table.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                out << (i ? "," : "") << field(row[i].value);
            }
            out << '\n';
        }
        break;
    }
    case Format::text: {
        // display width counts UTF-8 code points
        auto width = [](const std::string& s) {
            return static_cast<std::size_t>(
                std::count_if(s.begin(), s.end(), [](char ch) { return (static_cast<unsigned char>(ch) & 0xC0) != 0x80; }));
        };
        std::vector<std::size_t> widths(table.columns.size());
        for (std::size_t i = 0; i < table.columns.size(); ++i) {
            widths[i] = width(table.columns[i]);
            for (const Row& row : table.rows) {
                widths[i] = std::max(widths[i], width(row[i].value));
            }
        }
        auto line = [&](auto get) {
            std::string s;
            for (std::size_t i = 0; i < table.columns.size(); ++i) {
                const std::string& v = get(i);
                if (i) {
                    s += "  ";
                }
                s += v;
                if (i + 1 < table.columns.size()) {
                    s.append(widths[i] - width(v), ' ');
                }
            }
            out << s << '\n';
        };
        line([&](std::size_t i) -> const std::string& { return table.columns[i]; });
        for (const Row& row : table.rows) {
            line([&](std::size_t i) -> const std::string& { return row[i].value; });
        }
        break;
    }
    }
    return out.str();
}

/// Evaluates make_row(i) for i in [0, n) on up to `threads` workers; rows come
/// back in index order and the first exception by index is rethrown.
template <typename MakeRow>
std::vector<Row> parallel_rows(std::size_t n, unsigned threads, MakeRow make_row)
{
    std::vector<Row> rows(n);
    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                rows[i] = make_row(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned count = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
    if (count == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(count);
        for (unsigned t = 0; t < count; ++t) {
            pool.emplace_back(worker);
        }
    }
    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return rows;
}

namespace detail {

inline PrecisionContext context_for(const RunConfig& cfg) { return PrecisionContext{cfg.digits, 10}; }

inline std::vector<long> ks_or(const RunConfig& cfg, std::string_view fallback)
{
    return parse_k_range(cfg.k ? *cfg.k : std::string(fallback));
}

inline long k_max_or(const RunConfig& cfg, long fallback, long lo, long hi)
{
    const long v = cfg.k_max.value_or(fallback);
    if (v < lo || v > hi) {
        throw UsageError("--k-max must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    return v;
}

inline void require_min_k(const std::vector<long>& ks, long lo)
{
    for (long k : ks) {
        if (k < lo) {
            throw UsageError("k must be >= " + std::to_string(lo));
        }
    }
}

inline std::string scientific19(const HPReal& x) { return to_scientific(x, 19); }

inline std::string relative_gap(const HPReal& a, const HPReal& b)
{
    if (b.is_zero()) {
        return a.is_zero() ? "0" : "inf";
    }
    return to_scientific(abs((a - b) / b), 3);
}

} // namespace detail

inline CommandResult cmd_series(const RunConfig& cfg)
{
    const auto ks = detail::ks_or(cfg, "1");
    detail::require_min_k(ks, 0);
    const Rational z = parse_rational(cfg.z);
    if (z == 0 || abs(z) >= 4) {
        throw UsageError("--z must satisfy 0 < |z| < 4");
    }
    const PrecisionContext ctx = detail::context_for(cfg);
    CommandResult r;
    r.table.columns = {"k", "z", "r3", "r4", "exact", "value"};
    r.table.rows = parallel_rows(ks.size(), cfg.threads, [&](std::size_t i) {
        const OmegaLinear s = s_k_z(ks[i], z);
        const std::string exact = z == 2 ? s_k_2(ks[i]).to_string() : s.to_string();
        return Row{Cell::integer(ks[i]), Cell::str(to_string(z)),  Cell::str(to_string(s.r3)),
                   Cell::str(to_string(s.r4)), Cell::str(exact), Cell::str(to_decimal(s.numeric(ctx), cfg.digits))};
    });
    return r;
}

inline CommandResult cmd_ratio(const RunConfig& cfg)
{
    const auto ks = detail::ks_or(cfg, "1:10");
    detail::require_min_k(ks, 1);
    const PrecisionContext ctx = detail::context_for(cfg);
    CommandResult r;
    r.table.columns = {"k", "r1", "r2", "ratio", "matched"};
    r.table.rows = parallel_rows(ks.size(), cfg.threads, [&](std::size_t i) {
        const ConvergentRow row = convergent_row(ks[i], cfg.digits, ctx);
        return Row{Cell::integer(row.k), Cell::str(to_string(row.r1)), Cell::str(to_string(row.r2)),
                   Cell::str(row.ratio_digits), Cell::integer(row.matched)};
    });
    return r;
}

inline CommandResult cmd_table1(const RunConfig& cfg)
{
    const long k_max = detail::k_max_or(cfg, 40, 1, 200);
    const PrecisionContext ctx = detail::context_for(cfg);
    CommandResult r;
    r.table.columns = {"k", "ratio", "matched"};
    r.table.rows = parallel_rows(static_cast<std::size_t>(k_max), cfg.threads, [&](std::size_t i) {
        const long k = static_cast<long>(i) + 1;
        return Row{Cell::integer(k), Cell::str(ratio_decimal(k, cfg.digits)),
                   Cell::integer(matched_digit_count(k, ctx))};
    });
    const HPReal pi = pi_at_bits(digits_to_bits(cfg.digits + 20));
    const Cell pi_label = cfg.format == Format::text ? Cell::str("π") : Cell::str("pi");
    r.table.rows.push_back(Row{pi_label, Cell::str(to_decimal(pi, cfg.digits + 1)), Cell::null()});
    return r;
}

inline CommandResult cmd_table2(const RunConfig& cfg)
{
    const long k_max = detail::k_max_or(cfg, 30, 1, 200);
    CommandResult r;
    r.table.columns = {"k", "r1", "r2", "exact"};
    r.table.rows = parallel_rows(static_cast<std::size_t>(k_max), cfg.threads, [&](std::size_t i) {
        const long k = static_cast<long>(i) + 1;
        const PiLinear s = s_k_2(k);
        return Row{Cell::integer(k), Cell::str(to_string(s.a)), Cell::str(to_string(s.b)), Cell::str(s.to_string())};
    });
    return r;
}

/// Relative gap tolerated between the J-term expansion and the exact error
/// under --strict: 5e-2 below k = 25, 1e-5 from there on.
inline double error_band_log10(long k) { return k < 25 ? std::log10(5e-2) : -5.0; }

inline CommandResult cmd_error_table(const RunConfig& cfg)
{
    const auto ks = detail::ks_or(cfg, "5:100:5");
    detail::require_min_k(ks, 1);
    if (cfg.terms < 1) {
        throw UsageError("--terms must be >= 1");
    }
    const PrecisionContext ctx = detail::context_for(cfg);
    CommandResult r;
    r.table.columns = {"k", "asymptotic", "exact", "relative_gap"};
    std::vector<std::string> failures(ks.size());
    r.table.rows = parallel_rows(ks.size(), cfg.threads, [&](std::size_t i) {
        const long k = ks[i];
        const HPReal asym = e_asymptotic(k, cfg.terms, ctx);
        const HPReal exact = exact_error(k, ctx);
        if (!relatively_close(asym, exact, error_band_log10(k))) {
            failures[i] = "k=" + std::to_string(k) + ": asymptotic " + detail::scientific19(asym) + " vs exact " +
                          detail::scientific19(exact);
        }
        return Row{Cell::integer(k), Cell::str(detail::scientific19(asym)), Cell::str(detail::scientific19(exact)),
                   Cell::str(detail::relative_gap(asym, exact))};
    });
    if (cfg.strict) {
        for (auto& f : failures) {
            if (!f.empty()) {
                r.failures.push_back(std::move(f));
            }
        }
    }
    return r;
}

inline CommandResult cmd_coeffs(const RunConfig& cfg)
{
    if (cfg.terms < 1) {
        throw UsageError("--terms must be >= 1");
    }
    const CoeffTable t = coeff_table(cfg.terms - 1);
    CommandResult r;
    r.table.columns = {"j", "c", "F", "A", "norlund"};
    for (std::size_t j = 0; j < t.c.size(); ++j) {
        r.table.rows.push_back(Row{Cell::integer(static_cast<long>(j)), Cell::str(to_string(t.c[j])),
                                   Cell::str(to_string(t.F[j])), Cell::str(to_string(t.A[j])),
                                   Cell::str(to_string(t.norlund[j]))});
    }
    return r;
}

namespace detail {

struct CaseOutcome {
    std::string label;
    bool pass = false;
    std::string detail;
};

// sum_{m=1}^{M} m^p x^m with M large enough that the geometric tail is below
// 10^{-(digits+5)}; independent of the closed form it checks.
inline HPReal power_sum_partial(long p, const Rational& x, const PrecisionContext& ctx)
{
    const double ax = std::fabs(mpq_get_d(x.get_mpq_t()));
    long terms = 1;
    if (ax > 0) {
        const double target = -(static_cast<double>(ctx.digits) + 5.0) * std::log(10.0);
        while (static_cast<double>(p) * std::log(static_cast<double>(terms)) + static_cast<double>(terms) * std::log(ax) -
                   std::log1p(-ax) >
               target) {
            ++terms;
        }
    }
    const mpfr_prec_t bits = ctx.working_bits();
    const HPReal xr(x, bits);
    HPReal sum(bits);
    HPReal xpow(1L, bits);
    for (long m = 1; m <= terms; ++m) {
        xpow *= xr;
        sum += pow(HPReal(m, bits), p) * xpow;
    }
    return sum;
}

inline std::vector<CaseOutcome> run_suite(const std::string& suite, long k_max, const PrecisionContext& ctx,
                                          unsigned threads)
{
    std::vector<std::function<CaseOutcome()>> cases;
    if (suite == "seq4-seq6") {
        for (long k = 0; k <= k_max; ++k) {
            cases.emplace_back([k] {
                const PiLinear direct = s_k_2(k);
                const OmegaLinear general = s_k_z(k, Rational(2));
                const PiLinear mapped{general.r3, general.r4 / 4};
                return CaseOutcome{"k=" + std::to_string(k), direct == mapped,
                                   direct.to_string() + " | " + mapped.to_string()};
            });
        }
    } else if (suite == "bg") {
        for (long k = 0; k <= k_max; ++k) {
            cases.emplace_back([k] {
                const auto [lhs, rhs] = bg_identity_sides(k);
                return CaseOutcome{"k=" + std::to_string(k), lhs == rhs, lhs.to_string() + " | " + rhs.to_string()};
            });
        }
    } else if (suite == "jacobi") {
        for (long n = 0; n <= k_max; ++n) {
            for (const char* zs : {"1/2", "2/3", "1"}) {
                cases.emplace_back([n, zs] {
                    const auto [lhs, rhs] = jacobi_reduction_sides(n, parse_rational(zs));
                    return CaseOutcome{"N=" + std::to_string(n) + " z=" + zs, lhs == rhs,
                                       to_string(lhs) + " | " + to_string(rhs)};
                });
            }
        }
    } else if (suite == "integral") {
        for (long n = 1; n <= std::min(k_max, 8L); ++n) {
            for (const char* zs : {"1", "2", "7/2"}) {
                cases.emplace_back([n, zs, &ctx] {
                    const IntegralIdentity id = integral_identity(n, parse_rational(zs), ctx);
                    return CaseOutcome{"n=" + std::to_string(n) + " z=" + zs, id.agrees,
                                       to_scientific(id.quadrature, 25) + " | " + to_scientific(id.closed_form, 25)};
                });
            }
        }
    } else if (suite == "euler") {
        for (long p = 1; p <= k_max; ++p) {
            for (const char* xs : {"1/2", "-1/2", "1/3", "-1/3", "2/5"}) {
                cases.emplace_back([p, xs, &ctx] {
                    const Rational x = parse_rational(xs);
                    const Rational closed = euler_power_sum(p, x);
                    const HPReal partial = power_sum_partial(p, x, ctx);
                    const bool ok = absolutely_close(HPReal(closed, ctx.working_bits()), partial,
                                                     -static_cast<double>(ctx.digits));
                    return CaseOutcome{"p=" + std::to_string(p) + " x=" + xs, ok,
                                       to_string(closed) + " | " + to_scientific(partial, 25)};
                });
            }
        }
    } else {
        throw UsageError("unknown --suite '" + suite + "' (expected seq4-seq6, bg, jacobi, integral or euler)");
    }

    std::vector<CaseOutcome> outcomes(cases.size());
    parallel_rows(cases.size(), threads, [&](std::size_t i) {
        outcomes[i] = cases[i]();
        return Row{};
    });
    return outcomes;
}

} // namespace detail

inline CommandResult cmd_identity_check(const RunConfig& cfg)
{
    static const std::map<std::string, long, std::less<>> default_k_max = {
        {"seq4-seq6", 40}, {"bg", 20}, {"jacobi", 8}, {"integral", 8}, {"euler", 8}};
    if (cfg.suite.empty()) {
        throw UsageError("identity-check requires --suite");
    }
    const auto it = default_k_max.find(cfg.suite);
    const long k_max = cfg.k_max.value_or(it == default_k_max.end() ? 0 : it->second);
    if (k_max < 0) {
        throw UsageError("--k-max must be non-negative");
    }
    const PrecisionContext ctx = detail::context_for(cfg);
    CommandResult r;
    r.table.columns = {"suite", "case", "result"};
    for (const auto& outcome : detail::run_suite(cfg.suite, k_max, ctx, cfg.threads)) {
        r.table.rows.push_back(
            Row{Cell::str(cfg.suite), Cell::str(outcome.label), Cell::str(outcome.pass ? "pass" : "FAIL")});
        if (!outcome.pass) {
            r.failures.push_back(cfg.suite + " " + outcome.label + ": " + outcome.detail);
        }
    }
    return r;
}

inline CommandResult cmd_limit_check(const RunConfig& cfg)
{
    const long k_max = detail::k_max_or(cfg, 40, 2, 400);
    const PrecisionContext ctx = detail::context_for(cfg);
    CommandResult r;
    r.table.columns = {"k", "ratio", "deviation"};
    r.table.rows = parallel_rows(static_cast<std::size_t>(k_max), cfg.threads, [&](std::size_t i) {
        const long k = static_cast<long>(i) + 1;
        const HPReal ratio = lehmer_limit_ratio(k, ctx);
        return Row{Cell::integer(k), Cell::str(to_decimal(ratio, std::min(cfg.digits, 40L))),
                   Cell::str(to_scientific(abs(ratio - 2L), 6))};
    });
    return r;
}

inline CommandResult cmd_integral_check(const RunConfig& cfg)
{
    const auto ks = detail::ks_or(cfg, "5:20:5");
    detail::require_min_k(ks, 1);
    // quadrature cost grows quickly with precision, so this command defaults lower
    const PrecisionContext ctx{cfg.digits_given ? cfg.digits : 30, 10};
    CommandResult r;
    r.table.columns = {"k", "r2_exact", "r2_hankel", "r2_laplace", "hankel_gap", "laplace_gap",
                       "e_exact",   "e_integral", "e_gap"};
    std::vector<std::string> failures(ks.size());
    r.table.rows = parallel_rows(ks.size(), cfg.threads, [&](std::size_t i) {
        const long k = ks[i];
        const HPReal exact_r2(extract(k).second, ctx.working_bits());
        const HPReal hankel = r2_hankel_integral(k, ctx);
        const HPReal laplace = r2_laplace_integral(k, ctx);
        Row row{Cell::integer(k),
                Cell::str(detail::scientific19(exact_r2)),
                Cell::str(detail::scientific19(hankel)),
                Cell::str(detail::scientific19(laplace)),
                Cell::str(detail::relative_gap(hankel, exact_r2)),
                Cell::str(detail::relative_gap(laplace, exact_r2))};
        std::string failure;
        if (!relatively_close(hankel, exact_r2, -8) || !relatively_close(laplace, exact_r2, -8)) {
            failure = "k=" + std::to_string(k) + ": R2 " + to_string(extract(k).second) + " vs hankel " +
                      detail::scientific19(hankel) + ", laplace " + detail::scientific19(laplace);
        }
        if (k <= 30) {
            const HPReal exact_e = exact_error(k, ctx);
            const HPReal integral_e = e_integral(k, ctx);
            row.push_back(Cell::str(detail::scientific19(exact_e)));
            row.push_back(Cell::str(detail::scientific19(integral_e)));
            row.push_back(Cell::str(detail::relative_gap(integral_e, exact_e)));
            if (!relatively_close(integral_e, exact_e, -5)) {
                failure += (failure.empty() ? "k=" + std::to_string(k) + ":" : ";") + std::string(" E ") +
                           detail::scientific19(exact_e) + " vs integral " + detail::scientific19(integral_e);
            }
        } else {
            row.push_back(Cell::null());
            row.push_back(Cell::null());
            row.push_back(Cell::null());
        }
        failures[i] = std::move(failure);
        return row;
    });
    if (cfg.strict) {
        for (auto& f : failures) {
            if (!f.empty()) {
                r.failures.push_back(std::move(f));
            }
        }
    }
    return r;
}

inline CommandResult dispatch(const RunConfig& cfg)
{
    if (cfg.command == "series") return cmd_series(cfg);
    if (cfg.command == "ratio") return cmd_ratio(cfg);
    if (cfg.command == "table1") return cmd_table1(cfg);
    if (cfg.command == "table2") return cmd_table2(cfg);
    if (cfg.command == "error-table") return cmd_error_table(cfg);
    if (cfg.command == "coeffs") return cmd_coeffs(cfg);
    if (cfg.command == "identity-check") return cmd_identity_check(cfg);
    if (cfg.command == "limit-check") return cmd_limit_check(cfg);
    if (cfg.command == "integral-check") return cmd_integral_check(cfg);
    throw UsageError("unknown command '" + cfg.command + "'");
}

/// Default digit count: LEHMER_DIGITS when set to a positive integer, else 120.
inline long default_digits(const char* env_value)
{
    if (env_value == nullptr || *env_value == '\0') {
        return 120;
    }
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(env_value, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != std::string_view(env_value).size() || v < 2) {
        throw UsageError(std::string(kDigitsEnv) + " must be an integer >= 2");
    }
    return v;
}

/// Parses `args` (without the program name) and runs the command.
/// Returns 0 on success, 1 on usage errors and 2 on verification failures.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
               const char* digits_env = std::getenv(kDigitsEnv))
{
    RunConfig cfg;
    try {
        cfg.digits = default_digits(digits_env);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    CLI::App app{"Exact evaluation of the central-binomial series and its pi convergents", "lehmer_cli"};
    app.require_subcommand(1);
    const std::map<std::string, Format> formats{{"text", Format::text}, {"csv", Format::csv}, {"json", Format::json}};
    std::string k_text;
    long k_max = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--digits", cfg.digits, "Decimal digits (default 120 or $" + std::string(kDigitsEnv) + ")")
            ->check(CLI::Range(2L, 100000L));
        sub->add_option("--format", cfg.format, "Output format")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
        sub->add_option("--output", cfg.output, "Write output to this file instead of stdout");
        sub->add_option("--threads", cfg.threads, "Worker threads for row computation")->check(CLI::Range(1u, 256u));
    };
    auto add_k = [&](CLI::App* sub) { sub->add_option("--k", k_text, "k, a:b or a:b:step"); };
    auto add_k_max = [&](CLI::App* sub) { sub->add_option("--k-max", k_max, "Largest k"); };

    auto* series = app.add_subcommand("series", "S_k(z) in closed form and numerically");
    add_common(series);
    add_k(series);
    series->add_option("--z", cfg.z, "Rational argument p/q with 0 < |z| < 4 (default 2)");

    auto* ratio = app.add_subcommand("ratio", "R1(k), R2(k) and the convergent R1/R2");
    add_common(ratio);
    add_k(ratio);

    auto* table1 = app.add_subcommand("table1", "R1(k)/R2(k) for k = 1..k-max followed by pi");
    add_common(table1);
    add_k_max(table1);

    auto* table2 = app.add_subcommand("table2", "S_k(2) = R1 + R2 pi for k = 1..k-max");
    add_common(table2);
    add_k_max(table2);

    auto* error_table = app.add_subcommand("error-table", "Asymptotic against exact pi - R1/R2");
    add_common(error_table);
    add_k(error_table);
    error_table->add_option("--terms", cfg.terms, "Terms of the expansion (default 7)");
    error_table->add_flag("--strict", cfg.strict, "Exit 2 when a row leaves the tolerance band");

    auto* coeffs = app.add_subcommand("coeffs", "Expansion coefficients c_j, F_j, A_j and Norlund values");
    add_common(coeffs);
    coeffs->add_option("--terms", cfg.terms, "Number of coefficients (default 7)");

    auto* identity = app.add_subcommand("identity-check", "Run an exact or numeric identity suite");
    add_common(identity);
    add_k_max(identity);
    identity->add_option("--suite", cfg.suite, "seq4-seq6, bg, jacobi, integral or euler")->required();

    auto* limit = app.add_subcommand("limit-check", "t2/t1 and its distance from 2");
    add_common(limit);
    add_k_max(limit);

    auto* integral = app.add_subcommand("integral-check", "Integral representations against exact values");
    add_common(integral);
    add_k(integral);
    integral->add_flag("--strict", cfg.strict, "Exit 2 when an integral misses its tolerance");

    std::vector<const char*> argv{"lehmer_cli"};
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    CLI::App* chosen = app.get_subcommands().front();
    cfg.command = chosen->get_name();
    cfg.digits_given = chosen->count("--digits") > 0;
    if (!k_text.empty()) {
        cfg.k = k_text;
    }
    if (chosen->get_option_no_throw("--k-max") != nullptr && chosen->count("--k-max") > 0) {
        cfg.k_max = k_max;
    }

    CommandResult result;
    try {
        result = dispatch(cfg);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "failure: " << e.what() << '\n';
        return kExitVerification;
    }

    const std::string rendered = render(result.table, cfg.format);
    if (cfg.output.empty()) {
        out << rendered;
    } else {
        std::ofstream file(cfg.output, std::ios::binary);
        if (!file) {
            err << "error: cannot open '" << cfg.output << "' for writing\n";
            return kExitUsage;
        }
        file << rendered;
    }
    for (const auto& f : result.failures) {
        err << "FAIL " << f << '\n';
    }
    return result.failures.empty() ? kExitOk : kExitVerification;
}

} // namespace lehmer::cli

#endif
