#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "permfib/bijections.hpp"
#include "permfib/error.hpp"
#include "permfib/permutation.hpp"
#include "permfib/regex.hpp"
#include "permfib/series.hpp"
#include "permfib/verify.hpp"

namespace permfib::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string format = "text";
    std::string output;
    bool unsafe_large_n = false;
    bool no_timestamp = false;
    std::optional<int> n_max;
    std::optional<int> n;
    std::optional<int> order;
    std::optional<int> t_order;
    std::string m_list;
    std::vector<std::string> claims;
    std::string kind;
    std::string perm;
    std::string word;
    std::string composition;
};

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw UsageError(std::string("malformed ") + what + " list: \"" + text + "\"");
        }
    }
    if (out.empty()) throw UsageError(std::string("empty ") + what + " list");
    return out;
}

std::vector<int> m_values(const Options& o, std::vector<int> fallback) {
    return o.m_list.empty() ? fallback : parse_int_list(o.m_list, "--m");
}

int single_m(const Options& o, int fallback) {
    const auto ms = m_values(o, {fallback});
    if (ms.size() != 1) throw UsageError("this command takes a single --m value");
    return ms.front();
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream s;
    s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return s.str();
}

std::string cell_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

Json rational_json(const Rational& r) {
    if (denominator(r) == 1) {
        const BigInt v = numerator(r);
        if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
            return static_cast<std::int64_t>(v);
    }
    return to_string(r);
}

Json bigint_json(const BigInt& v) { return rational_json(Rational(v)); }

// Compositions in CSV/table cells use '+' so fields never contain commas.
std::string composition_cell(const Composition& c) {
    std::string s;
    for (std::size_t i = 0; i < c.num_parts(); ++i) s += (i ? "+" : "") + std::to_string(c.part(i));
    return s;
}

struct Table {
    std::string kind;
    Json params = Json::object();
    std::vector<std::string> columns;
    std::vector<std::vector<Json>> rows;
    std::vector<std::string> notes; // text and json only
};

void emit_table(const Table& t, const std::string& format, std::ostream& out) {
    if (format == "json") {
        Json j;
        j["kind"] = t.kind;
        j["params"] = t.params;
        if (!t.notes.empty()) j["notes"] = t.notes;
        j["columns"] = t.columns;
        j["rows"] = Json::array();
        for (const auto& row : t.rows) j["rows"].push_back(row);
        out << j.dump(2) << "\n";
        return;
    }
    if (format == "csv") {
        for (std::size_t c = 0; c < t.columns.size(); ++c) out << (c ? "," : "") << t.columns[c];
        out << "\n";
        for (const auto& row : t.rows) {
            for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << cell_text(row[c]);
            out << "\n";
        }
        return;
    }
    for (const auto& note : t.notes) out << "# " << note << "\n";
    std::vector<std::size_t> width(t.columns.size());
    for (std::size_t c = 0; c < t.columns.size(); ++c) width[c] = t.columns[c].size();
    for (const auto& row : t.rows)
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], cell_text(row[c]).size());
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c) out << "  ";
            out << std::setw(static_cast<int>(width[c])) << cells[c];
        }
        out << "\n";
    };
    line(t.columns);
    for (const auto& row : t.rows) {
        std::vector<std::string> cells;
        for (const auto& v : row) cells.push_back(cell_text(v));
        line(cells);
    }
}

// ---------------------------------------------------------------------------
// verify

const std::vector<std::string> kAllClaims = {"theorem1", "theorem2", "theorem4", "corollaries", "prop6", "prop7",
                                             "prop8",    "eq1",      "gf3",      "gf5",         "gf-general"};

int guarded_n_max(const Options& o, int fallback) {
    const int n_max = o.n_max.value_or(fallback);
    if (n_max < 1) throw UsageError("--n-max must be >= 1");
    const int cap = claim_cap();
    if (n_max > cap && !o.unsafe_large_n)
        throw UsageError("--n-max " + std::to_string(n_max) + " exceeds the enumeration cap " + std::to_string(cap) +
                         " (pass --unsafe-large-n or set PERMFIB_MAX_N)");
    return n_max;
}

int word_n_max(const Options& o, int fallback) {
    const int n_max = o.n_max.value_or(fallback);
    if (n_max < 1 || n_max > 14) throw UsageError("--n-max for word claims must be in 1..14");
    return n_max;
}

VerificationReport run_claim(const std::string& claim, const Options& o) {
    if (claim == "theorem1") return check_theorem1(guarded_n_max(o, 9), m_values(o, {3, 4, 5}), true);
    if (claim == "theorem2") return check_theorem2(guarded_n_max(o, 9), true);
    if (claim == "theorem4") return check_theorem4(guarded_n_max(o, 9));
    if (claim == "corollaries") return check_corollaries(guarded_n_max(o, 9));
    if (claim == "prop6") return check_prop6(guarded_n_max(o, 8), m_values(o, {3, 4, 5}), true);
    if (claim == "prop7") return check_prop7(word_n_max(o, 10), m_values(o, {3, 4, 5}));
    if (claim == "prop8") return check_prop8(word_n_max(o, 12));
    if (claim == "eq1") return check_eq1(guarded_n_max(o, 9), true);
    if (claim == "gf3") return check_gf3(m_values(o, {2, 3, 4}), o.order.value_or(7), o.t_order.value_or(5));
    if (claim == "gf5") return check_gf5(m_values(o, {2, 3, 4}), o.order.value_or(7), o.t_order.value_or(5));
    if (claim == "gf-general") return check_gf_general(guarded_n_max(o, 9), m_values(o, {3, 4}), true);
    throw UsageError("unknown claim \"" + claim + "\"");
}

int cmd_verify(const Options& o, std::ostream& out) {
    std::vector<std::string> claims;
    for (const auto& c : o.claims.empty() ? std::vector<std::string>{"all"} : o.claims) {
        if (c == "all")
            claims.insert(claims.end(), kAllClaims.begin(), kAllClaims.end());
        else if (std::find(kAllClaims.begin(), kAllClaims.end(), c) == kAllClaims.end())
            throw UsageError("unknown claim \"" + c + "\"");
        else
            claims.push_back(c);
    }
    const bool timing = !o.no_timestamp;
    std::vector<VerificationReport> reports;
    for (const auto& c : claims) reports.push_back(run_claim(c, o));
    bool all_pass = true;
    for (const auto& r : reports) all_pass = all_pass && r.pass;

    if (o.format == "json") {
        Json j;
        if (timing) j["generated_at"] = utc_timestamp();
        j["pass"] = all_pass;
        j["reports"] = Json::array();
        for (const auto& r : reports) j["reports"].push_back(r.to_json(timing));
        out << j.dump(2) << "\n";
    } else if (o.format == "csv") {
        out << (timing ? "claim,pass,millis\n" : "claim,pass\n");
        for (const auto& r : reports) {
            out << r.claim << "," << (r.pass ? "true" : "false");
            if (timing) out << "," << r.millis;
            out << "\n";
        }
    } else {
        for (const auto& r : reports) {
            out << (r.pass ? "PASS " : "FAIL ") << r.claim << " " << r.params.dump();
            if (timing) out << " (" << r.millis << " ms)";
            out << "\n";
            if (!r.details.empty()) out << "  details: " << r.details.dump() << "\n";
            if (r.counterexample) out << "  counterexample: " << r.counterexample->dump() << "\n";
        }
    }
    return all_pass ? kPass : kFailure;
}

// ---------------------------------------------------------------------------
// stats

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

int cmd_stats(const Options& o, std::ostream& out) {
    if (o.perm.empty()) throw UsageError("stats needs --perm");
    const Permutation p = Permutation::parse(o.perm);
    const StatReport s = statistics(p);
    const Composition L = descent_composition(p);
    const std::vector<std::pair<std::string, int>> scalars = {
        {"des", s.des},         {"pk", s.pk},       {"lpk", s.lpk}, {"rpk", s.rpk}, {"valleys", s.valleys},
        {"right_valleys", s.right_valleys}, {"ipk", s.ipk}, {"ilpk", s.ilpk}};
    if (o.format == "json") {
        Json j;
        j["permutation"] = p.to_string();
        j["inverse"] = inverse(p).to_string();
        for (const auto& [name, value] : scalars) j[name] = value;
        j["descent_composition"] = L.to_string();
        j["descent_positions"] = s.descent_positions;
        j["peak_positions"] = s.peak_positions;
        j["left_peak_positions"] = s.left_peak_positions;
        j["right_valley_positions"] = s.right_valley_positions;
        j["in_N"] = in_N(p);
        j["in_N_prime"] = in_N_prime(p, 3);
        out << j.dump(2) << "\n";
    } else if (o.format == "csv") {
        out << "statistic,value\n";
        for (const auto& [name, value] : scalars) out << name << "," << value << "\n";
    } else {
        out << "permutation          " << p.to_string() << "\n";
        out << "inverse              " << inverse(p).to_string() << "\n";
        for (const auto& [name, value] : scalars) out << std::left << std::setw(21) << name << value << "\n";
        out << "descent composition  " << L.to_string() << "\n";
        out << "descent positions    " << join(s.descent_positions) << "\n";
        out << "peak positions       " << join(s.peak_positions) << "\n";
        out << "left peak positions  " << join(s.left_peak_positions) << "\n";
        out << "right valleys at     " << join(s.right_valley_positions) << "\n";
    }
    return kPass;
}

// ---------------------------------------------------------------------------
// biject

void tiling_lines(const Tiling& t, Json& j, std::ostream* text) {
    j["tiling"] = {{"top", t.top}, {"bottom", t.bottom}};
    if (text) *text << "tiling\n" << t.render();
}

int biject_perm(const Options& o, std::ostream& out) {
    const int m = single_m(o, 3);
    if (m < 3) throw UsageError("--m must be >= 3");
    const Permutation p = Permutation::parse(o.perm);
    const bool text = o.format != "json";
    std::ostringstream body;
    Json j;
    j["permutation"] = p.to_string();

    const CanonicalDecomposition d = canonical_decomposition(p); // throws when lpk != 1
    const Word w = phi(p);
    j["decomposition"] = d.to_string();
    j["phi"] = w.str();
    body << "permutation    " << p.to_string() << "\n";
    body << "decomposition  " << d.to_string() << "\n";
    body << "phi            " << w.str() << "\n";

    const bool nprime = in_N_prime(p, m);
    j["in_N_prime"] = nprime;
    if (!nprime) {
        const std::string pattern = decreasing_pattern(m).to_compact_string();
        const std::string notice = "inverse contains consecutive " + pattern + ": not in N'_n, so phi(p) is not in W_n";
        j["notice"] = notice;
        body << "notice         " << notice << "\n";
    } else if (m == 3) {
        const WSplit split = split_W_word(w);
        const auto blocks = unique_factor_decomposition(split.z);
        const Tiling t = z_to_tiling(split.z);
        j["j"] = split.j;
        j["k"] = split.k;
        j["z"] = split.z.str();
        j["blocks"] = format_blocks(blocks);
        body << "split          j=" << split.j << " k=" << split.k << " z=" << split.z.str() << "\n";
        body << "blocks         " << format_blocks(blocks) << "\n";
        body << "triple         (" << split.j << ", " << split.k << ", tiling)\n";
        tiling_lines(t, j, text ? &body : nullptr);
    } else {
        j["in_W"] = is_in_W(w, m);
        body << "in W (m=" << m << ")     " << (is_in_W(w, m) ? "yes" : "no") << "\n";
    }
    if (text)
        out << body.str();
    else
        out << j.dump(2) << "\n";
    return kPass;
}

int biject_word(const Options& o, std::ostream& out) {
    const int m = single_m(o, 3);
    if (m < 3) throw UsageError("--m must be >= 3");
    const Word w(o.word);
    const bool text = o.format != "json";
    std::ostringstream body;
    Json j;
    j["word"] = w.str();
    body << "word           " << w.str() << "\n";
    bool recognised = false;

    if (z_dfa().accepts(w)) {
        recognised = true;
        const auto blocks = unique_factor_decomposition(w);
        j["Z_k"] = {{"k", w.size()}, {"blocks", format_blocks(blocks)}};
        body << "Z_k            k=" << w.size() << "\n";
        body << "blocks         " << format_blocks(blocks) << "\n";
        tiling_lines(z_to_tiling(w), j, text ? &body : nullptr);
    }
    const bool in_w = is_in_W(w, m);
    j["in_W"] = in_w;
    if (in_w && m == 3) {
        recognised = true;
        const WSplit split = split_W_word(w);
        j["split"] = {{"j", split.j}, {"k", split.k}, {"z", split.z.str()},
                      {"blocks", format_blocks(unique_factor_decomposition(split.z))}};
        body << "W_n split      j=" << split.j << " k=" << split.k << " z=" << split.z.str() << " | "
             << format_blocks(unique_factor_decomposition(split.z)) << "\n";
    } else if (in_w) {
        recognised = true;
        body << "in W (m=" << m << ")     yes\n";
    }
    if (has_N_image_form(w.view())) {
        recognised = true;
        const Permutation p = phi_inverse(w);
        j["phi_inverse"] = p.to_string();
        body << "phi_inverse    " << p.to_string() << "\n";
    }
    if (!recognised)
        throw NotInDomain("\"" + w.str() + "\" is neither in Z_k nor of the form a^i c u a c^j");
    if (text)
        out << body.str();
    else
        out << j.dump(2) << "\n";
    return kPass;
}

int biject_composition(const Options& o, std::ostream& out) {
    const Composition L = Composition::parse(o.composition);
    const Permutation p = zero_ipk_permutation(L);
    if (o.format == "json") {
        Json j;
        j["composition"] = L.to_string();
        j["zero_ipk_permutation"] = p.to_compact_string();
        out << j.dump(2) << "\n";
    } else {
        out << "composition           " << L.to_string() << "\n";
        out << "zero-ipk permutation  " << p.to_compact_string() << "\n";
    }
    return kPass;
}

int cmd_biject(const Options& o, std::ostream& out) {
    const int given = !o.perm.empty() + !o.word.empty() + !o.composition.empty();
    if (given != 1) throw UsageError("biject needs exactly one of --perm, --word, --composition");
    if (o.format == "csv") throw UsageError("biject supports --format text or json");
    if (!o.perm.empty()) return biject_perm(o, out);
    if (!o.word.empty()) return biject_word(o, out);
    return biject_composition(o, out);
}

// ---------------------------------------------------------------------------
// table

int cmd_table(const Options& o, std::ostream& out) {
    Table t;
    t.kind = o.kind;
    if (o.kind == "fib") {
        const int k = o.order.value_or(2);
        const int n_max = o.n_max.value_or(10);
        if (k < 1 || n_max < 0) throw UsageError("fib needs --order >= 1 and --n-max >= 0");
        t.params = {{"order", k}, {"n_max", n_max}};
        t.notes = {"f_0 = 1 and f_n = 0 for n < 0; OEIS entries may use a shifted offset"};
        t.columns = {"n", "f_n"};
        const auto seq = fib_sequence(k, n_max);
        for (int n = 0; n <= n_max; ++n) t.rows.push_back({n, bigint_json(seq[static_cast<std::size_t>(n)])});
    } else if (o.kind == "counts-thm1") {
        const int n_max = guarded_n_max(o, 9);
        const auto ms = m_values(o, {3, 4, 5});
        t.params = {{"n_max", n_max}, {"m", ms}};
        t.columns = {"m", "n", "oracle", "fib"};
        for (int m : ms)
            for (int n = 1; n <= n_max; ++n)
                t.rows.push_back({m, n, count_ipk0_avoiders(n, m, true), bigint_json(fib(m - 1, n))});
    } else if (o.kind == "counts-thm2") {
        const int n_max = guarded_n_max(o, 9);
        t.params = {{"n_max", n_max}};
        t.columns = {"n", "oracle", "closed_form"};
        for (int n = 1; n <= n_max; ++n)
            t.rows.push_back({n, count_ilpk1_avoiders(n, 3, true), bigint_json(theorem2_closed_form(n))});
    } else if (o.kind == "gf-coeffs") {
        const int m = single_m(o, 3);
        const int order = o.order.value_or(10);
        if (order < 0 || order > 200) throw UsageError("--order must be in 0..200");
        t.params = {{"m", m}, {"order", order}};
        t.columns = {"n", "coefficient"};
        const RationalSeries gf = ogf_ilpk_general(m, order);
        for (int n = 0; n <= order; ++n) t.rows.push_back({n, rational_json(gf.coeff(n))});
    } else if (o.kind == "descent-matrix") {
        const int n = o.n_max.value_or(4);
        if (n < 1 || n > 8) throw UsageError("descent-matrix needs --n-max in 1..8");
        t.params = {{"n", n}};
        t.columns = {"L", "M", "count"};
        for (const auto& [key, count] : descent_pair_matrix(n))
            t.rows.push_back({composition_cell(key.first), composition_cell(key.second), count});
    } else {
        throw UsageError("unknown table kind \"" + o.kind + "\"");
    }
    emit_table(t, o.format, out);
    return kPass;
}

// ---------------------------------------------------------------------------
// series

void emit_univariate(const std::string& kind, const Json& params, const RationalSeries& s, const std::string& var,
                     const std::string& format, std::ostream& out) {
    if (format == "text") {
        out << to_string(s, var) << "\n";
        return;
    }
    Table t;
    t.kind = kind;
    t.params = params;
    t.columns = {"degree", "coefficient"};
    const int top = s.is_exact() ? s.degree() : s.order();
    for (int d = 0; d <= top; ++d) t.rows.push_back({d, rational_json(s.coeff(d))});
    emit_table(t, format, out);
}

void emit_bivariate(const std::string& kind, const Json& params, const BivariateSeries& s, const std::string& format,
                    std::ostream& out) {
    if (format == "text") {
        out << to_string(s) << "\n";
        return;
    }
    Table t;
    t.kind = kind;
    t.params = params;
    t.columns = {"x_degree", "t_degree", "coefficient"};
    for (int n = 0; n <= s.order(); ++n) {
        const RationalSeries c = s.coeff(n);
        for (int k = 0; k <= c.order(); ++k) t.rows.push_back({n, k, rational_json(c.coeff(k))});
    }
    emit_table(t, format, out);
}

int cmd_series(const Options& o, std::ostream& out) {
    if (o.kind == "v") {
        const int order = o.order.value_or(5);
        emit_univariate(o.kind, {{"order", order}}, v_of_t(order), "t", o.format, out);
    } else if (o.kind == "ogf-fib" || o.kind == "ogf-ilpk") {
        const int m = single_m(o, 3);
        const int order = o.order.value_or(10);
        if (order > 200) throw UsageError("--order must be <= 200");
        const RationalSeries s = o.kind == "ogf-fib" ? ogf_fib(m, order) : ogf_ilpk_general(m, order);
        emit_univariate(o.kind, {{"m", m}, {"order", order}}, s, "x", o.format, out);
    } else if (o.kind == "ipk-poly" || o.kind == "ilpk-poly") {
        const int m = single_m(o, 3);
        if (!o.n) throw UsageError(o.kind + " needs --n");
        const RationalSeries s = o.kind == "ipk-poly" ? ipk_polynomial(m, *o.n) : ilpk_polynomial(m, *o.n);
        emit_univariate(o.kind, {{"m", m}, {"n", *o.n}}, s, "t", o.format, out);
    } else if (o.kind == "ipk-gf" || o.kind == "ilpk-gf") {
        const int m = single_m(o, 3);
        const int x_order = o.order.value_or(6);
        const int t_order = o.t_order.value_or(3);
        if (x_order > 40 || t_order > 40) throw UsageError("--order and --t-order must be <= 40");
        const BivariateSeries s = o.kind == "ipk-gf" ? ipk_gf_by_substitution(m, x_order, t_order)
                                                     : ilpk_gf_by_substitution(m, x_order, t_order);
        emit_bivariate(o.kind, {{"m", m}, {"x_order", x_order}, {"t_order", t_order}}, s, o.format, out);
    } else {
        throw UsageError("unknown series kind \"" + o.kind + "\"");
    }
    return kPass;
}

} // namespace

int claim_cap() {
    if (const char* env = std::getenv("PERMFIB_MAX_N")) {
        try {
            return std::stoi(env);
        } catch (const std::logic_error&) {
        }
    }
    return 9;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Permutations with few inverse peaks: oracles, bijections and series checks", "permfib"};
    app.require_subcommand(1);
    Options o;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
        sub->add_option("--output", o.output, "Write output to this file instead of stdout");
    };
    auto add_m = [&](CLI::App* sub) { sub->add_option("--m", o.m_list, "Pattern length(s), comma separated"); };

    auto* verify = app.add_subcommand("verify", "Check claims exhaustively over a parameter range");
    verify->add_option("--claim", o.claims, "Claim(s): all, " + CLI::detail::join(kAllClaims, ", "))->delimiter(',');
    verify->add_option("--n-max", o.n_max, "Largest n (or k) to check");
    verify->add_option("--order", o.order, "x truncation order for gf3/gf5");
    verify->add_option("--t-order", o.t_order, "t truncation order for gf3/gf5");
    verify->add_flag("--unsafe-large-n", o.unsafe_large_n, "Allow n beyond the enumeration cap");
    verify->add_flag("--no-timestamp", o.no_timestamp, "Omit timestamps and timings for byte-stable output");
    add_m(verify);
    add_format(verify);

    auto* stats = app.add_subcommand("stats", "Statistics of a permutation");
    stats->add_option("--perm", o.perm, "Permutation, e.g. \"2 3 5 6 8 7 1 4\"")->required();
    add_format(stats);

    auto* biject = app.add_subcommand("biject", "Run the bijections on a permutation, word or composition");
    biject->add_option("--perm", o.perm, "Permutation with one left peak");
    biject->add_option("--word", o.word, "Word over {a,b,c}");
    biject->add_option("--composition", o.composition, "Composition, e.g. 3,2,3,1");
    add_m(biject);
    add_format(biject);

    auto* table = app.add_subcommand("table", "Emit a deterministic table");
    table->add_option("--kind", o.kind, "fib, counts-thm1, counts-thm2, gf-coeffs, descent-matrix")->required();
    table->add_option("--n-max", o.n_max, "Largest n");
    table->add_option("--order", o.order, "Fibonacci order (fib) or truncation order (gf-coeffs)");
    table->add_flag("--unsafe-large-n", o.unsafe_large_n, "Allow n beyond the enumeration cap");
    add_m(table);
    add_format(table);

    auto* series = app.add_subcommand("series", "Print a power series");
    series->add_option("--kind", o.kind, "v, ogf-fib, ogf-ilpk, ipk-poly, ilpk-poly, ipk-gf, ilpk-gf")->required();
    series->add_option("--order", o.order, "Truncation order (x order for the bivariate kinds)");
    series->add_option("--t-order", o.t_order, "t truncation order for ipk-gf/ilpk-gf");
    series->add_option("--n", o.n, "n for ipk-poly/ilpk-poly");
    add_m(series);
    add_format(series);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kPass : kUsage;
    }

    std::ostringstream buffer;
    int code = kPass;
    try {
        if (*verify)
            code = cmd_verify(o, buffer);
        else if (*stats)
            code = cmd_stats(o, buffer);
        else if (*biject)
            code = cmd_biject(o, buffer);
        else if (*table)
            code = cmd_table(o, buffer);
        else
            code = cmd_series(o, buffer);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ResourceLimit& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return kFailure;
    }

    if (o.output.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(o.output, std::ios::binary);
        if (!file) {
            err << "error: cannot open " << o.output << " for writing\n";
            return kUsage;
        }
        file << buffer.str();
    }
    return code;
}

} // namespace permfib::cli
