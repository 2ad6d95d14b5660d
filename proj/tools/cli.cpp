#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "twinlcs/bounds.hpp"
#include "twinlcs/constructions.hpp"
#include "twinlcs/experiments.hpp"
#include "twinlcs/json.hpp"
#include "twinlcs/lcs.hpp"
#include "twinlcs/twins.hpp"
#include "twinlcs/verify.hpp"
#include "twinlcs/word_io.hpp"

namespace twinlcs {

namespace {

using nlohmann::json;

constexpr int schema_version = 1;

struct Globals {
    std::uint64_t seed = 1;
    std::uint64_t budget_cells = 100'000'000;
    bool json = false;
    std::string out;
    bool zero_based = false;
};

struct Output {
    explicit Output(std::string cmd) : command(std::move(cmd)) {}

    std::string command;
    json config = json::object();
    json result = json::object();
    std::vector<std::string> text;
    /// Header and row of the CSV summary written next to --out.
    std::vector<std::pair<std::string, std::string>> summary;
    int status = 0;
};

class VerificationFailed : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string fixed(double x, int digits = 10)
{
    std::ostringstream s;
    s << std::fixed << std::setprecision(digits) << x;
    return s.str();
}

std::string join(const std::vector<std::size_t>& v, std::size_t shift = 0)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? " " : "") + std::to_string(v[i] + shift);
    return s;
}

std::vector<std::size_t> one_based(std::vector<std::size_t> v)
{
    for (auto& x : v)
        ++x;
    return v;
}

class Cli {
public:
    Cli(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

    int run(int argc, const char* const* argv);

private:
    std::ostream& out_;
    std::ostream& err_;
    Globals g_;

    std::vector<Word> load_words(const std::vector<std::string>& args) const;
    std::string show(const Word& w) const { return format_word(w, {.zero_based = g_.zero_based}); }
    LcsOptions lcs_options() const { return {.budget_cells = g_.budget_cells}; }
    void finish(Output& o) const;
};

std::vector<Word> Cli::load_words(const std::vector<std::string>& args) const
{
    std::vector<Word> words;
    const WordParseOptions opts{.zero_based = g_.zero_based};
    for (const auto& a : args) {
        if (!a.empty() && a[0] == '@') {
            std::ifstream in(a.substr(1));
            if (!in)
                throw std::invalid_argument("cannot open word file '" + a.substr(1) + "'");
            std::string line;
            while (std::getline(in, line)) {
                while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
                    line.pop_back();
                if (line.empty() || line[0] == '#')
                    continue;
                words.push_back(parse_word(line, opts));
            }
        } else {
            words.push_back(parse_word(a, opts));
        }
    }
    return words;
}

void Cli::finish(Output& o) const
{
    if (g_.json)
        out_ << o.result.dump(2) << "\n";
    else
        for (const auto& line : o.text)
            out_ << line << "\n";
    if (g_.out.empty())
        return;
    json config = o.config;
    config["seed"] = g_.seed;
    config["budget_cells"] = g_.budget_cells;
    config["zero_based"] = g_.zero_based;
    json record{{"schema_version", schema_version}, {"command", o.command}, {"config", config}, {"result", o.result}};
    std::ofstream jl(g_.out, std::ios::app);
    if (!jl)
        throw std::invalid_argument("cannot write '" + g_.out + "'");
    jl << record.dump() << "\n";
    if (o.summary.empty())
        return;
    std::ofstream csv(g_.out + ".csv");
    csv << "schema_version";
    for (const auto& [k, v] : o.summary)
        csv << "," << k;
    csv << "\n" << schema_version;
    for (const auto& [k, v] : o.summary)
        csv << "," << v;
    csv << "\n";
}

json cert_json(const TwinCertificate& c, const WordFormatOptions& fmt)
{
    json j = c;
    j["word"] = format_word(c.word, fmt);
    j["twin"] = format_word(c.twin(), fmt);
    j["monotone"] = c.monotone();
    if (c.roles.balanced() && c.monotone()) {
        auto s = role_stats(c.roles);
        j["stats"] = {{"m", s.m}, {"p", s.p}, {"z", s.z}};
        j["regular"] = is_regular_pair(c);
    }
    return j;
}

void cert_text(Output& o, const TwinCertificate& c, const WordFormatOptions& fmt)
{
    o.text.push_back("roles: " + c.roles.str());
    o.text.push_back("twin: " + format_word(c.twin(), fmt));
    if (c.monotone()) {
        auto s = role_stats(c.roles);
        o.text.push_back("m=" + std::to_string(s.m) + " p=" + std::to_string(s.p) + " z=" + std::to_string(s.z) +
                         (is_regular_pair(c) ? " regular" : " not regular"));
    } else {
        o.text.push_back("not monotone");
    }
}

std::vector<std::size_t> parse_list(const std::string& text)
{
    std::vector<std::size_t> v;
    std::stringstream s(text);
    std::string item;
    while (std::getline(s, item, ','))
        if (!item.empty())
            v.push_back(std::stoul(item));
    return v;
}

int Cli::run(int argc, const char* const* argv)
{
    CLI::App app{"Longest common subsequences and twins in words"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--seed", g_.seed, "Seed of the counter-based generator");
    app.add_option("--budget-cells", g_.budget_cells, "Cap on dynamic-programming cells");
    app.add_flag("--json", g_.json, "Print the result as JSON");
    app.add_option("--out", g_.out, "Append a JSON-lines record (and a CSV summary for experiments)");
    app.add_flag("--zero-based", g_.zero_based, "Letters are written 0-based (0/1 for binary words)");

    std::function<void()> action;

    // lcs
    auto* lcs = app.add_subcommand("lcs", "LCS of two words with a witness");
    std::vector<std::string> lcs_words;
    bool reversible = false, length_only = false;
    lcs->add_option("words", lcs_words, "Two words (or @file)")->required();
    lcs->add_flag("--reversible", reversible, "Also LCS against the reversed second word");
    lcs->add_flag("--length-only", length_only, "Bit-parallel length, no witness");
    lcs->callback([&] {
        action = [&] {
            auto ws = load_words(lcs_words);
            if (ws.size() != 2)
                throw std::invalid_argument("lcs needs exactly two words");
            Output o{"lcs"};
            o.config["words"] = {show(ws[0]), show(ws[1])};
            if (length_only) {
                auto len = lcs_length(ws[0], ws[1]);
                o.result["length"] = len;
                o.text.push_back("LCS = " + std::to_string(len));
            } else {
                auto r = lcs_pair(ws[0], ws[1], lcs_options());
                const Word common = ws[0].subsequence(r.positions[0]);
                o.result = {{"length", r.length},
                            {"common", show(common)},
                            {"positions", {one_based(r.positions[0]), one_based(r.positions[1])}}};
                o.text.push_back("LCS = " + std::to_string(r.length));
                o.text.push_back("common: " + show(common));
                o.text.push_back("positions in word 1: " + join(r.positions[0], 1));
                o.text.push_back("positions in word 2: " + join(r.positions[1], 1));
            }
            if (reversible) {
                auto r = lcs_reversible(ws[0], ws[1]);
                o.result["lcs_reversed"] = r.lcs_reversed;
                o.result["lcs_reversible"] = r.max;
                o.text.push_back("LCS with reversed word 2 = " + std::to_string(r.lcs_reversed));
                o.text.push_back("reversible LCS = " + std::to_string(r.max));
            }
            finish(o);
        };
    });

    // lcs-set
    auto* lset = app.add_subcommand("lcs-set", "Pairwise LCS table and the best T-subset");
    std::vector<std::string> set_words;
    std::size_t tuple = 2;
    lset->add_option("words", set_words, "Words (or @file)")->required();
    lset->add_option("--tuple", tuple, "Subset size T")->check(CLI::PositiveNumber);
    lset->callback([&] {
        action = [&] {
            auto ws = load_words(set_words);
            auto st = set_lcs_stats(ws, tuple, lcs_options());
            Output o{"lcs-set"};
            json wj = json::array();
            for (const auto& w : ws)
                wj.push_back(show(w));
            o.config = {{"words", wj}, {"tuple", tuple}};
            o.result = {{"pairs", st.pairs}, {"tuple", tuple}, {"lcs_tuple", st.lcs_tuple},
                        {"best_subset", one_based(st.best_subset)}};
            for (const auto& row : st.pairs)
                o.text.push_back(join(row));
            o.text.push_back("LCS_" + std::to_string(tuple) + " = " + std::to_string(st.lcs_tuple) +
                             " (words " + join(st.best_subset, 1) + ")");
            finish(o);
        };
    });

    // twins
    auto* tw = app.add_subcommand("twins", "Longest twins of a word");
    std::string tw_word, tw_roles;
    bool use_oracle = false, use_runs = false, use_blocks = false, use_exact = false;
    std::size_t tuplets = 0;
    TwinSearchOptions search;
    std::uint64_t oracle_budget = OracleOptions{}.max_assignments;
    tw->add_option("word", tw_word, "Word (or @file with one word)")->required();
    auto* ex = tw->add_flag("--exact", use_exact, "Exact search (default)");
    auto* orc = tw->add_flag("--oracle", use_oracle, "Enumeration of role words");
    auto* rn = tw->add_flag("--runs", use_runs, "Twins inside runs");
    auto* bl = tw->add_flag("--blocks", use_blocks, "Block construction");
    auto* tp = tw->add_option("--tuplets", tuplets, "Longest T-tuplets instead of twins")->check(CLI::PositiveNumber);
    auto* ro = tw->add_option("--roles", tw_roles, "Check and regularize the given role word");
    ex->excludes(orc, rn, bl, tp, ro);
    orc->excludes(rn, bl, ro);
    rn->excludes(bl, tp, ro);
    bl->excludes(tp, ro);
    tw->add_option("--max-length", search.max_length, "Exact search length cap");
    tw->add_option("--max-nodes", search.max_nodes, "Exact search node cap");
    tw->add_option("--oracle-budget", oracle_budget, "Cap on enumerated role assignments");
    tw->callback([&] {
        action = [&] {
            auto ws = load_words({tw_word});
            if (ws.size() != 1)
                throw std::invalid_argument("twins needs exactly one word");
            const Word& w = ws[0];
            const WordFormatOptions fmt{.zero_based = g_.zero_based};
            Output o{"twins"};
            o.config = {{"word", show(w)}, {"max_length", search.max_length}, {"max_nodes", search.max_nodes}};
            if (tuplets > 0) {
                o.config["tuplets"] = tuplets;
                o.config["method"] = "tuplets";
                auto v = lt_tuplets(w, tuplets, {.max_assignments = oracle_budget});
                o.result = {{"T", tuplets}, {"length", v}};
                o.text.push_back("LT_" + std::to_string(tuplets) + " = " + std::to_string(v));
            } else if (!tw_roles.empty()) {
                o.config["method"] = "roles";
                auto c = extract(w, RoleWord::parse(tw_roles));
                if (!c)
                    throw std::invalid_argument("the role word does not describe twins of this word");
                o.result["input"] = cert_json(*c, fmt);
                o.text.push_back("input:");
                cert_text(o, *c, fmt);
                if (c->monotone()) {
                    auto r = regularize(*c);
                    o.result["regularized"] = cert_json(r, fmt);
                    o.text.push_back("regularized:");
                    cert_text(o, r, fmt);
                }
            } else if (use_oracle) {
                o.config["method"] = "oracle";
                auto v = lt_oracle(w, {.max_assignments = oracle_budget});
                o.result = {{"length", v}};
                o.text.push_back("LT = " + std::to_string(v));
            } else if (use_runs) {
                o.config["method"] = "runs";
                auto c = twins_via_runs(w);
                o.result = cert_json(c, fmt);
                o.text.push_back("twins from runs: " + std::to_string(c.length()));
                cert_text(o, c, fmt);
            } else if (use_blocks) {
                o.config["method"] = "blocks";
                auto b = twins_via_blocks(w);
                o.result = cert_json(b.cert, fmt);
                o.result["block_lcs"] = b.block_lcs;
                o.result["full_blocks"] = b.full_blocks;
                o.result["per_block_floor"] = b.per_block_floor;
                o.result["meets_floor"] = b.meets_floor();
                o.text.push_back("twins from blocks: " + std::to_string(b.cert.length()) + " over " +
                                 std::to_string(b.full_blocks) + " blocks (per-block floor " +
                                 fixed(b.per_block_floor, 4) + (b.meets_floor() ? ", met)" : ", missed)"));
                cert_text(o, b.cert, fmt);
            } else {
                o.config["method"] = "exact";
                auto c = lt_exact(w, search);
                o.result = cert_json(c, fmt);
                o.text.push_back("LT = " + std::to_string(c.length()));
                cert_text(o, c, fmt);
            }
            finish(o);
        };
    });

    // construct
    auto* con = app.add_subcommand("construct", "Permutation families with small LCS");
    std::string family;
    std::optional<std::uint64_t> p, k, n, s, k1, k2, k3, T, kappa;
    std::string ms;
    bool verify = false;
    con->add_option("family", family, "quadratic | bhn | es | multiperm | tuplet | stratified")
        ->required()
        ->check(CLI::IsMember({"quadratic", "bhn", "es", "multiperm", "tuplet", "stratified"}));
    con->add_option("--p", p, "Prime (quadratic)");
    con->add_option("--k", k, "Alphabet size (auto modes, stratified)");
    con->add_option("--n", n, "Size parameter (bhn) or word length (stratified)");
    con->add_option("--s", s, "Copies per letter");
    con->add_option("--k1", k1);
    con->add_option("--k2", k2);
    con->add_option("--k3", k3);
    con->add_option("--T", T, "Tuple size (tuplet)");
    con->add_option("--kappa", kappa, "Coordinate range (tuplet)");
    con->add_option("--ms", ms, "Comma-separated block lengths (stratified)");
    con->add_flag("--verify", verify, "Measure every ceiling");
    con->callback([&] {
        action = [&] {
            auto need = [](const std::optional<std::uint64_t>& v, const char* name) {
                if (!v)
                    throw std::invalid_argument(std::string("missing --") + name);
                return static_cast<std::size_t>(*v);
            };
            FamilyOutput f;
            if (family == "quadratic") {
                f = p ? quadratic_family(*p, k ? *k : 0) : quadratic_family_for(need(k, "k"));
            } else if (family == "bhn") {
                f = bhn_quadruple(need(n, "n"));
            } else if (family == "es") {
                f = k ? es_pair_auto(*k, need(s, "s")) : es_pair(need(s, "s"), need(k1, "k1"), need(k2, "k2"));
            } else if (family == "multiperm") {
                f = k ? multiperm_quadruple_auto(*k, need(s, "s"))
                      : multiperm_quadruple(need(s, "s"), need(k1, "k1"), need(k2, "k2"), need(k3, "k3"));
            } else if (family == "tuplet") {
                f = tuplet_family(need(T, "T"), need(kappa, "kappa"));
            } else {
                f = stratified_family(need(k, "k"), need(n, "n"), parse_list(ms));
            }
            Output o{"construct"};
            o.config = {{"family", family}, {"params", f.params}, {"verify", verify}};
            o.result = f;
            o.text.push_back("family " + f.family + " " + f.params.dump());
            for (std::size_t i = 0; i < f.words.size(); ++i)
                o.text.push_back("word " + std::to_string(i + 1) + ": " + format_word(f.words[i]));
            auto members = [](const std::vector<std::size_t>& m) { return join(m, 1); };
            if (verify) {
                auto report = verify_family(f, lcs_options());
                o.result["verification"] = report;
                for (const auto& c : report.checks)
                    o.text.push_back(std::string(c.holds ? "PASS " : "FAIL ") + to_string(c.ceiling.statistic) + "(" +
                                     members(c.ceiling.members) + ") = " + std::to_string(c.measured) +
                                     (c.ceiling.exact ? " == " : " <= ") + to_string(c.ceiling.value));
                if (!report.all_hold())
                    o.status = 1;
            } else {
                for (const auto& c : f.ceilings)
                    o.text.push_back("ceiling " + to_string(c.statistic) + "(" + members(c.members) + ")" +
                                     (c.exact ? " == " : " <= ") + to_string(c.value) + "  [" + c.provenance + "]");
            }
            finish(o);
            if (o.status)
                throw VerificationFailed("a ceiling does not hold");
        };
    });

    // bound
    auto* bd = app.add_subcommand("bound", "Counting formulas, probabilities and constants");
    bd->require_subcommand(1);
    std::uint64_t bk = 2, bn = 0, bm = 0, bp = 0, bz = 0;
    long double alpha = 0.5;
    double tol = 1e-12, step = 1e-3;
    bool exact_z = false;

    auto* theta = bd->add_subcommand("theta", "Terms of the exponent at (alpha, k)");
    theta->add_option("--alpha", alpha)->required();
    theta->add_option("--k", bk)->required();
    theta->callback([&] {
        action = [&] {
            auto t = theta_expression(alpha, bk);
            Output o{"bound theta"};
            o.config = {{"alpha", double(alpha)}, {"k", bk}};
            o.result = {{"entropy", double(t.entropy)}, {"alpha_term", double(t.alpha_term)},
                        {"pairing", double(t.pairing)}, {"zeros", double(t.zeros)}, {"total", double(t.total)}};
            o.text = {"entropy    " + fixed(double(t.entropy), 12), "alpha_term " + fixed(double(t.alpha_term), 12),
                      "pairing    " + fixed(double(t.pairing), 12), "zeros      " + fixed(double(t.zeros), 12),
                      "total      " + fixed(double(t.total), 12)};
            finish(o);
        };
    });

    auto* thr = bd->add_subcommand("threshold", "Smallest alpha with negative exponent");
    thr->add_option("--k", bk)->required();
    thr->add_option("--tol", tol);
    thr->add_option("--step", step);
    thr->callback([&] {
        action = [&] {
            auto a = alpha_threshold(bk, tol, step);
            Output o{"bound threshold"};
            o.config = {{"k", bk}, {"tol", tol}, {"step", step}};
            o.result = {{"k", bk}, {"tolerance", tol}};
            if (a) {
                o.result["alpha"] = *a;
                o.result["theta"] = double(theta_expression(*a, bk).total);
                o.text.push_back("alpha = " + fixed(*a, 10) + " (tolerance " + fixed(tol, 12) + ")");
                o.text.push_back("theta(alpha) = " + fixed(double(theta_expression(*a, bk).total), 14));
            } else {
                o.result["alpha"] = nullptr;
                o.text.push_back("none: theta is non-negative on [1/k, 1/2]");
            }
            finish(o);
        };
    });

    auto* uni = bd->add_subcommand("union", "Union bound on Pr[LT >= m]");
    uni->add_option("--k", bk)->required();
    uni->add_option("--n", bn)->required();
    uni->add_option("--m", bm)->required();
    uni->callback([&] {
        action = [&] {
            auto v = union_bound(bk, bn, bm);
            Output o{"bound union"};
            o.config = {{"k", bk}, {"n", bn}, {"m", bm}};
            o.result = {{"value", to_string(v)}, {"decimal", static_cast<double>(v)}};
            o.text.push_back("union bound = " + to_string(v) + " ~ " + fixed(static_cast<double>(v), 12));
            if (bk >= 2 && 2 * bm <= bn) {
                auto d = union_dominant_term(bk, bn, bm);
                o.result["dominant"] = {{"p", d.p}, {"z", d.z}, {"value", to_string(d.value)}};
                o.text.push_back("largest term at p=" + std::to_string(d.p) + ", z=0: " + to_string(d.value));
            }
            finish(o);
        };
    });

    auto* cnt = bd->add_subcommand("count", "Number of role words with statistics (m, p, z)");
    cnt->add_option("--n", bn)->required();
    cnt->add_option("--m", bm)->required();
    cnt->add_option("--p", bp)->required();
    cnt->add_option("--z", bz)->required();
    cnt->add_flag("--exact-z", exact_z, "Exactly z leading zeros instead of at least z");
    cnt->callback([&] {
        action = [&] {
            BigInt v = exact_z ? role_count_exact(bn, bm, bp, bz) : role_count(bn, bm, bp, bz);
            Output o{"bound count"};
            o.config = {{"n", bn}, {"m", bm}, {"p", bp}, {"z", bz}, {"exact_z", exact_z}};
            o.result = {{"value", v.str()}};
            o.text.push_back(v.str());
            finish(o);
        };
    });

    auto* prb = bd->add_subcommand("prob", "Probability of a regular pair with given role statistics");
    prb->add_option("--k", bk)->required();
    prb->add_option("--n", bn)->required();
    prb->add_option("--m", bm)->required();
    prb->add_option("--p", bp)->required();
    prb->add_option("--z", bz)->required();
    prb->callback([&] {
        action = [&] {
            auto v = role_prob(bk, bn, bm, bp, bz);
            Output o{"bound prob"};
            o.config = {{"k", bk}, {"n", bn}, {"m", bm}, {"p", bp}, {"z", bz}};
            o.result = {{"value", to_string(v)}, {"decimal", static_cast<double>(v)}};
            o.text.push_back(to_string(v) + " ~ " + fixed(static_cast<double>(v), 12));
            finish(o);
        };
    });

    auto* cst = bd->add_subcommand("constants", "Lower-bound constants and large-k forms");
    cst->add_option("--k", bk)->required();
    cst->callback([&] {
        action = [&] {
            auto v = lower_bound_values(bk);
            auto a = asymptotic_upper(bk);
            Output o{"bound constants"};
            o.config = {{"k", bk}};
            o.result = {{"trivial", v.trivial},
                        {"improved", v.improved ? json(*v.improved) : json(nullptr)},
                        {"slope", v.slope},
                        {"offset", v.offset},
                        {"minmax_closed", v.minmax_closed},
                        {"minmax_numeric", v.minmax_numeric},
                        {"minmax_argmin", v.minmax_argmin},
                        {"minmax_beats_improved", v.minmax_beats_improved},
                        {"app_form", a.app_form},
                        {"refined_form", a.refined_form}};
            o.text = {"1/k                        " + fixed(v.trivial, 12),
                      "1.02/k                     " + (v.improved ? fixed(*v.improved, 12) : std::string("n/a (k < 3)")),
                      "3^(-4/3) k^(-2/3)          " + fixed(v.slope, 12),
                      "3^(-1/3) k^(1/3)           " + fixed(v.offset, 12),
                      "(4-sqrt 11)/2              " + fixed(v.minmax_closed, 12),
                      "min-max, numeric           " + fixed(v.minmax_numeric, 12) + " at x=" + fixed(v.minmax_argmin, 12),
                      "(4-sqrt 11)/2 > 1.02/3     " + std::string(v.minmax_beats_improved ? "yes" : "no"),
                      "e/sqrt k - e^2/k           " + fixed(a.app_form, 12),
                      "e/sqrt k - (e^2+1/2)/k     " + fixed(a.refined_form, 12)};
            finish(o);
        };
    });

    // experiment
    auto* exp = app.add_subcommand("experiment", "Seeded experiments");
    exp->require_subcommand(1);
    ExperimentConfig ecfg;
    std::size_t ek = 2, en = 12;
    double ealpha = 0.5;
    auto* tail = exp->add_subcommand("lt-tail", "Pr[LT(w) >= ceil(alpha n)] for uniform words");
    tail->add_option("--k", ek)->required();
    tail->add_option("--n", en)->required();
    tail->add_option("--alpha", ealpha)->required();
    tail->add_option("--trials", ecfg.trials);
    tail->add_option("--exhaustive-limit", ecfg.exhaustive_limit, "Enumerate when k^n is at most this");
    tail->add_option("--max-nodes", ecfg.search.max_nodes);
    tail->callback([&] {
        action = [&] {
            ecfg.seed = g_.seed;
            auto e = estimate_lt_tail(ek, en, ealpha, ecfg);
            Output o{"experiment lt-tail"};
            o.config = {{"k", ek}, {"n", en}, {"alpha", ealpha}, {"trials", ecfg.trials},
                        {"exhaustive_limit", ecfg.exhaustive_limit}, {"z", ecfg.z}};
            o.result = {{"m", e.m}, {"exhaustive", e.exhaustive}, {"hits", e.hits}, {"trials", e.trials},
                        {"fraction", e.fraction}, {"interval", {e.interval.lo, e.interval.hi}}};
            if (e.exact)
                o.result["exact"] = to_string(*e.exact);
            o.text.push_back("m = " + std::to_string(e.m) + ", " + (e.exhaustive ? "exhaustive" : "Monte Carlo"));
            o.text.push_back(std::to_string(e.hits) + " / " + std::to_string(e.trials) + " = " + fixed(e.fraction, 8) +
                             (e.exact ? " (" + to_string(*e.exact) + ")" : ""));
            if (!e.exhaustive)
                o.text.push_back("Wilson interval [" + fixed(e.interval.lo, 8) + ", " + fixed(e.interval.hi, 8) + "]");
            std::string ub = "";
            if (2 * e.m <= en) {
                auto u = union_bound(ek, en, e.m);
                ub = fixed(static_cast<double>(u), 12);
                o.result["union_bound"] = to_string(u);
                o.text.push_back("union bound " + to_string(u) + " ~ " + ub);
            }
            o.summary = {{"k", std::to_string(ek)}, {"n", std::to_string(en)}, {"alpha", fixed(ealpha, 6)},
                         {"m", std::to_string(e.m)}, {"trials", std::to_string(e.trials)},
                         {"hits", std::to_string(e.hits)}, {"fraction", fixed(e.fraction, 10)},
                         {"lo", fixed(e.interval.lo, 10)}, {"hi", fixed(e.interval.hi, 10)}, {"union_bound", ub}};
            finish(o);
        };
    });

    ConjectureConfig ccfg;
    std::size_t ck = 3;
    auto* conj = exp->add_subcommand("conjecture", "Local minima of E[LCS] over distributions on permutations");
    conj->add_option("--k", ck)->required();
    conj->add_option("--starts", ccfg.starts, "Random starts after the uniform one");
    conj->add_option("--max-iterations", ccfg.max_iterations);
    conj->add_option("--max-k", ccfg.max_k);
    conj->callback([&] {
        action = [&] {
            ccfg.seed = g_.seed;
            auto r = minimize_expected_lcs(ck, ccfg);
            Output o{"experiment conjecture"};
            o.config = {{"k", ck}, {"starts", ccfg.starts}, {"max_iterations", ccfg.max_iterations}};
            json support = json::array();
            for (std::size_t i = 0; i < r.distribution.perms.size(); ++i)
                support.push_back({{"perm", format_word(r.distribution.perms[i])}, {"weight", r.distribution.weights[i]}});
            o.result = {{"value", r.value}, {"uniform", r.uniform}, {"sqrt_k", r.sqrt_k}, {"kkt_gap", r.kkt_gap},
                        {"best_start", r.best_start}, {"starts_run", r.starts_run},
                        {"counterexample", r.counterexample()}, {"support", support}};
            o.text.push_back("best local minimum " + fixed(r.value, 12) + " (start " + std::to_string(r.best_start) +
                             " of " + std::to_string(r.starts_run) + ", KKT gap " + fixed(r.kkt_gap, 3) + ")");
            o.text.push_back("uniform " + fixed(r.uniform, 12) + ", sqrt k " + fixed(r.sqrt_k, 12));
            for (std::size_t i = 0; i < r.distribution.perms.size(); ++i)
                o.text.push_back("  " + format_word(r.distribution.perms[i]) + "  " + fixed(r.distribution.weights[i], 12));
            if (r.counterexample()) {
                o.text.push_back("COUNTEREXAMPLE: value below sqrt k");
                o.status = 1;
            }
            o.summary = {{"k", std::to_string(ck)}, {"starts", std::to_string(r.starts_run)},
                         {"value", fixed(r.value, 12)}, {"uniform", fixed(r.uniform, 12)},
                         {"sqrt_k", fixed(r.sqrt_k, 12)}, {"counterexample", r.counterexample() ? "1" : "0"}};
            finish(o);
            if (o.status)
                throw VerificationFailed("expected LCS below sqrt k");
        };
    });

    // verify
    auto* ver = app.add_subcommand("verify", "Run a verification suite");
    std::string suite;
    ver->add_option("suite", suite, "constructions | roles | twins-oracle | bounds | lemmas")->required();
    ver->callback([&] {
        action = [&] {
            auto report = verify_suite(suite, g_.seed);
            Output o{"verify"};
            o.config = {{"suite", suite}};
            json checks = json::array();
            for (const auto& c : report.checks) {
                checks.push_back({{"name", c.name}, {"passed", c.passed}, {"cases", c.cases}, {"detail", c.detail}});
                o.text.push_back(std::string(c.passed ? "PASS " : "FAIL ") + c.name + ": " + c.detail);
            }
            o.result = {{"suite", suite}, {"passed", report.passed()}, {"checks", checks}};
            finish(o);
            if (!report.passed())
                throw VerificationFailed("suite " + suite + " failed");
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out_, err_) == 0 ? 0 : 2;
    }
    try {
        if (action)
            action();
        return 0;
    } catch (const VerificationFailed& e) {
        err_ << "verification failed: " << e.what() << "\n";
        return 1;
    } catch (const ResourceLimitError& e) {
        err_ << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err_ << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    Cli cli(out, err);
    return cli.run(argc, argv);
}

} // namespace twinlcs
