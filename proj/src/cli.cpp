#include "wavenum/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "wavenum/bench.hpp"
#include "wavenum/conumber_sieve.hpp"
#include "wavenum/errors.hpp"
#include "wavenum/modular_rep.hpp"
#include "wavenum/oracle.hpp"
#include "wavenum/report_io.hpp"
#include "wavenum/table_fixture.hpp"
#include "wavenum/wave_core.hpp"

namespace wavenum::cli {

namespace {

using io::json;

constexpr std::uint64_t kMinPhaseBudget = 10'000;
constexpr std::uint64_t kMinBenchLimit = 1'000;
constexpr const char* kBudgetEnv = "WAVENUM_PHASE_BUDGET";

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Budget or capacity stop; whatever was produced so far is still emitted.
class BudgetStop : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string subcommand;
    std::uint64_t limit = 0;
    std::size_t iterations = 0;
    std::string mode = "conservative";
    std::uint64_t phase_budget = kDefaultPhaseBudget;
    std::string format = "text";
    std::string out_path;
    std::uint64_t chunk_size = 1 << 16;
    unsigned jobs = 1;

    std::string primes;
    bool check = false;
    std::string fixture;

    std::size_t n_max = 6;
    bool equality_report = false;

    std::string wheel_primes = "2,3,5";

    std::uint64_t wave = 0;
    std::uint64_t conumber = 0;
    std::string conumber_product;
    std::uint64_t terms = 0;
    bool unreduced = false;
    bool classic_display = false;

    Mode run_mode() const { return mode == "maximal" ? Mode::Maximal : Mode::Conservative; }
    RunOptions run_options() const { return RunOptions{phase_budget, ScanOptions{jobs, chunk_size}}; }
};

std::vector<std::uint64_t> parse_list(const std::string& text, const char* flag)
{
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw UsageError(std::string(flag) + ": expected comma-separated positive integers, got '" + text + "'");
        out.push_back(std::stoull(item));
    }
    if (out.empty())
        throw UsageError(std::string(flag) + ": empty list");
    return out;
}

std::string join(const std::vector<std::uint64_t>& v, char sep = ' ')
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

json config_json(const RunConfig& c)
{
    json j = {{"subcommand", c.subcommand}, {"format", c.format}};
    if (c.subcommand == "primes" || c.subcommand == "schedule") {
        j["limit"] = c.limit;
        j["iterations"] = c.iterations;
        j["mode"] = c.mode;
        j["phase_budget"] = c.phase_budget;
        j["jobs"] = c.jobs;
        j["chunk_size"] = c.chunk_size;
    } else if (c.subcommand == "table1") {
        j["primes"] = c.primes;
        j["check"] = c.check;
    } else if (c.subcommand == "verify") {
        j["n_max"] = c.n_max;
        j["theorem9"] = c.equality_report;
        j["phase_budget"] = c.phase_budget;
        j["jobs"] = c.jobs;
        j["chunk_size"] = c.chunk_size;
    } else if (c.subcommand == "bench") {
        j["limit"] = c.limit;
        j["wheel_primes"] = c.wheel_primes;
        j["phase_budget"] = c.phase_budget;
    } else if (c.subcommand == "render") {
        j["wave"] = c.wave;
        j["conumber"] = c.conumber;
        j["conumber_product"] = c.conumber_product;
        j["terms"] = c.terms;
        j["unreduced"] = c.unreduced;
        j["eq16"] = c.classic_display;
    }
    return j;
}

// primes / schedule

void emit_run(const RunConfig& cfg, const RunResult& r, std::ostream& os)
{
    if (cfg.format == "json") {
        json windows = json::array();
        for (const auto& w : r.windows)
            windows.push_back(io::to_json(w, false));
        json schedule = json::array();
        for (const auto& e : r.schedule)
            schedule.push_back(io::to_json(e));
        json data = {{"mode", cfg.mode},
                     {"windows", windows},
                     {"schedule", schedule},
                     {"primes", r.primes},
                     {"phases_scanned", r.phases_scanned},
                     {"budget_exhausted", r.budget_exhausted}};
        if (cfg.subcommand == "schedule")
            data = schedule;
        os << io::document(cfg.subcommand, config_json(cfg), data).dump(2) << '\n';
        return;
    }
    if (cfg.format == "csv") {
        os << (cfg.subcommand == "schedule" ? io::schedule_csv(r.schedule) : io::windows_csv(r.windows));
        return;
    }

    if (cfg.subcommand == "primes") {
        for (const auto& w : r.windows)
            os << "window N=" << w.iteration << " [" << w.lo << ", " << w.hi << "): " << join(w.surviving_phases)
               << " | " << (w.match ? "match" : "mismatch") << '\n';
    }
    if (cfg.subcommand == "schedule" || r.mode == Mode::Maximal) {
        for (const auto& e : r.schedule) {
            os << "iteration " << e.iteration << ": window [" << e.lo << ", " << e.hi.get_str() << ")";
            if (e.budget_exhausted) {
                os << " not scanned, phase budget exhausted\n";
                continue;
            }
            os << " largest " << *e.largest_prime << ", identified " << e.count_identified;
            if (e.estimate)
                os << ", estimate " << io::format_double(*e.estimate) << ", relative error "
                   << io::format_double(*e.relative_error);
            os << '\n';
        }
    }
    if (cfg.subcommand == "primes")
        os << "primes (" << r.primes.size() << "): " << join(r.primes) << '\n';
    if (r.budget_exhausted)
        os << "stopped: phase budget " << cfg.phase_budget << " exhausted after " << r.phases_scanned
           << " phases\n";
}

int cmd_primes(const RunConfig& cfg, std::ostream& os)
{
    if (cfg.subcommand == "primes") {
        if ((cfg.limit == 0) == (cfg.iterations == 0))
            throw UsageError("primes: give exactly one of --limit or --iterations");
        if (cfg.limit != 0 && cfg.limit < 3)
            throw UsageError("primes: --limit must be >= 3");
    } else if (cfg.iterations == 0) {
        throw UsageError("schedule: --iterations must be >= 1");
    }

    const RunResult r = cfg.limit ? run_until(cfg.limit, cfg.run_mode(), cfg.run_options())
                                  : run_schedule(cfg.iterations, cfg.run_mode(), cfg.run_options());
    emit_run(cfg, r, os);
    return r.budget_exhausted ? kBudget : kSuccess;
}

// table1

std::string first_difference(const std::string& expected, const std::string& actual)
{
    std::istringstream e(expected), a(actual);
    std::string el, al;
    for (int line = 1;; ++line) {
        const bool he = static_cast<bool>(std::getline(e, el));
        const bool ha = static_cast<bool>(std::getline(a, al));
        if (!he && !ha)
            return {};
        if (!he || !ha || el != al)
            return "line " + std::to_string(line) + ": expected '" + (he ? el : "<eof>") + "', got '" +
                   (ha ? al : "<eof>") + "'";
    }
}

int cmd_table1(const RunConfig& cfg, std::ostream& os, std::ostream& err)
{
    const auto primes = cfg.primes.empty() ? std::vector<std::uint64_t>{2, 3, 5} : parse_list(cfg.primes, "--primes");
    ModularTable table;
    try {
        table = modular_table(primes);
    } catch (const CapacityError& e) {
        throw BudgetStop(e.what());
    }

    const std::string csv = io::table_csv(table);
    if (cfg.format == "json") {
        os << io::document("table1", config_json(cfg), io::to_json(table)).dump(2) << '\n';
    } else if (cfg.format == "csv") {
        os << csv;
    } else {
        auto row = [&](const std::string& label, auto value_of) {
            os << label;
            for (const auto& col : table.columns)
                os << ' ' << value_of(col).str();
            os << '\n';
        };
        for (std::size_t i = 0; i < table.primes.size(); ++i)
            row("*" + std::to_string(table.primes[i]), [i](const TableColumn& c) { return c.rows[i]; });
        row("U", [](const TableColumn& c) { return c.product; });
    }

    if (!cfg.check)
        return kSuccess;

    std::string expected;
    if (!cfg.fixture.empty()) {
        std::ifstream in(cfg.fixture, std::ios::binary);
        if (!in)
            throw UsageError("table1: cannot read fixture " + cfg.fixture);
        expected.assign(std::istreambuf_iterator<char>(in), {});
    } else if (primes == std::vector<std::uint64_t>{2, 3, 5}) {
        expected = kReferenceTable235Csv;
    } else {
        throw UsageError("table1: --check without --fixture only covers --primes 2,3,5");
    }

    const std::string diff = first_difference(expected, csv);
    if (!diff.empty()) {
        err << "table check: mismatch at " << diff << '\n';
        return kMismatch;
    }
    err << "table check: match (" << table.columns.size() << " columns)\n";
    return kSuccess;
}

// verify

struct CheckLine {
    std::string status;  // PASS, FAIL, INFO, STOP
    std::string name;
    std::string detail;
};

class Verifier {
public:
    explicit Verifier(const RunConfig& cfg) : cfg_(cfg), remaining_(cfg.phase_budget) {}

    void run()
    {
        SieveState state = initial_state();
        const ScanOptions scan{cfg_.jobs, cfg_.chunk_size};
        for (std::size_t n = 1; n <= cfg_.n_max; ++n) {
            const std::uint64_t lo = state.next_prime;
            const std::uint64_t hi = lo * lo;
            const std::string tag = "N=" + std::to_string(n);

            spend(hi - lo, "window " + tag);
            const WindowReport w = window_primes(state, scan);
            add(w.match, "window " + tag,
                range(lo, hi) + ": " + std::to_string(w.surviving_phases.size()) + " primes" +
                    (w.match ? "" : ", " + describe_mismatch(w)));
            if (!w.match)
                return;

            const CoProduct& cp = state.coproduct;
            const auto truth = oracle::sieve(hi - 1);

            spend(hi - 1, "zero characterization " + tag);
            add(zeros_match_gcd(cp, hi), "zeros " + tag, "Zero iff gcd(k, " + cp.period().get_str() + ") > 1 on " +
                                                             range(1, hi));

            spend(hi - 1, "natural/prime zero equivalence " + tag);
            add(zeros_equivalence_check(lo - 1, hi - 1), "zero-equivalence " + tag,
                "divisors 2.." + std::to_string(lo - 1) + " vs primes on " + range(1, hi));

            spend(hi - cp.primes().back(), "circle-sum " + tag);
            add(circle_sum_agrees(cp.primes(), truth, hi), "circle-sum " + tag,
                "(" + std::to_string(cp.primes().back()) + ", " + std::to_string(hi) + ") against oracle primality");

            if (cp.period() <= to_big(kDensityPeriodCap)) {
                const std::uint64_t period = to_u64(cp.period());
                spend(period, "period checks " + tag);
                period_checks(cp, period, tag);
            }

            if (cfg_.equality_report)
                equality_checks(cp, lo, truth, tag);

            state = recursion_step(state, w);
        }
        schedule_check();
    }

    const std::vector<CheckLine>& lines() const noexcept { return lines_; }
    bool failed() const noexcept
    {
        return std::any_of(lines_.begin(), lines_.end(), [](const CheckLine& l) { return l.status == "FAIL"; });
    }

    void stop(const std::string& what) { lines_.push_back({"STOP", "budget", what}); }

private:
    static constexpr std::uint64_t kDensityPeriodCap = 1'000'000;
    static constexpr std::uint64_t kPermutationPeriodCap = 30'030;

    static std::string range(std::uint64_t lo, std::uint64_t hi)
    {
        return "[" + std::to_string(lo) + ", " + std::to_string(hi) + ")";
    }

    void add(bool ok, std::string name, std::string detail)
    {
        lines_.push_back({ok ? "PASS" : "FAIL", std::move(name), std::move(detail)});
    }

    void spend(std::uint64_t phases, const std::string& what)
    {
        if (phases > remaining_)
            throw BudgetStop(what + " needs " + std::to_string(phases) + " phases, " + std::to_string(remaining_) +
                             " left of " + std::to_string(cfg_.phase_budget));
        remaining_ -= phases;
    }

    static bool zeros_match_gcd(const CoProduct& cp, std::uint64_t hi)
    {
        for (std::uint64_t k = 1; k < hi; ++k) {
            const bool zero = coproduct_value(cp, static_cast<std::int64_t>(k)).is_zero();
            if (zero != (gcd(to_big(k), cp.period()) > 1))
                return false;
        }
        return true;
    }

    static bool circle_sum_agrees(const std::vector<std::uint64_t>& primes, const oracle::PrimeTable& truth,
                                  std::uint64_t hi)
    {
        for (std::uint64_t k = primes.back() + 1; k < hi; ++k)
            if (circle_sum_test(primes, k) != truth.contains(k))
                return false;
        return true;
    }

    void period_checks(const CoProduct& cp, std::uint64_t period, const std::string& tag)
    {
        const auto survivors = scan_window(cp, 1, period + 1, ScanOptions{cfg_.jobs, cfg_.chunk_size});
        const Rational density = zeta_proportion(cp.primes());
        Rational counted(to_big(survivors.size()), cp.period());
        counted.canonicalize();
        add(density == counted, "density " + tag,
            "nonzero fraction over one period " + counted.get_str() + " vs product " + density.get_str());

        const ModularCoProduct mcp(cp.primes());
        bool blank_ok = true;
        std::vector<char> hit(period <= kPermutationPeriodCap ? period : 0, 0);
        bool bijective = true;
        for (std::uint64_t k = 1; k <= period; ++k) {
            const ModularFrequency v = modular_product_value(mcp, k);
            if (v.is_blank() != cp.vanishes_at(k))
                blank_ok = false;
            if (!hit.empty() && !v.is_blank()) {
                const std::uint64_t r = to_u64(v.numerator());
                if (hit[r] || std::gcd(r, period) != 1)
                    bijective = false;
                hit[r] = 1;
            }
        }
        add(blank_ok, "blank-equivalence " + tag, "modular Blank iff co-number Zero over one period");
        if (!hit.empty())
            add(bijective, "unit-permutation " + tag, "non-Blank values are a permutation of the units mod " +
                                                          std::to_string(period));
    }

    void equality_checks(const CoProduct& cp, std::uint64_t next, const oracle::PrimeTable& truth,
                         const std::string& tag)
    {
        const EqualityFilterReport r = equality_filter(cp.primes(), next);
        add(r.window_nonzero_phases == truth.range(r.lo, r.window_hi), "modular-nonzero " + tag,
            "non-Blank phases in " + range(r.lo, r.window_hi) + " equal oracle primes");

        std::string detail = "agreement=" + std::string(r.agreement ? "true" : "false") + " on " +
                             range(r.lo, r.truncated_hi) + ", agreement=" + (r.window_agreement ? "true" : "false") +
                             " on " + range(r.lo, r.window_hi) +
                             ", idempotent weights=" + (r.weights_idempotent ? "true" : "false");
        if (!r.window_witnesses.empty())
            detail += ", first witness k=" + std::to_string(r.window_witnesses.front().first) + " -> " +
                      r.window_witnesses.front().second.get_str() + "/" + r.period.get_str();
        lines_.push_back({"INFO", "equality-filter " + tag, detail});
    }

    void schedule_check()
    {
        const std::size_t iterations = std::min<std::size_t>(cfg_.n_max, 3);
        RunOptions options{remaining_, ScanOptions{cfg_.jobs, cfg_.chunk_size}};
        const RunResult r = run_schedule(iterations, Mode::Maximal, options);
        if (r.budget_exhausted)
            throw BudgetStop("maximal schedule iteration " + std::to_string(r.schedule.size()) +
                             " exceeds the remaining phase budget");
        remaining_ -= r.phases_scanned;

        bool ok = true;
        std::vector<std::uint64_t> largest;
        std::uint64_t expect = 7;
        for (const auto& e : r.schedule) {
            largest.push_back(*e.largest_prime);
            ok = ok && *e.largest_prime == expect;
            expect = oracle::largest_prime_below(expect * expect);
        }
        add(ok, "schedule maximal", "largest primes " + join(largest));
    }

    const RunConfig& cfg_;
    std::uint64_t remaining_;
    std::vector<CheckLine> lines_;
};

int cmd_verify(const RunConfig& cfg, std::ostream& os)
{
    if (cfg.n_max == 0)
        throw UsageError("verify: --n-max must be >= 1");

    Verifier v(cfg);
    bool stopped = false;
    try {
        v.run();
    } catch (const BudgetStop& e) {
        v.stop(e.what());
        stopped = true;
    }

    std::size_t pass = 0, fail = 0, info = 0;
    for (const auto& l : v.lines()) {
        pass += l.status == "PASS";
        fail += l.status == "FAIL";
        info += l.status == "INFO";
    }

    if (cfg.format == "json") {
        json checks = json::array();
        for (const auto& l : v.lines())
            checks.push_back({{"status", l.status}, {"check", l.name}, {"detail", l.detail}});
        json data = {{"checks", checks}, {"passed", pass}, {"failed", fail}, {"info", info}, {"stopped", stopped}};
        os << io::document("verify", config_json(cfg), data).dump(2) << '\n';
    } else if (cfg.format == "csv") {
        os << "status,check,detail\n";
        for (const auto& l : v.lines())
            os << l.status << ',' << l.name << ",\"" << l.detail << "\"\n";
    } else {
        for (const auto& l : v.lines())
            os << l.status << ' ' << l.name << ": " << l.detail << '\n';
        os << "summary: " << pass << " passed, " << fail << " failed, " << info << " info\n";
    }

    if (v.failed())
        return kMismatch;
    return stopped ? kBudget : kSuccess;
}

// bench

int cmd_bench(const RunConfig& cfg, std::ostream& os)
{
    if (cfg.limit < kMinBenchLimit)
        throw UsageError("bench: --limit must be >= " + std::to_string(kMinBenchLimit));
    if (cfg.limit > cfg.phase_budget)
        throw BudgetStop("bench: limit " + std::to_string(cfg.limit) + " exceeds phase budget " +
                         std::to_string(cfg.phase_budget));

    auto wheel = parse_list(cfg.wheel_primes, "--wheel-primes");
    std::sort(wheel.begin(), wheel.end());
    if (std::adjacent_find(wheel.begin(), wheel.end()) != wheel.end())
        throw UsageError("--wheel-primes: duplicate prime");
    for (auto p : wheel)
        if (!oracle::is_prime_trial(p))
            throw UsageError("--wheel-primes: " + std::to_string(p) + " is not prime");

    bench::BenchReport r;
    try {
        r = bench::run_bench(cfg.limit, wheel);
    } catch (const CapacityError& e) {
        throw BudgetStop(e.what());
    }

    const std::string density = r.density.get_str();
    if (cfg.format == "json") {
        auto method = [](const bench::MethodTiming& m) {
            return json{{"candidates", m.candidates}, {"primes_found", m.primes_found}, {"wall_ns", m.wall.count()}};
        };
        json data = {{"limit", r.limit},
                     {"wheel_primes", r.wheel_primes},
                     {"period", r.period.get_str()},
                     {"density", density},
                     {"period_candidates", r.period_candidates},
                     {"expected_period_candidates", r.expected_period_candidates.get_str()},
                     {"baseline", method(r.baseline)},
                     {"wheel", method(r.wheel)},
                     {"counts_agree", r.counts_agree},
                     {"period_exact", r.period_exact}};
        os << io::document("bench", config_json(cfg), data).dump(2) << '\n';
    } else if (cfg.format == "text") {
        os << "limit " << r.limit << ", wheel " << join(r.wheel_primes, ',') << ", period " << r.period.get_str()
           << ", density " << density << '\n';
        os << "baseline sieve: " << r.baseline.candidates << " phases, " << r.baseline.primes_found << " primes, "
           << r.baseline.wall.count() << " ns\n";
        os << "wheel enumeration: " << r.wheel.candidates << " candidates, " << r.wheel.primes_found << " primes, "
           << r.wheel.wall.count() << " ns\n";
        os << "one period: " << r.period_candidates << " candidates, expected " << r.expected_period_candidates.get_str()
           << '\n';
    } else {
        os << "method,limit,wheel_primes,period,density,candidates,primes_found,period_candidates,wall_ns\n";
        os << "baseline," << r.limit << ",,,1," << r.baseline.candidates << ',' << r.baseline.primes_found << ",,"
           << r.baseline.wall.count() << '\n';
        os << "wheel," << r.limit << ',' << join(r.wheel_primes) << ',' << r.period.get_str() << ',' << density << ','
           << r.wheel.candidates << ',' << r.wheel.primes_found << ',' << r.period_candidates << ','
           << r.wheel.wall.count() << '\n';
    }
    return r.counts_agree && r.period_exact ? kSuccess : kMismatch;
}

// render

int cmd_render(const RunConfig& cfg, std::ostream& os)
{
    const int sources = (cfg.wave != 0) + (cfg.conumber != 0) + !cfg.conumber_product.empty() + cfg.classic_display;
    if (sources != 1)
        throw UsageError("render: give exactly one of --wave, --conumber, --conumber-product, --eq16");

    std::vector<Component> components;
    bool unreduced = cfg.unreduced;
    std::uint64_t terms = cfg.terms;
    if (cfg.wave) {
        components.push_back({to_big(cfg.wave), DecompositionKind::Plain});
    } else if (cfg.conumber) {
        components.push_back({to_big(cfg.conumber), DecompositionKind::Star});
    } else {
        const auto list = cfg.classic_display ? std::vector<std::uint64_t>{2, 3} : parse_list(cfg.conumber_product, "--conumber-product");
        for (auto n : list) {
            if (n == 0)
                throw UsageError("--conumber-product: wavelengths must be >= 1");
            components.push_back({to_big(n), DecompositionKind::Star});
        }
        if (cfg.classic_display) {
            unreduced = true;
            terms = terms ? terms : 36;
        }
    }

    BigInt period = 1;
    for (const auto& c : components)
        period *= c.wavelength;
    if (period > to_big(kDefaultMaterializationCap))
        throw BudgetStop("render: period " + period.get_str() + " exceeds materialization cap " +
                         std::to_string(kDefaultMaterializationCap));
    if (terms == 0)
        terms = to_u64(period);
    if (terms > kDefaultMaterializationCap)
        throw BudgetStop("render: " + std::to_string(terms) + " terms exceed materialization cap " +
                         std::to_string(kDefaultMaterializationCap));

    std::vector<std::string> values;
    values.reserve(terms);
    for (std::uint64_t k = 1; k <= terms; ++k) {
        const Term t = components.size() == 1 ? term_at(components[0].wavelength, to_big(k), components[0].kind)
                                              : elementwise_product_term(components, to_big(k));
        values.push_back(t.str(unreduced));
    }

    if (cfg.format == "json") {
        os << io::document("render", config_json(cfg), json{{"period", period.get_str()}, {"terms", values}}).dump(2)
           << '\n';
    } else if (cfg.format == "csv") {
        os << "k,value\n";
        for (std::size_t i = 0; i < values.size(); ++i)
            os << i + 1 << ',' << values[i] << '\n';
    } else {
        for (std::size_t i = 0; i < values.size(); ++i)
            os << (i ? " " : "") << values[i];
        os << '\n';
        if (cfg.classic_display)
            os << "note: nonzero phases carry frequency k/6 at phase k, so the fifth and sixth blocks read "
                  "25/6 29/6 31/6 35/6\n";
    }
    return kSuccess;
}

void add_run_options(CLI::App& sub, RunConfig& cfg)
{
    sub.add_option("--phase-budget", cfg.phase_budget, "Maximum phases scanned (env " + std::string(kBudgetEnv) + ")");
    sub.add_option("--jobs", cfg.jobs, "Threads used for window scans")->check(CLI::PositiveNumber);
    sub.add_option("--chunk-size", cfg.chunk_size, "Phases per scan chunk")->check(CLI::PositiveNumber);
}

void add_output_options(CLI::App& sub, RunConfig& cfg)
{
    sub.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    sub.add_option("--out", cfg.out_path, "Write output to PATH instead of stdout");
}

std::optional<std::uint64_t> budget_from_env()
{
    const char* v = std::getenv(kBudgetEnv);
    if (v == nullptr || *v == '\0')
        return std::nullopt;
    const std::string s(v);
    if (s.find_first_not_of("0123456789") != std::string::npos || s.size() > 19)
        throw UsageError(std::string(kBudgetEnv) + ": not a positive integer: '" + s + "'");
    return std::stoull(s);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    CLI::App app{"Exact wave-number arithmetic and recursive prime identification", "wavenum"};
    app.require_subcommand(1);

    auto* primes = app.add_subcommand("primes", "Identify primes window by window");
    primes->add_option("--limit", cfg.limit, "Identify every prime <= LIMIT");
    primes->add_option("--iterations", cfg.iterations, "Number of windows");
    primes->add_option("--mode", cfg.mode)->check(CLI::IsMember({"conservative", "maximal"}));
    add_run_options(*primes, cfg);
    add_output_options(*primes, cfg);

    auto* schedule = app.add_subcommand("schedule", "Largest-prime schedule with count estimates");
    schedule->add_option("--iterations", cfg.iterations, "Number of iterations (default 4)");
    schedule->add_option("--mode", cfg.mode, "conservative or maximal (default maximal)")
        ->check(CLI::IsMember({"conservative", "maximal"}));
    add_run_options(*schedule, cfg);
    add_output_options(*schedule, cfg);

    auto* table1 = app.add_subcommand("table1", "Modular co-number table over one period");
    table1->add_option("--primes", cfg.primes, "Comma-separated primes (default 2,3,5)");
    table1->add_flag("--check", cfg.check, "Compare with the reference fixture; exit 2 on mismatch");
    table1->add_option("--fixture", cfg.fixture, "CSV fixture used by --check");
    add_output_options(*table1, cfg);

    auto* verify = app.add_subcommand("verify", "Run the invariant suite against the oracle");
    verify->add_option("--n-max", cfg.n_max, "Largest window index N");
    verify->add_flag("--theorem9", cfg.equality_report, "Report the modular equality filter per N");
    add_run_options(*verify, cfg);
    add_output_options(*verify, cfg);

    auto* bench = app.add_subcommand("bench", "Baseline sieve vs co-number candidate enumeration");
    bench->add_option("--limit", cfg.limit, "Upper end of the benchmark range")->required();
    bench->add_option("--wheel-primes", cfg.wheel_primes, "Comma-separated wheel primes");
    bench->add_option("--phase-budget", cfg.phase_budget, "Maximum phases scanned");
    add_output_options(*bench, cfg);

    auto* render = app.add_subcommand("render", "Print principal parts as frequencies");
    render->add_option("--wave", cfg.wave, "Wave number u_n")->check(CLI::PositiveNumber);
    render->add_option("--conumber", cfg.conumber, "Co-number u*_n")->check(CLI::PositiveNumber);
    render->add_option("--conumber-product", cfg.conumber_product, "Circular product of co-numbers, e.g. 2,3");
    render->add_option("--terms", cfg.terms, "Number of phases (default one period)");
    render->add_flag("--unreduced", cfg.unreduced, "Print phase-proportional numerators k/P");
    render->add_flag("--eq16", cfg.classic_display, "The 36-term co-number product of 2 and 3");
    add_output_options(*render, cfg);

    std::vector<std::string> argv_store;
    argv_store.reserve(args.size() + 1);
    argv_store.emplace_back("wavenum");
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store)
        argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return kUsage;
    }

    CLI::App* sub = app.get_subcommands().front();
    cfg.subcommand = sub->get_name();

    std::ostringstream body;
    int code = kSuccess;
    try {
        if (sub->get_option_no_throw("--phase-budget") && sub->get_option("--phase-budget")->count() == 0)
            if (auto env = budget_from_env())
                cfg.phase_budget = *env;
        if (cfg.phase_budget < kMinPhaseBudget)
            throw UsageError("phase budget must be >= " + std::to_string(kMinPhaseBudget));
        if (sub == schedule) {
            if (schedule->get_option("--mode")->count() == 0)
                cfg.mode = "maximal";
            if (cfg.iterations == 0 && schedule->get_option("--iterations")->count() == 0)
                cfg.iterations = 4;
        }
        if (sub == bench && bench->get_option("--format")->count() == 0)
            cfg.format = "csv";

        if (sub == primes || sub == schedule)
            code = cmd_primes(cfg, body);
        else if (sub == table1)
            code = cmd_table1(cfg, body, err);
        else if (sub == verify)
            code = cmd_verify(cfg, body);
        else if (sub == bench)
            code = cmd_bench(cfg, body);
        else
            code = cmd_render(cfg, body);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n' << sub->help();
        return kUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const BudgetStop& e) {
        err << "stopped: " << e.what() << '\n';
        code = kBudget;
    } catch (const CapacityError& e) {
        err << "stopped: " << e.what() << '\n';
        code = kBudget;
    } catch (const VerificationError& e) {
        err << "verification failed: " << e.what() << '\n';
        code = kMismatch;
    }

    if (cfg.out_path.empty()) {
        out << body.str();
    } else {
        std::ofstream file(cfg.out_path, std::ios::binary);
        if (!file) {
            err << "error: cannot write " << cfg.out_path << '\n';
            return kUsage;
        }
        file << body.str();
    }
    return code;
}

} // namespace wavenum::cli
