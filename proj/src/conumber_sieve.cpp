#include "wavenum/conumber_sieve.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>
#include <thread>

#include "wavenum/errors.hpp"

namespace wavenum {

namespace {

bool is_prime_small(std::uint64_t p)
{
    if (p < 2)
        return false;
    for (std::uint64_t d = 2; d <= p / d; ++d)
        if (p % d == 0)
            return false;
    return true;
}

/// p^2 when it fits, otherwise nullopt.
std::optional<std::uint64_t> checked_square(std::uint64_t p)
{
    unsigned __int128 sq = static_cast<unsigned __int128>(p) * p;
    if (sq > UINT64_MAX)
        return std::nullopt;
    return static_cast<std::uint64_t>(sq);
}

std::uint64_t square_or_throw(std::uint64_t p)
{
    auto sq = checked_square(p);
    if (!sq)
        throw CapacityError("window bound " + std::to_string(p) + "^2 overflows 64-bit phases", UINT64_MAX);
    return *sq;
}

std::string join(const std::vector<std::uint64_t>& v, std::size_t max_items = 20)
{
    if (v.empty())
        return "none";
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size() && i < max_items; ++i)
        os << (i ? ", " : "") << v[i];
    if (v.size() > max_items)
        os << ", ... (" << v.size() << " total)";
    return os.str();
}

} // namespace

// CoProduct

CoProduct::CoProduct(std::vector<std::uint64_t> primes) : primes_(std::move(primes))
{
    for (std::size_t i = 1; i < primes_.size(); ++i)
        if (primes_[i] <= primes_[i - 1])
            throw DomainError("co-number primes must be strictly ascending");
    if (!primes_.empty()) {
        const auto table = oracle::sieve(primes_.back());
        for (std::uint64_t p : primes_)
            if (!table.contains(p))
                throw DomainError(std::to_string(p) + " is not prime");
    }
    period_ = product_of(primes_.data(), primes_.data() + primes_.size());
}

bool CoProduct::vanishes_at(std::uint64_t k) const noexcept
{
    for (std::uint64_t p : primes_)
        if (k % p == 0)
            return true;
    return false;
}

CoProduct CoProduct::extended(std::uint64_t p) const
{
    if (!primes_.empty() && p <= primes_.back())
        throw DomainError("extension prime " + std::to_string(p) + " must exceed " + std::to_string(primes_.back()));
    auto next = primes_;
    next.push_back(p);
    return CoProduct(std::move(next));
}

Term coproduct_value(const CoProduct& cp, std::int64_t k)
{
    if (k < 0)
        throw DomainError("sieve phases are non-negative, got " + std::to_string(k));
    if (cp.vanishes_at(static_cast<std::uint64_t>(k)))
        return Term::zero();
    return Term::root(Frequency(BigInt(static_cast<long>(k)), cp.period()));
}

bool zeros_equivalence_check(std::uint64_t n, std::uint64_t bound)
{
    std::vector<std::uint64_t> prime_wavelengths;
    for (std::uint64_t p = 2; p <= n; ++p)
        if (is_prime_small(p))
            prime_wavelengths.push_back(p);

    for (std::uint64_t k = 1; k <= bound; ++k) {
        bool natural_zero = false;
        for (std::uint64_t d = 2; d <= n && !natural_zero; ++d)
            natural_zero = k % d == 0;
        bool prime_zero = false;
        for (std::uint64_t p : prime_wavelengths)
            if (k % p == 0) {
                prime_zero = true;
                break;
            }
        if (natural_zero != prime_zero)
            return false;
    }
    return true;
}

// SieveState

SieveState initial_state()
{
    CoProduct cp({2});
    std::vector<std::uint64_t> found;
    for (std::uint64_t k = 3; found.size() < 2; ++k)
        if (!cp.vanishes_at(k))
            found.push_back(k);
    return SieveState{std::move(cp), found[0], found[1]};
}

void validate(const SieveState& state)
{
    const auto& primes = state.coproduct.primes();
    if (primes.empty())
        throw DomainError("sieve state needs at least one co-number");
    if (!is_prime_small(state.next_prime) || !is_prime_small(state.bound_prime))
        throw DomainError("next and bound must be prime");
    if (state.next_prime <= primes.back() || state.bound_prime <= state.next_prime)
        throw DomainError("expected largest co-number prime < next < bound");
    auto sq = checked_square(state.next_prime);
    if (sq && *sq <= primes.back())
        throw DomainError("empty window");
}

// Scanning

std::vector<std::uint64_t> scan_window(const CoProduct& cp, std::uint64_t lo, std::uint64_t hi,
                                       const ScanOptions& options)
{
    if (hi <= lo)
        return {};
    const std::uint64_t chunk = std::max<std::uint64_t>(options.chunk_size, 1);
    const std::uint64_t n_chunks = (hi - lo + chunk - 1) / chunk;
    std::vector<std::vector<std::uint64_t>> parts(n_chunks);

    auto scan_chunk = [&](std::uint64_t c) {
        const std::uint64_t a = lo + c * chunk;
        const std::uint64_t b = std::min(hi, a + chunk);
        auto& out = parts[c];
        for (std::uint64_t k = a; k < b; ++k)
            if (!cp.vanishes_at(k))
                out.push_back(k);
    };

    const unsigned jobs = static_cast<unsigned>(std::min<std::uint64_t>(std::max(options.jobs, 1u), n_chunks));
    if (jobs <= 1) {
        for (std::uint64_t c = 0; c < n_chunks; ++c)
            scan_chunk(c);
    } else {
        std::atomic<std::uint64_t> next{0};
        std::vector<std::jthread> workers;
        workers.reserve(jobs);
        for (unsigned t = 0; t < jobs; ++t)
            workers.emplace_back([&] {
                for (std::uint64_t c = next++; c < n_chunks; c = next++)
                    scan_chunk(c);
            });
    }

    std::vector<std::uint64_t> merged;
    for (auto& part : parts)
        merged.insert(merged.end(), part.begin(), part.end());
    return merged;
}

std::string describe_mismatch(const WindowReport& report)
{
    return "window [" + std::to_string(report.lo) + ", " + std::to_string(report.hi) +
           "): spurious phases: " + join(report.spurious) + "; missing phases: " + join(report.missing);
}

VerificationError::VerificationError(WindowReport report)
    : std::runtime_error("verification mismatch in " + describe_mismatch(report)), report_(std::move(report))
{
}

WindowReport scan_and_verify(std::size_t iteration, const CoProduct& cp, std::uint64_t next,
                             const oracle::PrimeTable& truth, const ScanOptions& options)
{
    const std::uint64_t hi = square_or_throw(next);
    if (hi <= next)
        throw DomainError("empty window");
    if (truth.limit() + 1 < hi)
        throw DomainError("oracle table does not cover the window");

    const auto start = std::chrono::steady_clock::now();
    WindowReport report;
    report.iteration = iteration;
    report.lo = next;
    report.hi = hi;
    report.surviving_phases = scan_window(cp, next, hi, options);
    report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);

    report.oracle_primes = truth.range(next, hi);
    std::set_difference(report.surviving_phases.begin(), report.surviving_phases.end(), report.oracle_primes.begin(),
                        report.oracle_primes.end(), std::back_inserter(report.spurious));
    std::set_difference(report.oracle_primes.begin(), report.oracle_primes.end(), report.surviving_phases.begin(),
                        report.surviving_phases.end(), std::back_inserter(report.missing));
    report.match = report.spurious.empty() && report.missing.empty();
    return report;
}

WindowReport window_primes(const SieveState& state, const oracle::PrimeTable& truth, const ScanOptions& options)
{
    validate(state);
    return scan_and_verify(state.iteration(), state.coproduct, state.next_prime, truth, options);
}

WindowReport window_primes(const SieveState& state, const ScanOptions& options)
{
    validate(state);
    const auto truth = oracle::sieve(square_or_throw(state.next_prime) - 1);
    return scan_and_verify(state.iteration(), state.coproduct, state.next_prime, truth, options);
}

SieveState recursion_step(const SieveState& state, const WindowReport& window)
{
    if (!window.match)
        throw VerificationError(window);
    if (window.lo != state.next_prime || window.iteration != state.iteration())
        throw DomainError("window report does not belong to this state");

    auto it = std::upper_bound(window.surviving_phases.begin(), window.surviving_phases.end(), state.next_prime);
    if (it == window.surviving_phases.end() || std::next(it) == window.surviving_phases.end())
        throw DomainError("window holds fewer than two primes past " + std::to_string(state.next_prime));

    SieveState next{state.coproduct.extended(state.next_prime), *it, *std::next(it)};
    validate(next);
    return next;
}

SieveState recursion_step(const SieveState& state, const ScanOptions& options)
{
    return recursion_step(state, window_primes(state, options));
}

// Schedules

std::optional<double> count_estimate(std::size_t iteration)
{
    if (iteration <= 1)
        return std::nullopt;
    const double e = 2.0 * static_cast<double>(iteration - 1);
    return std::pow(7.0, e) / (e * std::log(7.0));
}

namespace {

/// Drives either mode one window at a time. `step()` returns false once the
/// budget stops the run.
class ScheduleRunner {
public:
    ScheduleRunner(Mode mode, const RunOptions& options) : mode_(mode), options_(options), state_(initial_state())
    {
        result_.mode = mode;
    }

    bool step()
    {
        const std::size_t iteration = result_.schedule.size() + 1;
        const std::uint64_t next = current_next();

        ScheduleEntry entry;
        entry.iteration = iteration;
        entry.lo = next;
        entry.hi = to_big(next) * to_big(next);

        const BigInt width = entry.hi - to_big(next);
        if (to_big(result_.phases_scanned) + width > to_big(options_.phase_budget)) {
            entry.budget_exhausted = true;
            result_.schedule.push_back(std::move(entry));
            result_.budget_exhausted = true;
            return false;
        }

        const CoProduct cp = current_coproduct();
        const std::uint64_t hi = to_u64(entry.hi);
        const auto truth = oracle::sieve(hi - 1);
        WindowReport report = scan_and_verify(cp.size(), cp, next, truth, options_.scan);
        if (!report.match)
            throw VerificationError(std::move(report));
        result_.phases_scanned += hi - next;

        // Everything below `next` is in cp; [next, hi) is the window.
        result_.primes = cp.primes();
        result_.primes.insert(result_.primes.end(), report.surviving_phases.begin(), report.surviving_phases.end());

        entry.largest_prime = report.surviving_phases.back();
        entry.count_identified = result_.primes.size();
        if (mode_ == Mode::Maximal) {
            entry.estimate = count_estimate(iteration);
            if (entry.estimate)
                entry.relative_error =
                    std::abs(static_cast<double>(entry.count_identified) - *entry.estimate) / entry.count_identified;
        }
        result_.schedule.push_back(std::move(entry));

        if (mode_ == Mode::Conservative)
            state_ = recursion_step(state_, report);
        result_.windows.push_back(std::move(report));
        return true;
    }

    const RunResult& result() const noexcept { return result_; }
    RunResult take() { return std::move(result_); }

    /// Exclusive upper end of what has been identified so far.
    std::uint64_t covered() const noexcept { return result_.windows.empty() ? 0 : result_.windows.back().hi; }

private:
    CoProduct current_coproduct() const
    {
        if (mode_ == Mode::Conservative || result_.primes.empty())
            return state_.coproduct;
        return CoProduct({result_.primes.begin(), result_.primes.end() - 1});
    }

    std::uint64_t current_next() const
    {
        if (mode_ == Mode::Conservative || result_.primes.empty())
            return state_.next_prime;
        return result_.primes.back();
    }

    Mode mode_;
    RunOptions options_;
    SieveState state_;
    RunResult result_;
};

} // namespace

RunResult run_schedule(std::size_t iterations, Mode mode, const RunOptions& options)
{
    if (iterations == 0)
        throw DomainError("iterations must be >= 1");
    ScheduleRunner runner(mode, options);
    for (std::size_t i = 0; i < iterations; ++i)
        if (!runner.step())
            break;
    return runner.take();
}

RunResult run_until(std::uint64_t limit, Mode mode, const RunOptions& options)
{
    if (limit < 3)
        throw DomainError("limit must be >= 3");
    ScheduleRunner runner(mode, options);
    while (runner.covered() <= limit)
        if (!runner.step())
            break;
    RunResult result = runner.take();
    std::erase_if(result.primes, [limit](std::uint64_t p) { return p > limit; });
    return result;
}

// Circle-sum primality

std::uint64_t circle_sum(std::span<const std::uint64_t> primes, std::uint64_t k)
{
    std::uint64_t sum = 0;
    for (std::uint64_t p : primes)
        if (!term_at(to_big(p), to_big(k), DecompositionKind::Circle).is_zero())
            ++sum;
    return sum;
}

bool circle_sum_test(std::span<const std::uint64_t> primes, std::uint64_t k)
{
    if (primes.empty())
        throw DomainError("circle-sum test needs at least one prime");

    // The list must be the first N primes: 2, then each entry the next phase
    // left nonzero by the co-numbers of its predecessors.
    const CoProduct cp({primes.begin(), primes.end()});
    if (primes.front() != 2)
        throw DomainError("primes must start at 2");
    for (std::size_t i = 1; i < primes.size(); ++i) {
        const CoProduct before({primes.begin(), primes.begin() + static_cast<std::ptrdiff_t>(i)});
        std::uint64_t expect = primes[i - 1] + 1;
        while (before.vanishes_at(expect))
            ++expect;
        if (expect != primes[i])
            throw DomainError("primes must be the first N primes; expected " + std::to_string(expect) + " after " +
                              std::to_string(primes[i - 1]));
    }

    std::uint64_t next = primes.back() + 1;
    while (cp.vanishes_at(next))
        ++next;
    const std::uint64_t hi = square_or_throw(next);
    if (k <= primes.back() || k >= hi)
        throw DomainError("phase " + std::to_string(k) + " outside (" + std::to_string(primes.back()) + ", " +
                          std::to_string(hi) + ")");
    return circle_sum(primes, k) == 0;
}

} // namespace wavenum
