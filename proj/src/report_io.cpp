#include "wavenum/report_io.hpp"

#include <sstream>

namespace wavenum::io {

namespace {

json big_to_json(const BigInt& v)
{
    if (fits_u64(v))
        return to_u64(v);
    return v.get_str();
}

BigInt big_from_json(const json& j)
{
    if (j.is_string())
        return BigInt(j.get<std::string>());
    return to_big(j.get<std::uint64_t>());
}

template <typename T>
json optional_to_json(const std::optional<T>& v)
{
    return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> optional_from_json(const json& j)
{
    if (j.is_null())
        return std::nullopt;
    return j.get<T>();
}

} // namespace

json to_json(const WindowReport& report, bool include_timing)
{
    json j = {
        {"iteration", report.iteration},
        {"lo", report.lo},
        {"hi", report.hi},
        {"surviving_phases", report.surviving_phases},
        {"oracle_primes", report.oracle_primes},
        {"verdict", report.match ? "match" : "mismatch"},
        {"spurious", report.spurious},
        {"missing", report.missing},
    };
    if (include_timing)
        j["elapsed_ns"] = report.elapsed.count();
    return j;
}

WindowReport window_report_from_json(const json& j)
{
    WindowReport r;
    r.iteration = j.at("iteration").get<std::size_t>();
    r.lo = j.at("lo").get<std::uint64_t>();
    r.hi = j.at("hi").get<std::uint64_t>();
    r.surviving_phases = j.at("surviving_phases").get<std::vector<std::uint64_t>>();
    r.oracle_primes = j.at("oracle_primes").get<std::vector<std::uint64_t>>();
    r.match = j.at("verdict").get<std::string>() == "match";
    r.spurious = j.at("spurious").get<std::vector<std::uint64_t>>();
    r.missing = j.at("missing").get<std::vector<std::uint64_t>>();
    if (j.contains("elapsed_ns"))
        r.elapsed = std::chrono::nanoseconds(j.at("elapsed_ns").get<std::int64_t>());
    return r;
}

json to_json(const ScheduleEntry& e)
{
    return {
        {"iteration", e.iteration},
        {"lo", e.lo},
        {"hi", big_to_json(e.hi)},
        {"largest_prime", optional_to_json(e.largest_prime)},
        {"count_identified", e.count_identified},
        {"estimate", optional_to_json(e.estimate)},
        {"relative_error", optional_to_json(e.relative_error)},
        {"budget_exhausted", e.budget_exhausted},
    };
}

ScheduleEntry schedule_entry_from_json(const json& j)
{
    ScheduleEntry e;
    e.iteration = j.at("iteration").get<std::size_t>();
    e.lo = j.at("lo").get<std::uint64_t>();
    e.hi = big_from_json(j.at("hi"));
    e.largest_prime = optional_from_json<std::uint64_t>(j.at("largest_prime"));
    e.count_identified = j.at("count_identified").get<std::uint64_t>();
    e.estimate = optional_from_json<double>(j.at("estimate"));
    e.relative_error = optional_from_json<double>(j.at("relative_error"));
    e.budget_exhausted = j.at("budget_exhausted").get<bool>();
    return e;
}

json to_json(const ModularTable& table)
{
    json columns = json::array();
    for (const auto& col : table.columns) {
        json rows = json::array();
        for (const auto& r : col.rows)
            rows.push_back(r.str());
        columns.push_back({{"k", col.k}, {"rows", rows}, {"product", col.product.str()}});
    }
    return {{"primes", table.primes}, {"period", big_to_json(table.period)}, {"columns", columns}};
}

json to_json(const EqualityFilterReport& r)
{
    json witnesses = json::array();
    for (const auto& [k, residue] : r.window_witnesses)
        witnesses.push_back({{"k", k}, {"residue", big_to_json(residue)}});
    return {
        {"primes", r.primes},
        {"next_prime", r.next_prime},
        {"period", big_to_json(r.period)},
        {"weights_idempotent", r.weights_idempotent},
        {"truncated", {{"lo", r.lo}, {"hi", r.truncated_hi}, {"equality_phases", r.equality_phases},
                       {"nonzero_phases", r.nonzero_phases}, {"agreement", r.agreement}}},
        {"window", {{"lo", r.lo}, {"hi", r.window_hi}, {"equality_phases", r.window_equality_phases},
                    {"nonzero_phases", r.window_nonzero_phases}, {"agreement", r.window_agreement}}},
        {"witnesses", witnesses},
    };
}

json document(const std::string& command, json config, json data)
{
    return {{"meta", {{"version", kFormatVersion}, {"command", command}, {"config", std::move(config)}}},
            {"data", std::move(data)}};
}

std::string format_double(double v)
{
    return json(v).dump();
}

std::string windows_csv(const std::vector<WindowReport>& windows)
{
    std::ostringstream os;
    os << "iteration,lo,hi,surviving,oracle,verdict\n";
    for (const auto& w : windows)
        os << w.iteration << ',' << w.lo << ',' << w.hi << ',' << w.surviving_phases.size() << ','
           << w.oracle_primes.size() << ',' << (w.match ? "match" : "mismatch") << '\n';
    return os.str();
}

std::string schedule_csv(const std::vector<ScheduleEntry>& schedule)
{
    std::ostringstream os;
    os << "iteration,lo,hi,largest_prime,count_identified,estimate,relative_error,budget_exhausted\n";
    for (const auto& e : schedule) {
        os << e.iteration << ',' << e.lo << ',' << e.hi.get_str() << ',';
        if (e.largest_prime)
            os << *e.largest_prime;
        os << ',' << e.count_identified << ',';
        if (e.estimate)
            os << format_double(*e.estimate);
        os << ',';
        if (e.relative_error)
            os << format_double(*e.relative_error);
        os << ',' << (e.budget_exhausted ? "true" : "false") << '\n';
    }
    return os.str();
}

std::string table_csv(const ModularTable& table)
{
    std::ostringstream os;
    os << 'k';
    for (auto p : table.primes)
        os << ",r" << p;
    os << ",product\n";
    for (const auto& col : table.columns) {
        os << col.k;
        for (const auto& r : col.rows)
            os << ',' << r.str();
        os << ',' << col.product.str() << '\n';
    }
    return os.str();
}

} // namespace wavenum::io
