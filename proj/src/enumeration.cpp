// File: enumeration.cpp
// Degree-indexed enumeration of Lorenz specs and their Alexander polynomials.

#include "modknot/enumeration.hpp"

#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <thread>

namespace modknot {

namespace {

using nlohmann::json;

// Recursively emit all partitions of n as (part, multiplicity) lists with
// strictly increasing parts, mapping each to its spec.
void emit_specs(long remaining, long min_part,
                std::vector<std::pair<long, long>>& parts,
                std::vector<LorenzSpec>& out) {
    if (remaining == 0) {
        if (parts.empty()) return;
        std::vector<std::pair<long, long>> pairs;
        pairs.reserve(parts.size());
        for (std::size_t j = 0; j < parts.size(); ++j) {
            const long prev = j == 0 ? -1 : parts[j - 1].first;
            const long p = j == 0 ? parts[0].first + 1 : parts[j].first - prev;
            const long q = j + 1 == parts.size() ? parts[j].second + 1
                                                 : parts[j].second;
            pairs.emplace_back(p, q);
        }
        out.push_back(make_spec(std::move(pairs)));
        return;
    }
    for (long m = min_part; m <= remaining; ++m)
        for (long d = 1; m * d <= remaining; ++d) {
            parts.emplace_back(m, d);
            emit_specs(remaining - m * d, m + 1, parts, out);
            parts.pop_back();
        }
}

std::filesystem::path cache_file(const std::string& dir, long n) {
    return std::filesystem::path(dir) / ("degree_" + std::to_string(n) + ".json");
}

} // namespace

Int partition_count(long n) {
    if (n < 0) throw PrecondViolated("partition_count: n must be >= 0");
    std::vector<Int> ways(static_cast<std::size_t>(n) + 1);
    ways[0] = 1;
    for (long k = 1; k <= n; ++k)
        for (long i = k; i <= n; ++i)
            ways[static_cast<std::size_t>(i)] += ways[static_cast<std::size_t>(i - k)];
    return ways[static_cast<std::size_t>(n)];
}

std::vector<LorenzSpec> enumerate_specs(long n) {
    if (n < 2) throw PrecondViolated("enumerate_specs: n must be >= 2");
    if (n % 2 != 0)
        throw OddDegree("enumerate_specs: no knot has odd Alexander degree");
    std::vector<LorenzSpec> out;
    std::vector<std::pair<long, long>> parts;
    emit_specs(n, 1, parts, out);
    std::sort(out.begin(), out.end());
    return out;
}

DegreeReport degree_report(long n, int jobs) {
    DegreeReport rep;
    rep.n = n;
    rep.specs = enumerate_specs(n);
    const std::size_t count = rep.specs.size();
    rep.knots.assign(count, false);
    std::vector<AlexanderPoly> polys(count);

    auto work = [&](std::size_t begin, std::size_t step) {
        for (std::size_t i = begin; i < count; i += step) {
            const LorenzSpec& spec = rep.specs[i];
            if (components(spec) != 1) continue;
            rep.knots[i] = true;
            polys[i] = alexander_of_spec(spec);
            if (polys[i].degree() != n)
                throw InternalError("degree_report: degree formula mismatch for " +
                                    spec.str());
        }
    };
    if (jobs <= 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w)
            pool.emplace_back(work, static_cast<std::size_t>(w),
                              static_cast<std::size_t>(jobs));
        for (auto& t : pool) t.join();
    }

    std::vector<AlexanderPoly> distinct;
    for (std::size_t i = 0; i < count; ++i)
        if (rep.knots[i]) distinct.push_back(polys[i]);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    rep.polynomials = std::move(distinct);

    rep.p_n = Int(static_cast<long>(count));
    rep.k_n = Int(static_cast<long>(std::count(rep.knots.begin(), rep.knots.end(), true)));
    rep.a_n = Int(static_cast<long>(rep.polynomials.size()));
    if (rep.p_n != partition_count(n))
        throw InternalError("degree_report: spec count disagrees with p(n)");
    return rep;
}

bool load_report(const std::string& cache_dir, long n, DegreeReport& out) {
    std::ifstream in(cache_file(cache_dir, n));
    if (!in) return false;
    json j;
    try {
        in >> j;
        if (j.value("schema", 0) != 1 || j.value("n", -1L) != n) return false;
        DegreeReport rep;
        rep.n = n;
        for (const auto& s : j.at("specs")) {
            std::vector<std::pair<long, long>> pairs;
            for (const auto& pq : s)
                pairs.emplace_back(pq.at(0).get<long>(), pq.at(1).get<long>());
            rep.specs.push_back(make_spec(std::move(pairs)));
        }
        for (const auto& b : j.at("knots")) rep.knots.push_back(b.get<bool>());
        for (const auto& poly : j.at("polynomials")) {
            AlexanderPoly p;
            for (const auto& c : poly) p.coeffs.emplace_back(c.get<long>());
            rep.polynomials.push_back(std::move(p));
        }
        rep.p_n = Int(j.at("p_n").get<long>());
        rep.k_n = Int(j.at("k_n").get<long>());
        rep.a_n = Int(j.at("a_n").get<long>());
        if (rep.specs.size() != rep.knots.size()) return false;
        out = std::move(rep);
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

void save_report(const std::string& cache_dir, const DegreeReport& report) {
    std::filesystem::create_directories(cache_dir);
    json j;
    j["schema"] = 1;
    j["n"] = report.n;
    j["p_n"] = report.p_n.get_si();
    j["k_n"] = report.k_n.get_si();
    j["a_n"] = report.a_n.get_si();
    j["specs"] = json::array();
    for (const auto& s : report.specs) {
        json pairs = json::array();
        for (const auto& [p, q] : s.pairs) pairs.push_back({p, q});
        j["specs"].push_back(std::move(pairs));
    }
    j["knots"] = json::array();
    for (bool b : report.knots) j["knots"].push_back(b);
    j["polynomials"] = json::array();
    for (const auto& p : report.polynomials) {
        json coeffs = json::array();
        for (const auto& c : p.coeffs) coeffs.push_back(c.get_si());
        j["polynomials"].push_back(std::move(coeffs));
    }
    std::ofstream out(cache_file(cache_dir, report.n));
    out << j.dump(2) << "\n";
}

std::vector<TableRow> full_table(long max_n, int jobs, const std::string& cache_dir) {
    std::vector<TableRow> rows;
    for (long n = 2; n <= max_n; n += 2) {
        DegreeReport rep;
        if (cache_dir.empty() || !load_report(cache_dir, n, rep)) {
            rep = degree_report(n, jobs);
            if (!cache_dir.empty()) save_report(cache_dir, rep);
        }
        rows.push_back(TableRow{n, rep.p_n, rep.k_n, rep.a_n});
    }
    return rows;
}

} // namespace modknot
