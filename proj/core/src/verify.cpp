#include "frobsieve/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <numeric>
#include <random>

#include <fmt/format.h>

#include "frobsieve/charsum.hpp"
#include "frobsieve/config.hpp"
#include "frobsieve/gl2count.hpp"
#include "frobsieve/parallel.hpp"

namespace frobsieve {

bool VerifyReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

void VerifyReport::append(VerifyReport other) {
    for (auto& c : other.checks) checks.push_back(std::move(c));
    for (auto& a : other.artifacts) artifacts.push_back(std::move(a));
}

std::string VerifyReport::text() const {
    std::string out;
    for (const auto& c : checks) {
        out += fmt::format("[{}] {} ({:.2f} s): {}\n", c.passed ? "PASS" : "FAIL", c.name, c.seconds, c.detail);
    }
    return out;
}

namespace {

/// Runs `body`, which fills in passed/detail; exceptions become failures.
CheckResult timed(const std::string& name, const std::function<void(CheckResult&)>& body) {
    CheckResult r;
    r.name = name;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(r);
    } catch (const std::exception& e) {
        r.passed = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<u64> units(u64 n) {
    std::vector<u64> out;
    for (u64 d = 1; d < n; ++d) {
        if (std::gcd(d, n) == 1) out.push_back(d);
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------

VerifyReport verify_gl2(const VerifyOptions& options) {
    VerifyReport report;
    const i64 fault = options.inject_fault ? 1 : 0;
    auto formula_prime = [fault](u64 q, i64 d, i64 t) {
        return count_det_trace_prime(q, d, t) + (d == 1 && t == 0 ? fault : 0);
    };
    auto formula_pair = [fault](u64 q1, u64 q2, i64 d, i64 t) {
        return count_det_trace_formula(q1, q2, d, t) + (d == 1 && t == 0 ? fault : 0);
    };

    report.checks.push_back(timed("det/trace count, single primes 3..13", [&](CheckResult& r) {
        u64 cells = 0, mismatches = 0;
        for (u64 q : {3, 5, 7, 11, 13}) {
            for (u64 d : units(q)) {
                for (u64 t = 0; t < q; ++t) {
                    ++cells;
                    const i64 f = formula_prime(q, static_cast<i64>(d), static_cast<i64>(t));
                    if (f != static_cast<i64>(count_det_trace_bruteforce(q, static_cast<i64>(d), static_cast<i64>(t)))) {
                        ++mismatches;
                    }
                }
            }
        }
        r.passed = mismatches == 0;
        r.detail = fmt::format("{} cells, {} mismatches", cells, mismatches);
    }));

    const std::pair<u64, u64> pairs[] = {{3, 5}, {3, 7}, {5, 7}};
    std::string csv = "q1,q2,d,s,t,formula,bruteforce,equal\n";
    report.checks.push_back(timed("det/trace count, pairs (3,5) (3,7) (5,7)", [&](CheckResult& r) {
        u64 cells = 0, mismatches = 0;
        for (const auto& [q1, q2] : pairs) {
            const u64 n = q1 * q2;
            for (u64 d : units(n)) {
                std::vector<i64> formula(n), brute(n);
                for (u64 t = 0; t < n; ++t) {
                    formula[t] = formula_pair(q1, q2, static_cast<i64>(d), static_cast<i64>(t));
                    brute[t] = static_cast<i64>(count_det_trace_bruteforce(n, static_cast<i64>(d), static_cast<i64>(t)));
                    ++cells;
                    if (formula[t] != brute[t]) ++mismatches;
                }
                // #C(s, t, d) = N(d, s) N(d, t), by formula and by enumeration.
                for (u64 s = 0; s < n; ++s) {
                    for (u64 t = 0; t < n; ++t) {
                        const i64 f = formula[s] * formula[t], b = brute[s] * brute[t];
                        csv += fmt::format("{},{},{},{},{},{},{},{}\n", q1, q2, d, s, t, f, b, f == b ? 1 : 0);
                    }
                }
            }
        }
        r.passed = mismatches == 0;
        r.detail = fmt::format("{} (d,t) cells, {} mismatches", cells, mismatches);
    }));
    report.artifacts.push_back({"gl2_verify.csv", std::move(csv)});

    report.checks.push_back(timed("CRT multiplicativity mod 15, 21, 35", [&](CheckResult& r) {
        bool ok = true;
        for (const auto& [q1, q2] : pairs) ok = ok && det_trace_histogram(q1 * q2) == det_trace_histogram_crt(q1, q2);
        r.passed = ok;
        r.detail = ok ? "enumeration mod q1q2 equals product of per-prime tables" : "tables differ";
    }));

    report.checks.push_back(timed("#H formula vs determinant histogram", [&](CheckResult& r) {
        std::string detail;
        bool ok = true;
        for (const auto& [q1, q2] : pairs) {
            const i128 f = order_H_formula(q1, q2), h = order_H_histogram(q1, q2);
            ok = ok && f == h;
            detail += fmt::format("{}({},{}): {} vs {}", detail.empty() ? "" : "; ", q1, q2, to_string(f), to_string(h));
        }
        r.passed = ok;
        r.detail = detail;
    }));

    report.checks.push_back(timed("partition: sum of #C equals #H at (3,5)", [&](CheckResult& r) {
        const u64 q1 = 3, q2 = 5, n = 15;
        i128 sum = 0;
        for (u64 d : units(n)) {
            i128 row = 0;
            for (u64 t = 0; t < n; ++t) row += formula_pair(q1, q2, static_cast<i64>(d), static_cast<i64>(t));
            sum += row * row;
        }
        const i128 h = order_H_formula(q1, q2);
        r.passed = sum == h;
        r.detail = fmt::format("sum #C = {}, #H = {}", to_string(sum), to_string(h));
    }));

    report.checks.push_back(timed("class ratios sum to 1 at (3,5) and (5,7)", [&](CheckResult& r) {
        bool ok = true;
        for (const auto& [q1, q2] : {std::pair<u64, u64>{3, 5}, {5, 7}}) {
            const u64 n = q1 * q2;
            i128 total = 0;
            for (u64 d : units(n)) {
                for (u64 s = 0; s < n; ++s) {
                    for (u64 t = 0; t < n; ++t) {
                        total += count_C_formula(q1, q2, static_cast<i64>(d), static_cast<i64>(s), static_cast<i64>(t));
                    }
                }
            }
            ok = ok && total == order_H_formula(q1, q2);
        }
        r.passed = ok;
        r.detail = ok ? "exact" : "sum differs from #H";
    }));
    return report;
}

// ---------------------------------------------------------------------------

VerifyReport verify_charsum(const VerifyOptions&) {
    VerifyReport report;
    const std::vector<u64> primes = primes_in(2, 97);

    std::string csv = "q,d,bruteforce,closed,agree\n";
    std::string discrepancy = "q,d,bruteforce,half_weighted,agree\n";
    report.checks.push_back(timed("complete sum brute force vs -(-1/q), q <= 97", [&](CheckResult& r) {
        u64 cells = 0, mismatches = 0, outside = 0;
        for (u64 q : primes) {
            for (u64 d = 1; d < q; ++d) {
                const i64 b = weil_sum_bruteforce(q, static_cast<i64>(d));
                const i64 c = weil_sum_closed(q, static_cast<i64>(d));
                const Rational h = half_weighted_reduction(q, static_cast<i64>(d));
                ++cells;
                if (b != c) ++mismatches;
                if (b < -1 || b > 1) ++outside;
                csv += fmt::format("{},{},{},{},{}\n", q, d, b, c, b == c ? 1 : 0);
                discrepancy += fmt::format("{},{},{},{},{}\n", q, d, b, h.str(), h == Rational(b) ? 1 : 0);
            }
        }
        r.passed = mismatches == 0 && outside == 0;
        r.detail = fmt::format("{} (q,d) cells, {} mismatches, {} values outside {{-1,0,1}}", cells, mismatches, outside);
    }));
    report.artifacts.push_back({"charsum_verify.csv", std::move(csv)});
    report.artifacts.push_back({"charsum_half_weighted.csv", std::move(discrepancy)});

    report.checks.push_back(timed("half-weighted reduction at (q,d) = (5,1)", [&](CheckResult& r) {
        const i64 b = weil_sum_bruteforce(5, 1);
        const Rational h = half_weighted_reduction(5, 1);
        r.passed = b == -1;
        r.detail = fmt::format("brute force {}, reduction gives {}: {}", b, h.str(),
                               h == Rational(b) ? "agree" : "discrepancy recorded");
    }));

    report.checks.push_back(timed("J(chi, chi^-1) = -chi(-1), q <= 97", [&](CheckResult& r) {
        u64 mismatches = 0;
        for (u64 q : primes) mismatches += jacobi_sum(q) != jacobi_sum_closed(q);
        r.passed = mismatches == 0;
        r.detail = fmt::format("{} primes, {} mismatches", primes.size(), mismatches);
    }));

    report.checks.push_back(timed("triple sum <= (q1-1)(q2-1), odd prime pairs <= 31", [&](CheckResult& r) {
        u64 pairs = 0, bad = 0, equal = 0;
        std::string failures;
        for (std::size_t i = 0; i < primes.size() && primes[i] <= 31; ++i) {
            for (std::size_t j = i + 1; j < primes.size() && primes[j] <= 31; ++j) {
                const TripleSum s = triple_sum(primes[i], primes[j]);
                ++pairs;
                const i64 value = s.direct.value_or(s.squared);
                if (!s.direct || !s.consistent() || value > s.bound) {
                    ++bad;
                    failures += fmt::format(" ({},{})", primes[i], primes[j]);
                }
                if (value == s.bound) ++equal;
            }
        }
        r.passed = bad == 0 && equal == pairs;
        r.detail = fmt::format("{} pairs, {} violations, equality at {} pairs{}", pairs, bad, equal, failures);
    }));
    return report;
}

// ---------------------------------------------------------------------------

VerifyReport verify_elliptic(const VerifyOptions& options) {
    VerifyReport report;
    const auto curves = reference_curves();

    report.checks.push_back(timed("a_p (Legendre sum) vs point enumeration, p < 1000", [&](CheckResult& r) {
        const auto results = parallel_map(curves.size(), options.threads, [&](std::size_t i) {
            u64 checked = 0, mismatches = 0;
            for (u64 p : primes_in(3, 999)) {
                if (curves[i].is_bad(p)) continue;
                ++checked;
                const i64 a = ap_naive(curves[i], p);
                if (static_cast<i64>(p + 1 - count_points_bruteforce(curves[i], p)) != a || a * a > 4 * static_cast<i64>(p)) {
                    ++mismatches;
                }
            }
            return std::pair{checked, mismatches};
        });
        u64 checked = 0, mismatches = 0;
        for (const auto& [c, m] : results) {
            checked += c;
            mismatches += m;
        }
        r.passed = mismatches == 0;
        r.detail = fmt::format("{} curves, {} (curve, p) pairs, {} mismatches", curves.size(), checked, mismatches);
    }));

    report.checks.push_back(timed("baby-step giant-step vs Legendre sum, p < 10^4", [&](CheckResult& r) {
        const auto results = parallel_map(curves.size(), options.threads, [&](std::size_t i) {
            u64 checked = 0, mismatches = 0, hasse = 0;
            for (u64 p : primes_in(3, 9999)) {
                if (curves[i].is_bad(p)) continue;
                ++checked;
                const i64 fast = ap_bsgs(curves[i], p), slow = ap_naive(curves[i], p);
                if (fast != slow) ++mismatches;
                if (fast * fast > 4 * static_cast<i64>(p)) ++hasse;
            }
            return std::array<u64, 3>{checked, mismatches, hasse};
        });
        u64 checked = 0, mismatches = 0, hasse = 0;
        for (const auto& v : results) {
            checked += v[0];
            mismatches += v[1];
            hasse += v[2];
        }
        r.passed = mismatches == 0 && hasse == 0;
        r.detail = fmt::format("{} pairs, {} mismatches, {} Hasse violations", checked, mismatches, hasse);
    }));

    report.checks.push_back(timed("quadratic twist negates a_p, p < 500", [&](CheckResult& r) {
        u64 checked = 0, mismatches = 0;
        for (const auto& curve : curves) {
            for (u64 p : primes_in(3, 499)) {
                if (curve.is_bad(p)) continue;
                u64 d = 2;
                while (jacobi_symbol_u(d, p) != -1) ++d;
                const CurveQ twist = curve.twist(static_cast<i64>(d));
                if (twist.is_bad(p)) continue;
                ++checked;
                const i64 a = static_cast<i64>(p + 1 - count_points_bruteforce(curve, p));
                const i64 b = static_cast<i64>(p + 1 - count_points_bruteforce(twist, p));
                if (a != -b) ++mismatches;
            }
        }
        r.passed = mismatches == 0;
        r.detail = fmt::format("{} pairs, {} mismatches", checked, mismatches);
    }));
    return report;
}

// ---------------------------------------------------------------------------

std::vector<Multiset> random_sieve_multisets(std::size_t count, std::size_t size, u64 seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<u64> any(1, 1'000'000'000);
    std::uniform_int_distribution<u64> root(1, 31'622);  // 31622^2 <= 1e9
    std::bernoulli_distribution square(0.3);
    std::vector<Multiset> out(count);
    for (auto& m : out) {
        m.elements.reserve(size);
        for (std::size_t i = 0; i < size; ++i) {
            if (square(rng)) {
                const u64 k = root(rng);
                m.elements.push_back(k * k);
            } else {
                m.elements.push_back(any(rng));
            }
        }
    }
    return out;
}

VerifyReport verify_sieve(const VerifyOptions& options) {
    VerifyReport report;
    const auto [e1, e2] = demo_pair();
    const TraceOptions trace_options{TraceMethod::bsgs, options.threads};
    const MatchResult matches = count_equal_fields(e1, e2, 10'000, trace_options);

    report.checks.push_back(timed("matched == square product == (D1 == D2), demo pair, p <= 10^4", [&](CheckResult& r) {
        u64 bad = 0;
        for (const auto& m : matches.records) {
            const bool square = product_is_square_check(m.p, m.a_p, m.b_p);
            if (m.matched != square || m.matched != (m.D1 == m.D2)) ++bad;
        }
        r.passed = bad == 0;
        r.detail = fmt::format("{} primes, {} disagreements, {} matched", matches.records.size(), bad, matches.count);
    }));

    report.checks.push_back(timed("version-2 square sieve, 100 random multisets, z = 50", [&](CheckResult& r) {
        const SievePrimeSet window = build_prime_window(50);
        u64 violations = 0;
        for (const auto& m : random_sieve_multisets(100, 1000, 20240601)) {
            try {
                const SieveReport s = sieve_bound_v2(m, window);
                if (static_cast<double>(s.exact_square_count) > s.bound_total) ++violations;
            } catch (const std::logic_error&) {
                ++violations;
            }
        }
        r.passed = violations == 0;
        r.detail = fmt::format("P = {}, {} violations", window.P(), violations);
    }));

    report.checks.push_back(timed("version-2 square sieve, curve-pair multiset x = 10^4, z = 30", [&](CheckResult& r) {
        const SieveReport s = sieve_bound_v2(curve_pair_multiset(matches), build_prime_window(30));
        r.passed = static_cast<double>(s.exact_square_count) <= s.bound_total;
        r.detail = fmt::format("S = {}, bound = {:.6g}", s.exact_square_count, s.bound_total);
    }));

    report.checks.push_back(timed("prime character sum, direct vs residue classes, (3,5), x = 10^4", [&](CheckResult& r) {
        const i64 direct = prime_char_sum_direct(matches, 3, 5);
        const i64 classes = prime_char_sum_by_classes(chebotarev_empirical(matches, 3, 5));
        r.passed = direct == classes;
        r.detail = fmt::format("direct {}, by classes {}", direct, classes);
    }));
    return report;
}

VerifyReport verify_all(const VerifyOptions& options) {
    VerifyReport report = verify_gl2(options);
    report.append(verify_charsum(options));
    report.append(verify_elliptic(options));
    report.append(verify_sieve(options));
    return report;
}

}  // namespace frobsieve
