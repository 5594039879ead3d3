#pragma once

// Oracle suites run by `verify-all` and friends. Every check compares a
// closed formula or fast path against an independent enumeration and
// reports exact agreement.

#include <string>
#include <vector>

#include "frobsieve/sieve.hpp"

namespace frobsieve {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

struct VerifyOptions {
    bool inject_fault = false;  // perturb the determinant/trace formula by one
    unsigned threads = 1;
};

struct Artifact {
    std::string file_name;
    std::string content;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    std::vector<Artifact> artifacts;

    bool passed() const;
    void append(VerifyReport other);
    /// One "[PASS] name (1.23 s): detail" line per check.
    std::string text() const;
};

VerifyReport verify_gl2(const VerifyOptions& options = {});
VerifyReport verify_charsum(const VerifyOptions& options = {});
VerifyReport verify_elliptic(const VerifyOptions& options = {});
VerifyReport verify_sieve(const VerifyOptions& options = {});
VerifyReport verify_all(const VerifyOptions& options = {});

/// Multisets for the randomized version-2 check: `count` multisets of
/// `size` elements in [1, 1e9], roughly 30% perfect squares, fixed seed.
std::vector<Multiset> random_sieve_multisets(std::size_t count, std::size_t size, u64 seed);

}  // namespace frobsieve
