#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mehr/parallel.hpp"

namespace mehr {

/// One executed check: what was expected, what came out, and the anchor of
/// the published statement the expectation comes from.
struct LedgerEntry {
    std::string id;
    std::string reference;
    std::string expected;
    std::string computed;
    bool pass = false;
    bool informational = false;  // recorded observations; never fail the suite
};

struct VerificationLedger {
    std::vector<LedgerEntry> entries;
    bool all_passed() const;
};

/// Reproduces every published concrete value at desk scale: counts, mixed
/// Ehrhart polynomials, h*-vectors, Eulerian limits and the dilation scan
/// witnesses. Deterministic; failures are data, not exceptions.
VerificationLedger run_paper_suite(const Parallelism& par = {});

/// Seeded randomized suite exercising the cross-module identities on small
/// collections (d <= 3, k <= 3, vertices in {0..3}^d), plus constructed
/// families for the separated-pair and complementary-subspace statements.
/// Counterexamples are reported verbatim with their vertex data.
VerificationLedger run_property_suite(std::uint64_t seed, int cases, const Parallelism& par = {});

std::string render_ledger(const VerificationLedger& ledger);

}  // namespace mehr
