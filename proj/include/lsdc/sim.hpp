#pragma once

#include <functional>

#include "lsdc/scheme.hpp"

namespace lsdc {

/// Opaque handle to whatever raw data a subfunction consumes.
using Dataset = std::uint64_t;

/// L subfunctions mapping raw datasets into GF(q) values.
struct SubfunctionSuite {
    Field field;
    std::vector<std::function<std::uint32_t(Dataset)>> fns;

    /// Each subfunction is a seeded integer hash of its dataset, reduced
    /// mod q — deterministic stand-ins with well-spread values.
    static SubfunctionSuite hashed(const Field& f, std::size_t count,
                                   std::uint64_t seed = kDefaultSeed);

    /// Subfunction l evaluates the polynomial with coefficients
    /// coeffs(l, d) * x^d at x = dataset mod q.
    static SubfunctionSuite polynomials(const FqMatrix& coeffs);
};

/// One server transmission: slot, sender, symbol, and who listens.
struct TranscriptEntry {
    std::size_t slot = 0;
    std::size_t server = 0;
    std::uint32_t value = 0;
    std::vector<std::size_t> recipients; ///< users k with D(k, slot*N + server) != 0
};

/// Everything observable from one protocol round.
struct RoundResult {
    FqVector w;        ///< subfunction values, length L
    FqVector z;        ///< transmissions, slot-major, length N*T
    FqVector decoded;  ///< what the users recover, length K
    FqVector demanded; ///< F*w, what they asked for
    bool ok = false;   ///< decoded == demanded
    std::vector<TranscriptEntry> transcript;               ///< all N*T slots
    std::vector<std::vector<std::size_t>> column_servers;  ///< per job: servers that evaluate it
    std::vector<std::vector<std::size_t>> server_computes; ///< per server: jobs it evaluates
};

/// Runs the protocol on given subfunction values.
RoundResult run_round(const Scheme& s, const FqVector& w);

/// Evaluates suite.fns[l](datasets[l]) to produce w, then runs a round.
RoundResult run_with_subfunctions(const Scheme& s, const SubfunctionSuite& suite,
                                  const std::vector<Dataset>& datasets);

/// Recomputes the cost report purely from a round's transcript and
/// computation assignment — no access to D or E — so it can cross-check
/// costs() on the matrices.
CostReport audit_costs(std::size_t K, std::size_t N, std::size_t T,
                       const RoundResult& round);

} // namespace lsdc
