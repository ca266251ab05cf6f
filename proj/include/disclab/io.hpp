#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "disclab/certificates.hpp"
#include "disclab/exact.hpp"
#include "disclab/generators.hpp"
#include "disclab/heuristics.hpp"
#include "disclab/types.hpp"

namespace disclab {

// Canonical JSON, version "1": fixed field order, byte-stable output,
// integers that can exceed 53 bits (primes, products, determinants)
// as decimal strings, real bounds with 12 significant digits, sets as
// sorted index arrays. The optional seed is provenance echoed by the
// CLI into every artifact it writes; readers accept and ignore it.

using Artifact = std::variant<SetSystem, SignMatrix, Coloring, EmbeddingWitness,
                              LowerBoundCert, CheckReport, DiscrepancyReport,
                              ExactResult, HeuristicOutcome>;

std::string serialize(const SetSystem& v);
std::string serialize(const SignMatrix& v);
std::string serialize(const Coloring& v);
std::string serialize(const EmbeddingWitness& v);
std::string serialize(const LowerBoundCert& v);
std::string serialize(const CheckReport& v);
std::string serialize(const DiscrepancyReport& v);
std::string serialize(const ExactResult& v);
std::string serialize(const HeuristicOutcome& v);

std::string serialize_artifact(const Artifact& artifact,
                               std::optional<std::uint64_t> seed = std::nullopt);

// Strict inverse of serialize: validates the kind tag, the version and
// every type invariant (colorings must be +-1, matrices rectangular,
// index arrays sorted, witnesses internally consistent). Throws
// ParseError for malformed bytes and InvariantViolation for well-formed
// inputs that break an invariant.
Artifact deserialize(const std::string& text);

std::string artifact_kind(const Artifact& artifact);

template <typename T>
T deserialize_as(const std::string& text) {
    Artifact a = deserialize(text);
    T* p = std::get_if<T>(&a);
    if (!p) throw ParseError("unexpected artifact kind: " + artifact_kind(a));
    return std::move(*p);
}

// Loss-free CSV of the summary fields of report-like artifacts
// (DiscrepancyReport, CheckReport, ExactResult, HeuristicOutcome).
std::string to_csv(const Artifact& artifact);

// 12-significant-digit decimal used for every real number we emit.
std::string format_real(double x);

} // namespace disclab
