#pragma once

#include "bckcode/algebra.hpp"
#include "bckcode/census.hpp"
#include "bckcode/construct.hpp"
#include "bckcode/pipeline.hpp"

#include <nlohmann/json.hpp>

#include <optional>

namespace bckcode {

/// Structured reports. Keys keep insertion order so serialized output is
/// stable; every report starts with "version" and "kind".
using Report = nlohmann::ordered_json;

inline constexpr const char* kReportVersion = "bckcode-report/1";

/// `commutative` / `implicative` are only present for BCK input.
Report verify_report(const CayleyAlgebra& alg, const AxiomReport& axioms,
                     const std::optional<IdentityCheck>& commutative,
                     const std::optional<IdentityCheck>& implicative);
Report code_report(const BlockCode& code);
Report roundtrip_report(const ConstructionResult& built, const RoundTripReport& rt);
Report lift_report(const LiftResult& lift);
Report census_report(const CensusReport& census);
Report cn_report(unsigned n, const std::vector<BlockCode>& codes, bool list_codes);
Report family_report(unsigned n, const FamilyAlgebra& family);

Report to_report(const CayleyAlgebra& alg);
Report to_report(const BlockCode& code);
Report to_report(const CodeMatrix& m);

}  // namespace bckcode
