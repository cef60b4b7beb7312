#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "mocklie/algebra.hpp"
#include "mocklie/derivations.hpp"

namespace mocklie {

// JSON report documents. Keys keep insertion order and every scalar is a
// canonical string ("5/6"), so output is byte-deterministic. Indices in
// witnesses are 1-based.

using Json = nlohmann::ordered_json;

inline constexpr int kReportFormat = 1;

Json matrix_json(const Matrix& m);
Json family_json(const ParametricFamily& family);

/// {"format", "algebra", "field", "dim"}.
Json report_header(const Algebra& a);
/// {"commutative", "jacobi", "mock_lie", "witness": {"commutative", "jacobi"}}.
Json axioms_json(const AxiomReport& r);
/// {"dim", "basis", "parametric"}.
Json der_json(const DerivationSpace& space);
/// {"paper_dim", "computed_dim", "equal", "witness"}.
Json verification_json(const VerificationReport& r);
/// Nonzero constants as [p, q, r, "c"] rows, 1-based.
Json tensor_json(const StructureTensor& t);
Json invariants_json(const Invariants& inv);

/// Two-space indented dump followed by a newline.
std::string dump(const Json& j);

}  // namespace mocklie
