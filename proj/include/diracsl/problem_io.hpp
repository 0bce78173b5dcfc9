#pragma once

#include <string>
#include <vector>

#include "diracsl/assembly.hpp"
#include "diracsl/classify.hpp"
#include "diracsl/inverse.hpp"
#include "diracsl/potential.hpp"
#include "diracsl/tolerances.hpp"

namespace diracsl {

// One problem instance as carried by the JSON schema. Unknown keys anywhere
// in the document are rejected.
struct ProblemFile {
    Potential potential;
    DiracWeight weight;
    Tolerances tolerances;
};

ProblemFile parse_problem_file(const std::string& json_text);
std::string serialize_problem(const ProblemFile& p);

// A bare potential object (same schema as the "potential" block).
Potential parse_potential_json(const std::string& json_text);

struct SpectrumReport {
    std::string classification;  // "finite" | "all_complex"
    std::vector<double> eigenvalues;
    HypothesisReport hypotheses;
    std::string method;  // "charpoly" | "tridiag" | "oracle"
    std::vector<double> residuals;  // per-eigenvalue |miss|
};

// Deterministic: keys sorted, floats at shortest round-trip precision.
std::string serialize_report(const SpectrumReport& r);
std::string serialize_hypotheses(const HypothesisReport& r, const std::string& classification);
std::string serialize_validation(const ValidationReport& r);

// Shortest decimal form that parses back to the same double ("4" for 4.0).
std::string format_double(double v);

// rows of equal width, one header line, LF endings, no trailing separator.
std::string emit_csv(const std::vector<std::vector<double>>& rows, const std::string& header);

struct SpectralData {
    std::vector<double> ts;
    std::vector<double> lambdas;
};

// Strict "t,lambda" CSV: t strictly increasing inside (0,1), lambda positive.
SpectralData parse_spectral_csv(const std::string& text);

}  // namespace diracsl
