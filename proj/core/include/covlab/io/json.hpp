#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "covlab/crossed/element.hpp"
#include "covlab/lab/analyze.hpp"
#include "covlab/rep/residuals.hpp"
#include "covlab/symbolic/point.hpp"
#include "covlab/symbolic/shift_system.hpp"

namespace covlab::io {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

/// {"full_shift": d} or {"alphabet": d, "adjacency": [[0/1, ...], ...]}.
/// Throws InvalidSystemError.
ShiftSystem system_from_json(const json& j);
json to_json(const ShiftSystem& sys);

/// Parses JSON text; syntax errors are reported as InputError with
/// "<source>:<line>:<column>: ..." context.
json parse_text(const std::string& text, const std::string& source = "<input>");
/// Reads and parses a system spec file. Throws InputError when the file
/// cannot be read or parsed and InvalidSystemError when it is not a covering SFT.
ShiftSystem load_system(const std::string& path);

/// {"pre": "11", "per": "0"}.
Point point_from_json(const ShiftSystem& sys, const json& j);
json to_json(const Point& x);

/// [re_num, re_den, im_num, im_den]; components that overflow a long are
/// written as decimal strings. Plain integers and "p/q" strings are also read.
json to_json(const QComplex& z);
QComplex qcomplex_from_json(const json& j);
json to_json(const Complex& z);

/// {"depth": m, "table": {"<word>": value, ...}} with every admissible word listed.
json to_json(const LCF& f);
LCF lcf_from_json(const ShiftSystem& sys, const json& j);
/// An LCF, {"factor": LCF, "sqrt": LCF} or {"depth": m, "float": {...}}.
json to_json(const Coefficient& c);
/// {"terms": [{"f": ..., "k": k, "l": l, "g": ...}, ...]}; exact coefficients only.
json to_json(const Element& e);
Element element_from_json(const ShiftSystem& sys, const json& j);

json to_json(const ResidualReport& r);
json to_json(const MatrixEntry& e);
json to_json(const KernelWitness& k);
json to_json(const WitnessReport& w);
json to_json(const ProbeReport& p);
json to_json(const AnalyzeConfig& c);
json to_json(const FreenessVerdict& v);

/// The full report with "schema", "system", "config", "verdict",
/// "residuals", "witness" and "probe" fields.
json to_json(const TheoremReport& r);

/// Stable text form: two-space indentation, sorted keys, trailing newline.
std::string dump(const json& j);

}  // namespace covlab::io
