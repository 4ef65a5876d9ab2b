#pragma once

#include <string>
#include <vector>

#include "tnfactor/factorization.hpp"
#include "tnfactor/positivity.hpp"
#include "tnfactor/selftest.hpp"

namespace tnfactor {

// JSON documents are deterministic: stable key order, canonical
// rational strings, shortest-round-trip floats. Every document the CLI
// emits parses back through the readers below with value-identical
// results (re-serializing a parsed document is byte-identical).
//
// Indices inside documents (factor positions, witness row/column sets)
// are 1-based, matching the L_i(s) naming convention of the factor
// forms.

std::string matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const std::string& text);

std::string certificate_to_json(const FactorizationCertificate& cert);
FactorizationCertificate certificate_from_json(const std::string& text);

std::string verification_report_to_json(const VerificationReport& rep);
VerificationReport verification_report_from_json(const std::string& text);

std::string verdict_to_json(const PositivityVerdict& v);
PositivityVerdict verdict_from_json(const std::string& text);

std::string threshold_report_to_json(const ThresholdScanReport& rep);
ThresholdScanReport threshold_report_from_json(const std::string& text);

struct MeanTableDocument {
  std::vector<Rational> lambda;
  Exponent r = Exponent::integer(1);
  std::size_t k = 0;
  double tol = 1e-10;
  std::vector<MeanCheckRow> rows;
};

std::string mean_table_to_json(const MeanTableDocument& doc);
MeanTableDocument mean_table_from_json(const std::string& text);

struct RankReport {
  std::vector<Rational> x, y;
  unsigned long m = 0;
  std::size_t rank = 0;
  std::size_t expected = 0;
};

std::string rank_report_to_json(const RankReport& rep);
RankReport rank_report_from_json(const std::string& text);

std::string selftest_report_to_json(const SelftestReport& rep);
SelftestReport selftest_report_from_json(const std::string& text);

} // namespace tnfactor
