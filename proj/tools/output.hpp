#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "reflectq/crystal/comb.hpp"
#include "reflectq/paramgen/script.hpp"
#include "reflectq/reps/operator_table.hpp"
#include "reflectq/verify/report.hpp"

namespace reflectq::cli {

using nlohmann::ordered_json;

struct MatrixHeader {
  std::string kind;
  int n = 0;
  int l = 0;
  int m = -1;  // -1: single-factor matrix, written as null / empty
  std::string spectral;
};

ordered_json matrix_json(const MatrixHeader& h, const reps::OperatorTable& t);
std::string matrix_csv(const MatrixHeader& h, const reps::OperatorTable& t);

ordered_json report_json(const verify::VerifyReport& r);

ordered_json comb_json(const crystal::CombMap& map);
std::string comb_csv(const crystal::CombMap& map);

ordered_json conjecture_json(const crystal::ConjectureReport& rep);

ordered_json probe_json(const paramgen::ProbeReport& rep);

/// "1,0,2": one composition, comma-joined.
std::string joined(const weights::Composition& c);

}  // namespace reflectq::cli
