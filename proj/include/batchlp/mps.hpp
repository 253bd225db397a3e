#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "batchlp/lp_model.hpp"

namespace batchlp {

struct MpsRow {
  std::string name;
  char type = 'N';  // N, L, G or E
};

struct MpsBound {
  std::string type;  // UP, LO, FX, FR, MI, PL, BV, LI, UI, SC
  std::size_t column = 0;
  std::optional<double> value;
  std::size_t line = 0;
};

// Section-level content of an MPS file. Rows and columns keep file order.
struct MpsModel {
  std::string name;
  std::optional<Sense> objective_sense;  // from OBJSENSE, if present
  std::string objective_row;             // first N row
  std::vector<MpsRow> rows;              // constraint rows only (L, G, E)
  std::vector<std::string> columns;
  std::vector<bool> integer_columns;     // declared between INTORG markers
  // (column, row) -> coefficient; row index npos means the objective row.
  std::map<std::pair<std::size_t, std::size_t>, double> coefficients;
  std::map<std::size_t, double> rhs;     // by constraint row
  double objective_rhs = 0.0;            // RHS entry on the objective row
  std::map<std::size_t, double> ranges;  // by constraint row
  std::vector<MpsBound> bounds;
  std::vector<std::string> warnings;

  static constexpr std::size_t kObjective = static_cast<std::size_t>(-1);
};

// Parses fixed or free MPS (fields are split on whitespace, so names must not
// contain blanks). Throws ParseError with the offending line number.
MpsModel parse_mps(std::string_view text);
MpsModel parse_mps_file(const std::filesystem::path& path);

// Objective from the first N row (minimized unless OBJSENSE says otherwise),
// L/G/E rows as <=/>=/= constraints, ranged rows as a pair of inequalities,
// bounds applied in file order on top of the default [0, +inf).
// Integer markers and BV/LI/UI/SC bounds throw UnsupportedFeature.
GeneralLP lower_to_general(const MpsModel& model,
                           std::vector<std::string>* warnings = nullptr);

}  // namespace batchlp
