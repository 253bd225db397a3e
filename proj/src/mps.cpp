#include "batchlp/mps.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "batchlp/errors.hpp"

namespace batchlp {
namespace {

// Values at or beyond this magnitude mean "no bound".
constexpr double kMpsInfinity = 1e30;

enum class Section { kNone, kName, kObjSense, kRows, kColumns, kRhs, kRanges, kBounds, kEnd };

int order(Section s) {
  switch (s) {
    case Section::kNone: return 0;
    case Section::kName: return 1;
    case Section::kObjSense: return 2;
    case Section::kRows: return 3;
    case Section::kColumns: return 4;
    case Section::kRhs: return 5;
    case Section::kRanges: return 6;
    case Section::kBounds: return 7;
    case Section::kEnd: return 8;
  }
  return 0;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::string upper(std::string_view s) {
  std::string out(s);
  for (char& ch : out) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  return out;
}

double parse_number(std::string_view token, std::size_t line) {
  std::string_view body = token;
  if (!body.empty() && body.front() == '+') body.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
  if (body.empty() || ec != std::errc() || ptr != body.data() + body.size() ||
      std::isnan(value)) {
    throw ParseError(line, "malformed number '" + std::string(token) + "'");
  }
  return value;
}

class Parser {
 public:
  MpsModel run(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size() && section_ != Section::kEnd) {
      std::size_t eol = text.find('\n', pos);
      if (eol == std::string_view::npos) eol = text.size();
      std::string_view line = text.substr(pos, eol - pos);
      pos = eol + 1;
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      const auto fields = split(line);
      if (fields.empty() || line.front() == '*') continue;
      last_line_ = line_no;
      if (!std::isspace(static_cast<unsigned char>(line.front()))) {
        header(fields, line, line_no);
      } else {
        data(fields, line_no);
      }
    }
    if (section_ != Section::kEnd) {
      throw ParseError(last_line_, "missing ENDATA (file ends inside a section)");
    }
    if (model_.objective_row.empty()) {
      throw ParseError(last_line_, "no objective (N) row declared");
    }
    return std::move(model_);
  }

 private:
  void enter(Section next, std::size_t line_no, std::string_view name) {
    if (order(next) <= order(section_)) {
      throw ParseError(line_no, "section " + std::string(name) + " out of order");
    }
    section_ = next;
  }

  void header(const std::vector<std::string_view>& f, std::string_view line,
              std::size_t line_no) {
    const std::string key = upper(f[0]);
    if (key == "NAME") {
      enter(Section::kName, line_no, key);
      const std::size_t at = line.find(f[0]) + f[0].size();
      const auto rest = split(line.substr(at));
      if (!rest.empty()) model_.name = std::string(rest.front());
    } else if (key == "OBJSENSE") {
      enter(Section::kObjSense, line_no, key);
      if (f.size() > 1) set_sense(f[1], line_no);
    } else if (key == "ROWS") {
      enter(Section::kRows, line_no, key);
    } else if (key == "COLUMNS") {
      enter(Section::kColumns, line_no, key);
    } else if (key == "RHS") {
      enter(Section::kRhs, line_no, key);
    } else if (key == "RANGES") {
      enter(Section::kRanges, line_no, key);
    } else if (key == "BOUNDS") {
      enter(Section::kBounds, line_no, key);
    } else if (key == "ENDATA") {
      section_ = Section::kEnd;
    } else {
      throw ParseError(line_no, "unknown section '" + std::string(f[0]) + "'");
    }
  }

  void set_sense(std::string_view token, std::size_t line_no) {
    const std::string s = upper(token);
    if (s == "MAX" || s == "MAXIMIZE") {
      model_.objective_sense = Sense::kMaximize;
    } else if (s == "MIN" || s == "MINIMIZE") {
      model_.objective_sense = Sense::kMinimize;
    } else {
      throw ParseError(line_no, "unknown objective sense '" + std::string(token) + "'");
    }
  }

  void data(const std::vector<std::string_view>& f, std::size_t line_no) {
    switch (section_) {
      case Section::kObjSense:
        set_sense(f[0], line_no);
        return;
      case Section::kRows:
        row_line(f, line_no);
        return;
      case Section::kColumns:
        column_line(f, line_no);
        return;
      case Section::kRhs:
        pairs_line(f, line_no, rhs_set_, [&](std::size_t row, double v) {
          if (row == MpsModel::kObjective) {
            model_.objective_rhs = v;
          } else {
            model_.rhs[row] = v;
          }
        });
        return;
      case Section::kRanges:
        pairs_line(f, line_no, range_set_, [&](std::size_t row, double v) {
          if (row == MpsModel::kObjective) {
            model_.warnings.push_back("line " + std::to_string(line_no) +
                                      ": range on objective row ignored");
          } else {
            model_.ranges[row] = v;
          }
        });
        return;
      case Section::kBounds:
        bound_line(f, line_no);
        return;
      default:
        throw ParseError(line_no, "data line outside of a section");
    }
  }

  void row_line(const std::vector<std::string_view>& f, std::size_t line_no) {
    if (f.size() != 2) throw ParseError(line_no, "ROWS entry needs a type and a name");
    const std::string type = upper(f[0]);
    const std::string name(f[1]);
    if (type.size() != 1 || std::string_view("NLGE").find(type[0]) == std::string_view::npos) {
      throw ParseError(line_no, "unknown row type '" + std::string(f[0]) + "'");
    }
    if (row_index_.count(name) || free_rows_.count(name) || name == model_.objective_row) {
      throw ParseError(line_no, "duplicate row '" + name + "'");
    }
    if (type[0] == 'N') {
      if (model_.objective_row.empty()) {
        model_.objective_row = name;
      } else {
        free_rows_.insert({name, 0});
        model_.warnings.push_back("line " + std::to_string(line_no) + ": free row '" +
                                  name + "' dropped");
      }
      return;
    }
    row_index_[name] = model_.rows.size();
    model_.rows.push_back({name, type[0]});
  }

  // Resolves a row name: constraint index, kObjective, or nullopt for a
  // dropped free row.
  std::optional<std::size_t> lookup_row(std::string_view name, std::size_t line_no) const {
    const std::string key(name);
    if (key == model_.objective_row) return MpsModel::kObjective;
    if (auto it = row_index_.find(key); it != row_index_.end()) return it->second;
    if (free_rows_.count(key)) return std::nullopt;
    throw ParseError(line_no, "undeclared row '" + key + "'");
  }

  std::size_t lookup_column(std::string_view name, std::size_t line_no) const {
    auto it = column_index_.find(std::string(name));
    if (it == column_index_.end()) {
      throw ParseError(line_no, "undeclared column '" + std::string(name) + "'");
    }
    return it->second;
  }

  void column_line(const std::vector<std::string_view>& f, std::size_t line_no) {
    if (f.size() >= 3 && upper(f[1]) == "'MARKER'") {
      const std::string kind = upper(f[2]);
      if (kind == "'INTORG'") {
        integer_block_ = true;
      } else if (kind == "'INTEND'") {
        integer_block_ = false;
      } else {
        throw ParseError(line_no, "unknown marker '" + std::string(f[2]) + "'");
      }
      return;
    }
    if (f.size() != 3 && f.size() != 5) {
      throw ParseError(line_no, "COLUMNS entry needs 3 or 5 fields");
    }
    const std::string col(f[0]);
    auto [it, inserted] = column_index_.try_emplace(col, model_.columns.size());
    if (inserted) {
      model_.columns.push_back(col);
      model_.integer_columns.push_back(integer_block_);
    }
    for (std::size_t k = 1; k + 1 < f.size(); k += 2) {
      const auto row = lookup_row(f[k], line_no);
      const double value = parse_number(f[k + 1], line_no);
      if (!row) continue;
      auto [entry, fresh] = model_.coefficients.try_emplace({it->second, *row}, value);
      if (!fresh) {
        entry->second += value;
        model_.warnings.push_back("line " + std::to_string(line_no) + ": duplicate entry (" +
                                  col + ", " + std::string(f[k]) + ") summed");
      }
    }
  }

  // RHS and RANGES lines: [set] row value [row value].
  template <class Store>
  void pairs_line(const std::vector<std::string_view>& f, std::size_t line_no,
                  std::optional<std::string>& set_name, Store&& store) {
    std::size_t first = 0;
    if (f.size() == 3 || f.size() == 5) {
      first = 1;
      if (!set_name) set_name = std::string(f[0]);
      if (*set_name != f[0]) {
        model_.warnings.push_back("line " + std::to_string(line_no) + ": vector '" +
                                  std::string(f[0]) + "' ignored, using '" + *set_name + "'");
        return;
      }
    } else if (f.size() != 2 && f.size() != 4) {
      throw ParseError(line_no, "expected [set] row value [row value]");
    }
    for (std::size_t k = first; k + 1 < f.size(); k += 2) {
      const auto row = lookup_row(f[k], line_no);
      const double value = parse_number(f[k + 1], line_no);
      if (row) store(*row, value);
    }
  }

  void bound_line(const std::vector<std::string_view>& f, std::size_t line_no) {
    const std::string type = upper(f[0]);
    static const std::vector<std::string> valued = {"UP", "LO", "FX", "LI", "UI", "SC"};
    static const std::vector<std::string> bare = {"FR", "MI", "PL"};
    MpsBound bound;
    bound.type = type;
    bound.line = line_no;
    if (std::find(valued.begin(), valued.end(), type) != valued.end()) {
      if (f.size() != 3 && f.size() != 4) throw ParseError(line_no, "bound needs a value");
      bound.column = lookup_column(f[f.size() - 2], line_no);
      bound.value = parse_number(f.back(), line_no);
    } else if (std::find(bare.begin(), bare.end(), type) != bare.end()) {
      if (f.size() != 2 && f.size() != 3) throw ParseError(line_no, "malformed bound");
      bound.column = lookup_column(f.back(), line_no);
    } else if (type == "BV") {
      if (f.size() < 2 || f.size() > 4) throw ParseError(line_no, "malformed bound");
      // The value is optional for BV; a trailing numeric field is taken as one.
      std::size_t col_field = f.size() - 1;
      if (f.size() >= 3) {
        double ignored = 0.0;
        const auto last = f.back();
        const auto [p, ec] = std::from_chars(last.data(), last.data() + last.size(), ignored);
        if (ec == std::errc() && p == last.data() + last.size()) col_field = f.size() - 2;
      }
      bound.column = lookup_column(f[col_field], line_no);
    } else {
      throw ParseError(line_no, "unknown bound type '" + std::string(f[0]) + "'");
    }
    model_.bounds.push_back(std::move(bound));
  }

  MpsModel model_;
  Section section_ = Section::kNone;
  std::size_t last_line_ = 0;
  bool integer_block_ = false;
  std::optional<std::string> rhs_set_;
  std::optional<std::string> range_set_;
  std::unordered_map<std::string, std::size_t> row_index_;
  std::unordered_map<std::string, int> free_rows_;
  std::unordered_map<std::string, std::size_t> column_index_;
};

double as_bound(double v) {
  if (v >= kMpsInfinity) return kInf;
  if (v <= -kMpsInfinity) return -kInf;
  return v;
}

}  // namespace

MpsModel parse_mps(std::string_view text) { return Parser().run(text); }

MpsModel parse_mps_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_mps(buf.str());
}

GeneralLP lower_to_general(const MpsModel& model, std::vector<std::string>* warnings) {
  const std::size_t n = model.columns.size();
  auto warn = [&](std::string msg) {
    if (warnings) warnings->push_back(std::move(msg));
  };

  for (std::size_t j = 0; j < n; ++j) {
    if (model.integer_columns[j]) {
      throw UnsupportedFeature("column '" + model.columns[j] + "' is declared integer");
    }
  }

  GeneralLP glp;
  glp.sense = model.objective_sense.value_or(Sense::kMinimize);
  glp.objective.assign(n, 0.0);
  glp.objective_offset = -model.objective_rhs;
  glp.variables.resize(n);
  for (std::size_t j = 0; j < n; ++j) glp.variables[j].name = model.columns[j];

  std::vector<std::vector<double>> rows(model.rows.size(), std::vector<double>(n, 0.0));
  for (const auto& [key, value] : model.coefficients) {
    const auto [col, row] = key;
    if (row == MpsModel::kObjective) {
      glp.objective[col] = value;
    } else {
      rows[row][col] = value;
    }
  }

  for (const MpsBound& bound : model.bounds) {
    GeneralVariable& v = glp.variables[bound.column];
    const double value = bound.value ? as_bound(*bound.value) : 0.0;
    if (bound.type == "UP") {
      v.upper = value;
      if (value < 0.0 && v.lower == 0.0) {
        v.lower = -kInf;
        warn("line " + std::to_string(bound.line) + ": negative UP bound on '" + v.name +
             "' with lower bound 0, lower bound set to -inf");
      }
    } else if (bound.type == "LO") {
      v.lower = value;
    } else if (bound.type == "FX") {
      v.lower = value;
      v.upper = value;
    } else if (bound.type == "FR") {
      v.lower = -kInf;
      v.upper = kInf;
    } else if (bound.type == "MI") {
      v.lower = -kInf;
    } else if (bound.type == "PL") {
      v.upper = kInf;
    } else {
      throw UnsupportedFeature("bound type " + bound.type + " on '" + v.name +
                               "' (line " + std::to_string(bound.line) + ")");
    }
  }

  std::map<std::string, int> used_names;
  for (const auto& r : model.rows) used_names[r.name] = 1;
  auto companion_name = [&](const std::string& base) {
    std::string name = base + "#range";
    while (used_names.count(name)) name += "_";
    used_names[name] = 1;
    return name;
  };

  for (std::size_t i = 0; i < model.rows.size(); ++i) {
    const MpsRow& row = model.rows[i];
    const auto rhs_it = model.rhs.find(i);
    const double rhs = rhs_it == model.rhs.end() ? 0.0 : rhs_it->second;
    const auto range_it = model.ranges.find(i);

    Relation rel = Relation::kEqual;
    if (row.type == 'L') rel = Relation::kLessEqual;
    if (row.type == 'G') rel = Relation::kGreaterEqual;

    if (range_it == model.ranges.end() || (row.type == 'E' && range_it->second == 0.0)) {
      glp.constraints.push_back({row.name, rows[i], rel, rhs});
      continue;
    }
    const double r = range_it->second;
    double lo = rhs;
    double hi = rhs;
    if (row.type == 'L') {
      lo = rhs - std::fabs(r);
    } else if (row.type == 'G') {
      hi = rhs + std::fabs(r);
    } else if (r > 0.0) {
      hi = rhs + r;
    } else {
      lo = rhs + r;
    }
    glp.constraints.push_back({row.name, rows[i], Relation::kLessEqual, hi});
    glp.constraints.push_back({companion_name(row.name), rows[i], Relation::kGreaterEqual, lo});
  }
  return glp;
}

}  // namespace batchlp
