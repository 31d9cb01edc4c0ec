#include "lnr/hvchecks.hpp"

#include <cmath>
#include <cstdlib>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace lnr {

namespace {

constexpr double kSumTol = 1e-12;
constexpr double kSlack = 1e-12;

void require_pm1(int v, const char* name) {
  if (v != 1 && v != -1) {
    throw std::domain_error(std::string(name) + " outcome must be +1 or -1, got " +
                            std::to_string(v));
  }
}

struct Moments {
  double mean_a = 0;
  double mean_b = 0;
  double mean_b2 = 0;
  double mean_ab = 0;
  double mean_ab2 = 0;
};

Moments moments_of(const OutcomeTable& t) {
  Moments m;
  for (const auto& e : t.entries()) {
    m.mean_a += e.weight * e.a;
    m.mean_b += e.weight * e.b;
    m.mean_b2 += e.weight * e.b2;
    m.mean_ab += e.weight * e.a * e.b;
    m.mean_ab2 += e.weight * e.a * e.b2;
  }
  return m;
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_weight(const std::string& field, std::size_t line_no) {
  std::size_t pos = 0;
  double w = 0;
  try {
    w = std::stod(field, &pos);
  } catch (const std::exception&) {
    pos = std::string::npos;
  }
  if (pos != field.size() || field.empty()) {
    throw std::domain_error("line " + std::to_string(line_no) +
                            ": bad weight field '" + field + "'");
  }
  return w;
}

int parse_outcome(const std::string& field, std::size_t line_no) {
  if (field == "1" || field == "+1") return 1;
  if (field == "-1") return -1;
  throw std::domain_error("line " + std::to_string(line_no) +
                          ": outcome must be +1 or -1, got '" + field + "'");
}

}  // namespace

OutcomeTable::OutcomeTable(std::vector<OutcomeEntry> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) {
    throw std::domain_error("outcome table must have at least one row");
  }
  double sum = 0;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    if (!(e.weight > 0)) {
      throw std::domain_error("row " + std::to_string(i) +
                              ": weight must be positive");
    }
    require_pm1(e.a, "A");
    require_pm1(e.b, "B");
    require_pm1(e.b2, "B2");
    sum += e.weight;
  }
  if (std::abs(sum - 1.0) > kSumTol) {
    throw std::domain_error("weights must sum to 1, got " + std::to_string(sum));
  }
}

bool check_pointwise_identity(int a, int b) {
  require_pm1(a, "A");
  require_pm1(b, "B");
  const int ab = a * b;
  return (-1 + std::abs(a + b) == ab) && (1 - std::abs(a - b) == ab);
}

SubensembleReport check_subensemble_inequality(const OutcomeTable& t) {
  const Moments m = moments_of(t);
  SubensembleReport r;
  r.lhs_plus = std::abs(m.mean_a + m.mean_b);
  r.lhs_minus = std::abs(m.mean_a - m.mean_b);
  r.rhs_plus = 1.0 + m.mean_ab;
  r.rhs_minus = 1.0 - m.mean_ab;
  r.holds = (r.lhs_plus <= r.rhs_plus + kSlack) &&
            (r.lhs_minus <= r.rhs_minus + kSlack);
  return r;
}

TriangleStepReport check_triangle_step(const OutcomeTable& t) {
  const Moments m = moments_of(t);
  TriangleStepReport r;
  r.lhs_plus = std::abs(m.mean_ab + m.mean_ab2);
  r.lhs_minus = std::abs(m.mean_ab - m.mean_ab2);
  r.rhs_plus = 2.0 - std::abs(m.mean_b - m.mean_b2);
  r.rhs_minus = 2.0 - std::abs(m.mean_b + m.mean_b2);
  r.holds = (r.lhs_plus <= r.rhs_plus + kSlack) &&
            (r.lhs_minus <= r.rhs_minus + kSlack);
  return r;
}

OutcomeTable load_outcome_table_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw std::domain_error("empty outcome table input");
  }
  {
    std::string header;
    std::stringstream ss(line);
    std::string field;
    bool first = true;
    while (std::getline(ss, field, ',')) {
      header += (first ? "" : ",") + trim(field);
      first = false;
    }
    if (header != "weight,A,B,B2") {
      throw std::domain_error("expected header 'weight,A,B,B2', got '" + line + "'");
    }
  }

  std::vector<OutcomeEntry> entries;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    std::stringstream ss(line);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(ss, field, ',')) fields.push_back(trim(field));
    if (fields.size() != 4) {
      throw std::domain_error("line " + std::to_string(line_no) +
                              ": expected 4 fields, got " +
                              std::to_string(fields.size()));
    }
    OutcomeEntry e;
    e.weight = parse_weight(fields[0], line_no);
    e.a = parse_outcome(fields[1], line_no);
    e.b = parse_outcome(fields[2], line_no);
    e.b2 = parse_outcome(fields[3], line_no);
    entries.push_back(e);
  }
  return OutcomeTable(std::move(entries));
}

}  // namespace lnr
