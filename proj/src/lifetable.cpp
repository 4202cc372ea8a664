#include "survbet/lifetable.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "survbet/errors.hpp"

namespace survbet {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

// Parses one full field; `col` is the 1-based column where it starts.
double parse_number(const std::string& field, int line, int col) {
  if (field.empty()) throw ParseError("empty field", line, col);
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(field.c_str(), &end);
  if (end != field.c_str() + field.size() || errno == ERANGE)
    throw ParseError("not a number: '" + field + "'", line, col);
  return v;
}

std::string format_qx(double qx) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.10g", qx);
  return buf;
}

}  // namespace

void validate_lifetable(const LifeTable& table) {
  if (table.rows.empty()) throw DomainError("life table must have at least one row");
  int prev_age = std::numeric_limits<int>::min();
  for (const auto& row : table.rows) {
    if (row.age <= prev_age)
      throw DomainError("life table ages must be strictly increasing");
    if (!(row.qx >= 0.0 && row.qx <= 1.0))
      throw DomainError("life table qx must lie in [0,1]");
    prev_age = row.age;
  }
}

LifeTable parse_lifetable(std::string_view text) {
  LifeTable table;
  std::size_t pos = 0;
  int line_no = 0;
  bool saw_header = false;
  int prev_age = std::numeric_limits<int>::min();

  while (pos <= text.size()) {
    if (pos == text.size()) break;
    std::size_t eol = text.find('\n', pos);
    std::string_view raw = (eol == std::string_view::npos)
                               ? text.substr(pos)
                               : text.substr(pos, eol - pos);
    pos = (eol == std::string_view::npos) ? text.size() : eol + 1;
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    if (trim(raw).empty()) continue;

    if (!saw_header) {
      if (raw.front() == '#') {
        // metadata: "# key: value"
        std::string body = trim(raw.substr(1));
        const std::size_t colon = body.find(':');
        if (colon == std::string::npos)
          throw ParseError("metadata line needs 'key: value'", line_no, 1);
        table.metadata.emplace_back(trim(body.substr(0, colon)),
                                    trim(body.substr(colon + 1)));
        continue;
      }
      if (trim(raw) != "age,qx")
        throw ParseError("expected header 'age,qx'", line_no, 1);
      saw_header = true;
      continue;
    }

    const std::size_t comma = raw.find(',');
    if (comma == std::string_view::npos)
      throw ParseError("expected 'age,qx' row", line_no, 1);
    const std::string age_field = trim(raw.substr(0, comma));
    const std::string qx_field = trim(raw.substr(comma + 1));
    const int qx_col = static_cast<int>(comma) + 2;

    const double age_val = parse_number(age_field, line_no, 1);
    if (age_val != std::floor(age_val) || std::abs(age_val) > 1e6)
      throw ParseError("age must be an integer", line_no, 1);
    const int age = static_cast<int>(age_val);
    if (age == prev_age)
      throw ParseError("duplicate age " + std::to_string(age), line_no, 1);
    if (age < prev_age)
      throw ParseError("decreasing age " + std::to_string(age), line_no, 1);

    const double qx = parse_number(qx_field, line_no, qx_col);
    if (!(qx >= 0.0 && qx <= 1.0))
      throw ParseError("qx out of [0,1]: " + qx_field, line_no, qx_col);

    table.rows.push_back({age, qx});
    prev_age = age;
  }

  if (!saw_header) throw ParseError("missing 'age,qx' header", line_no + 1, 1);
  validate_lifetable(table);
  return table;
}

std::string emit_lifetable(const LifeTable& table) {
  validate_lifetable(table);
  std::ostringstream out;
  for (const auto& [key, value] : table.metadata)
    out << "# " << key << ": " << value << "\n";
  out << "age,qx\n";
  for (const auto& row : table.rows)
    out << row.age << "," << format_qx(row.qx) << "\n";
  return out.str();
}

LifeTable synthetic_lifetable(const DistributionSpec& spec, int age_from,
                              int age_to) {
  if (age_from < 0) throw DomainError("age_from must be >= 0");
  if (!(age_from < age_to)) throw DomainError("age_from must be < age_to");
  if (log_survival(spec, age_from) == -kInf)
    throw DomainError("empty support: survival is zero at age_from");

  LifeTable table;
  table.metadata.emplace_back("model", spec_name(spec));
  if (const auto* g = std::get_if<GompertzParams>(&spec)) {
    table.metadata.emplace_back("eta", format_qx(g->eta));
    table.metadata.emplace_back("b", format_qx(g->b));
  } else if (const auto* m = std::get_if<MakehamParams>(&spec)) {
    table.metadata.emplace_back("lambda", format_qx(m->lambda));
    table.metadata.emplace_back("eta", format_qx(m->gompertz.eta));
    table.metadata.emplace_back("b", format_qx(m->gompertz.b));
  } else if (const auto* nrm = std::get_if<NormalParams>(&spec)) {
    table.metadata.emplace_back("mu", format_qx(nrm->mu));
    table.metadata.emplace_back("sigma", format_qx(nrm->sigma));
  } else if (const auto* e = std::get_if<ExponentialParams>(&spec)) {
    table.metadata.emplace_back("rate", format_qx(e->rate));
  } else if (const auto* u = std::get_if<UniformBoundedParams>(&spec)) {
    table.metadata.emplace_back("t0", format_qx(u->t0));
  }

  for (int x = age_from; x <= age_to; ++x) {
    if (log_survival(spec, x) == -kInf) break;  // table already closed
    const double qx =
        -std::expm1(log_conditional_survival(spec, x, 1.0));
    table.rows.push_back({x, qx});
    if (qx >= 1.0) break;  // finite support: closed with the terminal row
  }
  validate_lifetable(table);
  return table;
}

}  // namespace survbet
