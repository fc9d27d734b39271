#pragma once

// Tabular output: one row per computed polynomial, rendered as aligned
// text, RFC-style CSV, or JSON. Rows are plain strings so that parsing a
// rendered table and re-rendering it reproduces the bytes exactly.

#include <array>

#include "core.hpp"

#include <json.hpp>

namespace kfq {

struct OutputRow {
  std::string flavor;      // u, U, v, V, K, P or empty
  std::string kind;        // A, B, C, D or empty
  std::string lambda;      // comma-joined parts, may be empty
  std::string mu;
  std::string k;           // decimal shift or empty
  std::string polynomial;  // canonical rendering
  std::string value_at_1;  // decimal
  std::string status;      // ok, zero, warning:...

  std::array<const std::string*, 8> fields() const {
    return {&flavor, &kind, &lambda, &mu, &k, &polynomial, &value_at_1, &status};
  }
  std::array<std::string*, 8> fields() {
    return {&flavor, &kind, &lambda, &mu, &k, &polynomial, &value_at_1, &status};
  }

  bool operator==(const OutputRow& o) const {
    return flavor == o.flavor && kind == o.kind && lambda == o.lambda &&
           mu == o.mu && k == o.k && polynomial == o.polynomial &&
           value_at_1 == o.value_at_1 && status == o.status;
  }
};

inline const std::array<std::string, 8>& column_names() {
  static const std::array<std::string, 8> names = {
      "flavor", "kind", "lambda", "mu", "k", "polynomial", "value_at_1", "status"};
  return names;
}

/// Builds a row from a computed polynomial. Empty strings mark fields that
/// do not apply.
inline OutputRow make_row(const std::string& flavor, const std::string& kind,
                          const std::string& lambda, const std::string& mu,
                          const std::string& k, const QPolynomial& p,
                          const std::string& status) {
  OutputRow row;
  row.flavor = flavor;
  row.kind = kind;
  row.lambda = lambda;
  row.mu = mu;
  row.k = k;
  row.polynomial = p.to_string();
  row.value_at_1 = p.eval_one().str();
  row.status = status;
  return row;
}

// ---------------------------------------------------------------------------
// Text
// ---------------------------------------------------------------------------

/// Key=value pairs, one row per line; empty fields are skipped and the
/// polynomial is quoted since its rendering contains spaces.
inline std::string render_text(const std::vector<OutputRow>& rows) {
  std::ostringstream os;
  for (const OutputRow& row : rows) {
    bool first = true;
    const auto& names = column_names();
    auto fs = row.fields();
    for (std::size_t i = 0; i < names.size(); ++i) {
      const std::string& v = *fs[i];
      if (v.empty()) continue;
      if (!first) os << ' ';
      first = false;
      os << names[i] << '=';
      if (names[i] == "polynomial")
        os << '"' << v << '"';
      else
        os << v;
    }
    os << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// CSV
// ---------------------------------------------------------------------------

namespace detail {

inline std::string csv_escape(const std::string& s) {
  bool needs = s.find_first_of(",\"\n") != std::string::npos;
  if (!needs) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace detail

inline std::string render_csv(const std::vector<OutputRow>& rows) {
  std::ostringstream os;
  const auto& names = column_names();
  for (std::size_t i = 0; i < names.size(); ++i)
    os << (i ? "," : "") << names[i];
  os << '\n';
  for (const OutputRow& row : rows) {
    auto fs = row.fields();
    for (std::size_t i = 0; i < fs.size(); ++i)
      os << (i ? "," : "") << detail::csv_escape(*fs[i]);
    os << '\n';
  }
  return os.str();
}

inline std::vector<OutputRow> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else if (c == '\n') {
      fields.push_back(std::move(cur));
      cur.clear();
      records.push_back(std::move(fields));
      fields.clear();
    } else {
      cur += c;
    }
  }
  if (quoted) throw InvalidInput("csv: unterminated quote");
  if (!cur.empty() || !fields.empty()) {
    fields.push_back(std::move(cur));
    records.push_back(std::move(fields));
  }
  if (records.empty()) throw InvalidInput("csv: missing header");
  const auto& names = column_names();
  if (records[0].size() != names.size())
    throw InvalidInput("csv: wrong column count in header");
  for (std::size_t i = 0; i < names.size(); ++i)
    if (records[0][i] != names[i]) throw InvalidInput("csv: unexpected header");
  std::vector<OutputRow> rows;
  for (std::size_t r = 1; r < records.size(); ++r) {
    if (records[r].size() != names.size())
      throw InvalidInput("csv: wrong column count in row");
    OutputRow row;
    auto fs = row.fields();
    for (std::size_t i = 0; i < fs.size(); ++i) *fs[i] = records[r][i];
    rows.push_back(std::move(row));
  }
  return rows;
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

/// {"rows": [...]}; each row carries the eight columns as strings plus a
/// "coefficients" object mapping exponent to coefficient (decimal strings,
/// so arbitrarily large values survive).
inline std::string render_json(const std::vector<OutputRow>& rows,
                               const std::vector<QPolynomial>& polys) {
  if (rows.size() != polys.size())
    throw InvalidInput("render_json: rows and polynomials must align");
  nlohmann::ordered_json doc;
  doc["rows"] = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    nlohmann::ordered_json j;
    const auto& names = column_names();
    auto fs = rows[r].fields();
    for (std::size_t i = 0; i < names.size(); ++i) j[names[i]] = *fs[i];
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::object();
    for (const auto& [e, c] : polys[r].coefficients())
      coeffs[std::to_string(e)] = c.str();
    j["coefficients"] = std::move(coeffs);
    doc["rows"].push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

struct ParsedJson {
  std::vector<OutputRow> rows;
  std::vector<QPolynomial> polys;
};

inline ParsedJson parse_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("json: ") + e.what());
  }
  if (!doc.contains("rows") || !doc["rows"].is_array())
    throw InvalidInput("json: missing rows array");
  ParsedJson out;
  for (const auto& j : doc["rows"]) {
    OutputRow row;
    const auto& names = column_names();
    auto fs = row.fields();
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (!j.contains(names[i]) || !j[names[i]].is_string())
        throw InvalidInput("json: row missing field " + names[i]);
      *fs[i] = j[names[i]].get<std::string>();
    }
    QPolynomial p;
    if (!j.contains("coefficients") || !j["coefficients"].is_object())
      throw InvalidInput("json: row missing coefficients");
    for (auto it = j["coefficients"].begin(); it != j["coefficients"].end(); ++it) {
      long long e;
      try {
        e = std::stoll(it.key());
      } catch (const std::exception&) {
        throw InvalidInput("json: bad exponent " + it.key());
      }
      if (!it.value().is_string()) throw InvalidInput("json: bad coefficient");
      p.add_term(e, Int(it.value().get<std::string>()));
    }
    out.rows.push_back(std::move(row));
    out.polys.push_back(std::move(p));
  }
  return out;
}

}  // namespace kfq
