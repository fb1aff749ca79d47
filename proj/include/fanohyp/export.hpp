#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "fanohyp/catalog.hpp"

namespace fanohyp {

using Json = nlohmann::ordered_json;

enum class Format { Json, Csv };

inline Json quotient_to_json(QuotientType q) { return Json{{"r", q.r}, {"a", q.a}}; }

inline QuotientType quotient_from_json(const Json& j) {
  QuotientType q{j.at("r").get<int>(), j.at("a").get<int>()};
  if (!q.valid()) throw std::invalid_argument("invalid quotient type " + q.str());
  return q;
}

inline Json point_to_json(const PointAnalysis& p) {
  Json invs = Json::array();
  for (const auto& i : p.involutions) invs.push_back({{"kind", to_string(i.kind)}, {"j", i.j}});
  Json kids = Json::array();
  for (const auto& c : p.children) kids.push_back(quotient_to_json(c));
  return Json{{"r", p.qtype.r},        {"a", p.qtype.a},   {"count", p.count},
              {"locus", p.locus.str()}, {"ku3", p.ku3.fraction()}, {"sign", to_string(p.sign)},
              {"involutions", invs},    {"children", kids}};
}

inline Sign sign_from_string(const std::string& s) {
  if (s == "Neg") return Sign::Neg;
  if (s == "Zero") return Sign::Zero;
  if (s == "Pos") return Sign::Pos;
  throw std::invalid_argument("unknown sign " + s);
}

inline InvolutionKind kind_from_string(const std::string& s) {
  if (s == "Quadratic") return InvolutionKind::Quadratic;
  if (s == "Elliptic") return InvolutionKind::Elliptic;
  throw std::invalid_argument("unknown involution kind " + s);
}

inline PointAnalysis point_from_json(const Json& j) {
  PointAnalysis p;
  p.qtype = quotient_from_json(j);
  p.count = j.at("count").get<int>();
  p.locus = Locus::parse(j.at("locus").get<std::string>());
  p.ku3 = Rational::parse(j.at("ku3").get<std::string>());
  p.sign = sign_from_string(j.at("sign").get<std::string>());
  for (const auto& i : j.at("involutions"))
    p.involutions.push_back({kind_from_string(i.at("kind").get<std::string>()), i.at("j").get<int>()});
  for (const auto& c : j.at("children")) p.children.push_back(quotient_from_json(c));
  return p;
}

inline Json record_to_json(const FamilyRecord& r) {
  Json bas = Json::array();
  for (const auto& e : r.basket.entries)
    bas.push_back({{"r", e.qtype.r}, {"a", e.qtype.a}, {"count", e.count}, {"locus", e.locus.str()}});
  Json pts = Json::array();
  for (const auto& p : r.points) pts.push_back(point_to_json(p));
  return Json{{"gimel", r.gimel},       {"weights", r.weights()}, {"degree", r.degree()},
              {"kx3", r.kx3.fraction()}, {"basket", bas},         {"points", pts}};
}

inline FamilyRecord record_from_json(const Json& j) {
  FamilyRecord r;
  r.gimel = j.at("gimel").get<int>();
  r.ws = WeightSystem::with_degree(j.at("weights").get<std::array<int, 4>>(), j.at("degree").get<int>());
  r.kx3 = Rational::parse(j.at("kx3").get<std::string>());
  for (const auto& e : j.at("basket"))
    r.basket.entries.push_back(
        {quotient_from_json(e), e.at("count").get<int>(), Locus::parse(e.at("locus").get<std::string>())});
  for (const auto& p : j.at("points")) r.points.push_back(point_from_json(p));
  return r;
}

inline Json catalog_to_json(const Catalog& c) {
  Json arr = Json::array();
  for (const auto& r : c.records) arr.push_back(record_to_json(r));
  return arr;
}

inline Catalog catalog_from_json(const Json& j) {
  Catalog c;
  for (const auto& r : j) c.records.push_back(record_from_json(r));
  return c;
}

/// One CSV line of the catalog, in field order.
struct CsvRow {
  int gimel = 0;
  std::array<int, 4> weights{};
  int degree = 0;
  Rational kx3;
  std::vector<std::string> basket;
  std::vector<std::string> involutions;
  friend bool operator==(const CsvRow&, const CsvRow&) = default;
};

inline constexpr const char* kCsvHeader = "gimel,a1,a2,a3,a4,degree,kx3,basket,involutions";

inline std::vector<CsvRow> csv_rows(const Catalog& c) {
  std::vector<CsvRow> rows;
  for (const auto& r : c.records) {
    CsvRow row{r.gimel, r.weights(), r.degree(), r.kx3, {}, {}};
    for (const auto& e : r.basket.entries)
      row.basket.push_back(std::to_string(e.count) + "*" + e.qtype.str());
    for (const auto& p : r.points)
      for (const auto& i : p.involutions)
        row.involutions.push_back(to_string(i.kind) + "(" + std::to_string(i.j) + ")@" + p.locus.str());
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace detail {

inline std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) out += sep;
    out += parts[k];
  }
  return out;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

inline std::vector<std::string> parse_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t k = 0; k < line.size(); ++k) {
    char ch = line[k];
    if (quoted) {
      if (ch == '"' && k + 1 < line.size() && line[k + 1] == '"') {
        cur += '"';
        ++k;
      } else if (ch == '"') {
        quoted = false;
      } else {
        cur += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (quoted) throw std::invalid_argument("unterminated quote in csv line");
  fields.push_back(std::move(cur));
  return fields;
}

} // namespace detail

inline std::string write_csv(const std::vector<CsvRow>& rows) {
  std::string out = std::string(kCsvHeader) + "\n";
  for (const auto& r : rows) {
    out += std::to_string(r.gimel);
    for (int w : r.weights) out += "," + std::to_string(w);
    out += "," + std::to_string(r.degree) + "," + r.kx3.fraction();
    out += "," + detail::csv_field(detail::join(r.basket, ';'));
    out += "," + detail::csv_field(detail::join(r.involutions, ';')) + "\n";
  }
  return out;
}

inline std::vector<CsvRow> parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw std::invalid_argument("missing csv header");
  std::vector<CsvRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto f = detail::parse_csv_line(line);
    if (f.size() != 9) throw std::invalid_argument("csv row has " + std::to_string(f.size()) + " fields");
    CsvRow r;
    r.gimel = std::stoi(f[0]);
    for (int k = 0; k < 4; ++k) r.weights[k] = std::stoi(f[1 + k]);
    r.degree = std::stoi(f[5]);
    r.kx3 = Rational::parse(f[6]);
    r.basket = detail::split(f[7], ';');
    r.involutions = detail::split(f[8], ';');
    rows.push_back(std::move(r));
  }
  return rows;
}

inline std::string export_catalog(const Catalog& c, Format f) {
  if (f == Format::Csv) return write_csv(csv_rows(c));
  return catalog_to_json(c).dump(2) + "\n";
}

} // namespace fanohyp
