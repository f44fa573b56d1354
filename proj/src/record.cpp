#include "cblab/record.hpp"

#include <algorithm>
#include <cstdio>
#include <cmath>
#include <string_view>
#include <vector>

#include "cblab/errors.hpp"

namespace cblab::record {

namespace {

std::string format_double(double v) {
  if (!std::isfinite(v)) throw DomainError("non-finite value in output document");
  // '#' keeps trailing zeros, so every float shows all 17 digits
  char buf[40];
  const int len = std::snprintf(buf, sizeof buf, "%#.17g", v);
  return std::string(buf, static_cast<std::size_t>(len));
}

void write(const Json& j, std::string& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ",\n";
        first = false;
        out += pad + Json(key).dump() + ": ";
        write(value, out, indent + 2);
      }
      out += "\n" + std::string(static_cast<std::size_t>(indent), ' ') + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // numeric arrays stay on one line
      bool flat = true;
      for (const auto& e : j) flat = flat && (e.is_number() || e.is_boolean());
      out += flat ? "[" : "[\n";
      bool first = true;
      for (const auto& e : j) {
        if (!first) out += flat ? ", " : ",\n";
        first = false;
        if (!flat) out += pad;
        write(e, out, indent + 2);
      }
      out += flat ? "]" : "\n" + std::string(static_cast<std::size_t>(indent), ' ') + "]";
      return;
    }
    case Json::value_t::number_float:
      out += format_double(j.get<double>());
      return;
    default:
      out += j.dump();
  }
}

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_float()) return format_double(j.get<double>());
  if (j.is_null()) return "";
  return j.dump();
}

void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& row) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items())
      flatten(value, prefix.empty() ? key : prefix + "." + key, row);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i)
      flatten(j[i], prefix.empty() ? std::to_string(i) : prefix + "." + std::to_string(i), row);
  } else {
    row.emplace_back(prefix.empty() ? "value" : prefix, scalar_text(j));
  }
}

std::string quote(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

Json number_or_pair(Complex z, bool real) {
  if (real) return z.real();
  return Json::array({z.real(), z.imag()});
}

Complex read_entry(const Json& e) {
  if (e.is_number()) return {e.get<double>(), 0.0};
  if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number())
    return {e[0].get<double>(), e[1].get<double>()};
  throw ParseError("record entry is neither a number nor a [re, im] pair");
}

const Json& field(const Json& rec, const char* key) {
  if (!rec.is_object() || !rec.contains(key))
    throw ParseError(std::string("record is missing field '") + key + "'");
  return rec.at(key);
}

}  // namespace

std::string dump(const Json& doc) {
  std::string out;
  write(doc, out, 0);
  out += '\n';
  return out;
}

std::string to_csv(const Json& payload) {
  std::vector<Json> items;
  if (payload.is_object() && payload.contains("records") && payload["records"].is_array()) {
    for (const auto& r : payload["records"]) items.push_back(r);
  } else {
    items.push_back(payload);
  }

  std::vector<std::vector<std::pair<std::string, std::string>>> rows;
  std::vector<std::string> header;
  for (const auto& item : items) {
    auto& row = rows.emplace_back();
    flatten(item, "", row);
    for (const auto& [key, _] : row)
      if (std::find(header.begin(), header.end(), key) == header.end()) header.push_back(key);
  }

  std::string out;
  for (std::size_t c = 0; c < header.size(); ++c) out += (c ? "," : "") + quote(header[c]);
  out += "\r\n";
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < header.size(); ++c) {
      if (c) out += ',';
      for (const auto& [key, value] : row)
        if (key == header[c]) {
          out += quote(value);
          break;
        }
    }
    out += "\r\n";
  }
  return out;
}

Json complex_value(Complex z) {
  Json j;
  j["re"] = z.real();
  j["im"] = z.imag();
  return j;
}

Json chebyshev_blaschke(const ChebyshevBlaschke& cb) {
  const bool axis = cb.tau().on_imaginary_axis();
  Json rec;
  rec["n"] = cb.degree();
  if (!axis) rec["tau_re"] = cb.tau().re();
  rec["tau_im"] = cb.tau().im();
  rec["b"] = Json::array();
  for (Complex b : cb.squared_zeros()) rec["b"].push_back(number_or_pair(b, axis));
  rec["S"] = Json::array();
  for (Complex s : cb.coefficients()) rec["S"].push_back(number_or_pair(s, axis));
  rec["parity"] = cb.parity();
  return rec;
}

ChebyshevBlaschke chebyshev_blaschke_from(const Json& rec, const SeriesConfig& series) {
  const Json& n = field(rec, "n");
  const Json& tau_im = field(rec, "tau_im");
  const Json& b = field(rec, "b");
  const Json& s = field(rec, "S");
  const Json& parity = field(rec, "parity");
  if (!n.is_number_integer() || !tau_im.is_number() || !b.is_array() || !s.is_array() ||
      !parity.is_number_integer())
    throw ParseError("record field has the wrong type");
  const int degree = n.get<int>();
  if (degree < 1) throw ParseError("record degree must be positive");
  if (parity.get<int>() != degree % 2) throw ParseError("record parity disagrees with n");
  if (b.size() != static_cast<std::size_t>(degree / 2) || s.size() != b.size())
    throw ParseError("record needs n/2 entries in b and S");

  double re = 0.0;
  if (rec.contains("tau_re")) {
    if (!rec["tau_re"].is_number()) throw ParseError("record field tau_re is not a number");
    re = rec["tau_re"].get<double>();
  }
  std::vector<Complex> bv, sv;
  for (const auto& e : b) bv.push_back(read_entry(e));
  for (const auto& e : s) sv.push_back(read_entry(e));
  return ChebyshevBlaschke::restore(degree, UpperHalfPoint(Complex(re, tau_im.get<double>())),
                                    std::move(bv), std::move(sv), series);
}

Json identity_report(const IdentityReport& report) {
  Json j;
  j["identity_id"] = report.identity_id;
  j["tau"] = complex_value(report.tau.value());
  j["lhs"] = complex_value(report.lhs);
  j["rhs"] = complex_value(report.rhs);
  j["residual"] = report.residual;
  j["tolerance"] = report.tolerance;
  j["pass"] = report.pass;
  return j;
}

}  // namespace cblab::record
