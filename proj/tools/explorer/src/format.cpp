#include "gurland/explorer/format.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_set>

#include "gurland/errors.hpp"

namespace gurland::explorer {
namespace {

struct Field {
  std::string name;
  std::optional<std::string> text;
  bool boolean = false;
};

std::optional<std::string> real_text(const std::optional<double>& v) {
  if (!v || !std::isfinite(*v)) return std::nullopt;
  return format_real(*v);
}

std::vector<Field> record_fields(const SweepRecord& r) {
  std::vector<Field> f;
  f.reserve(12 + 3 * r.orders.size());
  f.push_back({"x", real_text(r.x)});
  f.push_back({"y", real_text(r.y)});
  f.push_back({"q", real_text(r.q)});
  f.push_back({"ln_ratio_direct", real_text(r.ln_ratio_direct)});
  for (const auto& o : r.orders) {
    const std::string m = std::to_string(o.m);
    f.push_back({"s_m_" + m, real_text(o.s_m)});
    f.push_back({"epsilon_m_" + m, real_text(o.epsilon_m)});
    f.push_back({"v_m_" + m, real_text(o.v_m)});
  }
  f.push_back({"lower_bound", real_text(r.lower_bound)});
  f.push_back({"upper_bound", real_text(r.upper_bound)});
  f.push_back({"t", real_text(r.t)});
  f.push_back({"lambda", real_text(r.lambda)});
  f.push_back({"s_infinity", real_text(r.s_infinity)});
  f.push_back({"s_inf_terms",
               r.s_inf_terms ? std::optional<std::string>(std::to_string(*r.s_inf_terms))
                             : std::nullopt});
  f.push_back({"product_enclosure_width", real_text(r.product_enclosure_width)});
  f.push_back({"violation", std::string(r.violation ? "1" : "0"), true});
  return f;
}

template <typename Emit>
void for_selected(const std::vector<std::string>& columns, const SweepRecord& record,
                  Emit emit) {
  const std::unordered_set<std::string> wanted(columns.begin(), columns.end());
  for (const auto& field : record_fields(record)) {
    if (wanted.contains(field.name)) emit(field);
  }
}

}  // namespace

OutputFormat parse_format(std::string_view text) {
  if (text == "csv") return OutputFormat::csv;
  if (text == "jsonl") return OutputFormat::jsonl;
  throw DomainError("format must be 'csv' or 'jsonl', got '" + std::string(text) + "'");
}

std::string format_real(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", value);
  return buf;
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (const char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> column_names(const std::vector<TruncationOrder>& m_orders) {
  SweepRecord blank;
  for (const auto m : m_orders) blank.orders.push_back({m.value(), {}, {}, {}});
  std::vector<std::string> names;
  for (auto& field : record_fields(blank)) names.push_back(std::move(field.name));
  return names;
}

std::vector<std::string> select_columns(const std::vector<TruncationOrder>& m_orders,
                                        const std::vector<std::string>& requested) {
  std::vector<std::string> all = column_names(m_orders);
  if (requested.empty()) return all;
  for (const auto& name : requested) {
    if (std::find(all.begin(), all.end(), name) == all.end()) {
      throw DomainError("unknown column '" + name + "'");
    }
  }
  std::erase_if(all, [&](const std::string& name) {
    return std::find(requested.begin(), requested.end(), name) == requested.end();
  });
  return all;
}

void write_csv(std::ostream& out, const std::vector<std::string>& columns,
               const std::vector<SweepRecord>& records) {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i != 0) out << ',';
    out << csv_field(columns[i]);
  }
  out << '\n';
  for (const auto& record : records) {
    bool first = true;
    for_selected(columns, record, [&](const Field& field) {
      if (!first) out << ',';
      first = false;
      if (field.text) out << csv_field(*field.text);
    });
    out << '\n';
  }
}

void write_jsonl(std::ostream& out, const std::vector<std::string>& columns,
                 const std::vector<SweepRecord>& records) {
  for (const auto& record : records) {
    bool first = true;
    out << '{';
    for_selected(columns, record, [&](const Field& field) {
      if (!field.text) return;
      if (!first) out << ',';
      first = false;
      out << '"' << field.name << "\":";
      if (field.boolean) {
        out << (*field.text == "1" ? "true" : "false");
      } else {
        out << *field.text;
      }
    });
    out << "}\n";
  }
}

}  // namespace gurland::explorer
