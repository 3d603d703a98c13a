#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "gurland/explorer/sweep.hpp"

namespace gurland::explorer {

enum class OutputFormat { csv, jsonl };

/// Parses "csv" or "jsonl". Throws DomainError otherwise.
OutputFormat parse_format(std::string_view text);

/// Fixed 17-significant-digit scientific notation, "%.16e".
std::string format_real(double value);

/// Quotes a CSV field when it contains a comma, quote, CR or LF.
std::string csv_field(std::string_view text);

/// Canonical column order for the given truncation orders:
/// x, y, q, ln_ratio_direct, s_m_M, epsilon_m_M, v_m_M (per M), lower_bound,
/// upper_bound, t, lambda, s_infinity, s_inf_terms, product_enclosure_width,
/// violation.
std::vector<std::string> column_names(const std::vector<TruncationOrder>& m_orders);

/// The canonical columns restricted to the requested ones (all when empty).
/// Throws DomainError on unknown names.
std::vector<std::string> select_columns(const std::vector<TruncationOrder>& m_orders,
                                        const std::vector<std::string>& requested);

/// Header row plus one row per record, "\n" line endings. Empty fields mark
/// absent values.
void write_csv(std::ostream& out, const std::vector<std::string>& columns,
               const std::vector<SweepRecord>& records);

/// One flat JSON object per record; absent values are omitted.
void write_jsonl(std::ostream& out, const std::vector<std::string>& columns,
                 const std::vector<SweepRecord>& records);

}  // namespace gurland::explorer
