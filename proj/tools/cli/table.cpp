// SPDX-License-Identifier: Apache-2.0
//
// beamnet: beampattern statistics of random collaborative sensor arrays
// Copyright (C) 2026 The beamnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
#include "table.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace beamnet::cli
{

void Table::add_row(std::vector<Cell> row)
{
  if (row.size() != columns.size())
    throw std::logic_error("table row has " + std::to_string(row.size()) + " cells, expected " +
                           std::to_string(columns.size()));
  rows.push_back(std::move(row));
}

double to_db(double linear)
{
  if (!(linear > 0.0))
    return kDbFloor;
  return std::max(kDbFloor, 10.0 * std::log10(linear));
}

std::string format_number(double x)
{
  if (std::isnan(x))
    return "nan";
  if (std::isinf(x))
    return x > 0 ? "inf" : "-inf";
  if (x == 0.0)
    x = 0.0; // drop the sign of -0
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), res.ptr);
}

namespace
{

std::string cell_text(const Cell &c)
{
  if (const auto *d = std::get_if<double>(&c))
    return format_number(*d);
  return std::get<std::string>(c);
}

void write_fields(std::ostream &out, const std::vector<std::string> &fields)
{
  for (std::size_t i = 0; i < fields.size(); ++i)
  {
    if (i)
      out << ',';
    out << fields[i];
  }
  out << '\n';
}

std::vector<std::string> split(const std::string &line)
{
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;)
  {
    const auto pos = line.find(',', start);
    out.push_back(line.substr(start, pos - start));
    if (pos == std::string::npos)
      return out;
    start = pos + 1;
  }
}

Cell parse_cell(const std::string &text)
{
  if (text == "nan")
    return std::nan("");
  if (text == "inf")
    return HUGE_VAL;
  if (text == "-inf")
    return -HUGE_VAL;
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec == std::errc{} && res.ptr == text.data() + text.size() && !text.empty())
    return v;
  return text;
}

} // namespace

void write_csv(std::ostream &out, const Table &table)
{
  out << kCsvMagic << '\n';
  if (!table.config.is_null())
    out << "# config " << table.config.dump() << '\n';
  write_fields(out, table.columns);
  std::vector<std::string> fields;
  for (const auto &row : table.rows)
  {
    fields.clear();
    for (const auto &c : row)
      fields.push_back(cell_text(c));
    write_fields(out, fields);
  }
}

void write_json(std::ostream &out, const Table &table)
{
  // Numbers go through format_number so both formats print identical digits.
  std::string body = "{\"format\":\"beamnet-sim v1\",\"config\":";
  body += table.config.is_null() ? "null" : table.config.dump();
  body += ",\"columns\":";
  body += nlohmann::json(table.columns).dump();
  body += ",\"rows\":[";
  for (std::size_t r = 0; r < table.rows.size(); ++r)
  {
    body += r ? ",\n[" : "\n[";
    const auto &row = table.rows[r];
    for (std::size_t i = 0; i < row.size(); ++i)
    {
      if (i)
        body += ',';
      if (const auto *d = std::get_if<double>(&row[i]))
        body += std::isfinite(*d) ? format_number(*d) : nlohmann::json(format_number(*d)).dump();
      else
        body += nlohmann::json(std::get<std::string>(row[i])).dump();
    }
    body += ']';
  }
  body += "]}\n";
  out << body;
}

Table read_csv(std::istream &in)
{
  std::string line;
  if (!std::getline(in, line) || line != kCsvMagic)
    throw std::runtime_error("missing '# beamnet-sim v1' header");
  Table t;
  if (!std::getline(in, line))
    throw std::runtime_error("missing column header");
  constexpr std::string_view config_tag = "# config ";
  if (line.rfind(config_tag, 0) == 0)
  {
    t.config = nlohmann::json::parse(line.substr(config_tag.size()));
    if (!std::getline(in, line))
      throw std::runtime_error("missing column header");
  }
  t.columns = split(line);
  while (std::getline(in, line))
  {
    const auto fields = split(line);
    std::vector<Cell> row;
    row.reserve(fields.size());
    for (const auto &f : fields)
      row.push_back(parse_cell(f));
    t.add_row(std::move(row));
  }
  return t;
}

} // namespace beamnet::cli
