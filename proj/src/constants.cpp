// Copyright 2026 The Fluctuverse Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fluctuverse/constants.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "embedded_data.hpp"
#include "fluctuverse/error.hpp"

namespace fluctuverse {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
  });
}

bool is_derived_name(std::string_view name) {
  return std::find(std::begin(kDerivedConstants), std::end(kDerivedConstants), name) !=
         std::end(kDerivedConstants);
}

Dimension expected_dimension(std::string_view name) {
  if (name == "hbar") return Dimension::energy() * Dimension::time();
  if (name == "c") return Dimension::length() / Dimension::time();
  if (name == "G") return Dimension::of(-1, 3, -2);
  if (name == "e") return Dimension::charge();
  if (name == "m_e" || name == "m_pi") return Dimension::mass();
  if (name == "k_B") return Dimension::energy() / Dimension::temperature();
  if (name == "H0") return Dimension::time().inverse();
  return Dimension::dimensionless();  // N
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::kConstantsError, "line " + std::to_string(line) + ": " + what);
}

}  // namespace

ConstantsRegistry::Builder& ConstantsRegistry::Builder::set(std::string name, Quantity q,
                                                            std::string provenance) {
  auto it = std::find_if(entries_.begin(), entries_.end(),
                         [&](const ConstantEntry& e) { return e.name == name; });
  if (it != entries_.end()) {
    it->quantity = q;
    it->provenance = std::move(provenance);
  } else {
    entries_.push_back({std::move(name), q, std::move(provenance), false});
  }
  return *this;
}

ConstantsRegistry::Builder& ConstantsRegistry::Builder::load(std::string_view source,
                                                             std::string_view origin) {
  for (auto& line : parse_constants(source)) {
    std::string provenance(origin);
    if (!line.note.empty()) provenance += " (" + line.note + ")";
    set(std::move(line.name), line.quantity, std::move(provenance));
  }
  return *this;
}

ConstantsRegistry ConstantsRegistry::Builder::seal() && {
  for (std::string_view name : kRequiredConstants) {
    auto it = std::find_if(entries_.begin(), entries_.end(),
                           [&](const ConstantEntry& e) { return e.name == name; });
    if (it == entries_.end()) {
      throw Error(ErrorKind::kConstantsError, "missing required constant '" + std::string(name) + "'");
    }
    if (it->quantity.dim() != expected_dimension(name)) {
      throw Error(ErrorKind::kConstantsError,
                  "constant '" + std::string(name) + "' has unit " + it->quantity.dim().to_unit_string() +
                      ", expected " + expected_dimension(name).to_unit_string());
    }
    if (it->quantity.value() <= 0.0) {
      throw Error(ErrorKind::kConstantsError, "constant '" + std::string(name) + "' must be positive");
    }
  }
  auto get = [&](std::string_view name) -> const Quantity& {
    return std::find_if(entries_.begin(), entries_.end(),
                        [&](const ConstantEntry& e) { return e.name == name; })
        ->quantity;
  };
  const Quantity& hbar = get("hbar");
  const Quantity& c = get("c");
  const Quantity& G = get("G");
  const Quantity m_P = pow(hbar * c / G, Rational(1, 2));
  const Quantity l_P = hbar / (m_P * c);
  const Quantity tau_P = l_P / c;
  const Quantity rho_P = m_P / pow(l_P, Rational(3));
  entries_.push_back({"m_P", m_P, "derived: (hbar*c/G)^(1/2)", true});
  entries_.push_back({"l_P", l_P, "derived: hbar/(m_P*c)", true});
  entries_.push_back({"tau_P", tau_P, "derived: l_P/c", true});
  entries_.push_back({"rho_P", rho_P, "derived: m_P/l_P^3", true});
  entries_.push_back({"pi", Quantity::dimensionless(std::numbers::pi), "mathematical constant", true});
  return ConstantsRegistry(std::move(entries_));
}

ConstantsRegistry::ConstantsRegistry(std::vector<ConstantEntry> entries)
    : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) index_.emplace(entries_[i].name, i);
}

ConstantsRegistry ConstantsRegistry::defaults() {
  Builder b;
  b.load(embedded_constants(), "default");
  return std::move(b).seal();
}

ConstantsRegistry ConstantsRegistry::with_overrides_from_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIoError, "cannot open constants file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  Builder b;
  b.load(embedded_constants(), "default");
  b.load(ss.str(), path);
  return std::move(b).seal();
}

const ConstantEntry* ConstantsRegistry::entry(std::string_view name) const {
  auto it = index_.find(std::string(name));
  return it == index_.end() ? nullptr : &entries_[it->second];
}

const Quantity* ConstantsRegistry::find(std::string_view name) const {
  const ConstantEntry* e = entry(name);
  return e ? &e->quantity : nullptr;
}

const Quantity& ConstantsRegistry::at(std::string_view name) const {
  const Quantity* q = find(name);
  if (!q) throw Error(ErrorKind::kUnknownIdentifier, "'" + std::string(name) + "'");
  return *q;
}

std::vector<ConstantLine> parse_constants(std::string_view source) {
  std::vector<ConstantLine> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= source.size()) {
    const auto nl = source.find('\n', pos);
    std::string_view raw = source.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? source.size() + 1 : nl + 1;
    ++line_no;

    std::string note;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) {
      note = std::string(trim(raw.substr(hash + 1)));
      raw = raw.substr(0, hash);
    }
    raw = trim(raw);
    if (raw.empty()) continue;

    const auto eq = raw.find('=');
    if (eq == std::string_view::npos) fail(line_no, "expected 'name = <decimal> <unit>'");
    const std::string_view name = trim(raw.substr(0, eq));
    if (!is_identifier(name)) fail(line_no, "invalid constant name '" + std::string(name) + "'");
    if (is_derived_name(name)) fail(line_no, "'" + std::string(name) + "' is derived and cannot be set");

    const std::string_view rest = trim(raw.substr(eq + 1));
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
    if (ec != std::errc() || ptr == rest.data()) fail(line_no, "expected a decimal value");
    if (!std::isfinite(value)) fail(line_no, "value is not finite");
    const std::string_view unit = trim(rest.substr(static_cast<std::size_t>(ptr - rest.data())));

    Dimension dim;
    if (!unit.empty()) {
      try {
        dim = parse_unit(unit);
      } catch (const Error& err) {
        fail(line_no, err.detail());
      }
    }
    out.push_back({std::string(name), Quantity(value, dim), std::move(note), line_no});
  }
  return out;
}

std::string_view embedded_constants() { return embedded::constants_text(); }

}  // namespace fluctuverse
