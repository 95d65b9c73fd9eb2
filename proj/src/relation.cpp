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

#include "fluctuverse/relation.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <future>
#include <set>
#include <thread>

#include "embedded_data.hpp"
#include "fluctuverse/error.hpp"
#include "fluctuverse/evaluate.hpp"

namespace fluctuverse {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool valid_id(std::string_view id) {
  return !id.empty() && std::all_of(id.begin(), id.end(), [](char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '.' || ch == '-';
  });
}

struct Section {
  std::string id;
  std::size_t line = 0;
  std::optional<std::string> desc, expr, ref;
  std::optional<double> tol;
};

class CorpusReader {
 public:
  explicit CorpusReader(std::string_view src) : src_(src) {}

  std::vector<Relation> run() {
    std::size_t pos = 0;
    while (pos <= src_.size()) {
      const auto nl = src_.find('\n', pos);
      std::string_view raw = src_.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
      pos = nl == std::string_view::npos ? src_.size() + 1 : nl + 1;
      ++line_;
      line(raw);
    }
    flush();
    return std::move(out_);
  }

 private:
  void line(std::string_view raw) {
    std::string_view text = trim(raw);
    if (text.empty() || text.front() == '#') return;
    if (text.front() == '[') {
      header(text);
      return;
    }
    if (!current_) fail("key outside of a [relation ...] section");
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) fail("expected 'key = value'");
    const std::string_view key = trim(text.substr(0, eq));
    std::string_view rest = trim(text.substr(eq + 1));
    if (key == "tol") {
      current_->tol = number(strip_comment(rest));
    } else if (key == "desc" || key == "expr" || key == "ref") {
      std::string value = quoted(rest);
      auto& slot = key == "desc" ? current_->desc : key == "expr" ? current_->expr : current_->ref;
      if (slot) fail("duplicate key '" + std::string(key) + "'");
      slot = std::move(value);
    } else {
      fail("unknown key '" + std::string(key) + "'");
    }
  }

  void header(std::string_view text) {
    text = strip_comment(text);
    if (text.back() != ']') fail("unterminated section header");
    const std::string_view inner = trim(text.substr(1, text.size() - 2));
    constexpr std::string_view kPrefix = "relation";
    if (inner.substr(0, kPrefix.size()) != kPrefix || inner.size() <= kPrefix.size() ||
        !std::isspace(static_cast<unsigned char>(inner[kPrefix.size()]))) {
      fail("section header must be [relation <id>]");
    }
    const std::string_view id = trim(inner.substr(kPrefix.size()));
    if (!valid_id(id)) fail("invalid relation id '" + std::string(id) + "'");
    flush();
    current_ = Section{std::string(id), line_, {}, {}, {}, {}};
  }

  void flush() {
    if (!current_) return;
    Section s = std::move(*current_);
    current_.reset();
    if (!seen_.insert(s.id).second) {
      throw Error(ErrorKind::kDuplicateId, "relation id '" + s.id + "' (line " + std::to_string(s.line) + ")");
    }
    if (!s.expr) {
      throw Error(ErrorKind::kParseError, "[relation " + s.id + "]: missing expr");
    }
    Relation rel;
    rel.id = s.id;
    rel.description = s.desc.value_or("");
    rel.ref = s.ref.value_or("");
    rel.tolerance_decades = s.tol.value_or(1.0);
    try {
      ParsedRelation parsed = parse_relation_expr(*s.expr);
      rel.lhs = std::move(parsed.lhs);
      rel.rhs = std::move(parsed.rhs);
      rel.comparator = parsed.comparator;
    } catch (const Error& err) {
      throw Error(ErrorKind::kParseError, "[relation " + s.id + "]: " + std::string(err.what()));
    }
    out_.push_back(std::move(rel));
  }

  static std::string_view strip_comment(std::string_view s) {
    const auto hash = s.find('#');
    return trim(hash == std::string_view::npos ? s : s.substr(0, hash));
  }

  double number(std::string_view s) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v) || v <= 0.0) {
      fail("tol must be a positive decimal, got '" + std::string(s) + "'");
    }
    return v;
  }

  std::string quoted(std::string_view s) {
    if (s.empty() || s.front() != '"') fail("expected a quoted string");
    std::string out;
    std::size_t i = 1;
    for (; i < s.size() && s[i] != '"'; ++i) {
      if (s[i] == '\\' && i + 1 < s.size()) {
        ++i;
        if (s[i] != '"' && s[i] != '\\') fail("unsupported escape '\\" + std::string(1, s[i]) + "'");
      }
      out += s[i];
    }
    if (i >= s.size()) fail("unterminated string");
    const std::string_view tail = trim(s.substr(i + 1));
    if (!tail.empty() && tail.front() != '#') fail("unexpected text after string");
    return out;
  }

  [[noreturn]] void fail(const std::string& what) const {
    std::string where = "line " + std::to_string(line_);
    if (current_) where = "[relation " + current_->id + "] " + where;
    throw Error(ErrorKind::kParseError, where + ": " + what);
  }

  std::string_view src_;
  std::size_t line_ = 0;
  std::optional<Section> current_;
  std::set<std::string> seen_;
  std::vector<Relation> out_;
};

// kUnknownIdentifier is the one failure check_relation propagates.
template <typename F>
auto recorded(RelationResult& r, F&& fn) -> std::optional<decltype(fn())> {
  try {
    return fn();
  } catch (const Error& err) {
    if (err.kind() == ErrorKind::kUnknownIdentifier) throw;
    if (!r.note.empty()) r.note += "; ";
    r.note += err.what();
    return std::nullopt;
  }
}

}  // namespace

std::string Relation::expression_source() const {
  return to_source(*lhs) + " " + std::string(to_symbol(comparator)) + " " + to_source(*rhs);
}

std::vector<Relation> parse_relation_file(std::string_view source) {
  return CorpusReader(source).run();
}

std::string_view embedded_corpus() { return embedded::corpus_text(); }

RelationResult check_relation(const Relation& rel, const ConstantsRegistry& reg, double tol_scale) {
  RelationResult r;
  r.id = rel.id;
  r.comparator = rel.comparator;
  r.tolerance_decades = rel.tolerance_decades * tol_scale;

  const auto lhs_dim = recorded(r, [&] { return infer_dimension(*rel.lhs, reg); });
  const auto rhs_dim = recorded(r, [&] { return infer_dimension(*rel.rhs, reg); });
  if (lhs_dim) r.lhs_value = recorded(r, [&] { return evaluate(*rel.lhs, reg); });
  if (rhs_dim) r.rhs_value = recorded(r, [&] { return evaluate(*rel.rhs, reg); });

  r.dim_consistent = lhs_dim && rhs_dim && *lhs_dim == *rhs_dim;
  if (lhs_dim && rhs_dim && !r.dim_consistent) {
    if (!r.note.empty()) r.note += "; ";
    r.note += "sides differ in dimension: " + lhs_dim->to_vector_string() + " vs " +
               rhs_dim->to_vector_string();
  }
  if (!r.dim_consistent || !r.lhs_value || !r.rhs_value) return r;

  r.deviation_decades = recorded(r, [&] { return decades_deviation(*r.lhs_value, *r.rhs_value); });
  if (rel.comparator == Comparator::kUpperBound) {
    r.passed = r.lhs_value->value() <= r.rhs_value->value();
  } else {
    r.passed = r.deviation_decades && *r.deviation_decades <= r.tolerance_decades;
  }
  return r;
}

std::vector<RelationResult> check_corpus(std::span<const Relation> corpus,
                                         const ConstantsRegistry& reg, double tol_scale) {
  std::vector<RelationResult> out(corpus.size());
  constexpr std::size_t kSerialBelow = 64;
  const std::size_t workers = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  if (corpus.size() < kSerialBelow || workers == 1) {
    for (std::size_t i = 0; i < corpus.size(); ++i) out[i] = check_relation(corpus[i], reg, tol_scale);
    return out;
  }
  const std::size_t chunk = (corpus.size() + workers - 1) / workers;
  std::vector<std::future<void>> jobs;
  for (std::size_t begin = 0; begin < corpus.size(); begin += chunk) {
    const std::size_t end = std::min(corpus.size(), begin + chunk);
    jobs.push_back(std::async(std::launch::async, [&, begin, end] {
      for (std::size_t i = begin; i < end; ++i) out[i] = check_relation(corpus[i], reg, tol_scale);
    }));
  }
  for (auto& j : jobs) j.get();
  return out;
}

}  // namespace fluctuverse
