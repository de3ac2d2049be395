// Copyright 2026 The multop Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "multop/config.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "multop/errors.hpp"

namespace multop {

namespace {

using Json = nlohmann::json;

class Reader {
 public:
  Reader(const Json& node, std::string path) : node_(node), path_(std::move(path)) {}

  const Json& node() const { return node_; }
  const std::string& path() const { return path_; }

  [[noreturn]] void fail(const std::string& what) const { throw ConfigError(path_ + ": " + what); }

  bool has(const char* key) const { return node_.is_object() && node_.contains(key); }

  Reader at(const char* key) const {
    if (!node_.is_object()) fail("expected an object");
    auto it = node_.find(key);
    if (it == node_.end()) throw ConfigError(child_path(key) + ": missing");
    return Reader(*it, child_path(key));
  }
  Reader at(std::size_t index) const { return Reader(node_.at(index), path_ + "[" + std::to_string(index) + "]"); }

  std::size_t array_size() const {
    if (!node_.is_array()) fail("expected an array");
    return node_.size();
  }

  double real(bool allow_infinite = false) const {
    if (node_.is_number()) return node_.get<double>();
    if (allow_infinite && node_.is_string()) {
      const std::string s = node_.get<std::string>();
      if (s == "inf") return std::numeric_limits<double>::infinity();
      if (s == "-inf") return -std::numeric_limits<double>::infinity();
    }
    fail(allow_infinite ? "expected a number, \"inf\" or \"-inf\"" : "expected a number");
  }

  double positive_real() const {
    const double v = real();
    if (!(v > 0.0)) fail("must be positive");
    return v;
  }

  long long integer() const {
    if (!node_.is_number_integer()) fail("expected an integer");
    return node_.get<long long>();
  }

  std::string string() const {
    if (!node_.is_string()) fail("expected a string");
    return node_.get<std::string>();
  }

  bool boolean() const {
    if (!node_.is_boolean()) fail("expected true or false");
    return node_.get<bool>();
  }

  Expression expression() const {
    if (node_.is_number()) return Expression::constant(node_.get<double>());
    if (node_.is_array()) return Expression::constant(complex());
    if (!node_.is_string()) fail("expected a number, [re, im] or an expression string");
    try {
      return Expression::parse(node_.get<std::string>());
    } catch (const ParseError& e) {
      fail(std::string(e.what()));
    }
  }

  Complex complex() const {
    if (node_.is_number()) return node_.get<double>();
    if (node_.is_array()) {
      if (node_.size() != 2 || !node_[0].is_number() || !node_[1].is_number()) fail("expected [re, im]");
      return {node_[0].get<double>(), node_[1].get<double>()};
    }
    const Expression e = expression();
    if (!e.is_constant()) fail("expected a constant, found an expression in x");
    const Complex z = e.evaluate(0.0);
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) fail("value is not finite");
    return z;
  }

  std::vector<double> reals() const {
    std::vector<double> out(array_size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = at(k).real();
    return out;
  }

  /// n x n entries in row-major order.
  std::vector<Reader> matrix_entries(int n) const {
    std::vector<Reader> out;
    if (n == 1 && !node_.is_array()) {
      out.push_back(*this);
      return out;
    }
    if (n == 1 && node_.is_array() && node_.size() == 2 && node_[0].is_number()) {
      out.push_back(*this);  // a single [re, im] pair
      return out;
    }
    const std::size_t rows = array_size();
    if (rows == static_cast<std::size_t>(n) * n && (n == 1 || !node_[0].is_array() || node_[0].size() == 2)) {
      for (std::size_t k = 0; k < rows; ++k) out.push_back(at(k));
      return out;
    }
    if (rows != static_cast<std::size_t>(n)) fail("expected " + std::to_string(n) + " rows");
    for (std::size_t r = 0; r < rows; ++r) {
      const Reader row = at(r);
      if (row.array_size() != static_cast<std::size_t>(n)) row.fail("expected " + std::to_string(n) + " entries");
      for (std::size_t c = 0; c < static_cast<std::size_t>(n); ++c) out.push_back(row.at(c));
    }
    return out;
  }

  CMatrix matrix(int n) const {
    const std::vector<Reader> entries = matrix_entries(n);
    CMatrix m(n, n);
    for (int k = 0; k < n * n; ++k) m(k / n, k % n) = entries[k].complex();
    return m;
  }

 private:
  std::string child_path(const char* key) const { return path_.empty() ? key : path_ + "." + key; }

  const Json& node_;
  std::string path_;
};

SpacePtr read_space(const Reader& r) {
  const std::string mode = r.at("mode").string();
  if (mode == "finite") {
    const std::vector<double> weights = r.at("weights").reals();
    std::vector<double> coords;
    if (r.has("coordinates")) {
      coords = r.at("coordinates").reals();
      if (coords.size() != weights.size()) r.at("coordinates").fail("length differs from weights");
    } else {
      for (std::size_t k = 0; k < weights.size(); ++k) coords.push_back(static_cast<double>(k + 1));
    }
    for (std::size_t k = 0; k < weights.size(); ++k)
      if (!(weights[k] >= 0.0) || !std::isfinite(weights[k])) r.at("weights").at(k).fail("weight must be finite and >= 0");
    const bool nonatomic = r.has("nonatomic") ? r.at("nonatomic").boolean() : false;
    try {
      return make_space(MeasureSpace::finite(std::move(coords), weights, nonatomic));
    } catch (const Error& e) {
      r.fail(e.what());
    }
  }
  if (mode == "sequence") {
    const Reader rr = r.at("weight_rule");
    WeightRule rule;
    const std::string kind = rr.at("kind").string();
    if (kind == "geometric") {
      rule.kind = WeightRule::Kind::Geometric;
    } else if (kind == "power") {
      rule.kind = WeightRule::Kind::Power;
    } else {
      rr.at("kind").fail("unknown weight rule \"" + kind + "\"");
    }
    if (rr.has("scale")) rule.scale = rr.at("scale").positive_real();
    rule.parameter = rr.at("parameter").real();
    const long long trunc = r.at("truncation").integer();
    if (trunc < 1) r.at("truncation").fail("must be >= 1");
    try {
      return make_space(MeasureSpace::sequence(rule, static_cast<std::size_t>(trunc)));
    } catch (const Error& e) {
      rr.fail(e.what());
    }
  }
  r.at("mode").fail("expected \"finite\" or \"sequence\"");
}

SymbolFunction read_symbol(const Reader& r, const SpacePtr& space) {
  const std::string kind = r.at("kind").string();
  const int n = r.has("n") ? static_cast<int>(r.at("n").integer()) : 1;
  if (n < 1 || n > kMaxSymbolDim) r.at("n").fail("block size must lie in 1.." + std::to_string(kMaxSymbolDim));

  std::optional<SymbolFunction> u;
  if (kind == "constant") {
    u = SymbolFunction::constant(space, r.at("value").matrix(n));
  } else if (kind == "table") {
    const Reader values = r.at("values");
    if (values.array_size() != space->size()) values.fail("expected one matrix per materialized atom");
    std::vector<CMatrix> table;
    for (std::size_t k = 0; k < space->size(); ++k) table.push_back(values.at(k).matrix(n));
    u = SymbolFunction::table(space, std::move(table));
  } else if (kind == "expr") {
    std::vector<Expression> entries;
    for (const Reader& e : r.at("entries").matrix_entries(n)) entries.push_back(e.expression());
    u = SymbolFunction::expressions(space, n, std::move(entries));
  } else {
    r.at("kind").fail("expected \"constant\", \"table\" or \"expr\"");
  }

  if (r.has("envelope")) {
    const Reader e = r.at("envelope");
    TailEnvelope env;
    env.norm_bound = e.at("norm_bound").expression();
    env.norm_limit = e.has("norm_limit") ? e.at("norm_limit").real(true) : 0.0;
    if (e.has("spectral_bound")) {
      env.spectral_bound = e.at("spectral_bound").expression();
      env.spectral_limit = e.has("spectral_limit") ? e.at("spectral_limit").real(true) : 0.0;
    }
    u = u->with_envelope(env);
    try {
      validate_envelope(*u);
    } catch (const ConfigError& err) {
      e.fail(err.what());
    }
  } else if (!space->is_finite() && !u->is_constant()) {
    r.fail("sequence mode needs an \"envelope\" for a non-constant symbol");
  }
  return *u;
}

NormSpec read_norm(const Reader& r) {
  const std::string type = r.at("type").string();
  try {
    if (type == "lp") return NormSpec::lp(r.at("p").real(true));
    if (type == "orlicz") {
      const double p = r.has("p") ? r.at("p").real() : 2.0;
      return NormSpec::orlicz(YoungFunction::builtin(r.at("phi").string(), p));
    }
    if (type == "lorentz") return NormSpec::lorentz(r.at("p").real(), r.at("q").real(true));
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    r.fail(e.what());
  }
  r.at("type").fail("expected \"lp\", \"orlicz\" or \"lorentz\"");
}

TaskParams read_task(const Reader& r) {
  TaskParams t;
  if (r.has("t_grid")) {
    const Reader g = r.at("t_grid");
    t.t_grid = g.reals();
    if (t.t_grid.empty()) g.fail("must not be empty");
    if (!(t.t_grid.front() >= 0.0)) g.at(std::size_t{0}).fail("times must be >= 0");
    for (std::size_t k = 1; k < t.t_grid.size(); ++k)
      if (!(t.t_grid[k] > t.t_grid[k - 1])) g.at(k).fail("times must be strictly ascending");
  }
  if (r.has("lambda")) t.lambda = r.at("lambda").complex();
  if (r.has("m")) {
    const long long m = r.at("m").integer();
    if (m < 0) r.at("m").fail("must be >= 0");
    t.m = static_cast<int>(m);
  }
  if (r.has("tol")) t.tol = r.at("tol").positive_real();
  if (r.has("trials")) {
    const long long trials = r.at("trials").integer();
    if (trials < 1) r.at("trials").fail("must be >= 1");
    t.trials = static_cast<std::size_t>(trials);
  }
  if (r.has("seed")) {
    const long long seed = r.at("seed").integer();
    if (seed < 0) r.at("seed").fail("must be >= 0");
    t.seed = static_cast<std::uint64_t>(seed);
  }
  if (r.has("initial")) {
    const Reader x = r.at("initial");
    std::vector<Complex> values(x.array_size());
    for (std::size_t k = 0; k < values.size(); ++k) values[k] = x.at(k).complex();
    t.initial = std::move(values);
  }
  if (r.has("eps_grid")) {
    const Reader g = r.at("eps_grid");
    t.eps_grid = g.reals();
    for (std::size_t k = 0; k < t.eps_grid.size(); ++k)
      if (!(t.eps_grid[k] > 0.0)) g.at(k).fail("must be positive");
  }
  if (r.has("t_max")) t.t_max = r.at("t_max").positive_real();
  return t;
}

}  // namespace

ProblemConfig parse_config(std::string_view json_text) {
  Json doc;
  try {
    doc = Json::parse(json_text.begin(), json_text.end());
  } catch (const Json::parse_error& e) {
    throw ConfigError(std::string("malformed JSON: ") + e.what());
  }
  const Reader root(doc, "");
  if (!doc.is_object()) throw ConfigError("config: expected a JSON object");
  if (!root.has("version")) throw ConfigError("version: missing");
  if (root.at("version").integer() != 1) root.at("version").fail("unsupported schema version");

  SpacePtr space = read_space(root.at("space"));
  SymbolFunction symbol = read_symbol(root.at("symbol"), space);
  NormSpec ns = root.has("norm") ? read_norm(root.at("norm")) : NormSpec::lp(2.0);
  TaskParams task = root.has("task") ? read_task(root.at("task")) : TaskParams{};
  if (task.initial && task.initial->size() != static_cast<std::size_t>(symbol.dim()))
    throw ConfigError("task.initial: expected " + std::to_string(symbol.dim()) + " components");
  return ProblemConfig{std::move(space), std::move(symbol), std::move(ns), std::move(task)};
}

ProblemConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

VectorFunction initial_value(const ProblemConfig& config) {
  const int n = config.symbol.dim();
  CVector x = CVector::Ones(n);
  if (config.task.initial)
    for (int k = 0; k < n; ++k) x(k) = (*config.task.initial)[k];
  return VectorFunction(config.space, std::vector<CVector>(config.space->size(), x));
}

}  // namespace multop
