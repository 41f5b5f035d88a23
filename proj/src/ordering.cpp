#include "colorder/ordering.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "colorder/rng.hpp"

namespace colorder {

namespace {

std::string format_double(double x) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

double parse_double(std::string_view token) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw std::invalid_argument("bad number '" + std::string(token) + "'");
  }
  return value;
}

constexpr std::array<std::pair<std::string_view, Strategy>, 9> kStrategyNames = {{
    {"degree", Strategy::Degree},
    {"nbor2", Strategy::Nbor2},
    {"nbor3", Strategy::Nbor3},
    {"closeness", Strategy::Closeness},
    {"clustering", Strategy::Clustering},
    {"pagerank", Strategy::PageRank},
    {"random", Strategy::Random},
    {"uniform", Strategy::Uniform},
    {"weighted", Strategy::Weighted},
}};

std::string_view strategy_name(Strategy s) {
  for (const auto& [name, value] : kStrategyNames) {
    if (value == s) return name;
  }
  return "unknown";
}

std::optional<Metric> single_metric(Strategy s) {
  switch (s) {
    case Strategy::Degree: return Metric::Degree;
    case Strategy::Nbor2: return Metric::Nbor2;
    case Strategy::Nbor3: return Metric::Nbor3;
    case Strategy::Closeness: return Metric::Closeness;
    case Strategy::Clustering: return Metric::Clustering;
    case Strategy::PageRank: return Metric::PageRank;
    default: return std::nullopt;
  }
}

}  // namespace

bool Permutation::is_valid(std::size_t n) const {
  if (order.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (VertexId v : order) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

WeightVector WeightVector::uniform() {
  WeightVector out;
  out.w.fill(1.0 / 6.0);
  return out;
}

WeightVector WeightVector::one_hot(Metric m) {
  WeightVector out;
  out.w[static_cast<std::size_t>(m)] = 1.0;
  return out;
}

WeightVector WeightVector::reported_best() { return WeightVector{{0.10, 0.05, 0.10, 0.70, 0.05, 0.00}}; }

void WeightVector::validate() const {
  double sum = 0.0;
  for (double x : w) {
    if (!(x >= 0.0) || !std::isfinite(x)) throw std::invalid_argument("weights must be finite and >= 0");
    sum += x;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw std::invalid_argument("weights must sum to 1, got " + format_double(sum));
  }
}

OrderingSpec OrderingSpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view head = text.substr(0, colon);
  const std::string_view tail = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);

  OrderingSpec spec;
  bool known = false;
  for (const auto& [name, value] : kStrategyNames) {
    if (name == head) {
      spec.strategy = value;
      known = true;
    }
  }
  if (!known) throw std::invalid_argument("unknown ordering '" + std::string(text) + "'");

  const bool has_args = colon != std::string_view::npos;
  switch (spec.strategy) {
    case Strategy::Closeness:
      if (!has_args) break;
      if (tail == "exact") {
        spec.closeness_mode = ClosenessConfig::Mode::Exact;
      } else if (tail == "sampled") {
        spec.closeness_mode = ClosenessConfig::Mode::Sampled;
      } else {
        throw std::invalid_argument("closeness takes ':exact' or ':sampled'");
      }
      break;
    case Strategy::Random:
      if (!has_args) break;
      if (tail.rfind("seed=", 0) != 0) throw std::invalid_argument("random takes ':seed=<n>'");
      {
        std::uint64_t seed = 0;
        const auto digits = tail.substr(5);
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), seed);
        if (ec != std::errc() || ptr != digits.data() + digits.size()) {
          throw std::invalid_argument("bad random seed '" + std::string(digits) + "'");
        }
        spec.seed = seed;
      }
      break;
    case Strategy::Weighted: {
      if (!has_args) {
        spec.weights = WeightVector::reported_best();
        break;
      }
      WeightVector w;
      std::size_t i = 0;
      std::size_t pos = 0;
      while (true) {
        const auto comma = tail.find(',', pos);
        if (i == w.w.size()) throw std::invalid_argument("weighted takes exactly six weights");
        w.w[i++] = parse_double(tail.substr(pos, comma == std::string_view::npos ? tail.npos : comma - pos));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
      }
      if (i != w.w.size()) throw std::invalid_argument("weighted takes exactly six weights");
      w.validate();
      spec.weights = w;
      break;
    }
    default:
      if (has_args) throw std::invalid_argument("'" + std::string(head) + "' takes no parameters");
  }
  return spec;
}

std::string OrderingSpec::to_string() const {
  std::string out(strategy_name(strategy));
  if (strategy == Strategy::Closeness && closeness_mode) {
    out += *closeness_mode == ClosenessConfig::Mode::Exact ? ":exact" : ":sampled";
  } else if (strategy == Strategy::Random && seed) {
    out += ":seed=" + std::to_string(*seed);
  } else if (strategy == Strategy::Weighted && weights) {
    out += ':';
    for (std::size_t i = 0; i < weights->w.size(); ++i) {
      if (i > 0) out += ',';
      out += format_double(weights->w[i]);
    }
  }
  return out;
}

std::vector<OrderingSpec> all_strategies() {
  std::vector<OrderingSpec> out;
  for (const auto& [name, value] : kStrategyNames) out.push_back(OrderingSpec::parse(name));
  return out;
}

Permutation order_descending(std::span<const double> scores) {
  Permutation p;
  p.order.resize(scores.size());
  std::iota(p.order.begin(), p.order.end(), VertexId{0});
  std::sort(p.order.begin(), p.order.end(), [&](VertexId a, VertexId b) {
    return scores[a] > scores[b] || (scores[a] == scores[b] && a < b);
  });
  return p;
}

MetricVector zscore(const MetricVector& scores) {
  const auto& x = scores.values;
  MetricVector out{scores.metric, std::vector<double>(x.size(), 0.0)};
  if (x.empty()) return out;
  const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
  if (*lo == *hi) return out;

  const double n = static_cast<double>(x.size());
  const double mean = std::accumulate(x.begin(), x.end(), 0.0) / n;
  double ss = 0.0;
  for (double v : x) ss += (v - mean) * (v - mean);
  const double sd = std::sqrt(ss / n);
  // Values that differ only by rounding noise count as constant.
  if (sd <= 1e-12 * std::max(std::abs(*lo), std::abs(*hi))) return out;
  for (std::size_t i = 0; i < x.size(); ++i) out.values[i] = (x[i] - mean) / sd;
  return out;
}

MetricVector combine(std::span<const MetricVector> normalized, const WeightVector& weights) {
  if (normalized.size() != kAllMetrics.size()) {
    throw std::invalid_argument("combine needs exactly six metric vectors");
  }
  const std::size_t n = normalized.front().values.size();
  for (const auto& m : normalized) {
    if (m.values.size() != n) throw std::invalid_argument("metric vectors differ in length");
  }
  MetricVector out{"combined", std::vector<double>(n, 0.0)};
  for (std::size_t i = 0; i < normalized.size(); ++i) {
    const double w = weights.w[i];
    if (w == 0.0) continue;
    const auto& z = normalized[i].values;
    for (std::size_t v = 0; v < n; ++v) out.values[v] += w * z[v];
  }
  return out;
}

Permutation random_order(std::size_t n, std::uint64_t seed) {
  Permutation p;
  p.order.resize(n);
  std::iota(p.order.begin(), p.order.end(), VertexId{0});
  Rng rng(seed);
  for (std::size_t i = n; i > 1; --i) std::swap(p.order[i - 1], p.order[rng.below(i)]);
  return p;
}

OrderingContext::OrderingContext(const Graph& g, MetricConfig config) : graph_(&g), config_(config) {}

const MetricVector& OrderingContext::raw(Metric m) {
  auto& slot = raw_[static_cast<std::size_t>(m)];
  if (!slot) slot = compute_metric(*graph_, m, config_);
  return *slot;
}

const MetricVector& OrderingContext::normalized(Metric m) {
  auto& slot = normalized_[static_cast<std::size_t>(m)];
  if (!slot) slot = zscore(raw(m));
  return *slot;
}

std::span<const MetricVector> OrderingContext::all_normalized() {
  if (normalized_all_.empty()) {
    for (Metric m : kAllMetrics) normalized_all_.push_back(normalized(m));
  }
  return normalized_all_;
}

void OrderingContext::materialize() { all_normalized(); }

const MetricVector& OrderingContext::closeness(ClosenessConfig::Mode mode) {
  if (mode == config_.closeness.mode) return raw(Metric::Closeness);
  auto it = closeness_override_.find(mode);
  if (it == closeness_override_.end()) {
    MetricConfig alt = config_;
    alt.closeness.mode = mode;
    it = closeness_override_.emplace(mode, compute_metric(*graph_, Metric::Closeness, alt)).first;
  }
  return it->second;
}

Permutation OrderingContext::order(const OrderingSpec& spec) {
  if (auto m = single_metric(spec.strategy)) {
    if (*m == Metric::Closeness && spec.closeness_mode) return order_descending(closeness(*spec.closeness_mode));
    return order_descending(raw(*m));
  }
  switch (spec.strategy) {
    case Strategy::Random:
      if (!spec.seed) throw std::invalid_argument("random ordering needs a seed");
      return random_order(graph_->num_vertices(), *spec.seed);
    case Strategy::Uniform:
      return order_descending(combine(all_normalized(), WeightVector::uniform()));
    case Strategy::Weighted:
      if (!spec.weights) throw std::invalid_argument("weighted ordering needs weights");
      spec.weights->validate();
      return order_descending(combine(all_normalized(), *spec.weights));
    default:
      throw std::invalid_argument("unhandled strategy");
  }
}

}  // namespace colorder
