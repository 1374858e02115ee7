#include "graphperiod/named_graphs.hpp"

#include <array>
#include <charconv>
#include <stdexcept>
#include <vector>

namespace graphperiod {

namespace {

constexpr std::array<std::string_view, 7> kNames = {"empty", "path", "cycle", "complete",
                                                    "theta", "petersen", "frucht"};

// Frucht graph as a Hamiltonian 12-cycle plus chords.
constexpr std::array<int, 12> kFruchtLcf = {-5, -2, -4, 2, 5, -2, 2, 5, -2, -5, 4, 2};

std::int64_t single_param(std::string_view name, std::span<const std::int64_t> params,
                          std::int64_t min) {
  if (params.size() != 1) {
    throw std::invalid_argument(std::string(name) + " takes exactly one parameter");
  }
  if (params[0] < min) {
    throw std::invalid_argument(std::string(name) + " parameter must be >= " + std::to_string(min));
  }
  return params[0];
}

void no_params(std::string_view name, std::span<const std::int64_t> params) {
  if (!params.empty()) throw std::invalid_argument(std::string(name) + " takes no parameters");
}

MultiGraph petersen() {
  std::vector<Edge> edges;
  for (VertexId i = 0; i < 5; ++i) edges.push_back({i, (i + 1) % 5});
  for (VertexId i = 0; i < 5; ++i) edges.push_back({i, i + 5});
  for (VertexId i = 0; i < 5; ++i) edges.push_back({5 + i, 5 + (i + 2) % 5});
  return MultiGraph(10, std::move(edges));
}

MultiGraph frucht() {
  constexpr int n = 12;
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({VertexId(i), VertexId((i + 1) % n)});
  // Each chord appears twice in an LCF word; keep the copy from its smaller
  // endpoint.
  for (int i = 0; i < n; ++i) {
    const int j = ((i + kFruchtLcf[i]) % n + n) % n;
    if (i < j) edges.push_back({VertexId(i), VertexId(j)});
  }
  return MultiGraph(n, std::move(edges));
}

}  // namespace

MultiGraph named_graph(std::string_view name, std::span<const std::int64_t> params) {
  if (name == "empty") {
    const auto n = single_param(name, params, 0);
    return MultiGraph(static_cast<std::size_t>(n), {});
  }
  if (name == "path") {
    const auto n = single_param(name, params, 1);
    std::vector<Edge> edges;
    for (VertexId i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return MultiGraph(static_cast<std::size_t>(n), std::move(edges));
  }
  if (name == "cycle") {
    const auto n = single_param(name, params, 2);
    std::vector<Edge> edges;
    for (VertexId i = 0; i < n; ++i) edges.push_back({i, static_cast<VertexId>((i + 1) % n)});
    return MultiGraph(static_cast<std::size_t>(n), std::move(edges));
  }
  if (name == "complete") {
    const auto n = single_param(name, params, 1);
    std::vector<Edge> edges;
    for (VertexId i = 0; i < n; ++i) {
      for (VertexId j = i + 1; j < n; ++j) edges.push_back({i, j});
    }
    return MultiGraph(static_cast<std::size_t>(n), std::move(edges));
  }
  if (name == "theta") {
    const auto k = single_param(name, params, 1);
    return MultiGraph(2, std::vector<Edge>(static_cast<std::size_t>(k), Edge{0, 1}));
  }
  if (name == "petersen") {
    no_params(name, params);
    return petersen();
  }
  if (name == "frucht") {
    no_params(name, params);
    return frucht();
  }
  throw std::invalid_argument("unknown graph name '" + std::string(name) + "'");
}

bool is_named_graph_spec(std::string_view spec) {
  const auto name = spec.substr(0, spec.find(':'));
  for (auto known : kNames) {
    if (name == known) return true;
  }
  return false;
}

MultiGraph named_graph_from_spec(std::string_view spec) {
  const auto colon = spec.find(':');
  const auto name = spec.substr(0, colon);
  std::vector<std::int64_t> params;
  if (colon != std::string_view::npos) {
    auto rest = spec.substr(colon + 1);
    while (true) {
      const auto comma = rest.find(',');
      const auto word = rest.substr(0, comma);
      std::int64_t value = 0;
      auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
      if (word.empty() || ec != std::errc() || ptr != word.data() + word.size()) {
        throw std::invalid_argument("bad graph parameter '" + std::string(word) + "' in '" +
                                    std::string(spec) + "'");
      }
      params.push_back(value);
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  }
  return named_graph(name, params);
}

}  // namespace graphperiod
