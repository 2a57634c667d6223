// Copyright 2026 The cocg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cocg/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "cocg/errors.hpp"

namespace cocg {

Graph::Graph(std::size_t vertex_count) : n_(vertex_count), adjacency_(vertex_count * vertex_count, false) {}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u >= n_ || v >= n_) throw std::out_of_range("vertex out of range");
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  if (adjacency_[u * n_ + v]) return;
  adjacency_[u * n_ + v] = true;
  adjacency_[v * n_ + u] = true;
  ++edges_;
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
  if (u >= n_ || v >= n_) throw std::out_of_range("vertex out of range");
  return adjacency_[u * n_ + v];
}

std::vector<std::size_t> Graph::neighbors(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t u = 0; u < n_; ++u) {
    if (adjacency_[v * n_ + u]) out.push_back(u);
  }
  return out;
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) : IntMatrix(rows.size()) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != n_) throw std::invalid_argument("IntMatrix rows must form a square");
    std::copy(row.begin(), row.end(), entries_.begin() + static_cast<std::ptrdiff_t>(i * n_));
    ++i;
  }
}

bool IntMatrix::is_symmetric() const noexcept {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

std::int64_t IntMatrix::trace() const noexcept {
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < n_; ++i) sum += (*this)(i, i);
  return sum;
}

double IntMatrix::frobenius_norm() const noexcept {
  double sum = 0.0;
  for (const auto x : entries_) sum += static_cast<double>(x) * static_cast<double>(x);
  return std::sqrt(sum);
}

std::size_t MultipartiteShape::vertex_count() const noexcept {
  std::size_t total = 0;
  for (const auto p : parts) total += p;
  return total;
}

Graph centralizer_graph(const CentralizerFamily& family) {
  Graph graph(family.size());
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (family.cardinalities[i] == family.cardinalities[j]) graph.add_edge(i, j);
  return graph;
}

Graph complement(const Graph& graph) {
  Graph out(graph.vertex_count());
  for (std::size_t i = 0; i < graph.vertex_count(); ++i)
    for (std::size_t j = i + 1; j < graph.vertex_count(); ++j)
      if (!graph.has_edge(i, j)) out.add_edge(i, j);
  return out;
}

namespace {

constexpr std::int64_t kUnreached = -1;

std::vector<std::int64_t> bfs(const Graph& graph, std::size_t source) {
  std::vector<std::int64_t> dist(graph.vertex_count(), kUnreached);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    for (std::size_t u = 0; u < graph.vertex_count(); ++u) {
      if (dist[u] == kUnreached && graph.has_edge(v, u)) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  return dist;
}

// Component label per vertex.
std::vector<std::size_t> components(const Graph& graph, std::size_t& count) {
  std::vector<std::size_t> label(graph.vertex_count(), std::numeric_limits<std::size_t>::max());
  count = 0;
  for (std::size_t s = 0; s < graph.vertex_count(); ++s) {
    if (label[s] != std::numeric_limits<std::size_t>::max()) continue;
    const auto dist = bfs(graph, s);
    for (std::size_t v = 0; v < graph.vertex_count(); ++v)
      if (dist[v] != kUnreached) label[v] = count;
    ++count;
  }
  return label;
}

}  // namespace

bool is_connected(const Graph& graph) {
  if (graph.vertex_count() == 0) return false;
  const auto dist = bfs(graph, 0);
  return std::none_of(dist.begin(), dist.end(), [](auto d) { return d == kUnreached; });
}

IntMatrix distance_matrix(const Graph& graph) {
  const std::size_t n = graph.vertex_count();
  if (n == 0) throw DisconnectedGraph("distance matrix of the empty graph is undefined");
  IntMatrix d(n);
  for (std::size_t s = 0; s < n; ++s) {
    const auto dist = bfs(graph, s);
    for (std::size_t v = 0; v < n; ++v) {
      if (dist[v] == kUnreached) {
        throw DisconnectedGraph("vertices " + std::to_string(s) + " and " + std::to_string(v) +
                                " are in different components");
      }
      d(s, v) = dist[v];
    }
  }
  return d;
}

std::vector<std::int64_t> transmissions(const IntMatrix& distances) {
  std::vector<std::int64_t> out(distances.dimension(), 0);
  for (std::size_t i = 0; i < distances.dimension(); ++i)
    for (const auto x : distances.row(i)) out[i] += x;
  return out;
}

namespace {

IntMatrix transmission_shift(const IntMatrix& distances, std::int64_t sign) {
  const auto tr = transmissions(distances);
  IntMatrix out(distances.dimension());
  for (std::size_t i = 0; i < distances.dimension(); ++i) {
    for (std::size_t j = 0; j < distances.dimension(); ++j) out(i, j) = sign * distances(i, j);
    out(i, i) += tr[i];
  }
  return out;
}

}  // namespace

IntMatrix dl_matrix(const IntMatrix& distances) { return transmission_shift(distances, -1); }

IntMatrix dq_matrix(const IntMatrix& distances) { return transmission_shift(distances, +1); }

std::optional<MultipartiteShape> recognize_complete_multipartite(const Graph& graph) {
  if (graph.vertex_count() == 0) return std::nullopt;
  const Graph co = complement(graph);
  std::size_t count = 0;
  const auto label = components(co, count);
  if (count < 2) return std::nullopt;  // one part means no edges at all
  // Complete multipartite iff every complement component is a clique there.
  for (std::size_t u = 0; u < co.vertex_count(); ++u)
    for (std::size_t v = u + 1; v < co.vertex_count(); ++v)
      if (label[u] == label[v] && !co.has_edge(u, v)) return std::nullopt;

  MultipartiteShape shape;
  shape.parts.assign(count, 0);
  for (const auto l : label) ++shape.parts[l];
  std::sort(shape.parts.begin(), shape.parts.end(), std::greater<>());
  return shape;
}

Graph complete_multipartite_graph(std::span<const std::size_t> parts) {
  std::vector<std::size_t> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p) part_of.insert(part_of.end(), parts[p], p);
  Graph graph(part_of.size());
  for (std::size_t u = 0; u < part_of.size(); ++u)
    for (std::size_t v = u + 1; v < part_of.size(); ++v)
      if (part_of[u] != part_of[v]) graph.add_edge(u, v);
  return graph;
}

std::string to_edge_list(const Graph& graph) {
  std::ostringstream out;
  out << "p " << graph.vertex_count() << ' ' << graph.edge_count() << '\n';
  for (std::size_t u = 0; u < graph.vertex_count(); ++u)
    for (std::size_t v = u + 1; v < graph.vertex_count(); ++v)
      if (graph.has_edge(u, v)) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

}  // namespace cocg
