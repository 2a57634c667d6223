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

#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cocg/group.hpp"

namespace cocg {

/// Simple undirected graph on vertices 0..n-1, dense adjacency.
class Graph {
 public:
  explicit Graph(std::size_t vertex_count = 0);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_; }

  /// Self-loops are rejected with std::invalid_argument.
  void add_edge(std::size_t u, std::size_t v);
  bool has_edge(std::size_t u, std::size_t v) const;
  std::vector<std::size_t> neighbors(std::size_t v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t n_;
  std::size_t edges_ = 0;
  std::vector<bool> adjacency_;
};

/// Dense square matrix of exact (64-bit) integers.
class IntMatrix {
 public:
  explicit IntMatrix(std::size_t dimension = 0) : n_(dimension), entries_(dimension * dimension, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  std::size_t dimension() const noexcept { return n_; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  std::span<const std::int64_t> row(std::size_t i) const { return {entries_.data() + i * n_, n_}; }

  bool is_symmetric() const noexcept;
  std::int64_t trace() const noexcept;
  double frobenius_norm() const noexcept;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<std::int64_t> entries_;
};

/// Part sizes of a complete multipartite graph.
struct MultipartiteShape {
  std::vector<std::size_t> parts;

  std::size_t vertex_count() const noexcept;
  friend bool operator==(const MultipartiteShape&, const MultipartiteShape&) = default;
};

/// Vertices are the family's centralizers in order; edges join equal cardinalities.
Graph centralizer_graph(const CentralizerFamily& family);

Graph complement(const Graph& graph);

bool is_connected(const Graph& graph);

/// BFS distances. Throws DisconnectedGraph when some pair is unreachable or
/// the graph is empty.
IntMatrix distance_matrix(const Graph& graph);

std::vector<std::int64_t> transmissions(const IntMatrix& distances);

/// Tr - D.
IntMatrix dl_matrix(const IntMatrix& distances);
/// Tr + D.
IntMatrix dq_matrix(const IntMatrix& distances);

/// Parts are the connected components of the complement, sorted descending.
std::optional<MultipartiteShape> recognize_complete_multipartite(const Graph& graph);

/// K_{n_1,...,n_k} with the parts laid out consecutively.
Graph complete_multipartite_graph(std::span<const std::size_t> parts);

/// "p <n> <m>" header, then one "e u v" line per edge (u < v, 1-indexed).
std::string to_edge_list(const Graph& graph);

}  // namespace cocg
