#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pbench/exact/rational.hpp"

namespace pbench::nc {

using Word = std::vector<int>;  // generator indices, composed left to right

struct Generator {
  std::string name;
  int source = 0;
  int target = 0;
  int degree = 1;
};

// A path in the quiver: either a word of generators or, when empty, the
// idempotent at `source` (then source == target).
struct Path {
  int source = 0;
  int target = 0;
  Word letters;

  bool operator==(const Path& o) const = default;
};

struct Term {
  Rational coeff;
  Path path;
};

struct Relation {
  int source = 0;
  int target = 0;
  std::vector<Term> terms;
  std::string label;
};

class AlgebraPresentation {
 public:
  AlgebraPresentation() = default;
  explicit AlgebraPresentation(int num_vertices) : num_vertices_(num_vertices) {}

  int num_vertices() const { return num_vertices_; }
  int num_generators() const { return static_cast<int>(generators_.size()); }
  const std::vector<Generator>& generators() const { return generators_; }
  const Generator& generator(int g) const { return generators_.at(g); }
  const std::vector<Relation>& relations() const { return relations_; }
  const std::optional<std::string>& central_element() const { return central_; }
  void set_central_element(std::string name) { central_ = std::move(name); }

  int add_generator(const std::string& name, int source, int target, int degree);
  int generator_index(const std::string& name) const;

  // Builds a path from generator names; the empty list means e_vertex.
  Path path(const std::vector<std::string>& names, int vertex_if_empty = -1) const;
  Path path_of(const Word& w, int vertex_if_empty = -1) const;
  Path idempotent(int v) const { return Path{v, v, {}}; }

  // Adds a relation sum coeff * path = 0. Terms must share endpoints.
  void add_relation(std::vector<Term> terms, std::string label = {});

  int word_degree(const Word& w) const;
  int max_generator_degree() const;
  bool is_homogeneous() const;
  int relation_top_degree(const Relation& r) const;
  // Highest-degree part of every relation; the presentation of the
  // associated graded algebra when the relations form a Groebner basis.
  AlgebraPresentation top_degree_part() const;

  // Throws std::invalid_argument on inconsistent data.
  void validate() const;

  nlohmann::json to_json() const;
  static AlgebraPresentation from_json(const nlohmann::json& j);
  // FNV-1a over the canonical JSON text.
  uint64_t content_hash() const;

  std::string word_to_string(const Word& w) const;
  std::string path_to_string(const Path& p) const;

 private:
  int num_vertices_ = 1;
  std::vector<Generator> generators_;
  std::vector<Relation> relations_;
  std::optional<std::string> central_;
};

uint64_t fnv1a64(const std::string& data);

}  // namespace pbench::nc
