#include "pbench/nc/presentation.hpp"

#include <algorithm>
#include <stdexcept>

namespace pbench::nc {

int AlgebraPresentation::add_generator(const std::string& name, int source, int target, int degree) {
  if (source < 0 || source >= num_vertices_ || target < 0 || target >= num_vertices_)
    throw std::invalid_argument("generator " + name + " has an endpoint outside the vertex set");
  if (degree < 1) throw std::invalid_argument("generator " + name + " must have positive degree");
  for (const auto& g : generators_)
    if (g.name == name) throw std::invalid_argument("duplicate generator name " + name);
  generators_.push_back({name, source, target, degree});
  return static_cast<int>(generators_.size()) - 1;
}

int AlgebraPresentation::generator_index(const std::string& name) const {
  for (size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i].name == name) return static_cast<int>(i);
  throw std::invalid_argument("unknown generator " + name);
}

Path AlgebraPresentation::path(const std::vector<std::string>& names, int vertex_if_empty) const {
  Word w;
  for (const auto& n : names) w.push_back(generator_index(n));
  return path_of(w, vertex_if_empty);
}

Path AlgebraPresentation::path_of(const Word& w, int vertex_if_empty) const {
  if (w.empty()) {
    if (vertex_if_empty < 0 || vertex_if_empty >= num_vertices_)
      throw std::invalid_argument("empty path needs a vertex");
    return idempotent(vertex_if_empty);
  }
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (generator(w[i]).target != generator(w[i + 1]).source)
      throw std::invalid_argument("word " + word_to_string(w) + " is not composable");
  return Path{generator(w.front()).source, generator(w.back()).target, w};
}

void AlgebraPresentation::add_relation(std::vector<Term> terms, std::string label) {
  // merge equal paths and drop zeros
  std::vector<Term> merged;
  for (auto& t : terms) {
    auto it = std::find_if(merged.begin(), merged.end(), [&](const Term& m) { return m.path == t.path; });
    if (it == merged.end())
      merged.push_back(t);
    else
      it->coeff += t.coeff;
  }
  std::erase_if(merged, [](const Term& t) { return sgn(t.coeff) == 0; });
  if (merged.empty()) return;
  Relation r;
  r.source = merged.front().path.source;
  r.target = merged.front().path.target;
  for (const auto& t : merged)
    if (t.path.source != r.source || t.path.target != r.target)
      throw std::invalid_argument("relation " + label + " mixes endpoints");
  r.terms = std::move(merged);
  r.label = std::move(label);
  relations_.push_back(std::move(r));
}

int AlgebraPresentation::word_degree(const Word& w) const {
  int d = 0;
  for (int g : w) d += generator(g).degree;
  return d;
}

int AlgebraPresentation::max_generator_degree() const {
  int d = 1;
  for (const auto& g : generators_) d = std::max(d, g.degree);
  return d;
}

int AlgebraPresentation::relation_top_degree(const Relation& r) const {
  int d = 0;
  for (const auto& t : r.terms) d = std::max(d, word_degree(t.path.letters));
  return d;
}

bool AlgebraPresentation::is_homogeneous() const {
  for (const auto& r : relations_) {
    int d = word_degree(r.terms.front().path.letters);
    for (const auto& t : r.terms)
      if (word_degree(t.path.letters) != d) return false;
  }
  return true;
}

AlgebraPresentation AlgebraPresentation::top_degree_part() const {
  AlgebraPresentation p = *this;
  p.relations_.clear();
  for (const auto& r : relations_) {
    int d = relation_top_degree(r);
    std::vector<Term> top;
    for (const auto& t : r.terms)
      if (word_degree(t.path.letters) == d) top.push_back(t);
    p.add_relation(std::move(top), r.label);
  }
  return p;
}

void AlgebraPresentation::validate() const {
  if (num_vertices_ < 1) throw std::invalid_argument("empty quiver");
  for (const auto& g : generators_)
    if (g.source < 0 || g.source >= num_vertices_ || g.target < 0 || g.target >= num_vertices_ || g.degree < 1)
      throw std::invalid_argument("malformed generator " + g.name);
  for (const auto& r : relations_) {
    if (r.terms.empty()) throw std::invalid_argument("empty relation " + r.label);
    for (const auto& t : r.terms) {
      const Path& p = t.path;
      if (p.letters.empty()) {
        if (p.source != p.target) throw std::invalid_argument("idempotent with distinct endpoints");
      } else {
        Path check = path_of(p.letters);
        if (check.source != p.source || check.target != p.target)
          throw std::invalid_argument("path endpoints disagree with its letters");
      }
      if (p.source != r.source || p.target != r.target)
        throw std::invalid_argument("relation " + r.label + " mixes endpoints");
    }
  }
}

nlohmann::json AlgebraPresentation::to_json() const {
  nlohmann::json j;
  j["vertices"] = num_vertices_;
  j["generators"] = nlohmann::json::array();
  for (const auto& g : generators_)
    j["generators"].push_back({{"name", g.name}, {"source", g.source}, {"target", g.target}, {"degree", g.degree}});
  j["relations"] = nlohmann::json::array();
  for (const auto& r : relations_) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : r.terms) {
      nlohmann::json w = nlohmann::json::array();
      for (int g : t.path.letters) w.push_back(generators_[g].name);
      terms.push_back({{"coeff", rational_to_json(t.coeff)}, {"word", w}, {"vertex", t.path.source}});
    }
    j["relations"].push_back({{"label", r.label}, {"terms", terms}});
  }
  if (central_) j["central"] = *central_;
  return j;
}

AlgebraPresentation AlgebraPresentation::from_json(const nlohmann::json& j) {
  AlgebraPresentation p(j.at("vertices").get<int>());
  for (const auto& g : j.at("generators"))
    p.add_generator(g.at("name").get<std::string>(), g.at("source").get<int>(), g.at("target").get<int>(),
                    g.at("degree").get<int>());
  for (const auto& r : j.at("relations")) {
    std::vector<Term> terms;
    for (const auto& t : r.at("terms")) {
      std::vector<std::string> names = t.at("word").get<std::vector<std::string>>();
      terms.push_back({rational_from_json(t.at("coeff")), p.path(names, t.value("vertex", -1))});
    }
    p.add_relation(std::move(terms), r.value("label", ""));
  }
  if (j.contains("central")) p.set_central_element(j.at("central").get<std::string>());
  p.validate();
  return p;
}

uint64_t fnv1a64(const std::string& data) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

uint64_t AlgebraPresentation::content_hash() const { return fnv1a64(to_json().dump()); }

std::string AlgebraPresentation::word_to_string(const Word& w) const {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += " ";
    s += generators_.at(w[i]).name;
  }
  return s;
}

std::string AlgebraPresentation::path_to_string(const Path& p) const {
  if (p.letters.empty()) return "e" + std::to_string(p.source + 1);
  return word_to_string(p.letters);
}

}  // namespace pbench::nc
