#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace pbench::refl {

// Letters are +(g+1) for generator g and -(g+1) for its inverse.
using GroupWord = std::vector<int>;

enum class Family { Tetrahedral, Octahedral, Icosahedral };
std::string family_name(Family f);
Family parse_family(const std::string& s);

struct ReflectionClass {
  std::string generator;
  int order = 0;  // p in g^p = 1
};

struct GroupPresentation {
  std::string name;     // "G4", ..., "tetrahedral" for the base groups
  Family family = Family::Tetrahedral;
  std::string kind;     // "base", "maximal" or "subgroup"
  std::vector<std::string> generators;
  std::vector<std::string> relation_text;  // as displayed, e.g. "a^2=zeta^-1"
  std::vector<GroupWord> relators;
  std::vector<ReflectionClass> reflections;
  long expected_order = 0;
  // images of the generators as words in the maximal group of the family
  std::vector<std::string> realization;

  int generator_index(const std::string& name) const;
  nlohmann::json to_json() const;
};

// Builds relators from relation strings over the given generators. Tokens are
// separated by spaces and may carry an integer exponent ("zeta^-1"). "x central"
// adds the commutators of x with every other generator.
GroupPresentation make_presentation(std::string name, Family family, std::string kind,
                                    std::vector<std::string> generators, std::vector<std::string> relations,
                                    long expected_order);
GroupWord parse_group_word(const std::vector<std::string>& generators, const std::string& text);
GroupWord free_reduce(GroupWord w);
GroupWord cyclic_reduce(GroupWord w);
GroupWord inverse(const GroupWord& w);

// The three base groups followed by G4..G22.
std::vector<GroupPresentation> group_catalog();
const GroupPresentation& catalog_entry(const std::string& name);
// The maximal group of each family (G7, G11, G19).
std::string maximal_group(Family f);

struct CosetTable {
  int num_generators = 0;
  // table[c][2g] = c * g, table[c][2g+1] = c * g^-1
  std::vector<std::vector<int>> table;
  bool complete = false;
  long cosets_defined = 0;  // total definitions, including ones later merged

  long order() const { return static_cast<long>(table.size()); }
  // Permutation of the cosets induced by a word (right action).
  std::vector<int> permutation(const GroupWord& w) const;
  int apply(int coset, const GroupWord& w) const;
};

struct EnumerationOptions {
  long max_cosets = 100000;
};

// Felsch-style coset enumeration of the trivial subgroup (or the subgroup
// generated by `subgroup`). Throws std::length_error past max_cosets.
CosetTable todd_coxeter(const GroupPresentation& g, const std::vector<GroupWord>& subgroup = {},
                        const EnumerationOptions& opts = {});

// Every relator fixes every coset and every entry is filled.
bool relators_hold(const GroupPresentation& g, const CosetTable& t);
long permutation_order(const std::vector<int>& perm);
// Order of the group generated by permutations (orbit-closure of elements).
long generated_group_order(const std::vector<std::vector<int>>& gens, long bound = 1000000);

}  // namespace pbench::refl
