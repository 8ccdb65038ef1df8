#include "pbench/refl/verify.hpp"

#include <stdexcept>

namespace pbench::refl {

namespace {

bool is_identity(const std::vector<int>& p) {
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

// Substitutes generator images (words in the maximal group) into w.
GroupWord substitute(const GroupWord& w, const std::vector<GroupWord>& images) {
  GroupWord out;
  for (int x : w) {
    const GroupWord& img = images[std::abs(x) - 1];
    if (x > 0) out.insert(out.end(), img.begin(), img.end());
    else {
      const GroupWord inv = inverse(img);
      out.insert(out.end(), inv.begin(), inv.end());
    }
  }
  return free_reduce(out);
}

}  // namespace

std::vector<std::string> all_group_names() {
  std::vector<std::string> out;
  for (const auto& g : group_catalog()) out.push_back(g.name);
  return out;
}

CheckResult verify_group(const GroupPresentation& g, const EnumerationOptions& opts) {
  Stopwatch sw;
  CheckResult r;
  r.check_id = "groups";
  r.subject = g.name;
  r.claim = "the displayed presentation of " + g.name + " defines a group of order " + std::to_string(g.expected_order);
  r.statement = "|<generators | relations>| = expected order";
  r.inputs = g.to_json();

  const CosetTable t = todd_coxeter(g, {}, opts);
  r.add_equal("order", t.order(), g.expected_order);
  r.add("table closed", t.complete, true, t.complete);
  r.add("relators trivial on every coset", relators_hold(g, t), true, relators_hold(g, t));
  r.add("cosets defined", t.cosets_defined, nullptr, true, "total definitions before coincidences");
  for (const auto& refl : g.reflections) {
    const long ord = permutation_order(t.permutation(parse_group_word(g.generators, refl.generator)));
    r.add_equal("order of " + refl.generator, ord, refl.order);
  }

  if (g.kind == "maximal") {
    const long base = family_group_order(g.family);
    r.add_equal("maximal order = |G|^2", t.order(), base * base);
    // Z generates the kernel of the map onto the base group
    const long zord = permutation_order(t.permutation(parse_group_word(g.generators, "Z")));
    r.add_equal("order of Z", zord, base);
  }

  if (g.kind == "subgroup") {
    const GroupPresentation& big = catalog_entry(maximal_group(g.family));
    const CosetTable bt = todd_coxeter(big, {}, opts);
    std::vector<GroupWord> images;
    for (const auto& s : g.realization) images.push_back(parse_group_word(big.generators, s));
    bool rels = true;
    for (const auto& rel : g.relators) rels = rels && is_identity(bt.permutation(substitute(rel, images)));
    r.add("relations hold on the images in " + big.name, rels, true, rels);
    const CosetTable sub = todd_coxeter(big, images, opts);
    const long order = bt.order() / sub.order();
    r.add_equal("order of the image in " + big.name, order, g.expected_order);
  }
  r.wall_time_ms = sw.elapsed_ms();
  return r;
}

CheckResult verify_hstar(Family f) {
  Stopwatch sw;
  CheckResult r;
  r.check_id = "hstar";
  r.subject = family_name(f);
  r.claim = "the unipotent Hecke quotient with Z = 1 has dimension |G|";
  r.statement = "dim <Y_k | (Y_k - 1)^{d_k} = 0, Y_1...Y_m = 1> = q1 q2";
  const auto h = unipotent_hecke(f, true);
  r.inputs = h.to_json();
  r.inputs["quiver_type"] = family_quiver_type(f);
  const long dim = hstar_dimension(f);
  r.add_equal("dimension", dim, family_group_order(f));
  const long dimY = nc::build_filtered_basis(h.to_algebra(), nc::FilteredOptions{.build_gr_table = false}).total_dimension;
  r.add_equal("dimension in the Y presentation", dimY, dim);
  r.wall_time_ms = sw.elapsed_ms();
  return r;
}

}  // namespace pbench::refl
