// One PASS/FAIL line per acceptance criterion. Slow inputs need --slow or
// PBENCH_SLOW=1.
#include <cstdlib>
#include <cstring>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>

#include "pbench/cli/run.hpp"
#include "pbench/preproj/verify.hpp"
#include "pbench/qfusion/verify.hpp"
#include "pbench/refl/verify.hpp"
#include "pbench/rh/phi.hpp"
#include "pbench/rootdata.hpp"

using namespace pbench;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

const CheckItem* item(const CheckResult& r, const std::string& name) {
  for (const auto& it : r.items)
    if (it.name == name) return &it;
  return nullptr;
}

void require_all(Outcome& o, const CheckResult& r) {
  for (const auto& f : r.failures()) o.require(false, r.check_id + "/" + r.subject + ": " + f);
}

cli::Report run_checks(const std::vector<std::string>& checks, const std::vector<std::string>& types, bool slow) {
  cli::RunConfig c;
  c.checks = checks;
  c.types = types;
  c.slow = slow;
  c.cache_dir = cli::cache_dir_from_env();
  return cli::run(c);
}

long formula_dim(const rootdata::RootData& rd) {
  const long h = rd.coxeter_number, r = rd.rank;
  return h * (h + 1) * r / 6;
}

rh::CMatrix taylor_exp(const rh::CMatrix& a) {
  rh::CMatrix out = rh::CMatrix::Identity(a.rows(), a.cols());
  rh::CMatrix term = out;
  for (int k = 1; k < 80; ++k) {
    term = term * a / static_cast<double>(k);
    out += term;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  bool slow = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--slow") == 0) slow = true;
  if (const char* v = std::getenv("PBENCH_SLOW"); v != nullptr && std::string(v) != "0" && *v != '\0') slow = true;

  int failures = 0;
  auto criterion = [&](int n, const std::string& title, const std::function<void(Outcome&)>& body) {
    Outcome o;
    Stopwatch sw;
    try {
      body(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << n << ": " << title << " (" << static_cast<long>(sw.elapsed_ms())
              << " ms)" << o.detail.str() << std::endl;
  };

  criterion(1, "dim Pi0 = h(h+1)r/6 by engine and word-span oracle", [&](Outcome& o) {
    for (const std::string t : {"A2", "A3", "A4", "D4", "D5"}) {
      const auto rd = rootdata::build_root_data(t);
      Stopwatch sw;
      const auto r = preproj::verify_pi0(rd);
      const double ms = sw.elapsed_ms();
      const auto* eng = item(r, "total dimension");
      const auto* orc = item(r, "word-span oracle total");
      o.require(eng && eng->pass && eng->computed == formula_dim(rd), t + " engine dimension");
      o.require(orc && orc->pass && orc->computed == formula_dim(rd), t + " oracle dimension");
      o.require(ms < 10000, t + " under 10 s");
      o.detail << " " << t << "=" << (eng ? eng->computed.dump() : "?");
    }
    o.detail << "; the listed D5 value 55 disagrees with h(h+1)r/6 = 60, which engine and oracle both give";
  });

  criterion(2, "matrix Hilbert polynomial of Pi0 equals (1+Pt^h)/(1-Ct+t^2)", [&](Outcome& o) {
    std::vector<std::string> types{"A2", "A3", "A4", "A5", "D4", "D5"};
    if (slow) types.push_back("E6");
    const auto rep = run_checks({"pi0"}, types, slow);
    for (const auto& r : rep.records) {
      const auto* h = item(r, "matrix Hilbert polynomial");
      o.require(h && h->pass, r.subject);
      o.require(r.wall_time_ms < 600000, r.subject + " under 10 min");
    }
    o.detail << " types";
    for (const auto& t : types) o.detail << " " << t;
    if (!slow) o.detail << " (E6 needs --slow)";
  });

  criterion(3, "central extension: Hilbert polynomial, dimension, z powers, socle, Frobenius", [&](Outcome& o) {
    const std::map<std::string, long> dims{{"A2", 6}, {"A3", 20}, {"D4", 84}};
    const auto rep = run_checks({"pi0mu"}, {"A2", "A3", "D4"}, false);
    for (const auto& r : rep.records) {
      require_all(o, r);
      const auto* d = item(r, "total dimension");
      o.require(d && d->computed == dims.at(r.subject), r.subject + " total dimension");
      o.detail << " " << r.subject << "=" << (d ? d->computed.dump() : "?");
    }
  });

  criterion(4, "flatness of filtered deformations for 3 seeded lambda", [&](Outcome& o) {
    const auto rep = run_checks({"flatness"}, {"A2", "A3", "D4"}, false);
    for (const auto& r : rep.records) require_all(o, r);
    o.detail << " " << rep.records.size() << " types";
  });

  criterion(5, "block decomposition: characteristic polynomial of z and trace form", [&](Outcome& o) {
    const auto rep = run_checks({"block"}, {"A2", "A3"}, false);
    for (const auto& r : rep.records) require_all(o, r);
    o.detail << " " << rep.records.size() << " types";
  });

  criterion(6, "truncated Pi dimensions through degree 6", [&](Outcome& o) {
    const auto rep = run_checks({"pi-truncated"}, {"A2", "A3"}, false);
    for (const auto& r : rep.records) require_all(o, r);
    o.detail << " " << rep.records.size() << " types";
  });

  criterion(7, "Weyl denominator vanishes in the truncated algebra", [&](Outcome& o) {
    std::vector<std::string> types{"A2"};
    if (slow) types.push_back("A3");
    const auto rep = run_checks({"weyl-denominator"}, types, slow);
    for (const auto& r : rep.records) require_all(o, r);
    for (const auto& r : rep.records) o.detail << " " << r.subject;
    if (!slow) o.detail << " (A3 needs --slow)";
  });

  criterion(8, "spherical algebras and the corner cross-check", [&](Outcome& o) {
    std::map<std::string, long> dims{{"A3", 4}, {"D4", 12}};
    std::vector<std::string> types{"A3", "D4"};
    if (slow) {
      types.push_back("E6");
      dims["E6"] = 72;
    }
    const auto rep = run_checks({"spherical"}, types, slow);
    for (const auto& r : rep.records) {
      require_all(o, r);
      const auto* d = item(r, "dim B(0)");
      o.require(d && d->computed == dims.at(r.subject), r.subject + " dim B(0)");
      o.detail << " " << r.subject << "=" << (d ? d->computed.dump() : "?");
    }
    const auto corner = run_checks({"corner"}, {"A3", "D4"}, false);
    for (const auto& r : corner.records) require_all(o, r);
    if (!slow) o.detail << " (E6 needs --slow)";
  });

  criterion(9, "ideal-power generating function and maximal rank of z", [&](Outcome& o) {
    const auto rep = run_checks({"ideal-powers"}, {"A2", "A3", "D4"}, false);
    for (const auto& r : rep.records) require_all(o, r);
    o.detail << " " << rep.records.size() << " types";
  });

  criterion(10, "quantum Heisenberg algebra identities and characters", [&](Outcome& o) {
    Stopwatch sw;
    const auto r = qfusion::verify_heisenberg(6, 8, 6, 12, 1);
    require_all(o, r);
    o.require(sw.elapsed_ms() < 30000, "under 30 s");
  });

  criterion(11, "fusion identities and self-duality for A, D, E6, E7, E8", [&](Outcome& o) {
    Stopwatch sw;
    const auto rep = run_checks({"fusion", "hilbert-identity", "a-selfduality"}, {"all"}, false);
    for (const auto& r : rep.records) require_all(o, r);
    o.require(sw.elapsed_ms() < 5000, "under 5 s");
    o.detail << " " << rep.records.size() << " records";
  });

  criterion(12, "all 22 group presentations enumerate to the listed orders", [&](Outcome& o) {
    const auto rep = run_checks({"groups"}, {}, false);
    o.require(rep.records.size() == 22, "22 groups");
    for (const auto& r : rep.records) {
      require_all(o, r);
      const auto* ord = item(r, "order");
      o.detail << " " << r.subject << ":" << (ord ? ord->computed.dump() : "?");
    }
  });

  criterion(13, "H* dimensions equal the group orders", [&](Outcome& o) {
    const std::map<std::string, long> want{{"tetrahedral", 12}, {"octahedral", 24}, {"icosahedral", 60}};
    const auto rep = run_checks({"hstar"}, {}, false);
    for (const auto& r : rep.records) {
      require_all(o, r);
      const auto* d = item(r, "dimension");
      o.require(d && d->computed == want.at(r.subject), r.subject);
      if (r.subject != "icosahedral") o.require(r.wall_time_ms < 60000, r.subject + " under 1 min");
      o.detail << " " << r.subject << "=" << (d ? d->computed.dump() : "?");
    }
  });

  criterion(14, "monodromy: closed form for A3, Hecke relations and leading terms", [&](Outcome& o) {
    const double two_pi = 2 * std::numbers::pi;
    const auto a3 = rh::system_from_B(rootdata::build_root_data("A3"));
    rh::TransportOptions to;
    to.tol = 1e-13;
    double worst = 0;
    for (int k = 0; k < 2; ++k) {
      const rh::CMatrix want = taylor_exp(two_pi * rh::Complex(0, 1) * a3.system.residues[k]);
      worst = std::max(worst, rh::operator_norm(rh::monodromy(a3.system, k, to) - want));
    }
    o.require(worst < 1e-8, "A3 closed form");
    o.detail << " A3 closed-form error " << worst;

    rh::PhiOptions po;
    po.tol = 1e-6;
    const auto d4 = rh::verify_phi(rootdata::build_root_data("D4"), {}, po);
    require_all(o, d4);
    o.require(item(d4, "leading term of log Y1") != nullptr, "D4 leading terms reported");
    if (slow) {
      po.tol = 1e-5;
      require_all(o, rh::verify_phi(rootdata::build_root_data("E6"), {}, po));
      o.detail << "; E6 within 1e-5";
    } else {
      o.detail << " (E6 needs --slow)";
    }
  });

  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " CRITERIA FAIL") << std::endl;
  return failures == 0 ? 0 : 1;
}
