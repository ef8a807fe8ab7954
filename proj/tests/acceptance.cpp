// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Time limits are wall-clock seconds on a Release build.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "hopfdual/io.hpp"

using namespace hopfdual;

namespace {

using Q = Rational;
using Clock = std::chrono::steady_clock;

constexpr double kAxiomLimit = 1.0;        // criterion 1, per Hopf algebra
constexpr double kSmashDualLimit = 10.0;   // criterion 2, per instance
constexpr double kDualCoringLimit = 60.0;  // criterion 3, I3
constexpr double kDualityLimit = 120.0;    // criterion 4, I3
constexpr double kCorpusLimit = 600.0;     // criterion 10, whole corpus
constexpr int kPerturbations = 100;        // criterion 9, per instance
constexpr std::uint64_t kSeed = 20240917;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool ok = true;
  std::ostringstream note;

  void require(bool cond, const std::string& what) {
    if (cond) return;
    if (ok) note << " first failure: " << what << ";";
    ok = false;
  }
};

std::string seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f s", s);
  return buf;
}

template <class K>
bool check_named(const SuiteResult<K>& r, const std::string& prefix) {
  for (const auto& c : r.checks.checks)
    if (c.name.rfind(prefix, 0) == 0) return c.passed;
  return false;
}

template <class K>
std::string tag(const SuiteResult<K>& r) {
  return r.suite + "/" + r.instance + (r.module_name.empty() ? "" : "/" + r.module_name) + " " + to_string(r.status) +
         (r.message.empty() ? "" : " (" + r.message + ")");
}

template <class K>
bool certificates_recompute(const SuiteResult<K>& r) {
  for (const auto& c : r.rings)
    if (!verify_certificate(c)) return false;
  return true;
}

template <class K>
bool same_products(const Algebra<K>& a, const Algebra<K>& b) {
  if (a.dim() != b.dim()) return false;
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = 0; j < a.dim(); ++j) {
      const Vector<K> x = a.multiply(a.basis(i), a.basis(j)), y = b.multiply(b.basis(i), b.basis(j));
      for (Index k = 0; k < x.size(); ++k)
        if (!(x(k) == y(k))) return false;
    }
  return true;
}

bool section_ok(const QuotientSpace<Q>& q) {
  const Matrix<Q> ps = multiply(q.projection(), q.section());
  for (Index i = 0; i < ps.rows(); ++i)
    for (Index j = 0; j < ps.cols(); ++j)
      if (!(ps(i, j) == Q(i == j ? 1 : 0))) return false;
  return true;
}

// a (x) b -> a b_[0] (x) b_[1] on A (x) A, before passing to A (x)_B A.
Index ambient_can_rank(const ComoduleAlgebra<Q>& c) {
  const Index da = c.dim_a(), dh = c.dim_h();
  Matrix<Q> can = Matrix<Q>::Zero(da * dh, da * da);
  for (Index a = 0; a < da; ++a)
    for (Index b = 0; b < da; ++b)
      for (Index t = 0; t < da; ++t)
        for (Index q = 0; q < dh; ++q) {
          const Q coef = c.coaction(t * dh + q, b);
          if (coef.is_zero()) continue;
          const Vector<Q> at = c.algebra.multiply(c.algebra.basis(a), c.algebra.basis(t));
          for (Index u = 0; u < da; ++u) can(u * dh + q, a * da + b) += coef * at(u);
        }
  return rank(can);
}

bool criterion1(Outcome& o) {
  double worst = 0;
  const FieldSpec fields[] = {FieldSpec::rationals(), FieldSpec::prime(5), FieldSpec::prime(7)};
  for (const FieldSpec& f : fields) {
    auto run = [&](const std::string& name, auto build) {
      const auto t0 = Clock::now();
      const AxiomReport r = check_hopf(build());
      const double dt = since(t0);
      worst = std::max(worst, dt);
      o.require(r.passed(), name + " over " + f.to_string() + ": " + r.first_failure());
      o.require(dt < kAxiomLimit, name + " over " + f.to_string() + " took " + seconds(dt));
    };
    if (f.kind == FieldSpec::Kind::rationals) {
      run("kC2", [&] { return group_algebra<Q>(GroupTable::cyclic(2), f); });
      run("kC3", [&] { return group_algebra<Q>(GroupTable::cyclic(3), f); });
      run("kS3", [&] { return group_algebra<Q>(GroupTable::symmetric3(), f); });
      run("H4", [&] { return sweedler_h4<Q>(f); });
    } else {
      run("kC2", [&] { return group_algebra<ModP>(GroupTable::cyclic(2), f); });
      run("kC3", [&] { return group_algebra<ModP>(GroupTable::cyclic(3), f); });
      run("kS3", [&] { return group_algebra<ModP>(GroupTable::symmetric3(), f); });
      run("H4", [&] { return sweedler_h4<ModP>(f); });
    }
  }
  bool rejected = false;
  try {
    sweedler_h4<ModP>(FieldSpec::prime(2));
  } catch (const BadCharacteristic&) {
    rejected = true;
  }
  o.require(rejected, "H4 over GF(2) accepted");
  o.note << " slowest " << seconds(worst) << ", limit " << seconds(kAxiomLimit) << " each";
  return o.ok;
}

bool criterion2(Outcome& o) {
  double worst = 0;
  for (const char* name : {"I1", "I2", "I3", "I5"}) {
    const Instance<Q> inst = catalog_instance<Q>(name, FieldSpec::rationals());
    const auto t0 = Clock::now();
    const SuiteResult<Q> r = run_suite<Q>("T2", inst, "");
    const double dt = since(t0);
    worst = std::max(worst, dt);
    const Index expected = inst.comodule->algebra.dim() * inst.hopf.algebra.dim();
    o.require(r.passed(), tag(r));
    o.require(r.rings.size() == 4, std::string(name) + ": four certificates");
    for (const auto& c : r.rings) o.require(!c.generator_mode, c.name + " checked on generator pairs only");
    o.require(certificates_recompute(r), std::string(name) + ": certificate recomputation");
    for (const char* d : {"*(A (x) H)", "(A (x) H)*", "#(H, A)", "A # H*"})
      o.require(r.dim(d) == expected, std::string(name) + ": dim " + d);
    o.require(dt < kSmashDualLimit, std::string(name) + " took " + seconds(dt));
  }
  o.note << " slowest " << seconds(worst) << ", limit " << seconds(kSmashDualLimit);
  return o.ok;
}

bool criterion3(Outcome& o) {
  double i3 = 0;
  for (const auto& [name, module] : std::vector<std::pair<std::string, std::string>>{
           {"I1", "AH"}, {"I3", "AH"}, {"I1", "trivial"}, {"I3", "trivial"}}) {
    const Instance<Q> inst = catalog_instance<Q>(name, FieldSpec::rationals());
    const auto t0 = Clock::now();
    const SuiteResult<Q> r = run_suite<Q>("T1", inst, module);
    const double dt = since(t0);
    const Index da = inst.comodule->algebra.dim(), dh = inst.hopf.algebra.dim();
    const Index expected = module == "AH" ? dh * dh * da : da;
    o.require(r.passed(), tag(r));
    o.require(r.dim("D*") == expected && r.dim("End(_A C)") == expected, tag(r) + ": dims");
    const RingIsoCertificate<Q>* comp = r.ring("gamma alpha: D* -> End(_A C)");
    o.require(comp && comp->claim == Orientation::anti && comp->passed(), tag(r) + ": composite anti-isomorphism");
    o.require(certificates_recompute(r), tag(r) + ": certificate recomputation");
    if (name == "I3" && module == "AH") {
      i3 = dt;
      o.require(expected == 64, "I3 free rank");
    }
  }
  o.require(i3 < kDualCoringLimit, "I3 took " + seconds(i3));
  o.note << " I3 " << seconds(i3) << ", limit " << seconds(kDualCoringLimit);
  return o.ok;
}

bool criterion4(Outcome& o) {
  double i3 = 0;
  for (const char* name : {"I1", "I3", "I5"}) {
    const Instance<Q> inst = catalog_instance<Q>(name, FieldSpec::rationals());
    const auto t0 = Clock::now();
    const SuiteResult<Q> r = run_suite<Q>("T3", inst, "");
    const double dt = since(t0);
    const Index da = inst.comodule->algebra.dim(), dh = inst.hopf.algebra.dim();
    o.require(r.passed(), tag(r));
    o.require(r.dim("(A # H*) # H") == dh * dh * da && r.dim("End((A # H*)_A)") == dh * dh * da, tag(r) + ": dims");
    o.require(check_named(r, "diagram commutes"), tag(r) + ": diagram");
    o.require(certificates_recompute(r), tag(r) + ": certificate recomputation");
    if (std::string(name) == "I5") o.require(da == 1 && r.dim("End((A # H*)_A)") == dh * dh, "I5 is End_k(H*)");
    if (std::string(name) == "I3") i3 = dt;
  }
  o.require(i3 < kDualityLimit, "I3 took " + seconds(i3));
  o.note << " I3 " << seconds(i3) << ", limit " << seconds(kDualityLimit);
  return o.ok;
}

bool criterion5(Outcome& o) {
  const std::pair<const char*, bool> expected[] = {{"I1", true}, {"I2", true}, {"I3", true}, {"I4", false}, {"I5", false}};
  for (const auto& [name, galois] : expected) {
    const Instance<Q> inst = catalog_instance<Q>(name, FieldSpec::rationals());
    const ComoduleAlgebra<Q>& c = *inst.comodule;
    const bool coring_side = is_galois(coring_from_comodule(c)).galois;
    const bool hopf_side = hopf_galois_check(c).galois;
    const bool oracle = ambient_can_rank(c) == c.dim_a() * c.dim_h();
    o.require(oracle == galois, std::string(name) + ": can-rank oracle");
    o.require(coring_side == galois, std::string(name) + ": is_galois");
    o.require(hopf_side == galois, std::string(name) + ": hopf_galois_check");
  }
  return o.ok;
}

bool criterion6(Outcome& o) {
  for (const char* name : {"I1", "I3"})
    for (const char* module : {"A", "AH"}) {
      const SuiteResult<Q> r = run_suite<Q>("T4", catalog_instance<Q>(name, FieldSpec::rationals()), module);
      o.require(r.passed(), tag(r));
      std::size_t dim_check = r.checks.checks.size(), first_map = 0;
      for (std::size_t k = 0; k < r.checks.checks.size(); ++k) {
        const std::string& n = r.checks.checks[k].name;
        if (n.rfind("dim Hom_A(M (x)_A C, N) = dim Hom_B(M, N)", 0) == 0) dim_check = k;
        if (first_map == 0 && n.find("well defined") != std::string::npos) first_map = k;
      }
      o.require(dim_check < first_map, tag(r) + ": dimension equality checked before the maps");
      o.require(r.dim("Hom_A(M (x)_A C, N)") == r.dim("Hom_B(M, N)"), tag(r) + ": dims");
    }
  const SuiteResult<Q> bad = run_suite<Q>("T4", catalog_instance<Q>("I4", FieldSpec::rationals()), "A");
  o.require(bad.status == SuiteStatus::precondition && bad.message.rfind("NotGalois", 0) == 0, tag(bad));
  return o.ok;
}

bool criterion7(Outcome& o) {
  for (const char* name : {"I1", "I3"})
    for (const char* module : {"A", "AH"}) {
      const Instance<Q> inst = catalog_instance<Q>(name, FieldSpec::rationals());
      const SuiteResult<Q> r = run_suite<Q>("T5", inst, module);
      o.require(r.passed(), tag(r));
      o.require(check_named(r, "proof chain equals the direct map"), tag(r) + ": chain");
      o.require(r.dim("End_A(M) # H*") == r.dim("End_B(M)"), tag(r) + ": dims");
      if (std::string(module) == "A") {
        const Index da = inst.comodule->algebra.dim();
        o.require(r.dim("End_B(M)") == da * da, tag(r) + ": End_k(A)");
      }
    }
  return o.ok;
}

bool criterion8(Outcome& o) {
  for (const char* name : {"I1", "I3"}) {
    const Instance<Q> inst = catalog_instance<Q>(name, FieldSpec::rationals());
    const SuiteResult<Q> r = run_suite<Q>("ULB", inst, "");
    o.require(r.passed() && r.rings.size() == 2, tag(r));
    o.require(r.dim("End^H_A(M)") == inst.comodule->algebra.dim() * inst.hopf.algebra.dim(), tag(r) + ": dims");
    o.require(certificates_recompute(r), tag(r) + ": certificate recomputation");
  }
  return o.ok;
}

bool criterion9(Outcome& o) {
  std::mt19937_64 rng(kSeed);
  int quotients = 0;
  for (const char* name : {"I1", "I2", "I3", "I4", "I5"}) {
    const Instance<Q> inst = catalog_instance<Q>(name, FieldSpec::rationals());
    const FieldSpec& f = inst.field;
    const GrouplikeCoring<Q> g = coring_from_comodule(*inst.comodule);
    const DualRing<Q> l = left_dual(g.coring), r = right_dual(g.coring);
    for (int t = 0; t < kPerturbations; ++t) {
      Coring<Q> moved = g.coring;
      for (Index k = 0; k < moved.dim(); ++k) {
        const Vector<Q> rel = moved.caa.random_relation(f, rng);
        o.require(is_zero(Vector<Q>(moved.caa.project(rel))), std::string(name) + ": relation projects to zero");
        moved.comul_lift.col(k) += rel;
      }
      o.require(same_products(left_dual(moved).algebra, l.algebra), std::string(name) + ": *C products moved");
      o.require(same_products(right_dual(moved).algebra, r.algebra), std::string(name) + ": C* products moved");
    }
    std::vector<QuotientSpace<Q>> qs = {g.coring.caa};
    const GrouplikeCoring<Q> d = canonical_coring(l.algebra, l.embedding);
    qs.push_back(d.coring.caa);
    qs.push_back(trivial_coring(inst.comodule->algebra).coring.caa);
    const Algebra<Q>& a = inst.comodule->algebra;
    qs.push_back(tensor_over(a, a.multiplication_matrix(), a.dim(), g.coring.bimodule.left_action, g.coring.dim()));
    for (const auto& q : qs) {
      o.require(section_ok(q) && q.section_is_right_inverse(), std::string(name) + ": projection o section");
      ++quotients;
    }
  }
  o.note << " " << kPerturbations << " perturbations on each of 5 instances, seed " << kSeed << ", " << quotients
         << " quotient spaces";
  return o.ok;
}

std::string corpus_reports() {
  std::string out;
  for (const auto& e : catalog_entries(false)) {
    const Instance<Q> inst = catalog_instance<Q>(e.name, FieldSpec::rationals());
    for (const auto& [suite, module] : std::vector<std::pair<std::string, std::string>>{
             {"T1", "AH"}, {"T1", "trivial"}, {"T2", ""}, {"T3", ""}, {"T4", "A"},
             {"T4", "AH"}, {"T5", "A"}, {"T5", "AH"}, {"ULB", ""}})
      out += dump(report_json(run_suite<Q>(suite, inst, module), inst.field));
  }
  return out;
}

bool criterion10(Outcome& o) {
  const auto t0 = Clock::now();
  const std::string first = corpus_reports();
  const double dt = since(t0);
  const std::string second = corpus_reports();
  o.require(first == second, "reports differ between runs");
  o.require(dt < kCorpusLimit, "corpus took " + seconds(dt));
  o.note << " corpus " << seconds(dt) << " (" << first.size() << " bytes of JSON), limit " << seconds(kCorpusLimit);
  return o.ok;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<bool(Outcome&)>>> criteria = {
      {"axiom gauntlet", criterion1},
      {"smash duals (T2)", criterion2},
      {"dual of the canonical coring (T1)", criterion3},
      {"duality theorem (T3)", criterion4},
      {"Galois discrimination", criterion5},
      {"Galois hom isomorphism (T4)", criterion6},
      {"Schneider (T5)", criterion7},
      {"Ulbrich", criterion8},
      {"lift independence and quotient invariants", criterion9},
      {"determinism and corpus time", criterion10},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    bool ok = false;
    const auto t0 = Clock::now();
    try {
      ok = criteria[k].second(o);
    } catch (const std::exception& e) {
      o.note << " exception: " << e.what();
    }
    if (!ok) ++failures;
    std::printf("%s  %2zu  %s  [%s]%s\n", ok ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(),
                seconds(since(t0)).c_str(), o.note.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
