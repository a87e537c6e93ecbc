#ifndef IDEMKIT_VERIFY_HPP
#define IDEMKIT_VERIFY_HPP

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "idemkit/burnside.hpp"
#include "idemkit/charfun.hpp"
#include "idemkit/chartable.hpp"
#include "idemkit/idempotents.hpp"
#include "idemkit/norms.hpp"

namespace idemkit {

inline std::vector<std::string> default_corpus() {
  std::vector<std::string> out;
  for (int n = 1; n <= 12; ++n) out.push_back("C" + std::to_string(n));
  for (const char* name : {"S3", "S4", "D4", "D5", "D6", "Q8", "A4", "A5", "C2xC3"}) out.emplace_back(name);
  return out;
}

struct CheckResult {
  std::string name;
  bool ok;
  std::string detail;
};

struct CellResult {
  std::string group;
  PrimeSet primes;
  std::vector<CheckResult> checks;
  bool ran = false;
  std::size_t audit_cells = 0;
  double seconds = 0;

  bool ok() const {
    if (!ran) return false;
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
};

/// Everything the audits of one (G, P) cell work from. The tamper hook may
/// modify it before any check runs.
struct CellData {
  GroupPtr group;
  LatticePtr lattice;
  RingPtr ring;
  const CharacterTable* table;
  std::vector<IdempotentRecordA> dress;
  std::vector<IdempotentRecordR> records;
};

struct VerifyOptions {
  std::vector<std::string> groups = default_corpus();
  std::size_t threads = 0;       // 0: IDEMKIT_THREADS, else hardware concurrency
  double budget_seconds = 300;   // cells not started within the budget are reported as not run
  std::size_t lattice_cap = SubgroupLattice::default_cap;
  std::size_t chartable_cap = 2000;
  std::size_t tambara_order_limit = 24;  // lin/norm compatibility on groups up to this order
  std::function<void(const std::string&, const PrimeSet&, CellData&)> tamper;
};

struct VerifyReport {
  std::vector<CellResult> cells;
  double seconds = 0;
  bool ok() const {
    for (const auto& c : cells)
      if (!c.ok()) return false;
    return true;
  }
};

inline std::size_t worker_count(std::size_t requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("IDEMKIT_THREADS")) {
    try {
      auto n = std::stoul(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
    }
  }
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

namespace detail {

inline bool records_ok(const CellData& d, std::string& why) {
  const auto& lattice = *d.lattice;
  auto one = ClassFunction::constant(d.group, 1);
  auto zero = ClassFunction::constant(d.group, 0);
  auto sum = zero;
  for (const auto& rec : d.records) {
    const auto& name = lattice[rec.label].label;
    if (!(rec.character * rec.character == rec.character)) return why = name + " is not idempotent", false;
    if (!(rec.character == lin(dress_idempotent(d.ring, rec.label).element)))
      return why = name + " differs from lin of its Dress idempotent", false;
    if (!(rec.character == ClassFunction::indicator(d.group, support_set(lattice, d.ring->primes(), rec.label))))
      return why = name + " is not the indicator of its support set", false;
    auto rebuilt = zero;
    for (std::size_t i = 0; i < d.table->size(); ++i) {
      if (!d.ring->primes().is_local(rec.coefficients[i])) return why = name + " has a non-local coefficient", false;
      rebuilt = rebuilt + CycNumber(rec.coefficients[i]) * (*d.table)[i];
    }
    if (!(rebuilt == rec.character)) return why = name + " is not reconstructed by its coefficients", false;
    for (const auto& other : d.records)
      if (other.label != rec.label && !(rec.character * other.character).is_zero())
        return why = name + " and " + lattice[other.label].label + " are not orthogonal", false;
    if (rec.primitive != std::optional<bool>(true)) return why = name + " is not verified primitive", false;
    sum = sum + rec.character;
  }
  if (!(sum == one)) return why = "idempotents do not sum to 1", false;
  return true;
}

inline bool dress_ok(const CellData& d, std::string& why) {
  const auto& lattice = *d.lattice;
  auto sum = d.ring->zero();
  for (const auto& e : d.dress) {
    const auto& name = lattice[e.label].label;
    if (!e.element.is_idempotent()) return why = "e_" + name + " is not idempotent", false;
    for (const auto& c : e.element.coeffs())
      if (!d.ring->primes().is_local(c)) return why = "e_" + name + " is not P-local", false;
    for (const auto& f : d.dress)
      if (f.label != e.label && !(e.element * f.element).is_zero())
        return why = "e_" + name + " and e_" + lattice[f.label].label + " are not orthogonal", false;
    if (is_primitive_idempotent(e.element) != std::optional<bool>(true))
      return why = "e_" + name + " is not verified primitive", false;
    sum = sum + e.element;
  }
  if (!(sum == d.ring->one())) return why = "Dress idempotents do not sum to 1", false;
  if (d.dress.size() != p_perfect_classes(lattice, d.ring->primes()).size())
    return why = "wrong number of Dress idempotents", false;
  return true;
}

inline bool vanishing_ok(const CellData& d, std::string& why) {
  for (const auto& e : d.dress) {
    bool cyclic = (*d.lattice)[e.label].cyclic;
    if (lin(e.element).is_zero() == cyclic)
      return why = "lin(e_" + (*d.lattice)[e.label].label + ") " + (cyclic ? "vanishes" : "does not vanish"), false;
  }
  return true;
}

inline bool congruence_ok(const CellData& d, std::string& why) {
  auto primes = prime_divisors(d.group->order());
  for (std::size_t k = 0; k < d.ring->rank(); ++k) {
    auto chi = lin(d.ring->basis(k));
    for (auto p : primes)
      if (!mod_p_congruence(chi, p))
        return why = "permutation character of " + (*d.lattice)[k].label + " fails mod " + std::to_string(p), false;
  }
  for (const auto& e : d.dress) {
    auto chi = lin(e.element);
    for (auto p : d.ring->primes().primes())
      if (!mod_p_congruence(chi, p))
        return why = "lin(e_" + (*d.lattice)[e.label].label + ") fails mod " + std::to_string(p), false;
  }
  return true;
}

inline bool tambara_ok(const NormContext& ctx, std::string& why) {
  for (const auto& s : norm_sites(ctx)) {
    const auto& hloc = ctx.sub(s.h);
    const auto& kloc = ctx.inner(s.h, s.k);
    const auto& emb = ctx.inner_into_h(s.h, s.k);
    for (std::size_t b = 0; b < kloc.ring->rank(); ++b) {
      auto y = kloc.ring->basis(b);
      if (!(lin(norm_coinduce(y, hloc.ring, emb)) == tensor_induct(lin(y), emb)))
        return why = "lin and the norm disagree at " + site_label(ctx, s) + " on basis " + (*kloc.lattice)[b].label,
               false;
    }
  }
  return true;
}

inline CellResult run_cell(const std::string& name, const PrimeSet& primes, const VerifyOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  CellResult out{name, primes, {}, true};
  auto add = [&](std::string check, auto&& fn) {
    std::string why;
    bool ok = false;
    try {
      ok = fn(why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    out.checks.push_back({std::move(check), ok, std::move(why)});
  };
  try {
    CellData d;
    d.group = builtin::by_name(name);
    d.lattice = subgroup_classes(d.group, opt.lattice_cap);
    d.ring = make_burnside_ring(d.lattice, primes);
    NormContext ctx(d.ring, opt.chartable_cap);
    d.table = &ctx.table_of(d.group);
    d.dress = all_dress_idempotents(d.ring);
    d.records = classify_idempotents_R(*d.lattice, primes, *d.table);
    if (opt.tamper) opt.tamper(name, primes, d);

    add("idempotent-count", [&](std::string& why) {
      auto expected = cyclic_p_perfect_classes(*d.lattice, primes).size();
      if (d.records.size() != expected)
        return why = std::to_string(d.records.size()) + " records, " + std::to_string(expected) + " cyclic classes",
               false;
      if (!gamma_orbit_crosscheck(*d.lattice, primes)) return why = "generator-orbit cross-check failed", false;
      return true;
    });
    add("rep-idempotents", [&](std::string& why) { return records_ok(d, why); });
    add("dress-family", [&](std::string& why) { return dress_ok(d, why); });
    add("noncyclic-vanishing", [&](std::string& why) { return vanishing_ok(d, why); });
    add("lin-kernel", [&](std::string& why) {
      if (!lin_kernel_check(d.ring).ker_block_in_kernel) return why = "lin does not vanish on e_ker", false;
      return true;
    });
    add("congruence", [&](std::string& why) { return congruence_ok(d, why); });
    add("equivalence", [&](std::string& why) {
      auto report = equivalence_audit(ctx);
      out.audit_cells = report.cells.size();
      for (const auto& c : report.cells)
        if (!c.agree())
          return why = "C=" + (*d.lattice)[c.c].label + " at " + site_label(ctx, c.site) + ": (e)=" +
                       std::to_string(c.condition_e) + " A=" + std::to_string(c.division_a) +
                       " R=" + std::to_string(c.division_r),
                 false;
      return true;
    });
    add("indexing", [&](std::string& why) {
      for (auto c : cyclic_p_perfect_classes(*d.lattice, primes)) {
        auto r = axioms_check(ctx, indexing_system(ctx, c));
        if (!r.ok) return why = "I_" + (*d.lattice)[c].label + ": " + r.violation, false;
      }
      auto cyc = indexing_system_cyc(ctx);
      auto r = axioms_check(ctx, cyc);
      if (!r.ok) return why = "I_cyc: " + r.violation, false;
      if (!(cyc == indexing_system_cyc_direct(ctx))) return why = "I_cyc differs from the direct criterion", false;
      return true;
    });
    add("splitting", [&](std::string& why) {
      auto r = splitting_audit(ctx);
      why = r.failure;
      return r.ok();
    });
    if (d.group->order() <= opt.tambara_order_limit)
      add("lin-tambara", [&](std::string& why) { return tambara_ok(ctx, why); });
  } catch (const std::exception& e) {
    out.checks.push_back({"setup", false, e.what()});
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace detail

/// Runs every audit over every (G, P) cell of the corpus, P ranging over all
/// subsets of the primes dividing |G|. Results are in corpus order.
inline VerifyReport verify_corpus(const VerifyOptions& opt = {}) {
  auto start = std::chrono::steady_clock::now();
  VerifyReport report;
  for (const auto& name : opt.groups) {
    auto order = builtin::by_name(name)->order();
    for (auto& p : prime_subsets(order)) report.cells.push_back({name, p, {}});
  }
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (;;) {
      std::size_t i = next++;
      if (i >= report.cells.size()) return;
      double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      auto& cell = report.cells[i];
      if (elapsed > opt.budget_seconds) {
        cell.checks.push_back({"budget", false, "not started within the time budget"});
        continue;
      }
      cell = detail::run_cell(cell.group, cell.primes, opt);
    }
  };
  std::size_t n = std::min(worker_count(opt.threads), std::max<std::size_t>(1, report.cells.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < n; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace idemkit

#endif  // IDEMKIT_VERIFY_HPP
