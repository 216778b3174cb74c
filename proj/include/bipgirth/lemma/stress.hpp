#pragma once

// Seeded randomized suites for the quadratic and summation inequalities, and
// the on-graph check over distance powers of the construction families.
// Instance i draws from its own generator seeded by (seed, i), so results do
// not depend on the thread count.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bipgirth/auxiliary.hpp"
#include "bipgirth/constructions.hpp"
#include "bipgirth/lemma/applied.hpp"
#include "bipgirth/lemma/newineq.hpp"
#include "bipgirth/parallel.hpp"

namespace bipgirth::lemma {

namespace detail {

inline std::mt19937_64 instance_rng(std::uint64_t seed, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(static_cast<std::uint64_t>(index) >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace detail

/// Random instance satisfying the hypothesis of the given case. About one in
/// ten coordinates is snapped to a boundary (x = 0, x = y, y = 1).
inline NewineqInstance<double> random_newineq_instance(NewineqCase c, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  NewineqInstance<double> in;
  double u = unit(rng), v = unit(rng);
  in.x = std::min(u, v);
  in.y = std::max(u, v);
  if (unit(rng) < 0.1) in.x = 0;
  if (unit(rng) < 0.1) in.y = in.x;
  if (unit(rng) < 0.1) in.y = 1;
  in.gamma = 2 * unit(rng);
  const double xg = in.x * in.gamma;
  switch (c) {
    case NewineqCase::a:
      in.beta = xg * unit(rng);
      in.mu = in.beta * unit(rng);
      break;
    case NewineqCase::b:
      in.beta = xg + 1.5 * unit(rng);
      in.mu = 1.2 * in.beta * unit(rng);  // mu > beta leaves the feasible set empty; kept on purpose
      break;
    case NewineqCase::c: {
      in.beta = xg + 1.5 * unit(rng);
      double lo = in.y * in.beta + in.x * (1 - in.y) * in.gamma;
      in.mu = lo + (in.beta - lo) * unit(rng);
      break;
    }
  }
  return in;
}

struct NewineqStressReport {
  NewineqCase which = NewineqCase::a;
  std::size_t count = 0;
  std::size_t violations = 0;
  double worst_gap = 0;  ///< least (oracle minimum - bound) over instances with a finite minimum
  std::optional<NewineqInstance<double>> first_violation;
  std::size_t x_zero_checks = 0;    ///< case b with x = 0 and mu <= y*beta: minimum should equal beta^2
  std::size_t x_zero_mismatch = 0;  ///< ... and differed by more than 1e-6
};

inline NewineqStressReport run_newineq_stress(NewineqCase c, std::size_t count, std::uint64_t seed,
                                              unsigned threads = 1, std::size_t grid_n = 400) {
  struct Slot {
    NewineqInstance<double> inst;
    double minimum = 0, bound = 0;
    bool violation = false, x_zero = false, x_zero_bad = false;
  };
  std::vector<Slot> slots(count);
  parallel_for(count, threads, [&](std::size_t i) {
    auto rng = detail::instance_rng(seed + static_cast<std::uint64_t>(c), i);
    Slot& s = slots[i];
    s.inst = random_newineq_instance(c, rng);
    s.minimum = newineq_min_oracle(s.inst, grid_n);
    s.bound = newineq_bound(s.inst, c);
    s.violation = s.minimum < s.bound - 1e-9;
    if (c == NewineqCase::b && s.inst.x == 0 && s.inst.mu <= s.inst.y * s.inst.beta) {
      s.x_zero = true;
      s.x_zero_bad = std::abs(s.minimum - s.inst.beta * s.inst.beta) > 1e-6;
    }
  });
  NewineqStressReport r;
  r.which = c;
  r.count = count;
  bool first = true;
  for (const Slot& s : slots) {
    if (s.violation) {
      ++r.violations;
      if (!r.first_violation) r.first_violation = s.inst;
    }
    if (std::isfinite(s.minimum)) {
      double gap = s.minimum - s.bound;
      if (first || gap < r.worst_gap) r.worst_gap = gap;
      first = false;
    }
    r.x_zero_checks += s.x_zero;
    r.x_zero_mismatch += s.x_zero_bad;
  }
  return r;
}

struct AppliedInstance {
  std::vector<Sample> samples;
  InequalityParams<double> params;
  std::vector<std::size_t> x_set, y_set;
};

/// Random sample set satisfying every hypothesis. Y takes the largest b-values
/// so that its average is at least the overall average. With equality_case
/// set, b is constant, X is empty, gamma = 0 and mu = y*beta.
inline AppliedInstance random_applied_instance(std::mt19937_64& rng, bool equality_case) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  AppliedInstance in;
  const std::size_t n = 1 + static_cast<std::size_t>(rng() % 12);
  in.samples.resize(n);
  const double level = unit(rng);
  for (auto& s : in.samples) s.b = equality_case ? level : unit(rng);
  double total = 0;
  for (const auto& s : in.samples) total += s.b;
  auto& p = in.params;
  p.beta = total / static_cast<double>(n);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t u, std::size_t v) { return in.samples[u].b > in.samples[v].b; });
  const std::size_t y_count = static_cast<std::size_t>(rng() % (n + 1));
  in.y_set.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(y_count));
  std::sort(in.y_set.begin(), in.y_set.end());
  double sum_y = 0;
  for (std::size_t v : in.y_set) sum_y += in.samples[v].b;
  p.y = static_cast<double>(y_count) / static_cast<double>(n);

  const std::size_t x_count = equality_case ? 0 : static_cast<std::size_t>(rng() % (y_count + 1));
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  in.x_set.assign(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(x_count));
  std::sort(in.x_set.begin(), in.x_set.end());
  p.x = static_cast<double>(x_count) / static_cast<double>(n);

  const double mu_max = sum_y / static_cast<double>(n);
  // gamma must keep beta >= x*gamma and y*beta + x(1-y)gamma <= mu_max.
  double gamma_cap = 1.0;
  if (p.x > 0) gamma_cap = std::min(gamma_cap, p.beta / p.x);
  if (p.x > 0 && p.y < 1) gamma_cap = std::min(gamma_cap, std::max(0.0, mu_max - p.y * p.beta) / (p.x * (1 - p.y)));
  p.gamma = equality_case ? 0.0 : gamma_cap * unit(rng);
  const double mu_lo = p.y * p.beta + p.x * (1 - p.y) * p.gamma;
  p.mu = equality_case ? p.y * p.beta : mu_lo + std::max(0.0, mu_max - mu_lo) * unit(rng);
  p.mu = std::min(p.mu, mu_max);

  p.lambda = unit(rng);
  std::vector<bool> in_x(n, false);
  for (std::size_t v : in.x_set) in_x[v] = true;
  for (std::size_t v = 0; v < n; ++v) {
    double base = in_x[v] ? p.lambda : p.lambda + p.gamma;
    in.samples[v].a = equality_case ? base : base + 0.5 * unit(rng);
  }
  return in;
}

struct AppliedStressReport {
  std::size_t count = 0;
  std::size_t rejected = 0;  ///< instances whose hypotheses failed the checker (rounding)
  std::size_t violations = 0;
  std::size_t equality_count = 0;
  double equality_max_slack = 0;  ///< largest |lhs - rhs| relative to max(1, rhs) over equality cases
};

inline AppliedStressReport run_appliedineq_stress(std::size_t count, std::uint64_t seed, unsigned threads = 1) {
  struct Slot {
    bool rejected = false, violation = false, equality = false;
    double slack = 0;
  };
  std::vector<Slot> slots(count);
  parallel_for(count, threads, [&](std::size_t i) {
    auto rng = detail::instance_rng(seed, i);
    Slot& s = slots[i];
    s.equality = i % 10 == 0;
    AppliedInstance in = random_applied_instance(rng, s.equality);
    try {
      auto rep = appliedineq_check(in.samples, in.params, in.x_set, in.y_set);
      s.violation = !rep.conclusion_held;
      s.slack = std::abs(rep.lhs - rep.rhs) / std::max(1.0, std::abs(rep.rhs));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::HypothesisViolated) throw;
      s.rejected = true;
    }
  });
  AppliedStressReport r;
  r.count = count;
  for (const Slot& s : slots) {
    r.rejected += s.rejected;
    r.violations += s.violation;
    if (s.equality && !s.rejected) {
      ++r.equality_count;
      r.equality_max_slack = std::max(r.equality_max_slack, s.slack);
    }
  }
  return r;
}

struct CorpusGraph {
  std::string name;
  std::size_t k = 0;  ///< girth of the graph exceeds 2k
  BipartiteDigraph g;
};

/// circulant(k,s,t) for k <= 5, s,t <= 4, and layered_cycle(k,t) for k <= 6, t <= 3.
inline std::vector<CorpusGraph> construction_corpus() {
  std::vector<CorpusGraph> out;
  for (std::size_t k = 1; k <= 5; ++k)
    for (std::size_t s = 1; s <= 4; ++s)
      for (std::size_t t = 1; t <= 4; ++t)
        out.push_back({"circulant(" + std::to_string(k) + "," + std::to_string(s) + "," + std::to_string(t) + ")", k,
                       circulant(k, s, t)});
  for (std::size_t k = 1; k <= 6; ++k)
    for (std::size_t t = 1; t <= 3; ++t)
      out.push_back({"layered(" + std::to_string(k) + "," + std::to_string(t) + ")", k, layered_cycle(k, t)});
  return out;
}

struct BellsCorpusReport {
  std::size_t instances = 0;
  std::size_t hypotheses_held = 0;
  std::size_t contradictions = 0;  ///< hypotheses held, conclusion failed
  std::vector<std::string> contradiction_names;
};

/// For each corpus graph g and odd d <= 2k-1, H = distance_power(g, d) is
/// checked with:
///   * R = S = all B->A edges of H, parameters measured (x = 0, y = 1);
///   * for d >= 3, S as above and R = the B->A edges of distance_power(g, d-2);
///   * several (X, Y) splits: X = {v : a(v) < theta}, gamma = theta - lambda,
///     Y = the m vertices of B of largest in-degree, mu = edges into Y / (|A||B|).
inline BellsCorpusReport run_bells_corpus(const std::vector<CorpusGraph>& corpus, unsigned threads = 1) {
  struct Job {
    const CorpusGraph* src;
    std::size_t d;
  };
  std::vector<Job> jobs;
  for (const auto& c : corpus)
    for (std::size_t d = 1; d + 1 <= 2 * c.k; d += 2) jobs.push_back({&c, d});

  struct Slot {
    std::size_t instances = 0, held = 0;
    std::vector<std::string> bad;
  };
  std::vector<Slot> slots(jobs.size());
  parallel_for(jobs.size(), threads, [&](std::size_t j) {
    const auto& job = jobs[j];
    Slot& slot = slots[j];
    const BipartiteDigraph h = distance_power(job.src->g, job.d);
    const std::vector<Edge> all = b_to_a_edges(h);
    std::vector<std::pair<std::string, std::vector<Edge>>> r_choices{{"R=S", all}};
    if (job.d >= 3) r_choices.push_back({"R=d-2", b_to_a_edges(distance_power(job.src->g, job.d - 2))});

    auto record = [&](const std::string& label, const CheckReport<Rational>& rep) {
      ++slot.instances;
      slot.held += rep.hypotheses_held;
      if (rep.contradiction())
        slot.bad.push_back(job.src->name + " d=" + std::to_string(job.d) + " " + label);
    };

    const std::size_t na = h.a_size(), nb = h.b_size();
    for (const auto& [label, r_edges] : r_choices) {
      BellsInput base = measure_bells_params(h, r_edges, all);
      record(label, bellsandwhistles_check(h, r_edges, all, base.params, base.x_set, base.y_set));

      // a(v) per B-vertex, as in the checker
      std::set<Edge> r_set(r_edges.begin(), r_edges.end()), s_set(all.begin(), all.end());
      std::vector<Rational> av(nb);
      for (std::size_t v = 0; v < nb; ++v) {
        std::size_t cnt = 0;
        for (std::size_t i : h.out(b(v)).indices()) cnt += r_set.count(Edge{b(v), a(i)}) + s_set.count(Edge{b(v), a(i)});
        av[v] = Rational(Integer(cnt)) / Integer(2 * na);
      }
      std::vector<Rational> thetas(av);
      std::sort(thetas.begin(), thetas.end());
      thetas.erase(std::unique(thetas.begin(), thetas.end()), thetas.end());
      if (thetas.size() > 3) thetas.resize(3);

      std::vector<std::size_t> by_indeg(nb);
      std::iota(by_indeg.begin(), by_indeg.end(), 0);
      std::stable_sort(by_indeg.begin(), by_indeg.end(),
                       [&](std::size_t u, std::size_t v) { return h.in_degree(b(u)) > h.in_degree(b(v)); });

      for (const Rational& theta : thetas) {
        for (std::size_t m : {(nb + 3) / 4, (nb + 1) / 2, nb}) {
          BellsInput in = base;
          in.x_set.clear();
          for (std::size_t v = 0; v < nb; ++v)
            if (av[v] < theta) in.x_set.push_back(v);
          in.params.gamma = theta - base.params.lambda;
          in.params.x = Rational(Integer(in.x_set.size())) / Integer(nb);
          in.y_set.assign(by_indeg.begin(), by_indeg.begin() + static_cast<std::ptrdiff_t>(m));
          std::sort(in.y_set.begin(), in.y_set.end());
          in.params.y = Rational(Integer(m)) / Integer(nb);
          if (in.params.y < in.params.x) continue;
          std::size_t into = 0;
          for (std::size_t v : in.y_set) into += h.in_degree(b(v));
          in.params.mu = Rational(Integer(into)) / (Integer(na) * Integer(nb));
          record(label + " theta=" + to_string(theta) + " m=" + std::to_string(m),
                 bellsandwhistles_check(h, r_edges, all, in.params, in.x_set, in.y_set));
        }
      }
    }
  });
  BellsCorpusReport r;
  for (auto& s : slots) {
    r.instances += s.instances;
    r.hypotheses_held += s.held;
    r.contradictions += s.bad.size();
    r.contradiction_names.insert(r.contradiction_names.end(), s.bad.begin(), s.bad.end());
  }
  return r;
}

}  // namespace bipgirth::lemma
