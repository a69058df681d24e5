#pragma once
// Classifier-vs-engine sweeps over clique-union parameter grids.  Rows land
// in canonical grid order regardless of worker count, so CSV reports are
// byte-identical for any --jobs value.

#include <array>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "qramsey/classify.hpp"
#include "qramsey/core.hpp"
#include "qramsey/embedding.hpp"
#include "qramsey/engine.hpp"

namespace qramsey {

// One grid instance: its parameters, both verdicts, and the engine's witness
// when the union is not Ramsey (kept for downstream periodicity checks).
struct SweepRow {
  std::vector<int> params;
  bool classifier = false;
  std::optional<bool> engine;
  bool agree = true;                        // meaningful only when engine ran
  std::optional<PeriodicColoring> witness;  // engine's avoiding coloring
};

struct SweepReport {
  std::vector<std::string> columns;  // parameter names, then the verdicts
  std::vector<SweepRow> rows;
  int disagreements = 0;
};

namespace detail {

// rows[i] = make(i) across `jobs` workers; the fixed slot layout keeps the
// merge order canonical.  The first worker exception wins and is rethrown.
inline void fill_rows(std::vector<SweepRow>& rows, int jobs,
                      const std::function<SweepRow(std::size_t)>& make) {
  if (jobs <= 1 || rows.size() < 2) {
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = make(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= rows.size() || failed.load()) return;
      try {
        rows[i] = make(i);
      } catch (...) {
        std::scoped_lock lock(error_mutex);
        if (!error) error = std::current_exception();
        failed.store(true);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  for (std::thread& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

inline void attach_engine_verdict(SweepRow& row, const CliqueUnion& u) {
  Decision dec = decide(w_prime(u), 2);
  row.engine = dec.is_ramsey;
  row.witness = std::move(dec.witness);
  row.agree = row.classifier == dec.is_ramsey;
}

inline void count_disagreements(SweepReport& rep) {
  for (const SweepRow& r : rep.rows)
    if (r.engine && !r.agree) ++rep.disagreements;
}

}  // namespace detail

// Every unordered pair of (weight, slack) combinations with weights in
// [1, max_weight] and slacks in [0, max_slack].  Swapping the cliques changes
// neither verdict, so each pair appears once, smaller combination first.
inline SweepReport sweep_two_cliques(int max_weight, int max_slack,
                                     bool check_engine, int jobs = 1) {
  if (max_weight < 1 || max_slack < 0)
    throw std::invalid_argument("empty sweep grid");
  std::vector<std::pair<int, int>> combos;
  for (int a = 1; a <= max_weight; ++a)
    for (int t = 0; t <= max_slack; ++t) combos.emplace_back(a, t);
  std::vector<std::array<int, 4>> grid;
  for (std::size_t i = 0; i < combos.size(); ++i)
    for (std::size_t j = i; j < combos.size(); ++j)
      grid.push_back({combos[i].first, combos[i].second,  //
                      combos[j].first, combos[j].second});

  SweepReport rep;
  rep.columns = {"a1", "t1", "a2", "t2", "classifier", "engine", "agree"};
  rep.rows.resize(grid.size());
  detail::fill_rows(rep.rows, jobs, [&](std::size_t k) {
    const std::array<int, 4>& p = grid[k];
    SweepRow row;
    row.params = {p[0], p[1], p[2], p[3]};
    row.classifier = classify_two_cliques(p[0], p[1], p[2], p[3]);
    if (check_engine) {
      CliqueUnion u{{{p[0], p[1]}, {p[2], p[3]}}, 0};
      detail::attach_engine_verdict(row, u);
    }
    return row;
  });
  detail::count_disagreements(rep);
  return rep;
}

// Pairwise-distinct weights listed descending, so each weight set appears
// once; slacks range independently over [0, max_slack].
inline SweepReport sweep_three_cliques(int max_weight, int max_slack,
                                       bool check_engine, int jobs = 1) {
  if (max_weight < 3 || max_slack < 0)
    throw std::invalid_argument("empty sweep grid");
  std::vector<std::array<int, 6>> grid;
  for (int a1 = 3; a1 <= max_weight; ++a1)
    for (int a2 = 2; a2 < a1; ++a2)
      for (int a3 = 1; a3 < a2; ++a3)
        for (int t1 = 0; t1 <= max_slack; ++t1)
          for (int t2 = 0; t2 <= max_slack; ++t2)
            for (int t3 = 0; t3 <= max_slack; ++t3)
              grid.push_back({a1, t1, a2, t2, a3, t3});

  SweepReport rep;
  rep.columns = {"a1", "t1", "a2", "t2", "a3", "t3", "classifier", "engine", "agree"};
  rep.rows.resize(grid.size());
  detail::fill_rows(rep.rows, jobs, [&](std::size_t k) {
    const std::array<int, 6>& p = grid[k];
    SweepRow row;
    row.params = {p[0], p[1], p[2], p[3], p[4], p[5]};
    row.classifier = classify_three_cliques(p[0], p[1], p[2], p[3], p[4], p[5]);
    if (check_engine) {
      CliqueUnion u{{{p[0], p[1]}, {p[2], p[3]}, {p[4], p[5]}}, 0};
      detail::attach_engine_verdict(row, u);
    }
    return row;
  });
  detail::count_disagreements(rep);
  return rep;
}

// Overlapping pairs inside the closed-form criterion's hypotheses: distinct
// weights (larger first), slacks in {2,3}, shared vertices c in {1,2,3}.
inline SweepReport sweep_overlap(int max_weight, bool check_engine, int jobs = 1) {
  if (max_weight < 2) throw std::invalid_argument("empty sweep grid");
  std::vector<std::array<int, 5>> grid;
  for (int a1 = 2; a1 <= max_weight; ++a1)
    for (int a2 = 1; a2 < a1; ++a2)
      for (int t1 = 2; t1 <= 3; ++t1)
        for (int t2 = 2; t2 <= 3; ++t2)
          for (int c = 1; c <= 3; ++c) grid.push_back({a1, t1, a2, t2, c});

  SweepReport rep;
  rep.columns = {"a1", "t1", "a2", "t2", "c", "classifier", "engine", "agree"};
  rep.rows.resize(grid.size());
  detail::fill_rows(rep.rows, jobs, [&](std::size_t k) {
    const std::array<int, 5>& p = grid[k];
    SweepRow row;
    row.params = {p[0], p[1], p[2], p[3], p[4]};
    row.classifier = classify_two_cliques_overlap(p[0], p[1], p[2], p[3], p[4]);
    if (check_engine) {
      CliqueUnion u{{{p[0], p[1]}, {p[2], p[3]}}, p[4]};
      detail::attach_engine_verdict(row, u);
    }
    return row;
  });
  detail::count_disagreements(rep);
  return rep;
}

// Header plus one line per row; booleans as true/false, blank engine and
// agreement fields when the engine was not run.
inline void write_csv(std::ostream& os, const SweepReport& rep) {
  for (std::size_t i = 0; i < rep.columns.size(); ++i)
    os << (i ? "," : "") << rep.columns[i];
  os << '\n';
  for (const SweepRow& r : rep.rows) {
    for (int p : r.params) os << p << ',';
    os << (r.classifier ? "true" : "false") << ',';
    if (r.engine)
      os << (*r.engine ? "true" : "false") << ',' << (r.agree ? "true" : "false");
    else
      os << ',';
    os << '\n';
  }
}

}  // namespace qramsey
