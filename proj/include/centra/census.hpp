#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "centra/analysis.hpp"
#include "centra/constructors.hpp"
#include "centra/corpus_io.hpp"
#include "centra/group.hpp"
#include "centra/verify.hpp"

namespace centra {

struct CensusOptions {
  std::size_t max_order = 5040;
  GroupLimits limits;
  AnalysisOptions analysis;
  std::size_t jobs = 0;  // 0 = hardware concurrency
  std::size_t isomorphism_cap = 72;
};

struct CensusRow {
  InvariantReport report;
  std::vector<VerificationResult> results;
  std::optional<ConjectureCandidate> candidate;
};

struct CensusResult {
  std::vector<CensusRow> rows;  // sorted by group name
  CensusSummary summary;
  std::size_t failures = 0;  // FAIL statuses across rows and summary
};

inline CensusRow census_row(const FiniteGroup& G, const CensusOptions& options) {
  const auto a = analyze(G, options.analysis);
  CensusRow row{a.report, verify_all(a, options.isomorphism_cap), classify_candidate(a, options.isomorphism_cap)};
  return row;
}

namespace detail {

template <typename Work>
void run_parallel(std::size_t count, std::size_t jobs, Work&& work) {
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count || stop) return;
      try {
        work(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        stop = true;
      }
    }
  };
  if (jobs == 0) jobs = std::max(1U, std::thread::hardware_concurrency());
  jobs = std::min(jobs, std::max<std::size_t>(count, 1));
  std::vector<std::thread> threads;
  for (std::size_t t = 1; t < jobs; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace detail

/// Analyzes and verifies every entry. Work is spread over worker threads;
/// the output order depends only on the group names. The first exception
/// thrown by any worker is rethrown after all workers stop.
inline CensusResult run_census(const std::vector<CorpusEntry>& entries, const CensusOptions& options) {
  std::vector<CensusRow> rows(entries.size());
  detail::run_parallel(entries.size(), options.jobs, [&](std::size_t i) {
    const auto G = entries[i].build(options.limits);
    rows[i] = census_row(G, options);
  });

  std::stable_sort(rows.begin(), rows.end(),
                   [](const CensusRow& a, const CensusRow& b) { return a.report.name < b.report.name; });

  CensusResult out;
  std::vector<InvariantReport> reports;
  for (const auto& r : rows) reports.push_back(r.report);
  out.summary = census_properties(reports);
  out.rows = std::move(rows);
  for (const auto& r : out.rows)
    for (const auto& v : r.results) out.failures += v.status == Status::fail;
  for (const auto& v : out.summary.results) out.failures += v.status == Status::fail;
  return out;
}

struct ConjectureScan {
  std::vector<ConjectureCandidate> candidates;  // sorted by group name
  std::size_t groups = 0;
  std::size_t counterexamples = 0;
};

/// Lists every entry with 2|G| <= 3n (|G| > 1) and its verdict. Only the
/// centralizer count is computed per group.
inline ConjectureScan scan_conjecture(const std::vector<CorpusEntry>& entries, const CensusOptions& options) {
  std::vector<std::optional<ConjectureCandidate>> found(entries.size());
  detail::run_parallel(entries.size(), options.jobs, [&](std::size_t i) {
    const auto G = entries[i].build(options.limits);
    found[i] = classify_candidate(G, centralizer_profile(G).n(), options.isomorphism_cap);
  });
  ConjectureScan out;
  out.groups = entries.size();
  for (auto& c : found)
    if (c) out.candidates.push_back(std::move(*c));
  std::stable_sort(out.candidates.begin(), out.candidates.end(),
                   [](const auto& a, const auto& b) { return a.name < b.name; });
  for (const auto& c : out.candidates) out.counterexamples += c.verdict == ConjectureVerdict::counterexample;
  return out;
}

/// Corpus entries for the built-in families plus ingested records.
inline std::vector<CorpusEntry> census_entries(std::size_t max_order, const std::vector<CorpusRecord>& extra = {}) {
  auto entries = builtin_corpus_entries(max_order);
  for (const auto& r : extra)
    entries.push_back({r.name, 0, [r](const GroupLimits& limits) { return group_from_record(r, limits); }});
  return entries;
}

inline void write_census(std::ostream& out, const CensusResult& census, ReportFormat format) {
  if (format == ReportFormat::csv) {
    write_csv_header(out, census_columns());
    for (const auto& r : census.rows) write_census_csv_row(out, r.report, r.results);
    return;
  }
  for (const auto& r : census.rows) {
    write_json_line(out, r.report);
    for (const auto& v : r.results) write_json_line(out, v);
  }
  for (const auto& v : census.summary.results) write_json_line(out, v);
}

}  // namespace centra
