#ifndef FACTORLAB_CAMPAIGN_HPP
#define FACTORLAB_CAMPAIGN_HPP

#include <atomic>
#include <chrono>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "factorlab/graph6.hpp"
#include "factorlab/theorems.hpp"

namespace factorlab {

enum class CampaignMode { Theorem2, Conjecture1 };

inline std::string to_string(CampaignMode m) {
    return m == CampaignMode::Theorem2 ? "theorem2" : "conjecture1";
}

struct CampaignConfig {
    FactorBounds bounds;
    CampaignMode mode = CampaignMode::Theorem2;
    Rational slack{1, 10};  // sharpness window above the threshold
    bool always_check = false;
    std::optional<Rational> threshold_override;
    int jobs = 1;
};

struct VerdictRow {
    std::string graph6;
    int n = 0;
    int m = 0;
    std::optional<Theorem2Verdict> verdict;
    std::optional<std::string> error;  // per-graph errors never abort the campaign
};

struct CounterexampleRecord {
    std::string graph6;
    Theorem2Verdict verdict;  // carries the failing I and the inner S/T witness
};

struct CampaignReport {
    std::string descriptor;
    CampaignConfig config;
    std::vector<VerdictRow> rows;
    std::vector<CounterexampleRecord> counterexamples;
    std::vector<int> sharpness_candidates;  // row indices with bind within slack of threshold
    long long elapsed_ms = 0;               // not serialized; reports must be byte-stable
};

// Evaluates every corpus graph independently; rows keep corpus order, so the
// result does not depend on the worker count.
inline CampaignReport run_campaign(const std::vector<Graph>& corpus, CampaignConfig config,
                                   std::string descriptor = "") {
    auto t0 = std::chrono::steady_clock::now();
    CampaignReport report;
    report.descriptor = std::move(descriptor);
    report.config = config;
    report.rows.resize(corpus.size());

    Theorem2Options opts;
    opts.strict = config.mode == CampaignMode::Theorem2;
    opts.always_check = config.always_check;
    opts.threshold_override = config.threshold_override;

    auto eval = [&](size_t i) {
        VerdictRow& row = report.rows[i];
        row.graph6 = emit_graph6(corpus[i]);
        row.n = corpus[i].order();
        row.m = corpus[i].size();
        try {
            row.verdict = verify_theorem2(corpus[i], config.bounds, opts);
        } catch (const std::exception& e) {
            row.error = e.what();
        }
    };

    int jobs = std::max(1, config.jobs);
    if (jobs == 1 || corpus.size() < 2) {
        for (size_t i = 0; i < corpus.size(); ++i) eval(i);
    } else {
        std::atomic<size_t> cursor{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back([&] {
                for (size_t i = cursor.fetch_add(1); i < corpus.size(); i = cursor.fetch_add(1))
                    eval(i);
            });
        for (auto& th : pool) th.join();
    }

    for (size_t i = 0; i < report.rows.size(); ++i) {
        const VerdictRow& row = report.rows[i];
        if (!row.verdict) continue;
        if (row.verdict->classification == Theorem2Class::Counterexample)
            report.counterexamples.push_back({row.graph6, *row.verdict});
        if (row.verdict->binding_value >= row.verdict->threshold &&
            row.verdict->binding_value <= row.verdict->threshold + config.slack)
            report.sharpness_candidates.push_back((int)i);
    }

    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
    return report;
}

namespace detail {

inline nlohmann::ordered_json verdict_json(const Theorem2Verdict& v) {
    nlohmann::ordered_json j;
    j["order_ok"] = v.order_ok;
    j["bind"] = v.binding_value.str();
    j["threshold"] = v.threshold.str();
    j["hypothesis_ok"] = v.hypothesis_ok;
    j["conclusion_checked"] = v.conclusion_checked;
    if (v.conclusion_ok) j["conclusion_ok"] = *v.conclusion_ok;
    j["classification"] = to_string(v.classification);
    if (v.conclusion_witness && !v.conclusion_witness->holds) {
        nlohmann::ordered_json w;
        w["failing_independent_set"] = v.conclusion_witness->failing_set->str();
        const CoveredWitness& cw = *v.conclusion_witness->inner->witness;
        w["S"] = cw.s.str();
        w["T"] = cw.t.str();
        w["epsilon"] = cw.epsilon;
        w["delta"] = cw.delta;
        j["witness"] = w;
    }
    return j;
}

}  // namespace detail

// JSON report. Timing is deliberately excluded: identical seeded configs
// must produce byte-identical files.
inline void write_json(const CampaignReport& report, std::ostream& os) {
    nlohmann::ordered_json j;
    j["descriptor"] = report.descriptor;
    j["config"]["a"] = report.config.bounds.a;
    j["config"]["b"] = report.config.bounds.b;
    j["config"]["mode"] = to_string(report.config.mode);
    j["config"]["slack"] = report.config.slack.str();
    j["config"]["always_check"] = report.config.always_check;
    if (report.config.threshold_override)
        j["config"]["threshold_override"] = report.config.threshold_override->str();
    j["graphs"] = report.rows.size();

    j["rows"] = nlohmann::ordered_json::array();
    for (const VerdictRow& row : report.rows) {
        nlohmann::ordered_json r;
        r["graph6"] = row.graph6;
        r["n"] = row.n;
        r["m"] = row.m;
        if (row.error)
            r["error"] = *row.error;
        else
            r["verdict"] = detail::verdict_json(*row.verdict);
        j["rows"].push_back(r);
    }

    j["counterexamples"] = nlohmann::ordered_json::array();
    for (const CounterexampleRecord& ce : report.counterexamples) {
        nlohmann::ordered_json r;
        r["graph6"] = ce.graph6;
        r["verdict"] = detail::verdict_json(ce.verdict);
        j["counterexamples"].push_back(r);
    }

    j["sharpness_candidates"] = report.sharpness_candidates;
    os << j.dump(2) << "\n";
}

// CSV rows: graph6, n, m, bind, threshold, classification.
inline void write_csv(const CampaignReport& report, std::ostream& os) {
    os << "graph6,n,m,bind,threshold,classification\n";
    for (const VerdictRow& row : report.rows) {
        os << row.graph6 << "," << row.n << "," << row.m << ",";
        if (row.error) {
            os << ",,ERROR\n";
        } else {
            os << row.verdict->binding_value.str() << ","
               << row.verdict->threshold.str() << ","
               << to_string(row.verdict->classification) << "\n";
        }
    }
}

inline void write_text_summary(const CampaignReport& report, std::ostream& os) {
    int by_class[4] = {0, 0, 0, 0};
    int errors = 0;
    for (const VerdictRow& row : report.rows) {
        if (row.error)
            ++errors;
        else
            ++by_class[(int)row.verdict->classification];
    }
    os << "campaign: " << report.descriptor << "\n"
       << "graphs: " << report.rows.size() << "\n"
       << "mode: " << to_string(report.config.mode) << "  bounds: [" << report.config.bounds.a
       << "," << report.config.bounds.b << "]\n"
       << "hypothesis failed (order): " << by_class[0] << "\n"
       << "hypothesis failed (binding): " << by_class[1] << "\n"
       << "conclusion holds: " << by_class[2] << "\n"
       << "COUNTEREXAMPLES: " << by_class[3] << "\n"
       << "errors: " << errors << "\n"
       << "sharpness candidates (slack " << report.config.slack.str()
       << "): " << report.sharpness_candidates.size() << "\n"
       << "elapsed_ms: " << report.elapsed_ms << "\n";
    for (const CounterexampleRecord& ce : report.counterexamples)
        os << "counterexample: " << ce.graph6 << "\n";
}

}  // namespace factorlab

#endif
