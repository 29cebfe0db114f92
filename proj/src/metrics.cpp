#include "ringaug/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <string>

#include "ringaug/error.hpp"

namespace ringaug {

namespace {

void check_indices(int n, const std::vector<int>& seq) {
    if (n < 1) throw InvalidSequenceError("cap: n must be >= 1");
    if (seq.empty()) throw UndefinedMetricError("cap: empty index sequence");
    for (int k : seq) {
        if (k < 1 || k > n) {
            throw InvalidSequenceError("cap: index " + std::to_string(k) +
                                       " outside [1, " + std::to_string(n) + "]");
        }
    }
}

}  // namespace

double cap_strict(int n, const std::vector<int>& seq) {
    check_indices(n, seq);
    const size_t m = seq.size();
    size_t hits = 0;
    for (size_t t = 0; t < m; ++t) {
        const int k = seq[t];
        const int k_next = seq[(t + 1) % m];
        if (k_next == (k % n) + 1) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(m);
}

double cap_order(int n, const std::vector<int>& seq) {
    check_indices(n, seq);
    std::set<int> present(seq.begin(), seq.end());
    if (present.size() != seq.size()) {
        throw InvalidSequenceError("cap_order: duplicate indices");
    }
    // next(k): smallest surviving index cyclically after k. A singleton set
    // wraps to itself.
    auto next_in_set = [&](int k) {
        auto it = present.upper_bound(k);
        if (it == present.end()) it = present.begin();
        return *it;
    };
    const size_t m = seq.size();
    size_t hits = 0;
    for (size_t t = 0; t < m; ++t) {
        if (seq[(t + 1) % m] == next_in_set(seq[t])) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(m);
}

MatchResult match_indices(const RingPolygon& original, const AffinePlan& plan,
                          const std::vector<Point2>& augmented, double tol) {
    if (tol <= 0.0) throw DomainError("match_indices: tol must be positive");
    const int n = original.size();
    MatchResult result;
    if (augmented.empty() || n == 0) {
        result.unmatched = static_cast<int>(augmented.size());
        return result;
    }

    std::vector<Point2> targets;
    targets.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) targets.push_back(apply_point(plan, original.vertex(i)));

    struct Candidate {
        double d2;
        int aug;
        int orig;  // 0-based
    };
    std::vector<Candidate> candidates;
    const double tol2 = tol * tol;
    for (int a = 0; a < static_cast<int>(augmented.size()); ++a) {
        for (int o = 0; o < n; ++o) {
            const double d2 =
                squared_distance(augmented[static_cast<size_t>(a)],
                                 targets[static_cast<size_t>(o)]);
            if (d2 <= tol2) candidates.push_back({d2, a, o});
        }
    }
    std::sort(candidates.begin(), candidates.end(), [](const Candidate& x, const Candidate& y) {
        if (x.d2 != y.d2) return x.d2 < y.d2;
        if (x.aug != y.aug) return x.aug < y.aug;
        return x.orig < y.orig;
    });

    std::vector<int> aug_match(augmented.size(), 0);
    std::vector<char> orig_taken(static_cast<size_t>(n), 0);
    std::vector<char> aug_taken(augmented.size(), 0);
    for (const auto& c : candidates) {
        if (aug_taken[static_cast<size_t>(c.aug)] || orig_taken[static_cast<size_t>(c.orig)]) {
            continue;
        }
        aug_taken[static_cast<size_t>(c.aug)] = 1;
        orig_taken[static_cast<size_t>(c.orig)] = 1;
        aug_match[static_cast<size_t>(c.aug)] = c.orig + 1;
    }

    for (size_t a = 0; a < augmented.size(); ++a) {
        if (aug_match[a] > 0) {
            result.indices.push_back(aug_match[a]);
        } else {
            ++result.unmatched;
        }
    }
    return result;
}

double mean_cap(const std::vector<CapReport>& reports, CapField field) {
    if (reports.empty()) throw UndefinedMetricError("mean_cap: no reports");
    double acc = 0.0;
    for (const auto& r : reports) {
        acc += (field == CapField::Strict) ? r.cap_strict : r.cap_order;
    }
    return acc / static_cast<double>(reports.size());
}

std::string cap_rows_to_csv(const std::vector<CapRow>& rows) {
    std::ostringstream os;
    os << "file,class,n,m,cap_strict,cap_order,unmatched\n";
    for (const auto& row : rows) {
        os << row.file << ',' << row.label << ',' << row.report.n << ','
           << row.report.m << ',' << row.report.cap_strict << ','
           << row.report.cap_order << ',' << row.report.unmatched_new_vertices
           << '\n';
    }
    return os.str();
}

}  // namespace ringaug
