#pragma once

#include "rig/rational.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <utility>
#include <vector>

namespace rig {

/// Column-sparse exact matrix: cols[j] maps coordinate index -> value.
/// Coordinate indices need not be contiguous.
struct SparseColumns {
    std::size_t ncols = 0;
    std::vector<std::map<int, Rational>> cols;
};

using SparseRow = std::vector<std::pair<int, Rational>>;  // sorted by column

namespace detail {

inline void sparse_axpy(SparseRow& target, const Rational& c, const SparseRow& src) {
    // target += c * src
    SparseRow out;
    out.reserve(target.size() + src.size());
    auto a = target.begin(), ae = target.end();
    auto b = src.begin(), be = src.end();
    while (a != ae || b != be) {
        if (b == be || (a != ae && a->first < b->first)) {
            out.push_back(*a++);
        } else if (a == ae || b->first < a->first) {
            Rational v = c * b->second;
            if (v != 0) out.emplace_back(b->first, std::move(v));
            ++b;
        } else {
            Rational v = a->second + c * b->second;
            if (v != 0) out.emplace_back(a->first, std::move(v));
            ++a;
            ++b;
        }
    }
    target = std::move(out);
}

}  // namespace detail

/// Exact kernel of a sparse column set, computed by incremental row
/// reduction of the transposed constraint system.
///
/// The optional verifier enables early termination on tall systems: when
/// the rank has stalled, the current kernel candidate (always a superset
/// of the true kernel) is checked by the caller against the exact map it
/// came from; if every candidate vector verifies, the candidate equals the
/// kernel and remaining constraint rows are skipped. Without a verifier
/// every row is processed, which is exact unconditionally.
class SparseKernelSolver {
public:
    using Verifier = std::function<bool(const std::vector<Rational>&)>;

    static std::vector<std::vector<Rational>> kernel(const SparseColumns& m,
                                                     const Verifier* verifier = nullptr) {
        SparseKernelSolver s(m);
        return s.run(verifier);
    }

private:
    explicit SparseKernelSolver(const SparseColumns& m) : ncols_(m.ncols) {
        // Transpose into constraint rows.
        std::map<int, SparseRow> rows;
        for (std::size_t j = 0; j < m.cols.size(); ++j)
            for (const auto& [coord, val] : m.cols[j]) rows[coord].emplace_back((int)j, val);
        rows_.reserve(rows.size());
        for (auto& [coord, r] : rows) {
            std::sort(r.begin(), r.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            rows_.push_back(std::move(r));
        }
        // Sparse constraints first; ties broken by coordinate order above.
        std::stable_sort(rows_.begin(), rows_.end(),
                         [](const SparseRow& a, const SparseRow& b) { return a.size() < b.size(); });
    }

    std::vector<std::vector<Rational>> run(const Verifier* verifier) {
        const std::size_t stall_limit = std::max<std::size_t>(32, ncols_ / 4);
        std::size_t stall = 0;
        for (std::size_t ri = 0; ri < rows_.size(); ++ri) {
            if (reduce_and_insert(rows_[ri]))
                stall = 0;
            else
                ++stall;
            if (pivot_rows_.size() == ncols_) return {};  // full rank, kernel trivial
            if (verifier && stall >= stall_limit) {
                auto cand = extract_kernel();
                bool ok = true;
                for (const auto& v : cand)
                    if (!(*verifier)(v)) {
                        ok = false;
                        break;
                    }
                if (ok) return cand;
                stall = 0;  // candidate too big, keep consuming rows
            }
        }
        return extract_kernel();
    }

    // Returns true when the row contributed a new pivot.
    bool reduce_and_insert(const SparseRow& row) {
        SparseRow work = row;
        for (std::size_t k = 0; k < work.size();) {
            auto it = pivot_of_col_.find(work[k].first);
            if (it == pivot_of_col_.end()) {
                ++k;
                continue;
            }
            Rational c = -work[k].second;
            detail::sparse_axpy(work, c, pivot_rows_[it->second].row);
            // axpy removed the eliminated column; rescan from the same index
        }
        if (work.empty()) return false;
        // Normalize on the leading column.
        Rational inv = 1 / work.front().second;
        for (auto& [c, v] : work) v *= inv;
        int pcol = work.front().first;
        // Back-eliminate the new pivot column from existing rows.
        for (auto& pr : pivot_rows_) {
            auto pos = std::lower_bound(
                pr.row.begin(), pr.row.end(), pcol,
                [](const std::pair<int, Rational>& e, int c) { return e.first < c; });
            if (pos != pr.row.end() && pos->first == pcol) {
                Rational c = -pos->second;
                detail::sparse_axpy(pr.row, c, work);
            }
        }
        pivot_of_col_[pcol] = pivot_rows_.size();
        pivot_rows_.push_back({pcol, std::move(work)});
        return true;
    }

    std::vector<std::vector<Rational>> extract_kernel() const {
        std::vector<std::vector<Rational>> basis;
        std::vector<char> is_pivot(ncols_, 0);
        for (const auto& pr : pivot_rows_) is_pivot[pr.col] = 1;
        for (std::size_t free = 0; free < ncols_; ++free) {
            if (is_pivot[free]) continue;
            std::vector<Rational> v(ncols_);
            v[free] = 1;
            for (const auto& pr : pivot_rows_) {
                auto pos = std::lower_bound(
                    pr.row.begin(), pr.row.end(), (int)free,
                    [](const std::pair<int, Rational>& e, int c) { return e.first < c; });
                if (pos != pr.row.end() && pos->first == (int)free) v[pr.col] = -pos->second;
            }
            basis.push_back(std::move(v));
        }
        return basis;
    }

    struct PivotRow {
        int col;
        SparseRow row;
    };

    std::size_t ncols_;
    std::vector<SparseRow> rows_;
    std::vector<PivotRow> pivot_rows_;
    std::map<int, std::size_t> pivot_of_col_;
};

}  // namespace rig
