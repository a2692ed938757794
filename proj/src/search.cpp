#include "pulsar/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>

namespace pulsar {

namespace {

constexpr int kMaxSize = 64;  // row/column value sets are 64-bit masks

struct SearchCell {
    int row = 0;  // 0-based
    int col = 0;
    bool circled = false;
    std::uint64_t allowed = 0;
};

std::uint64_t full_mask(int n) {
    return n == 64 ? ~0ull : (1ull << n) - 1;
}

void validate_pattern(const SpiralPattern& pattern) {
    const int n = pattern.n;
    if (n < 1) {
        throw std::invalid_argument("enumerate: pattern size must be >= 1");
    }
    if (n > kMaxSize) {
        throw std::invalid_argument("enumerate: pattern size " +
                                    std::to_string(n) + " exceeds " +
                                    std::to_string(kMaxSize));
    }
    if (pattern.circled_mask.size() != static_cast<size_t>(n) * n) {
        throw std::invalid_argument("enumerate: mask storage does not match n");
    }
    std::vector<char> seen(static_cast<size_t>(n) * n, 0);
    size_t piece_cells = 0;
    for (const Piece& piece : pattern.circled_pieces) {
        if (piece.index < 1 || piece.index > n) {
            throw std::invalid_argument("enumerate: piece index out of range");
        }
        for (const CellCoord& cell : piece.cells) {
            if (cell.row < 1 || cell.row > n || cell.col < 1 || cell.col > n) {
                throw std::invalid_argument("enumerate: piece cell out of range");
            }
            const size_t at = static_cast<size_t>(cell.row - 1) * n + (cell.col - 1);
            if (!pattern.circled_mask[at]) {
                throw std::invalid_argument(
                    "enumerate: piece cell not circled in the mask");
            }
            if (seen[at]) {
                throw std::invalid_argument("enumerate: duplicate piece cell");
            }
            seen[at] = 1;
            ++piece_cells;
        }
    }
    if (piece_cells != static_cast<size_t>(pattern.circled_count())) {
        throw std::invalid_argument(
            "enumerate: circled pieces do not cover the circled mask");
    }
}

// Deterministic cell order: circled cells piece by piece from the largest
// piece inward (walk order within a piece), then uncircled cells row-major.
std::vector<SearchCell> plan_cells(const SpiralPattern& pattern,
                                   InferenceLevel level) {
    const int n = pattern.n;
    const std::uint64_t all = full_mask(n);
    std::vector<SearchCell> cells;
    cells.reserve(static_cast<size_t>(n) * n);
    for (const Piece& piece : pattern.circled_pieces) {
        std::uint64_t allowed = all;
        if (level == InferenceLevel::L1) {
            // Piece k has size n+1-k and must hold {k..n}.
            allowed &= ~((1ull << (piece.index - 1)) - 1);
        }
        for (const CellCoord& cell : piece.cells) {
            cells.push_back({cell.row - 1, cell.col - 1, true, allowed});
        }
    }
    for (int row = 1; row <= n; ++row) {
        for (int col = 1; col <= n; ++col) {
            if (!pattern.circled(row, col)) {
                cells.push_back({row - 1, col - 1, false, all});
            }
        }
    }
    return cells;
}

struct Dfs {
    int n = 0;
    const std::vector<SearchCell>* cells = nullptr;
    std::uint64_t cap = 0;
    std::uint64_t budget = 0;
    bool full_spiral = false;

    std::vector<std::uint64_t> row_used;
    std::vector<std::uint64_t> col_used;
    std::vector<int> counts;    // circled occurrences per digit, index 1..n
    std::vector<int> assigned;  // per cell index
    std::vector<Grid> solutions;
    std::uint64_t nodes = 0;
    bool interrupted = false;

    explicit Dfs(int size, const std::vector<SearchCell>& plan,
                 const SolveConfig& config, bool spiral)
        : n(size),
          cells(&plan),
          cap(config.solution_cap),
          budget(config.node_budget),
          full_spiral(spiral),
          row_used(size, 0),
          col_used(size, 0),
          counts(size + 1, 0),
          assigned(plan.size(), 0) {}

    void place(size_t idx, int value) {
        const SearchCell& cell = (*cells)[idx];
        const std::uint64_t bit = 1ull << (value - 1);
        row_used[cell.row] |= bit;
        col_used[cell.col] |= bit;
        if (cell.circled) ++counts[value];
        assigned[idx] = value;
        ++nodes;
    }

    void unplace(size_t idx, int value) {
        const SearchCell& cell = (*cells)[idx];
        const std::uint64_t bit = 1ull << (value - 1);
        row_used[cell.row] &= ~bit;
        col_used[cell.col] &= ~bit;
        if (cell.circled) --counts[value];
    }

    void run(size_t idx) {
        if (idx == cells->size()) {
            complete();
            return;
        }
        const SearchCell& cell = (*cells)[idx];
        std::uint64_t avail =
            ~(row_used[cell.row] | col_used[cell.col]) & cell.allowed;
        while (avail) {
            const std::uint64_t bit = avail & (~avail + 1);
            avail ^= bit;
            const int value = std::countr_zero(bit) + 1;
            if (cell.circled && counts[value] == value) continue;  // c_v stays <= v
            if (budget != 0 && nodes >= budget) {
                interrupted = true;
                return;
            }
            place(idx, value);
            run(idx + 1);
            unplace(idx, value);
            if (interrupted) return;
        }
    }

    void complete() {
        for (int d = 1; d <= n; ++d) {
            if (counts[d] != 0 && counts[d] != d) return;  // circle rule
        }
        if (full_spiral) {
            // With n(n+1)/2 circles and all counts capped at their digit, the
            // counts must be exactly 1..n; re-derive rather than assume.
            for (int d = 1; d <= n; ++d) {
                if (counts[d] != d) {
                    throw std::logic_error(
                        "enumerate: accepted grid has circled count " +
                        std::to_string(counts[d]) + " for digit " +
                        std::to_string(d));
                }
            }
        }
        Grid grid{n, std::vector<int>(static_cast<size_t>(n) * n, 0)};
        for (size_t i = 0; i < cells->size(); ++i) {
            const SearchCell& cell = (*cells)[i];
            grid.values[static_cast<size_t>(cell.row) * n + cell.col] = assigned[i];
        }
        solutions.push_back(std::move(grid));
        if (cap != 0 && solutions.size() >= cap) interrupted = true;
    }
};

}  // namespace

SolveReport enumerate_solutions(const SpiralPattern& pattern,
                                const SolveConfig& config) {
    validate_pattern(pattern);
    const auto start = std::chrono::steady_clock::now();

    const int n = pattern.n;
    const std::vector<SearchCell> cells = plan_cells(pattern, config.level);
    const bool full_spiral = pattern.circled_count() == n * (n + 1) / 2;

    SolveReport report;
    // Interruptible runs stay single-worker so that which solutions get found
    // before the cap/budget never depends on scheduling.
    const bool bounded = config.solution_cap != 0 || config.node_budget != 0;
    const int workers = (bounded || config.workers < 2) ? 1 : config.workers;

    if (workers == 1 || cells.size() < 2) {
        Dfs dfs(n, cells, config, full_spiral);
        dfs.run(0);
        report.solutions = std::move(dfs.solutions);
        report.nodes_visited = dfs.nodes;
        report.count_exact = !dfs.interrupted;
    } else {
        // Split the root branching over the first two cells. Tasks are taken
        // from a shared queue; merging in task order reproduces the
        // single-worker solution order, and the +1 per first-cell value keeps
        // the node total identical.
        struct Task {
            int first = 0;
            int second = 0;
        };
        std::vector<Task> tasks;
        std::uint64_t root_nodes = 0;
        {
            Dfs scratch(n, cells, config, full_spiral);
            auto candidates = [&](size_t idx) {
                const SearchCell& cell = cells[idx];
                std::vector<int> values;
                std::uint64_t avail =
                    ~(scratch.row_used[cell.row] | scratch.col_used[cell.col]) &
                    cell.allowed;
                while (avail) {
                    const std::uint64_t bit = avail & (~avail + 1);
                    avail ^= bit;
                    const int value = std::countr_zero(bit) + 1;
                    if (cell.circled && scratch.counts[value] == value) continue;
                    values.push_back(value);
                }
                return values;
            };
            for (int first : candidates(0)) {
                ++root_nodes;  // the first-cell placement, counted once
                scratch.place(0, first);
                for (int second : candidates(1)) {
                    tasks.push_back({first, second});
                }
                scratch.unplace(0, first);
            }
        }

        struct TaskResult {
            std::vector<Grid> solutions;
            std::uint64_t nodes = 0;
        };
        std::vector<TaskResult> results(tasks.size());
        std::atomic<size_t> next{0};
        std::exception_ptr error;
        std::mutex error_mutex;
        auto drain = [&]() {
            try {
                for (;;) {
                    const size_t j = next.fetch_add(1);
                    if (j >= tasks.size()) return;
                    Dfs dfs(n, cells, config, full_spiral);
                    dfs.place(0, tasks[j].first);
                    dfs.nodes = 0;  // first-cell placements are counted above
                    dfs.place(1, tasks[j].second);
                    dfs.run(2);
                    results[j].solutions = std::move(dfs.solutions);
                    results[j].nodes = dfs.nodes;
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        };
        std::vector<std::thread> pool;
        const size_t pool_size =
            std::min<size_t>(static_cast<size_t>(workers), tasks.size());
        pool.reserve(pool_size);
        for (size_t i = 0; i < pool_size; ++i) pool.emplace_back(drain);
        for (std::thread& thread : pool) thread.join();
        if (error) std::rethrow_exception(error);

        report.nodes_visited = root_nodes;
        for (TaskResult& result : results) {
            report.nodes_visited += result.nodes;
            for (Grid& grid : result.solutions) {
                report.solutions.push_back(std::move(grid));
            }
        }
        report.count_exact = true;
    }

    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return report;
}

std::uint64_t count_latin_only(int n, int limit) {
    if (n < 1) {
        throw std::invalid_argument("count_latin_only: n must be >= 1, got " +
                                    std::to_string(n));
    }
    if (n > limit) {
        throw std::invalid_argument("count_latin_only: n=" + std::to_string(n) +
                                    " exceeds the limit " + std::to_string(limit));
    }
    const std::uint64_t all = (1ull << n) - 1;
    std::vector<std::uint64_t> row_used(n, 0);
    std::vector<std::uint64_t> col_used(n, 0);
    std::uint64_t count = 0;
    auto fill = [&](auto&& self, int idx) -> void {
        if (idx == n * n) {
            ++count;
            return;
        }
        const int row = idx / n;
        const int col = idx % n;
        std::uint64_t avail = ~(row_used[row] | col_used[col]) & all;
        while (avail) {
            const std::uint64_t bit = avail & (~avail + 1);
            avail ^= bit;
            row_used[row] |= bit;
            col_used[col] |= bit;
            self(self, idx + 1);
            row_used[row] &= ~bit;
            col_used[col] &= ~bit;
        }
    };
    fill(fill, 0);
    return count;
}

}  // namespace pulsar
