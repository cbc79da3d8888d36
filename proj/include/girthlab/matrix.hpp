#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace girthlab {

// Thrown on malformed matrix files and invalid construction arguments.
class parse_error : public std::runtime_error {
  public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// One cell of an exponent matrix: either unused (no circulant block) or a
// set of circulant shifts. Shifts are kept sorted ascending and must be
// distinct values in [0, N).
struct ExponentEntry {
    std::vector<int> shifts;

    bool unused() const { return shifts.empty(); }
    int weight() const { return static_cast<int>(shifts.size()); }

    static ExponentEntry none() { return {}; }
    static ExponentEntry single(int shift) { return {{shift}}; }

    bool operator==(const ExponentEntry&) const = default;
};

// m x n grid of shift sets plus the lifting degree N. Immutable after
// construction; validation happens in the constructor.
class ExponentMatrix {
  public:
    ExponentMatrix(int rows, int cols, int lifting, std::vector<ExponentEntry> entries);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int lifting() const { return lifting_; }

    const ExponentEntry& entry(int i, int j) const { return entries_[static_cast<size_t>(i) * cols_ + j]; }
    const std::vector<ExponentEntry>& entries() const { return entries_; }

    // Single shift value of a single-edge cell; nullopt when the cell is unused.
    std::optional<int> shift(int i, int j) const {
        const ExponentEntry& e = entry(i, j);
        if (e.unused()) return std::nullopt;
        return e.shifts.front();
    }

    bool is_single_edge() const { return single_edge_; }
    bool is_fully_connected() const { return fully_connected_; }
    int total_shift_count() const { return total_shifts_; }

    bool operator==(const ExponentMatrix&) const = default;

  private:
    int rows_, cols_, lifting_;
    std::vector<ExponentEntry> entries_;
    bool single_edge_ = true;
    bool fully_connected_ = true;
    int total_shifts_ = 0;
};

// Text format: first non-comment line "m n N", then m*n whitespace-separated
// entries ("-" for an unused cell, otherwise comma-separated shifts like
// "0" or "0,1,8"). '#' starts a comment. Line breaks are not significant
// beyond the conventional one-row-per-line layout.
ExponentMatrix parse_matrix(std::string_view text);
std::string serialize_matrix(const ExponentMatrix& B);

ExponentMatrix load_matrix_file(const std::string& path);

// Tanner graph of the lifted parity-check matrix. Check vertices are
// 0 .. m*N-1 (block row i, offset s -> i*N + s), variable vertices follow
// as m*N .. m*N + n*N - 1 (block column j, offset t -> m*N + j*N + t).
struct LiftedGraph {
    int check_count = 0;
    int var_count = 0;
    std::vector<int> offsets;    // CSR over all vertices
    std::vector<int> neighbors;

    int vertex_count() const { return check_count + var_count; }
    long long edge_count() const { return static_cast<long long>(neighbors.size()) / 2; }
    int degree(int v) const { return offsets[v + 1] - offsets[v]; }
};

LiftedGraph lift(const ExponentMatrix& B);

// Canonical residue in [0, N).
inline int mod_reduce(long long v, int lifting) {
    long long r = v % lifting;
    if (r < 0) r += lifting;
    return static_cast<int>(r);
}

}  // namespace girthlab
