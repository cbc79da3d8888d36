#include "girthlab/matrix.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace girthlab {

ExponentMatrix::ExponentMatrix(int rows, int cols, int lifting, std::vector<ExponentEntry> entries)
    : rows_(rows), cols_(cols), lifting_(lifting), entries_(std::move(entries)) {
    if (rows_ <= 0 || cols_ <= 0) throw parse_error("matrix dimensions must be positive");
    if (lifting_ < 2) throw parse_error("lifting degree must be >= 2");
    if (entries_.size() != static_cast<size_t>(rows_) * cols_)
        throw parse_error("entry count does not match dimensions");
    for (const ExponentEntry& e : entries_) {
        if (e.unused()) {
            fully_connected_ = false;
            continue;
        }
        if (e.weight() > 1) single_edge_ = false;
        total_shifts_ += e.weight();
        for (size_t k = 0; k < e.shifts.size(); ++k) {
            int s = e.shifts[k];
            if (s < 0 || s >= lifting_) throw parse_error("shift value out of [0, N)");
            if (k > 0 && e.shifts[k] <= e.shifts[k - 1])
                throw parse_error("shifts within an entry must be strictly increasing");
        }
    }
}

namespace {

std::string strip_comments(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    bool in_comment = false;
    for (char c : text) {
        if (c == '#') in_comment = true;
        if (c == '\n') in_comment = false;
        out.push_back(in_comment ? ' ' : c);
    }
    return out;
}

int parse_int(const std::string& token, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw parse_error(std::string("expected integer for ") + what + ", got '" + token + "'");
    return value;
}

ExponentEntry parse_entry(const std::string& token, int lifting) {
    if (token == "-") return ExponentEntry::none();
    ExponentEntry e;
    size_t pos = 0;
    while (pos <= token.size()) {
        size_t comma = token.find(',', pos);
        std::string piece = token.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (piece.empty()) throw parse_error("empty shift in entry '" + token + "'");
        e.shifts.push_back(parse_int(piece, "shift"));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (e.shifts.empty()) throw parse_error("entry has no shifts");
    std::vector<int> sorted = e.shifts;
    std::sort(sorted.begin(), sorted.end());
    for (size_t k = 1; k < sorted.size(); ++k)
        if (sorted[k] == sorted[k - 1])
            throw parse_error("duplicate shift in entry '" + token + "'");
    e.shifts = std::move(sorted);
    for (int s : e.shifts)
        if (s < 0 || s >= lifting) throw parse_error("shift out of [0, N) in entry '" + token + "'");
    return e;
}

}  // namespace

ExponentMatrix parse_matrix(std::string_view text) {
    std::istringstream in(strip_comments(text));
    std::string tok;
    auto next = [&](const char* what) {
        if (!(in >> tok)) throw parse_error(std::string("unexpected end of input, wanted ") + what);
        return tok;
    };
    int m = parse_int(next("row count"), "row count");
    int n = parse_int(next("column count"), "column count");
    int N = parse_int(next("lifting degree"), "lifting degree");
    if (m <= 0 || n <= 0) throw parse_error("malformed header: dimensions must be positive");
    if (N < 2) throw parse_error("malformed header: lifting degree must be >= 2");
    std::vector<ExponentEntry> entries;
    entries.reserve(static_cast<size_t>(m) * n);
    for (int k = 0; k < m * n; ++k) entries.push_back(parse_entry(next("matrix entry"), N));
    if (in >> tok) throw parse_error("trailing content after matrix entries: '" + tok + "'");
    return ExponentMatrix(m, n, N, std::move(entries));
}

std::string serialize_matrix(const ExponentMatrix& B) {
    std::ostringstream out;
    out << B.rows() << ' ' << B.cols() << ' ' << B.lifting() << '\n';
    for (int i = 0; i < B.rows(); ++i) {
        for (int j = 0; j < B.cols(); ++j) {
            if (j) out << ' ';
            const ExponentEntry& e = B.entry(i, j);
            if (e.unused()) {
                out << '-';
            } else {
                for (size_t k = 0; k < e.shifts.size(); ++k) {
                    if (k) out << ',';
                    out << e.shifts[k];
                }
            }
        }
        out << '\n';
    }
    return out.str();
}

ExponentMatrix load_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open matrix file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_matrix(buf.str());
}

LiftedGraph lift(const ExponentMatrix& B) {
    const int m = B.rows(), n = B.cols(), N = B.lifting();
    LiftedGraph g;
    g.check_count = m * N;
    g.var_count = n * N;
    const int V = g.vertex_count();
    std::vector<int> deg(V, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            for (int w = B.entry(i, j).weight(); w > 0; --w)
                for (int s = 0; s < N; ++s) {
                    ++deg[i * N + s];
                    // counted again below on the variable side
                }
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < m; ++i)
            for (int w = B.entry(i, j).weight(); w > 0; --w)
                for (int t = 0; t < N; ++t) ++deg[g.check_count + j * N + t];

    g.offsets.assign(V + 1, 0);
    for (int v = 0; v < V; ++v) g.offsets[v + 1] = g.offsets[v] + deg[v];
    g.neighbors.assign(g.offsets[V], 0);
    std::vector<int> fill(g.offsets.begin(), g.offsets.end() - 1);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            for (int b : B.entry(i, j).shifts)
                for (int s = 0; s < N; ++s) {
                    int check = i * N + s;
                    int var = g.check_count + j * N + (b + s) % N;
                    g.neighbors[fill[check]++] = var;
                    g.neighbors[fill[var]++] = check;
                }
    return g;
}

}  // namespace girthlab
