#include "nulldecomp/exact_linalg.hpp"

#include <algorithm>
#include <numeric>

namespace nulldecomp {

RationalVector::RationalVector(const std::vector<int>& labels) {
    for (int l : labels) entries_[l] = 0;
}

Rational RationalVector::at(int label) const {
    auto it = entries_.find(label);
    return it == entries_.end() ? Rational(0) : it->second;
}

void RationalVector::set(int label, const Rational& value) { entries_[label] = value; }

std::vector<int> RationalVector::labels() const {
    std::vector<int> out;
    out.reserve(entries_.size());
    for (const auto& [l, _] : entries_) out.push_back(l);
    return out;
}

VertexSet RationalVector::support() const {
    VertexSet out;
    for (const auto& [l, q] : entries_)
        if (q != 0) out.insert(l);
    return out;
}

bool RationalVector::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const auto& e) { return e.second == 0; });
}

RationalMatrix::RationalMatrix(std::vector<int> row_labels, std::vector<int> col_labels)
    : row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)),
      a_(row_labels_.size() * col_labels_.size(), Rational(0)) {}

RationalMatrix adjacency_matrix(const Graph& g, const std::vector<int>& order) {
    std::vector<int> sorted_order = order;
    std::sort(sorted_order.begin(), sorted_order.end());
    if (sorted_order != g.vertices() ||
        VertexSet(order.begin(), order.end()).size() != order.size())
        throw std::invalid_argument("order is not a permutation of V(g)");
    RationalMatrix a(order, order);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (g.has_edge(order[i], order[j])) a.at(i, j) = 1;
    return a;
}

namespace {

// In-place forward elimination to row echelon form. Returns the pivot column
// of each eliminated row.
std::vector<int> echelonize(RationalMatrix& m) {
    std::vector<int> pivot_cols;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int pivot = -1;
        for (int r = row; r < m.rows(); ++r)
            if (m.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int c = 0; c < m.cols(); ++c) std::swap(m.at(pivot, c), m.at(row, c));
        for (int r = row + 1; r < m.rows(); ++r) {
            if (m.at(r, col) == 0) continue;
            Rational f = m.at(r, col) / m.at(row, col);
            for (int c = col; c < m.cols(); ++c) m.at(r, c) -= f * m.at(row, c);
        }
        pivot_cols.push_back(col);
        ++row;
    }
    return pivot_cols;
}

// Full RREF: echelon form, then back-substitution and pivot normalization.
std::vector<int> reduce(RationalMatrix& m) {
    std::vector<int> pivot_cols = echelonize(m);
    for (int row = static_cast<int>(pivot_cols.size()) - 1; row >= 0; --row) {
        int col = pivot_cols[row];
        Rational p = m.at(row, col);
        for (int c = col; c < m.cols(); ++c) m.at(row, c) /= p;
        for (int r = 0; r < row; ++r) {
            Rational f = m.at(r, col);
            if (f == 0) continue;
            for (int c = col; c < m.cols(); ++c) m.at(r, c) -= f * m.at(row, c);
        }
    }
    return pivot_cols;
}

// Scale to coprime integer entries with positive first nonzero entry.
void canonicalize(RationalVector& v) {
    mpz_class denom_lcm = 1;
    for (const auto& [l, q] : v.entries())
        if (q != 0) mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(),
                            q.get_den().get_mpz_t());
    mpz_class num_gcd = 0;
    for (const auto& [l, q] : v.entries()) {
        if (q == 0) continue;
        mpz_class scaled = q.get_num() * (denom_lcm / q.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    }
    if (num_gcd == 0) return;
    Rational factor(denom_lcm, num_gcd);
    factor.canonicalize();
    for (const auto& [l, q] : v.entries()) {
        if (q != 0) {
            if (sgn(q * factor) < 0) factor = -factor;
            break;
        }
    }
    for (int l : v.labels()) v.set(l, v.at(l) * factor);
}

}  // namespace

RationalVector solve(const RationalMatrix& a, const RationalVector& b) {
    if (a.rows() != a.cols()) throw std::invalid_argument("solve needs a square matrix");
    const int n = a.rows();
    RationalMatrix aug(a.row_labels(), a.col_labels());
    std::vector<Rational> rhs(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        rhs[i] = b.at(a.row_labels()[i]);
    }
    // eliminate with the rhs carried along
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (aug.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw std::domain_error("singular matrix");
        if (pivot != col) {
            for (int c = 0; c < n; ++c) std::swap(aug.at(pivot, c), aug.at(col, c));
            std::swap(rhs[pivot], rhs[col]);
        }
        for (int r = col + 1; r < n; ++r) {
            if (aug.at(r, col) == 0) continue;
            Rational f = aug.at(r, col) / aug.at(col, col);
            for (int c = col; c < n; ++c) aug.at(r, c) -= f * aug.at(col, c);
            rhs[r] -= f * rhs[col];
        }
    }
    RationalVector x(a.col_labels());
    for (int row = n - 1; row >= 0; --row) {
        Rational acc = rhs[row];
        for (int c = row + 1; c < n; ++c) acc -= aug.at(row, c) * x.at(a.col_labels()[c]);
        x.set(a.col_labels()[row], acc / aug.at(row, row));
    }
    return x;
}

std::vector<RationalVector> nullspace_basis(const RationalMatrix& a) {
    RationalMatrix m = a;
    std::vector<int> pivot_cols = reduce(m);
    std::vector<bool> is_pivot(a.cols(), false);
    for (int c : pivot_cols) is_pivot[c] = true;

    std::vector<RationalVector> basis;
    for (int free_col = 0; free_col < a.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        RationalVector v(a.col_labels());
        v.set(a.col_labels()[free_col], 1);
        for (std::size_t row = 0; row < pivot_cols.size(); ++row)
            v.set(a.col_labels()[pivot_cols[row]], -m.at(static_cast<int>(row), free_col));
        canonicalize(v);
        basis.push_back(v);
    }
    return basis;
}

int rank(const RationalMatrix& a) {
    RationalMatrix m = a;
    return static_cast<int>(echelonize(m).size());
}

std::array<long long, 3> inertia_algebraic(const RationalMatrix& a) {
    const int n = a.rows();
    if (n != a.cols() || a.row_labels() != a.col_labels())
        throw std::invalid_argument("inertia needs a square labeled adjacency matrix");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        if (a.at(i, i) != 0) throw std::invalid_argument("nonzero diagonal entry");
        for (int j = i + 1; j < n; ++j) {
            if (a.at(i, j) != a.at(j, i)) throw std::invalid_argument("matrix not symmetric");
            if (a.at(i, j) == 1)
                edges.emplace_back(std::min(a.row_labels()[i], a.row_labels()[j]),
                                   std::max(a.row_labels()[i], a.row_labels()[j]));
            else if (a.at(i, j) != 0)
                throw std::invalid_argument("entry outside {0,1}");
        }
    }
    Graph g = Graph::from_edge_list(a.row_labels(), edges);
    if (std::holds_alternative<CycleWitness>(bipartition(g)))
        throw std::invalid_argument("inertia shortcut requires a bipartite adjacency matrix");
    long long r = rank(a);
    return {r / 2, n - r, r / 2};
}

RationalVector multiply(const RationalMatrix& a, const RationalVector& x) {
    RationalVector out(a.row_labels());
    for (int i = 0; i < a.rows(); ++i) {
        Rational acc = 0;
        for (int j = 0; j < a.cols(); ++j) {
            const Rational& e = a.at(i, j);
            if (e != 0) acc += e * x.at(a.col_labels()[j]);
        }
        out.set(a.row_labels()[i], acc);
    }
    return out;
}

bool in_span(const std::vector<RationalVector>& basis, const RationalVector& w) {
    VertexSet label_set(w.support());
    for (const auto& v : basis)
        for (int l : v.support()) label_set.insert(l);
    std::vector<int> labels(label_set.begin(), label_set.end());
    std::vector<int> cols(basis.size());
    std::iota(cols.begin(), cols.end(), 0);

    RationalMatrix b(labels, cols);
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < labels.size(); ++i)
            b.at(static_cast<int>(i), static_cast<int>(j)) = basis[j].at(labels[i]);

    std::vector<int> aug_cols = cols;
    aug_cols.push_back(static_cast<int>(basis.size()));
    RationalMatrix aug(labels, aug_cols);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        for (std::size_t j = 0; j < basis.size(); ++j)
            aug.at(static_cast<int>(i), static_cast<int>(j)) = basis[j].at(labels[i]);
        aug.at(static_cast<int>(i), static_cast<int>(basis.size())) = w.at(labels[i]);
    }
    return rank(b) == rank(aug);
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

}  // namespace nulldecomp
