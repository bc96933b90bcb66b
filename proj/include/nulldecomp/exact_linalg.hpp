#ifndef NULLDECOMP_EXACT_LINALG_HPP
#define NULLDECOMP_EXACT_LINALG_HPP

#include <gmpxx.h>

#include <array>
#include <map>
#include <string>
#include <vector>

#include "nulldecomp/graph.hpp"

namespace nulldecomp {

using Rational = mpq_class;

/// Exact rational vector with vertex labels as coordinates. Every label of the
/// vector's space is stored explicitly, zeros included, so the domain is part
/// of the value.
class RationalVector {
public:
    RationalVector() = default;
    explicit RationalVector(const std::vector<int>& labels);

    Rational at(int label) const;  // 0 for labels outside the domain
    void set(int label, const Rational& value);
    bool has_label(int label) const { return entries_.count(label) > 0; }
    std::vector<int> labels() const;
    VertexSet support() const;
    bool is_zero() const;

    const std::map<int, Rational>& entries() const { return entries_; }

    bool operator==(const RationalVector&) const = default;

private:
    std::map<int, Rational> entries_;
};

/// Dense exact rational matrix with labeled rows and columns.
class RationalMatrix {
public:
    RationalMatrix(std::vector<int> row_labels, std::vector<int> col_labels);

    int rows() const { return static_cast<int>(row_labels_.size()); }
    int cols() const { return static_cast<int>(col_labels_.size()); }
    Rational& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols() + j]; }
    const Rational& at(int i, int j) const {
        return a_[static_cast<std::size_t>(i) * cols() + j];
    }
    const std::vector<int>& row_labels() const { return row_labels_; }
    const std::vector<int>& col_labels() const { return col_labels_; }

private:
    std::vector<int> row_labels_, col_labels_;
    std::vector<Rational> a_;
};

/// Symmetric 0/1 adjacency matrix in the given vertex order.
RationalMatrix adjacency_matrix(const Graph& g, const std::vector<int>& order);

/// Exact solution of a·x = b for square nonsingular a (Gaussian elimination,
/// first-nonzero pivoting). b is keyed by row labels, the result by column
/// labels. Throws on singular a.
RationalVector solve(const RationalMatrix& a, const RationalVector& b);

/// Canonical exact null-space basis via reduced row echelon form: one vector
/// per free column, scaled to coprime integers with positive leading entry.
std::vector<RationalVector> nullspace_basis(const RationalMatrix& a);

int rank(const RationalMatrix& a);

/// Inertia (negative, zero, positive) of a bipartite adjacency matrix, read
/// off the rank: bipartite spectra are symmetric about 0, so the nonzero
/// eigenvalues split evenly. Throws unless a is a bipartite 0/1 adjacency
/// matrix (the shortcut is invalid otherwise).
std::array<long long, 3> inertia_algebraic(const RationalMatrix& a);

RationalVector multiply(const RationalMatrix& a, const RationalVector& x);

/// True when w lies in the exact span of the given vectors.
bool in_span(const std::vector<RationalVector>& basis, const RationalVector& w);

std::string rational_to_string(const Rational& q);  // "p/q", "/q" omitted when q = 1

}  // namespace nulldecomp

#endif
