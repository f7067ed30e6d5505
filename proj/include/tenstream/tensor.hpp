#pragma once

// Dense and sampled multi-way array arithmetic, CP reconstruction,
// Khatri-Rao algebra, and the posterior-expectation kernels consumed by the
// inference updates. All index handling is 0-based; file formats convert at
// the I/O boundary.

#include <cstdint>
#include <span>
#include <vector>

#include "tenstream/errors.hpp"
#include "tenstream/mat.hpp"

namespace tenstream {

struct Shape {
    std::vector<int> dims;

    Shape() = default;
    explicit Shape(std::vector<int> d) : dims(std::move(d)) { validate(); }

    int order() const { return static_cast<int>(dims.size()); }

    std::int64_t elem_count() const {
        std::int64_t n = 1;
        for (int d : dims) n *= d;
        return n;
    }

    void validate() const {
        if (dims.empty()) throw DimensionError("Shape: order must be >= 1");
        for (int d : dims)
            if (d < 1) throw DimensionError("Shape: every mode size must be >= 1");
    }

    // Row-major linearization (last mode fastest).
    std::int64_t linear_index(std::span<const int> coords) const {
        std::int64_t idx = 0;
        for (std::size_t k = 0; k < dims.size(); ++k) {
            const int c = coords[k];
            if (c < 0 || c >= dims[k]) throw IndexError("coordinate out of range");
            idx = idx * dims[k] + c;
        }
        return idx;
    }

    bool operator==(const Shape& o) const { return dims == o.dims; }
};

struct EntryIndex {
    std::vector<int> coords;
};

struct DenseTensor {
    Shape shape;
    std::vector<double> values;  // row-major

    DenseTensor() = default;
    explicit DenseTensor(Shape s) : shape(std::move(s)), values(shape.elem_count(), 0.0) {}
    DenseTensor(Shape s, std::vector<double> v) : shape(std::move(s)), values(std::move(v)) {
        if (static_cast<std::int64_t>(values.size()) != shape.elem_count())
            throw DimensionError("DenseTensor: value count does not match shape");
    }

    double at(std::span<const int> coords) const { return values[shape.linear_index(coords)]; }
    double& at(std::span<const int> coords) { return values[shape.linear_index(coords)]; }
};

// A slice's observed index set with values. Coordinates are stored flat,
// order() ints per entry, in insertion order.
struct ObservationSet {
    Shape shape;
    std::vector<int> coords;    // entry_count * order
    std::vector<double> values;

    ObservationSet() = default;
    explicit ObservationSet(Shape s) : shape(std::move(s)) {}

    int order() const { return shape.order(); }
    std::int64_t entry_count() const { return static_cast<std::int64_t>(values.size()); }

    std::span<const int> entry_coords(std::int64_t e) const {
        return {coords.data() + e * order(), static_cast<std::size_t>(order())};
    }

    void add(std::span<const int> c, double v) {
        if (static_cast<int>(c.size()) != order())
            throw DimensionError("ObservationSet::add: coordinate arity mismatch");
        for (int k = 0; k < order(); ++k) {
            if (c[k] < 0 || c[k] >= shape.dims[k]) throw IndexError("ObservationSet::add: index out of range");
        }
        coords.insert(coords.end(), c.begin(), c.end());
        values.push_back(v);
    }

    // Full invariant check (duplicate detection is O(n) with hashing).
    void validate() const;

    bool operator==(const ObservationSet& o) const {
        return shape == o.shape && coords == o.coords && values == o.values;
    }
};

// Per-mode factor matrix posterior: row means and one covariance per row.
struct FactorPosterior {
    int mode = 0;        // 0..N-1 spatial, N temporal
    Mat means;           // rows x rank
    std::vector<Mat> covariances;  // rows entries, each rank x rank

    int rows() const { return means.rows(); }
    int rank() const { return means.cols(); }

    // Symmetry within 1e-10, positive definiteness, finite means.
    void validate() const;

    bool operator==(const FactorPosterior& o) const {
        return mode == o.mode && means == o.means && covariances == o.covariances;
    }
};

// --- Operations ------------------------------------------------------------

// Columnwise Kronecker product: column r of the result is a_r (x) b_r, with
// row (i*J + j) holding A(i,r)*B(j,r).
Mat khatri_rao(const Mat& a, const Mat& b);

// sum_i prod_k v_k[i] over vectors of a common length.
double generalized_inner_product(const std::vector<std::vector<double>>& vectors);

// Dense low-rank reconstruction from N spatial mean matrices plus one
// temporal matrix (the last element of `factors`), using row `time_row` of
// the temporal factor. Component weights are carried inside the columns.
DenseTensor cp_reconstruct(const std::vector<Mat>& factors, int time_row);

// Single reconstructed entry; `coords` has one row index per factor in
// `factors` (temporal slot included as the last coordinate).
double cp_entry(const std::vector<Mat>& factors, std::span<const int> coords);

double inner_product(const DenseTensor& a, const DenseTensor& b);
double frobenius_norm(const DenseTensor& x);

// Keeps exactly the entries of x listed in omega.
ObservationSet sampled_project(const DenseTensor& x, const std::vector<EntryIndex>& omega);

// Dense tensor equal to the observations on their index set and 0 elsewhere.
DenseTensor scatter_dense(const ObservationSet& obs);

// --- Posterior-expectation kernels ------------------------------------------

// E[a a^T] = mean outer product plus covariance for one factor row;
// writes rank*rank doubles into `out` (row-major).
void row_second_moment(const FactorPosterior& f, int row, double* out);

// Hadamard product over all modes j != excluded_mode of the posterior mean
// rows selected by `coords` (coords[j] indexes mode j's rows; the temporal
// slot is coords[N]). Equals the corresponding row of the expected excluded
// Khatri-Rao product since rows of distinct modes are independent under the
// factored posterior.
std::vector<double> expected_kr_row(const std::vector<FactorPosterior>& factors,
                                    std::span<const int> coords, int excluded_mode);

// Hadamard product over modes j != excluded_mode of (mean_row mean_row^T +
// covariance); the mean-field second moment of the excluded Khatri-Rao row.
// Symmetric positive semidefinite. Pass excluded_mode = -1 for the product
// over every mode (used by the noise-precision update).
Mat expected_row_outer(const std::vector<FactorPosterior>& factors,
                       std::span<const int> coords, int excluded_mode);

}  // namespace tenstream
