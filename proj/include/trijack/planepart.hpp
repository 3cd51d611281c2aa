#ifndef TRIJACK_PLANEPART_HPP
#define TRIJACK_PLANEPART_HPP

#include <string>
#include <vector>

#include "trijack/urational.hpp"

namespace trijack {

// Box of a 3D Young diagram, zero-based, with the first box at the origin.
struct Box {
    int x = 0, y = 0, z = 0;

    friend bool operator==(const Box& a, const Box& b) {
        return a.x == b.x && a.y == b.y && a.z == b.z;
    }
    // (z,y,x) lexicographic; the canonical growth order peels the largest.
    friend bool operator<(const Box& a, const Box& b) {
        if (a.z != b.z) return a.z < b.z;
        if (a.y != b.y) return a.y < b.y;
        return a.x < b.x;
    }
    std::string to_string() const;
};

// Model parameters: the layer bound N and the values taken by h1 and h2.
// In symbolic mode the values are the generators themselves; probe mode
// substitutes exact rationals (or rational functions such as -N/h1).
// psi0 is always -N/(h1 h2).
struct ModelConfig {
    int N = 3;
    Scalar h1v = Scalar::h1();
    Scalar h2v = Scalar::h2();

    static ModelConfig symbolic(int N) { return ModelConfig{N}; }
    static ModelConfig probe(int N, const mpq_class& a, const mpq_class& b) {
        return ModelConfig{N, Scalar(a), Scalar(b)};
    }
    // h2 = -N/h1 keeps psi0 = 1 with h1 left free.
    static ModelConfig psi0_one(int N) {
        return ModelConfig{N, Scalar::h1(), Scalar(-N) / Scalar::h1()};
    }
    static ModelConfig psi0_one_probe(int N, const mpq_class& a) {
        return ModelConfig{N, Scalar(a), Scalar(-N) / Scalar(a)};
    }

    Scalar h3v() const { return -h1v - h2v; }
    Scalar sigma2() const { return h1v * h2v + (h1v + h2v) * h3v(); }
    Scalar sigma3() const { return h1v * h2v * h3v(); }
    Scalar psi0() const { return Scalar(-N) / (h1v * h2v); }
    Scalar alpha0() const { return -h3v() / (h1v * h2v); }

    // h_box = h1 y + h2 x + h3 z
    Scalar content(const Box& b) const {
        return Scalar(b.y) * h1v + Scalar(b.x) * h2v + Scalar(b.z) * h3v();
    }
    // phi(u - shift) as a factored rational function of u.
    URational phi_shifted(const Scalar& shift) const;
    // psi_0(u) = (u + sigma3 psi0)/u.
    URational psi_vacuum() const;
};

// Plane partition: matrix of non-negative column heights, nonincreasing
// along rows and columns, trailing zeros trimmed.  The z-axis bound N is
// not stored; operations that need it take it from a ModelConfig.
class PlanePartition {
public:
    PlanePartition() = default;
    explicit PlanePartition(std::vector<std::vector<int>> heights);

    static PlanePartition empty() { return PlanePartition(); }
    static PlanePartition single() { return PlanePartition({{1}}); }

    const std::vector<std::vector<int>>& heights() const { return heights_; }
    int size() const { return size_; }
    bool is_empty() const { return heights_.empty(); }
    int height_at(int i, int j) const; // 0 outside the support
    int max_height() const;

    std::vector<Box> boxes() const; // sorted by (z,y,x)
    std::vector<Box> addable(int N) const;
    std::vector<Box> removable() const;
    bool contains(const Box& b) const;

    PlanePartition with_box(const Box& b) const;    // must be addable
    PlanePartition without_box(const Box& b) const; // must be removable

    // Largest removable box in (z,y,x) order; the canonical growth
    // sequence of a diagram removes it repeatedly.
    Box canonical_removable() const;
    PlanePartition predecessor() const { return without_box(canonical_removable()); }

    // Matrix notation, e.g. "[[1,1]]".
    std::string to_string() const;
    static PlanePartition parse(const std::string& s);

    friend bool operator==(const PlanePartition& a, const PlanePartition& b) {
        return a.heights_ == b.heights_;
    }
    friend bool operator!=(const PlanePartition& a, const PlanePartition& b) {
        return !(a == b);
    }
    // Graded by size, then lexicographic on the flattened height matrix.
    friend bool operator<(const PlanePartition& a, const PlanePartition& b);

private:
    std::vector<std::vector<int>> heights_;
    int size_ = 0;
};

// All plane partitions of n boxes with heights <= N, in the canonical
// order defined by PlanePartition::operator<.
std::vector<PlanePartition> enumerate_partitions(int n, int N);

// psi_pi(u) = psi_0(u) prod_{box} phi(u - h_box), fully cancelled.
URational psi_pi(const PlanePartition& pi, const ModelConfig& cfg);

// Eigenvalue psi_j(pi): coefficient of u^-(j+1) in psi_pi divided by sigma3.
Scalar psi_eigenvalue(const PlanePartition& pi, int j, const ModelConfig& cfg);

// E^2 = F^2 for the transition pi -> pi + b:
// (1/sigma3) res_{u -> h_b} psi_pi(u).  b must be addable.
Scalar amp_sq(const PlanePartition& pi, const Box& b, const ModelConfig& cfg);

} // namespace trijack

#endif
