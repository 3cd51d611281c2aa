#include "trijack/planepart.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace trijack {

std::string Box::to_string() const {
    std::ostringstream os;
    os << "(" << x << "," << y << "," << z << ")";
    return os.str();
}

URational ModelConfig::phi_shifted(const Scalar& shift) const {
    std::map<Scalar, int> f;
    const Scalar hs[3] = {h1v, h2v, h3v()};
    for (const Scalar& h : hs) {
        f[shift - h] += 1; // zeros at shift - h_i
        f[shift + h] -= 1; // poles at shift + h_i
    }
    return URational::from_factors(Scalar(1), f);
}

URational ModelConfig::psi_vacuum() const {
    std::map<Scalar, int> f;
    f[-sigma3() * psi0()] += 1;
    f[Scalar(0)] -= 1;
    return URational::from_factors(Scalar(1), f);
}

PlanePartition::PlanePartition(std::vector<std::vector<int>> heights)
    : heights_(std::move(heights)) {
    for (auto& row : heights_)
        while (!row.empty() && row.back() == 0) row.pop_back();
    while (!heights_.empty() && heights_.back().empty()) heights_.pop_back();
    for (size_t i = 0; i < heights_.size(); ++i) {
        const auto& row = heights_[i];
        if (row.empty()) throw UsageError("plane partition with an embedded empty row");
        for (size_t j = 0; j < row.size(); ++j) {
            if (row[j] < 0) throw UsageError("negative height in plane partition");
            if (j + 1 < row.size() && row[j] < row[j + 1])
                throw UsageError("heights increase along a row");
            if (i + 1 < heights_.size() && j < heights_[i + 1].size() &&
                row[j] < heights_[i + 1][j])
                throw UsageError("heights increase along a column");
            size_ += row[j];
        }
    }
}

int PlanePartition::height_at(int i, int j) const {
    if (i < 0 || j < 0) return 0;
    if (static_cast<size_t>(i) >= heights_.size()) return 0;
    const auto& row = heights_[i];
    if (static_cast<size_t>(j) >= row.size()) return 0;
    return row[j];
}

int PlanePartition::max_height() const {
    return heights_.empty() || heights_[0].empty() ? 0 : heights_[0][0];
}

std::vector<Box> PlanePartition::boxes() const {
    std::vector<Box> out;
    out.reserve(size_);
    for (size_t i = 0; i < heights_.size(); ++i)
        for (size_t j = 0; j < heights_[i].size(); ++j)
            for (int z = 0; z < heights_[i][j]; ++z)
                out.push_back(Box{static_cast<int>(j), static_cast<int>(i), z});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Box> PlanePartition::addable(int N) const {
    std::vector<Box> out;
    int rows = static_cast<int>(heights_.size());
    for (int i = 0; i <= rows; ++i) {
        int cols = i < rows ? static_cast<int>(heights_[i].size()) : 0;
        for (int j = 0; j <= cols; ++j) {
            int h = height_at(i, j);
            int capN = (i == 0 ? N : height_at(i - 1, j));
            int capW = (j == 0 ? N : height_at(i, j - 1));
            if (h + 1 <= std::min({capN, capW, N}))
                out.push_back(Box{j, i, h});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Box> PlanePartition::removable() const {
    std::vector<Box> out;
    for (size_t i = 0; i < heights_.size(); ++i)
        for (size_t j = 0; j < heights_[i].size(); ++j) {
            int h = heights_[i][j];
            if (h > 0 && h > height_at(i + 1, j) && h > height_at(i, j + 1))
                out.push_back(Box{static_cast<int>(j), static_cast<int>(i), h - 1});
        }
    std::sort(out.begin(), out.end());
    return out;
}

bool PlanePartition::contains(const Box& b) const {
    return b.z >= 0 && b.z < height_at(b.y, b.x);
}

PlanePartition PlanePartition::with_box(const Box& b) const {
    if (height_at(b.y, b.x) != b.z)
        throw UsageError("box " + b.to_string() + " is not on top of its column");
    auto h = heights_;
    if (static_cast<size_t>(b.y) >= h.size()) h.resize(b.y + 1);
    if (static_cast<size_t>(b.x) >= h[b.y].size()) h[b.y].resize(b.x + 1, 0);
    h[b.y][b.x] += 1;
    return PlanePartition(h);
}

PlanePartition PlanePartition::without_box(const Box& b) const {
    if (height_at(b.y, b.x) != b.z + 1)
        throw UsageError("box " + b.to_string() + " is not the top of its column");
    auto h = heights_;
    h[b.y][b.x] -= 1;
    return PlanePartition(h);
}

Box PlanePartition::canonical_removable() const {
    auto rem = removable();
    if (rem.empty()) throw UsageError("empty partition has no removable box");
    return rem.back();
}

std::string PlanePartition::to_string() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < heights_.size(); ++i) {
        if (i) os << ",";
        os << "[";
        for (size_t j = 0; j < heights_[i].size(); ++j) {
            if (j) os << ",";
            os << heights_[i][j];
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

PlanePartition PlanePartition::parse(const std::string& s) {
    std::vector<std::vector<int>> rows;
    size_t i = 0;
    auto skip = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    auto expect = [&](char c) {
        skip();
        if (i >= s.size() || s[i] != c)
            throw UsageError("cannot parse plane partition '" + s + "'");
        ++i;
    };
    expect('[');
    skip();
    while (i < s.size() && s[i] != ']') {
        expect('[');
        std::vector<int> row;
        skip();
        while (i < s.size() && s[i] != ']') {
            size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j == i) throw UsageError("cannot parse plane partition '" + s + "'");
            row.push_back(std::stoi(s.substr(i, j - i)));
            i = j;
            skip();
            if (i < s.size() && s[i] == ',') {
                ++i;
                skip();
            }
        }
        expect(']');
        rows.push_back(std::move(row));
        skip();
        if (i < s.size() && s[i] == ',') {
            ++i;
            skip();
        }
    }
    expect(']');
    return PlanePartition(rows);
}

bool operator<(const PlanePartition& a, const PlanePartition& b) {
    if (a.size_ != b.size_) return a.size_ < b.size_;
    return a.heights_ < b.heights_;
}

std::vector<PlanePartition> enumerate_partitions(int n, int N) {
    if (n < 0) throw UsageError("negative box count");
    std::set<PlanePartition> cur{PlanePartition::empty()};
    for (int level = 0; level < n; ++level) {
        std::set<PlanePartition> next;
        for (const auto& p : cur)
            for (const auto& b : p.addable(N)) next.insert(p.with_box(b));
        cur = std::move(next);
    }
    return std::vector<PlanePartition>(cur.begin(), cur.end());
}

URational psi_pi(const PlanePartition& pi, const ModelConfig& cfg) {
    URational f = cfg.psi_vacuum();
    for (const Box& b : pi.boxes()) f = f * cfg.phi_shifted(cfg.content(b));
    return f;
}

Scalar psi_eigenvalue(const PlanePartition& pi, int j, const ModelConfig& cfg) {
    auto coeffs = psi_pi(pi, cfg).series_at_infinity(j + 1);
    return coeffs[j] / cfg.sigma3();
}

Scalar amp_sq(const PlanePartition& pi, const Box& b, const ModelConfig& cfg) {
    auto add = pi.addable(cfg.N);
    if (std::find(add.begin(), add.end(), b) == add.end())
        throw UsageError("box " + b.to_string() + " is not addable to " + pi.to_string());
    URational f = psi_pi(pi, cfg);
    Scalar h = cfg.content(b);
    int m = f.multiplicity(h);
    if (m != -1)
        throw ConsistencyError("expected a simple pole at the content of " + b.to_string() +
                               ", found multiplicity " + std::to_string(m));
    return f.residue_at(h) / cfg.sigma3();
}

} // namespace trijack
