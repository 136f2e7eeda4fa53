#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "fqgeom/linalg.hpp"

namespace fqgeom {

/// Subset of F_q^d as a dense bit-vector over point indices. The index of a
/// point is its base-q little-endian encoding (coordinate 0 is the least
/// significant digit); every module in the repo uses this one indexing.
class PointSet {
public:
    PointSet(PrimeField f, uint32_t dim);

    const PrimeField& field() const { return f_; }
    uint32_t dim() const { return dim_; }
    uint64_t universe_size() const { return n_; }

    uint64_t encode(const Vec& p) const;
    Vec decode(uint64_t idx) const;

    bool contains(uint64_t idx) const { return (words_[idx >> 6] >> (idx & 63)) & 1; }
    bool contains(const Vec& p) const { return contains(encode(p)); }
    void insert(uint64_t idx) { words_[idx >> 6] |= (uint64_t{1} << (idx & 63)); }
    void insert(const Vec& p) { insert(encode(p)); }
    void erase(uint64_t idx) { words_[idx >> 6] &= ~(uint64_t{1} << (idx & 63)); }

    uint64_t size() const;

    /// Set-bit indices in ascending order.
    std::vector<uint64_t> indices() const;
    /// Decoded points in ascending index order.
    std::vector<Vec> points() const;

    /// { -x : x in this }.
    PointSet negated() const;
    PointSet intersect(const PointSet& o) const;

    static PointSet full(PrimeField f, uint32_t dim);
    static PointSet of_points(PrimeField f, uint32_t dim, const std::vector<Vec>& pts);

    bool operator==(const PointSet& o) const {
        return f_ == o.f_ && dim_ == o.dim_ && words_ == o.words_;
    }

    // --- file formats (shared repo-wide) ---
    // Text: header line "q d", then one point per line as d space-separated
    // residues; blank lines and '#' comments ignored.
    // JSON: {"q": ..., "d": ..., "points": [[...], ...]}.
    static PointSet read_text(std::istream& in);
    static PointSet read_json(std::istream& in);
    /// Dispatch on extension: ".json" -> JSON, anything else -> text.
    static PointSet load(const std::string& path);
    void write_text(std::ostream& out) const;
    void write_json(std::ostream& out) const;
    void save(const std::string& path) const;

private:
    PrimeField f_;
    uint32_t dim_;
    uint64_t n_;
    std::vector<uint64_t> words_;
};

}  // namespace fqgeom
