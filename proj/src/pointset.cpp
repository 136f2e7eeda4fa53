#include "fqgeom/pointset.hpp"

#include <bit>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace fqgeom {

namespace {
constexpr uint64_t kUniverseCap = uint64_t{1} << 28;
}

PointSet::PointSet(PrimeField f, uint32_t dim) : f_(f), dim_(dim) {
    if (dim == 0) throw Error("PointSet: dimension must be positive");
    uint64_t n = 1;
    for (uint32_t i = 0; i < dim; ++i) {
        n *= f.q();
        if (n > kUniverseCap) throw Error("PointSet: q^d exceeds the enumeration budget");
    }
    n_ = n;
    words_.assign((n + 63) / 64, 0);
}

uint64_t PointSet::encode(const Vec& p) const {
    uint64_t idx = 0;
    for (uint32_t i = dim_; i-- > 0;) idx = idx * f_.q() + p[i];
    return idx;
}

Vec PointSet::decode(uint64_t idx) const {
    Vec p(dim_);
    for (uint32_t i = 0; i < dim_; ++i) {
        p[i] = static_cast<uint32_t>(idx % f_.q());
        idx /= f_.q();
    }
    return p;
}

uint64_t PointSet::size() const {
    uint64_t c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
}

std::vector<uint64_t> PointSet::indices() const {
    std::vector<uint64_t> out;
    out.reserve(size());
    for (uint64_t wi = 0; wi < words_.size(); ++wi) {
        uint64_t w = words_[wi];
        while (w) {
            out.push_back(wi * 64 + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return out;
}

std::vector<Vec> PointSet::points() const {
    std::vector<Vec> out;
    out.reserve(size());
    for (uint64_t idx : indices()) out.push_back(decode(idx));
    return out;
}

PointSet PointSet::negated() const {
    PointSet r(f_, dim_);
    for (uint64_t idx : indices()) r.insert(vec_neg(f_, decode(idx)));
    return r;
}

PointSet PointSet::intersect(const PointSet& o) const {
    if (!(f_ == o.f_) || dim_ != o.dim_) throw Error("intersect: mismatched spaces");
    PointSet r(f_, dim_);
    for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
    return r;
}

PointSet PointSet::full(PrimeField f, uint32_t dim) {
    PointSet r(f, dim);
    for (uint64_t i = 0; i < r.n_; ++i) r.insert(i);
    return r;
}

PointSet PointSet::of_points(PrimeField f, uint32_t dim, const std::vector<Vec>& pts) {
    PointSet r(f, dim);
    for (const Vec& p : pts) r.insert(p);
    return r;
}

PointSet PointSet::read_text(std::istream& in) {
    std::string line;
    size_t lineno = 0;
    uint64_t q = 0;
    uint32_t d = 0;
    bool have_header = false;
    std::vector<Vec> pts;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<int64_t> vals;
        int64_t v;
        while (ls >> v) vals.push_back(v);
        if (!ls.eof()) throw ParseError("line " + std::to_string(lineno) + ": not an integer");
        if (vals.empty()) continue;
        if (!have_header) {
            if (vals.size() != 2 || vals[0] < 3 || vals[1] < 1)
                throw ParseError("line " + std::to_string(lineno) + ": expected header 'q d'");
            q = static_cast<uint64_t>(vals[0]);
            d = static_cast<uint32_t>(vals[1]);
            have_header = true;
            continue;
        }
        if (vals.size() != d)
            throw ParseError("line " + std::to_string(lineno) + ": expected " + std::to_string(d) +
                             " coordinates, got " + std::to_string(vals.size()));
        Vec p(d);
        for (uint32_t i = 0; i < d; ++i) {
            if (vals[i] < 0 || vals[i] >= static_cast<int64_t>(q))
                throw ParseError("line " + std::to_string(lineno) + ": coordinate " +
                                 std::to_string(vals[i]) + " out of range for q=" + std::to_string(q));
            p[i] = static_cast<uint32_t>(vals[i]);
        }
        pts.push_back(std::move(p));
    }
    if (!have_header) throw ParseError("missing 'q d' header");
    PrimeField f(q);
    return of_points(f, d, pts);
}

PointSet PointSet::read_json(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
    if (!j.contains("q") || !j.contains("d") || !j.contains("points"))
        throw ParseError("JSON point set needs fields q, d, points");
    uint64_t q = j["q"].get<uint64_t>();
    uint32_t d = j["d"].get<uint32_t>();
    PrimeField f(q);
    std::vector<Vec> pts;
    for (const auto& jp : j["points"]) {
        if (jp.size() != d) throw ParseError("JSON point with wrong arity");
        Vec p(d);
        for (uint32_t i = 0; i < d; ++i) {
            int64_t v = jp[i].get<int64_t>();
            if (v < 0 || v >= static_cast<int64_t>(q))
                throw ParseError("JSON coordinate " + std::to_string(v) + " out of range for q=" +
                                 std::to_string(q));
            p[i] = static_cast<uint32_t>(v);
        }
        pts.push_back(std::move(p));
    }
    return of_points(f, d, pts);
}

PointSet PointSet::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") return read_json(in);
    return read_text(in);
}

void PointSet::write_text(std::ostream& out) const {
    out << f_.q() << ' ' << dim_ << '\n';
    for (const Vec& p : points()) {
        for (uint32_t i = 0; i < dim_; ++i) out << (i ? " " : "") << p[i];
        out << '\n';
    }
}

void PointSet::write_json(std::ostream& out) const {
    nlohmann::json j;
    j["q"] = f_.q();
    j["d"] = dim_;
    auto arr = nlohmann::json::array();
    for (const Vec& p : points()) arr.push_back(p);
    j["points"] = std::move(arr);
    out << j.dump(2) << '\n';
}

void PointSet::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
        write_json(out);
    else
        write_text(out);
}

}  // namespace fqgeom
