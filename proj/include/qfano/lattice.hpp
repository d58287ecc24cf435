#pragma once

// Exact integer intersection theory on finitely generated Picard lattices.
//
// A lattice is a free abelian group with a symmetric integer Gram matrix, a
// distinguished polarization class H and a canonical class K.  Divisor classes
// are integer coordinate vectors; all pairings are evaluated exactly in 64-bit
// arithmetic with overflow checks (coordinates in this project stay tiny, so
// an overflow is a bug, not a request for bignums).

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qfano {

using Int = std::int64_t;

struct LatticeMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// D.(D+K) must be even on every lattice built here; a violation means the
// lattice data is corrupt.
struct ParityError : std::logic_error {
    using std::logic_error::logic_error;
};

struct ArithmeticOverflow : std::overflow_error {
    using std::overflow_error::overflow_error;
};

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw ArithmeticOverflow("int64 overflow in lattice arithmetic");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw ArithmeticOverflow("int64 overflow in lattice arithmetic");
    return r;
}

class DivisorClass;

// Immutable value type; cheap to copy (shared, never mutated after build).
// Identity is structural: two lattices agree iff Gram matrix and basis labels
// agree.  The display name is cosmetic and excluded from equality.
class IntersectionLattice {
public:
    IntersectionLattice(std::string name,
                        std::vector<std::string> basis_labels,
                        std::vector<Int> gram_row_major,
                        std::vector<Int> h_coords,
                        std::vector<Int> k_coords)
        : data_(std::make_shared<const Data>(Data{
              std::move(name), std::move(basis_labels), std::move(gram_row_major),
              std::move(h_coords), std::move(k_coords)})) {
        const auto& d = *data_;
        const std::size_t r = d.labels.size();
        if (r == 0 || d.gram.size() != r * r || d.h.size() != r || d.k.size() != r)
            throw std::invalid_argument("inconsistent lattice dimensions");
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (d.gram[i * r + j] != d.gram[j * r + i])
                    throw std::invalid_argument("Gram matrix is not symmetric");
        // polarization is positive: H.H > 0
        Int hh = 0;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j)
                hh = checked_add(hh, checked_mul(d.h[i], checked_mul(d.gram[i * r + j], d.h[j])));
        if (hh <= 0) throw std::invalid_argument("polarization must have positive square");
    }

    int rank() const { return static_cast<int>(data_->labels.size()); }
    Int gram(int i, int j) const { return data_->gram[static_cast<std::size_t>(i) * rank() + j]; }
    const std::vector<std::string>& basis_labels() const { return data_->labels; }
    const std::string& name() const { return data_->name; }

    bool same_structure(const IntersectionLattice& other) const {
        if (data_ == other.data_) return true;
        return data_->gram == other.data_->gram && data_->labels == other.data_->labels;
    }

    DivisorClass divisor(std::vector<Int> coords) const;
    DivisorClass basis(int i) const;
    DivisorClass zero() const;
    DivisorClass H() const;  // polarization
    DivisorClass K() const;  // canonical class

    friend bool operator==(const IntersectionLattice& a, const IntersectionLattice& b) {
        return a.same_structure(b);
    }
    friend bool operator!=(const IntersectionLattice& a, const IntersectionLattice& b) {
        return !(a == b);
    }

private:
    struct Data {
        std::string name;
        std::vector<std::string> labels;
        std::vector<Int> gram;  // rank x rank, row major
        std::vector<Int> h;
        std::vector<Int> k;
    };
    std::shared_ptr<const Data> data_;

    friend class DivisorClass;
    const Data& raw() const { return *data_; }
};

class DivisorClass {
public:
    DivisorClass(IntersectionLattice lattice, std::vector<Int> coords)
        : lattice_(std::move(lattice)), coords_(std::move(coords)) {
        if (static_cast<int>(coords_.size()) != lattice_.rank())
            throw std::invalid_argument("coordinate length does not match lattice rank");
    }

    const IntersectionLattice& lattice() const { return lattice_; }
    const std::vector<Int>& coords() const { return coords_; }
    Int coord(int i) const { return coords_[static_cast<std::size_t>(i)]; }
    int rank() const { return lattice_.rank(); }

    bool is_zero() const {
        for (Int c : coords_)
            if (c != 0) return false;
        return true;
    }

    DivisorClass operator+(const DivisorClass& other) const {
        require_same_lattice(other);
        std::vector<Int> c(coords_);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked_add(c[i], other.coords_[i]);
        return DivisorClass(lattice_, std::move(c));
    }

    DivisorClass operator-(const DivisorClass& other) const {
        require_same_lattice(other);
        std::vector<Int> c(coords_);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked_add(c[i], -other.coords_[i]);
        return DivisorClass(lattice_, std::move(c));
    }

    DivisorClass operator-() const {
        std::vector<Int> c(coords_);
        for (Int& x : c) x = -x;
        return DivisorClass(lattice_, std::move(c));
    }

    friend DivisorClass operator*(Int s, const DivisorClass& d) {
        std::vector<Int> c(d.coords_);
        for (Int& x : c) x = checked_mul(s, x);
        return DivisorClass(d.lattice_, std::move(c));
    }

    friend bool operator==(const DivisorClass& a, const DivisorClass& b) {
        return a.lattice_.same_structure(b.lattice_) && a.coords_ == b.coords_;
    }
    friend bool operator!=(const DivisorClass& a, const DivisorClass& b) { return !(a == b); }

    void require_same_lattice(const DivisorClass& other) const {
        if (!lattice_.same_structure(other.lattice_))
            throw LatticeMismatchError("divisor classes live on different lattices");
    }

private:
    IntersectionLattice lattice_;
    std::vector<Int> coords_;
};

inline DivisorClass IntersectionLattice::divisor(std::vector<Int> coords) const {
    return DivisorClass(*this, std::move(coords));
}

inline DivisorClass IntersectionLattice::basis(int i) const {
    std::vector<Int> c(static_cast<std::size_t>(rank()), 0);
    c[static_cast<std::size_t>(i)] = 1;
    return DivisorClass(*this, std::move(c));
}

inline DivisorClass IntersectionLattice::zero() const {
    return DivisorClass(*this, std::vector<Int>(static_cast<std::size_t>(rank()), 0));
}

inline DivisorClass IntersectionLattice::H() const { return DivisorClass(*this, data_->h); }
inline DivisorClass IntersectionLattice::K() const { return DivisorClass(*this, data_->k); }

// Bilinear pairing v^T G w.
inline Int intersect(const DivisorClass& a, const DivisorClass& b) {
    a.require_same_lattice(b);
    const int r = a.rank();
    Int acc = 0;
    for (int i = 0; i < r; ++i) {
        if (a.coord(i) == 0) continue;
        Int row = 0;
        for (int j = 0; j < r; ++j)
            row = checked_add(row, checked_mul(a.lattice().gram(i, j), b.coord(j)));
        acc = checked_add(acc, checked_mul(a.coord(i), row));
    }
    return acc;
}

inline Int degree(const DivisorClass& d) { return intersect(d.lattice().H(), d); }

// Arithmetic genus: 2p_a(D) - 2 = D.(D + K).
inline Int genus(const DivisorClass& d) {
    const Int v = intersect(d, d + d.lattice().K());
    if (v % 2 != 0) throw ParityError("D.(D+K) is odd: malformed lattice");
    return v / 2 + 1;
}

// p_a(D + D') = p_a(D) + p_a(D') + D.D' - 1.
inline Int union_genus(const DivisorClass& a, const DivisorClass& b) {
    a.require_same_lattice(b);
    return genus(a) + genus(b) + intersect(a, b) - 1;
}

// --- surface lattice constructors ------------------------------------------

// Sextic K3 with Pic = ZH, H^2 = 6, K = 0.
inline IntersectionLattice make_k3_rank1() {
    return IntersectionLattice("K3 sextic rank 1", {"H"}, {6}, {1}, {0});
}

// Pic = ZH + ZC with H^2 = 6, H.C = d, C^2 = 2g-2, K = 0.
inline IntersectionLattice make_k3_rank2(Int g, Int d) {
    if (g < 0 || d < 1) throw std::invalid_argument("make_k3_rank2: need g >= 0, d >= 1");
    return IntersectionLattice("K3 sextic rank 2 (g=" + std::to_string(g) + ",d=" + std::to_string(d) + ")",
                               {"H", "C"}, {6, d, d, 2 * g - 2}, {1, 0}, {0, 0});
}

// Adds a hypothetical rational secant class G with H.G = n, C.G = cg, G^2 = -2.
inline IntersectionLattice make_k3_rank3(Int g, Int d, Int n, Int cg) {
    if (g < 0 || d < 1 || n < 1 || cg < 0)
        throw std::invalid_argument("make_k3_rank3: need g >= 0, d >= 1, n >= 1, cg >= 0");
    return IntersectionLattice("K3 sextic rank 3 (g=" + std::to_string(g) + ",d=" + std::to_string(d) +
                                   ",n=" + std::to_string(n) + ",cg=" + std::to_string(cg) + ")",
                               {"H", "C", "G"},
                               {6, d, n, d, 2 * g - 2, cg, n, cg, -2},
                               {1, 0, 0}, {0, 0, 0});
}

// Smooth quadric surface P1 x P1: rulings f1, f2; H = f1 + f2; K = -2f1 - 2f2.
inline IntersectionLattice make_quadric_smooth() {
    return IntersectionLattice("P1xP1", {"f1", "f2"}, {0, 1, 1, 0}, {1, 1}, {-2, -2});
}

// Hirzebruch surface F2 (blown-up quadric cone): (-2)-section e, fiber f;
// pullback of the cone's hyperplane section is e + 2f; K = -2e - 4f.
inline IntersectionLattice make_f2() {
    return IntersectionLattice("F2", {"e", "f"}, {-2, 1, 1, 0}, {1, 2}, {-2, -4});
}

// Quartic del Pezzo surface, blowup of P2 in five general points:
// H = -K = 3L - E1 - ... - E5.
inline IntersectionLattice make_dp4() {
    return IntersectionLattice("dP4", {"L", "E1", "E2", "E3", "E4", "E5"},
                               {1, 0, 0, 0, 0, 0,
                                0, -1, 0, 0, 0, 0,
                                0, 0, -1, 0, 0, 0,
                                0, 0, 0, -1, 0, 0,
                                0, 0, 0, 0, -1, 0,
                                0, 0, 0, 0, 0, -1},
                               {3, -1, -1, -1, -1, -1},
                               {-3, 1, 1, 1, 1, 1});
}

// True for the three K3 constructors (K = 0 and H^2 = 6).
inline bool is_sextic_k3(const IntersectionLattice& lat) {
    return lat.K().is_zero() && intersect(lat.H(), lat.H()) == 6;
}

}  // namespace qfano
