#ifndef GRAPHLINK_GF2_HPP
#define GRAPHLINK_GF2_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace graphlink {

/// Dense symmetric matrix over GF(2), one bit row per word.  Dimensions are
/// capped at 64 which is far beyond the desk-scale graphs handled here.
class Gf2SymMatrix {
  public:
    Gf2SymMatrix() = default;
    explicit Gf2SymMatrix(std::size_t n);

    static Gf2SymMatrix identity(std::size_t n);

    std::size_t size() const { return n_; }

    bool at(std::size_t i, std::size_t j) const {
        return (rows_[i] >> j) & 1u;
    }

    // Sets entry (i,j) and its mirror (j,i).
    void set(std::size_t i, std::size_t j, bool value);
    void toggle(std::size_t i, std::size_t j);

    std::uint64_t row(std::size_t i) const { return rows_[i]; }

    bool operator==(const Gf2SymMatrix& other) const = default;

    // Entrywise sum over GF(2).
    Gf2SymMatrix operator+(const Gf2SymMatrix& other) const;

  private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> rows_;
};

std::size_t rank(const Gf2SymMatrix& m);
std::size_t corank(const Gf2SymMatrix& m);

// 1 iff m is nonsingular over GF(2); the 0x0 matrix has determinant 1.
int determinant(const Gf2SymMatrix& m);

// Throws Error(SingularMatrix) when determinant(m) == 0.
Gf2SymMatrix inverse(const Gf2SymMatrix& m);

/// Returns a matrix equal to m outside the diagonal with determinant 1.
/// A nonsingular input is returned unchanged; otherwise diagonal bit-vectors
/// are tried in lexicographic order and the first nonsingular one wins.
Gf2SymMatrix nondegenerate_completion(const Gf2SymMatrix& m);

} // namespace graphlink

#endif
