#include "graphlink/gf2.hpp"

#include "graphlink/errors.hpp"

namespace graphlink {

Gf2SymMatrix::Gf2SymMatrix(std::size_t n) : n_(n), rows_(n, 0) {
    if (n > 64)
        throw Error(ErrorCode::SizeLimit, "matrix dimension exceeds 64");
}

Gf2SymMatrix Gf2SymMatrix::identity(std::size_t n) {
    Gf2SymMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        m.rows_[i] = std::uint64_t{1} << i;
    return m;
}

void Gf2SymMatrix::set(std::size_t i, std::size_t j, bool value) {
    if (value) {
        rows_[i] |= std::uint64_t{1} << j;
        rows_[j] |= std::uint64_t{1} << i;
    } else {
        rows_[i] &= ~(std::uint64_t{1} << j);
        rows_[j] &= ~(std::uint64_t{1} << i);
    }
}

void Gf2SymMatrix::toggle(std::size_t i, std::size_t j) {
    rows_[i] ^= std::uint64_t{1} << j;
    if (i != j)
        rows_[j] ^= std::uint64_t{1} << i;
}

Gf2SymMatrix Gf2SymMatrix::operator+(const Gf2SymMatrix& other) const {
    Gf2SymMatrix result(n_);
    for (std::size_t i = 0; i < n_; ++i)
        result.rows_[i] = rows_[i] ^ other.rows_[i];
    return result;
}

namespace {

std::size_t eliminate(std::vector<std::uint64_t> rows) {
    const std::size_t n = rows.size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < n; ++col) {
        std::size_t pivot = r;
        while (pivot < n && !((rows[pivot] >> col) & 1u))
            ++pivot;
        if (pivot == n)
            continue;
        std::swap(rows[r], rows[pivot]);
        for (std::size_t i = 0; i < n; ++i)
            if (i != r && ((rows[i] >> col) & 1u))
                rows[i] ^= rows[r];
        ++r;
    }
    return r;
}

} // namespace

std::size_t rank(const Gf2SymMatrix& m) {
    std::vector<std::uint64_t> rows;
    rows.reserve(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        rows.push_back(m.row(i));
    return eliminate(std::move(rows));
}

std::size_t corank(const Gf2SymMatrix& m) {
    return m.size() - rank(m);
}

int determinant(const Gf2SymMatrix& m) {
    return rank(m) == m.size() ? 1 : 0;
}

Gf2SymMatrix inverse(const Gf2SymMatrix& m) {
    const std::size_t n = m.size();
    std::vector<std::uint64_t> rows(n), inv(n);
    for (std::size_t i = 0; i < n; ++i) {
        rows[i] = m.row(i);
        inv[i] = std::uint64_t{1} << i;
    }
    std::size_t r = 0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = r;
        while (pivot < n && !((rows[pivot] >> col) & 1u))
            ++pivot;
        if (pivot == n)
            throw Error(ErrorCode::SingularMatrix, "matrix is singular over GF(2)");
        std::swap(rows[r], rows[pivot]);
        std::swap(inv[r], inv[pivot]);
        for (std::size_t i = 0; i < n; ++i)
            if (i != r && ((rows[i] >> col) & 1u)) {
                rows[i] ^= rows[r];
                inv[i] ^= inv[r];
            }
        ++r;
    }
    Gf2SymMatrix result(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if ((inv[i] >> j) & 1u)
                result.set(i, j, true);
    return result;
}

Gf2SymMatrix nondegenerate_completion(const Gf2SymMatrix& m) {
    if (determinant(m) == 1)
        return m;
    const std::size_t n = m.size();
    // Diagonal bit-vectors in lexicographic order, entry 0 most significant.
    for (std::uint64_t assignment = 0; assignment < (std::uint64_t{1} << n); ++assignment) {
        Gf2SymMatrix candidate = m;
        for (std::size_t i = 0; i < n; ++i)
            candidate.set(i, i, (assignment >> (n - 1 - i)) & 1u);
        if (determinant(candidate) == 1)
            return candidate;
    }
    // Unreachable: a nonsingular symmetric completion always exists.
    throw Error(ErrorCode::SingularMatrix, "no nonsingular diagonal completion found");
}

} // namespace graphlink
