#ifndef DEGREELAB_HOMOLOGY_HPP
#define DEGREELAB_HOMOLOGY_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace degreelab {

/// Exact arithmetic throughout: entries grow during elimination and must
/// never wrap.
using BigInt = boost::multiprecision::cpp_int;

/// Dense integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    static IntMatrix from_rows(
        const std::vector<std::vector<long long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    BigInt& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const BigInt& at(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }
    bool is_zero() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BigInt> data_;
};

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

/// Invariant factors d_1 | d_2 | ... (all positive, including any 1s) and
/// the rank.  For square nonsingular input the factors multiply to |det|.
struct SNFResult {
    std::vector<BigInt> invariant_factors;
    std::size_t rank = 0;
};

/// Smith normal form by elementary integer row/column operations,
/// pivoting on the minimal-magnitude nonzero entry of the remaining
/// block, with a final divisibility fix-up of the diagonal.
SNFResult smith_normal_form(IntMatrix m);

/// Cellular chain complex with exact integer boundary maps.
/// boundary(i) is d_i : C_i -> C_{i-1} (rank_{i-1} x rank_i), i = 1..n,
/// and d_i . d_{i+1} = 0 is validated at construction.
class ChainComplex {
public:
    ChainComplex(std::vector<std::size_t> ranks, std::vector<IntMatrix> boundaries);

    std::size_t top_dimension() const { return ranks_.size() - 1; }
    const std::vector<std::size_t>& ranks() const { return ranks_; }
    const IntMatrix& boundary(std::size_t i) const; // i in [1, top_dimension()]

private:
    std::vector<std::size_t> ranks_;
    std::vector<IntMatrix> boundaries_; // boundaries_[i-1] = d_i
};

enum class Coefficients { Integers, Rationals };

struct HomologyGroup {
    std::size_t betti = 0;
    std::vector<BigInt> torsion; // invariant factors > 1, divisibility order
};

std::string to_string(const HomologyGroup& g); // "Z", "Z + Z_5", "0", ...

/// Homology in every degree.  betti_i = rank C_i - rank d_i - rank d_{i+1};
/// torsion in degree i comes from the invariant factors of d_{i+1}
/// exceeding 1.  Rational coefficients drop the torsion.
std::vector<HomologyGroup> homology(const ChainComplex& complex,
                                    Coefficients coefficients);

struct RhsVerdict {
    bool value = false;
    std::vector<std::size_t> betti; // rational betti witness
};

/// True iff the rational betti vector is (1, 0, ..., 0, 1).
RhsVerdict is_rational_homology_sphere(const ChainComplex& complex);

struct EulerCharacteristic {
    long long from_cells = 0;
    long long from_betti = 0;
};

EulerCharacteristic euler_both_ways(const ChainComplex& complex);

/// Alternating cell count, cross-checked against the alternating betti
/// sum; a mismatch throws consistency_error.
long long euler_characteristic(const ChainComplex& complex);

/// chi(cover) == sheets * chi(base).
bool covering_chi_check(const ChainComplex& base, const ChainComplex& cover,
                        long long sheets);

// Built-in complexes (minimal CW structures).
ChainComplex sphere_complex(int n);
ChainComplex lens_complex(int m, int dim);   // dim odd >= 3, one cell per degree
ChainComplex rp_complex(int n);
ChainComplex torus2_complex();
ChainComplex cpn_complex(int n);             // n in {1, 2}

/// "lens:m=5,dim=3", "sphere:n=3" / "s3", "rp:n=2" / "rp2", "t2",
/// "cp1", "cp2".
ChainComplex parse_space(std::string_view descriptor);

/// JSON schema: {"ranks": [...], "boundaries": [[row-major ints]]}.
/// Entries beyond 64-bit range are written (and accepted) as strings.
ChainComplex complex_from_json(const std::string& text);
std::string complex_to_json(const ChainComplex& complex);

} // namespace degreelab

#endif
