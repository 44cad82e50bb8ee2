#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "network.hpp"

namespace qts {

// ---------------------------------------------------------------------------
// Quantum side: rank-2 seed R0, R1 with R0 R1 = q R1 R0, realized on the
// torus points (0,0) and (1,1).
// ---------------------------------------------------------------------------

inline LatticePoint rseed_point(int which) {
    return which == 0 ? LatticePoint{0, 0} : LatticePoint{1, 1};
}

Polynomial rgen(int which, int exp = 1);

/// Path weights y1 = R1 R0^-1, y2 = R1^-1 R0^-1, y3 = R1^-1 R0.
Polynomial qq_weight(int which);

/// Two-step transfer matrix [[y1, 1], [y2 y1, y2 + y3]].
Matrix2 qq_transfer();

/// R_j = (T^j)_{1,1} R0 for j >= 0.
Polynomial qq_solve(int j);

/// Network forms of the same solution: ((UV)^j)_{1,1} R0 and, for j >= 1,
/// ((VU)^{j-1})_{1,1} R1, with U = U(R0,R1), V = V(R1,R0).
Polynomial qq_network_uv(int j);
Polynomial qq_network_vu(int j);

/// UV = diag(1,R0) T diag(1,R0^-1) entrywise. (The printed form of the
/// conjugation has the two diagonal factors on the opposite sides; this is
/// the orientation under which all four entries match.)
bool qq_verify_conjugation();

// ---------------------------------------------------------------------------
// Fully non-commutative side: the free group algebra on R0, R1, with
// C = R1^-1 R0 R1 R0^-1 the commutator word forced by R0 R1 = R1 C R0.
// ---------------------------------------------------------------------------

/// Letter of a freely reduced word: generator index and nonzero exponent,
/// adjacent letters have distinct generators.
struct FreeLetter {
    int gen = 0;
    int exp = 0;

    auto operator<=>(const FreeLetter&) const = default;
};

class FreeWord {
public:
    FreeWord() = default;
    static FreeWord one() { return FreeWord(); }
    static FreeWord generator(int gen, int exp = 1);

    const std::vector<FreeLetter>& letters() const { return letters_; }
    bool is_one() const { return letters_.empty(); }

    friend FreeWord operator*(const FreeWord& a, const FreeWord& b);
    FreeWord inverse() const;

    auto operator<=>(const FreeWord&) const = default;

    std::string to_text() const;

private:
    std::vector<FreeLetter> letters_;
    void push(FreeLetter l);
};

/// Integer combinations of reduced words; equality is term-map equality.
class FreeElement {
public:
    FreeElement() = default;
    static FreeElement zero() { return FreeElement(); }
    static FreeElement one() { return of(FreeWord::one()); }
    static FreeElement of(FreeWord w, BigInt c = BigInt(1));
    static FreeElement generator(int gen, int exp = 1) {
        return of(FreeWord::generator(gen, exp));
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<FreeWord, BigInt>& terms() const { return terms_; }

    FreeElement& operator+=(const FreeElement& o);
    friend FreeElement operator+(FreeElement a, const FreeElement& b) { return a += b; }
    friend FreeElement operator-(FreeElement a, const FreeElement& b);
    friend FreeElement operator*(const FreeElement& a, const FreeElement& b);

    bool operator==(const FreeElement& o) const { return terms_ == o.terms_; }

    std::string to_text() const;

    /// Image under R0, R1 -> the quantum seed generators (sends the
    /// commutator word C to the central q).
    Polynomial to_qseed() const;

private:
    std::map<FreeWord, BigInt> terms_;
};

/// The commutator word C and its inverse.
FreeWord nc_comm_word();

/// U(a,b) = [[1,0],[C^-1 b^-1, a b^-1]], V(a,b) = [[a b^-1, b^-1],[0,1]]
/// over the free group algebra, for the seed (R0, R1).
Mat2<FreeElement> nc_chip_u0();
Mat2<FreeElement> nc_chip_v0();

/// R_n = ((U0 V0)^n)_{1,1} R0 in the free group algebra, n >= 0.
FreeElement nc_sequence(int n);

struct NcCheck {
    std::string id;
    bool pass = false;
    std::string detail; // both reduced forms on failure
};

struct NcReport {
    std::vector<NcCheck> checks;
    std::vector<std::string> values; // R_n canonical texts
    int failures() const;
};

/// Exact FreeElement verification for 1 <= n <= n_max:
///   (a) R_n R_{n+1} = R_{n+1} C R_n
///   (b) ((U0 V0)^n)_{1,1} R0 = R_n = (T^n)_{1,1} R0 and, for n >= 1,
///       ((V0 U0)^{n-1})_{1,1} R1 = R_n
///   (c) V(a,b) U(b,c) = U(a,b') V(b',c) at (a,b,c) = (R_{p+1}, R_p, R_{p+1})
///       for p = 0,1,2, the (2,2) entry right-cleared by b'
///   (d) a b' = b' C a (= the quasi-commutation at the shifted index)
///   (e) R_{n+1} C R_{n-1} = R_n^2 + 1, and the division-free recursion
///       form at n = 1
///   (f) C -> q specialization matches the quantum solution for n <= 5
NcReport nc_verify(int n_max);

} // namespace qts
