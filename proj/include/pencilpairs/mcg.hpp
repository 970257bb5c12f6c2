#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pencilpairs/chern_ring.hpp"

namespace pp {

using Matrix = std::vector<std::vector<Int>>;

Matrix identity_matrix(int rank);
Matrix matrix_mul(const Matrix& a, const Matrix& b);
std::vector<Int> matrix_apply(const Matrix& m, const std::vector<Int>& v);
Int matrix_det(Matrix m);

// Middle-degree intersection lattice of a 2n-dimensional fiber. The pairing
// is symmetric for n even and antisymmetric for n odd.
struct IntersectionLattice {
    int n = 2;
    Matrix gram;

    int rank() const { return static_cast<int>(gram.size()); }
};

void validate_lattice(const IntersectionLattice& lattice);

Int pairing(const IntersectionLattice& lattice, const std::vector<Int>& a,
            const std::vector<Int>& b);

// Sign in the twist formula h -> h + eps (h.v) v.
int twist_sign(int n);

// Required self-pairing of a vanishing sphere class: 0 for n odd,
// (-1)^{n(n+1)/2} * 2 for n even.
Int expected_self_pairing(int n);

struct SphereClass {
    std::string id;
    std::vector<Int> v;
};

enum class SphereRelation { disjoint, one_point, unknown };

std::string relation_name(SphereRelation rel);

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A collection of vanishing spheres with pairwise geometric relations.
// Relations are stored under the unordered id pair; missing means unknown.
struct SphereConfiguration {
    IntersectionLattice lattice;
    std::vector<SphereClass> spheres;
    std::map<std::pair<std::string, std::string>, SphereRelation> relations;

    const SphereClass& sphere(const std::string& id) const;
    bool has_sphere(const std::string& id) const;
    SphereRelation relation(const std::string& a, const std::string& b) const;
};

void validate_configuration(const SphereConfiguration& config);

SphereConfiguration parse_configuration(const std::string& json_text);
SphereConfiguration load_configuration(const std::string& path);

// Matrix of the (exponent-th power of the) Dehn twist along the named
// sphere, acting on column vectors. exponent must be +1 or -1.
Matrix dehn_twist_matrix(const SphereConfiguration& config, const std::string& id,
                         int exponent = 1);

struct TwistLetter {
    std::string id;
    int exponent = 1;

    bool operator==(const TwistLetter&) const = default;
};

struct TwistWord {
    std::vector<TwistLetter> letters;

    bool operator==(const TwistWord&) const = default;
};

// Words are whitespace-separated sphere ids with an optional "^-1" suffix.
TwistWord parse_word(const std::string& text);
std::string word_str(const TwistWord& word);

// Homology action of a word: the rightmost letter acts first.
Matrix tau_of_word(const SphereConfiguration& config, const TwistWord& word);

// Sum of letter exponents.
long long p_of_word(const TwistWord& word);

// Rewriting moves on words. Positions are 0-based indices into the letter
// sequence; each move names the leftmost letter it touches.
struct MoveDescriptor {
    enum class Kind { disjoint, conjugacy, braid };
    Kind kind = Kind::disjoint;
    std::size_t position = 0;
};

// Descriptors look like "disjoint@2", "conjugacy@0", "braid@1".
MoveDescriptor parse_move(const std::string& text);
std::string move_str(const MoveDescriptor& move);

struct MoveResult {
    SphereConfiguration config;
    TwistWord word;
    std::string minted_id;  // set by conjugacy moves
};

// disjoint: swap adjacent letters whose spheres are disjoint.
// conjugacy: rewrite t_L^e t_{L'}^{e'} as t_{L''}^{e'} t_L^e where
//            [L''] = M_L^e [L'], minting a record for the new sphere.
// braid:     rewrite a b a as b a b for one-point intersections, +1 powers.
MoveResult apply_move(const SphereConfiguration& config, const TwistWord& word,
                      const MoveDescriptor& move);

struct ParityReport {
    Int det;
    long long p = 0;
    bool tau_is_identity = false;
    bool consistent = false;
    std::string verdict;
};

// For n even: det(tau(w)) must equal (-1)^{p(w)}; a trivial homology action
// with odd exponent sum is flagged as a violation.
ParityReport parity_check(const SphereConfiguration& config, const TwistWord& word);

// Formal combination of products of projective spaces, evaluated by
// chi(CP^{d1} x ... x CP^{dm}) = prod (d_i + 1).
struct CobordismCombination {
    std::vector<std::pair<Int, std::vector<int>>> terms;
};

Int cobordism_chi(const CobordismCombination& combination);

// The combination tracking m twists along a 2n-dimensional fiber:
//   n odd:  m [CP^n] - (m/2) [CP^1 x CP^{n-1}]  (m must be even),
//   n even: m(n-1) [CP^n] - (mn/2) [CP^1 x CP^{n-1}].
// Evaluates to m for n odd and -m for n even.
CobordismCombination twist_length_combination(int n, const Int& m);

}  // namespace pp
