#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pluriperiod/moebius.hpp"
#include "pluriperiod/types.hpp"

namespace pluriperiod {

/// Freely reduced word in the group generators.  Letters are nonzero signed
/// indices: +k is generator k (1-based), -k its inverse.
class GroupWord {
  public:
    GroupWord() = default;
    explicit GroupWord(std::vector<int> letters);

    GroupWord& append(int letter);          // reduces on the fly
    GroupWord concat(const GroupWord& o) const;
    GroupWord inverse() const;

    const std::vector<int>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    bool operator==(const GroupWord&) const = default;
    bool operator<(const GroupWord& o) const { return letters_ < o.letters_; }

  private:
    std::vector<int> letters_;
};

/// Discrete subgroup model of PSL(2,R).  Either the genus-g surface group of
/// the regular octagon construction or the cyclic model <diag(l, 1/l)>
/// (optionally conjugated so the generator has c != 0).
struct GroupModel {
    enum class Kind { surface, cyclic };
    Kind kind = Kind::cyclic;
    int genus = 0;                       // surface only
    std::vector<MoebiusMap> gens;        // surface: a1,b1,...,ag,bg; cyclic: one
    std::vector<std::string> gen_names;
    double lambda = 0.0;                 // cyclic only

    int num_generators() const { return static_cast<int>(gens.size()); }
    MoebiusMap letter_matrix(int letter) const;
    std::string word_string(const GroupWord& w) const;

    /// The defining relation as a word (surface: the octagon vertex-cycle
    /// word; cyclic: empty — the group is free).
    GroupWord relator() const;
};

MoebiusMap word_to_matrix(const GroupModel& G, const GroupWord& w);

/// Combinatorial 4g-gon carrying the side-pairing data: vertex k+1 is
/// vertices[k]; edge j runs vertices[j] -> vertices[j+1 mod 4g].
struct OctagonEdge {
    int gamma_index;     // 1..2g, the gamma label
    bool inverted;       // true for the gamma^{-1} side
    int from, to;        // vertex indices, 0-based
    int pairing_letter;  // signed generator letter identifying this side pair
};

struct FundamentalOctagon {
    std::vector<Complex> vertices;   // 4g half-plane vertices, ccw
    std::vector<OctagonEdge> edges;  // 4g edges in boundary order
    Complex tau1() const { return vertices.at(0); }
    const OctagonEdge& edge_gamma(int gamma_index, bool inverted) const;
    double perimeter() const;
};

/// Word V with V^{-1} tau1 = vertex k (0-based); V(tau1) is empty.  These are
/// the commutator-prefixed words driving the edge-moment bookkeeping.
GroupWord vertex_word(int genus, int vertex_index);

struct OctagonGroup {
    std::shared_ptr<const GroupModel> group;
    FundamentalOctagon octagon;
};

/// Genus-2 cocompact surface group from the regular hyperbolic octagon with
/// vertex angle pi/4 (disk model, conjugated to the half-plane).  Validates
/// vertex pairings and the relator to 1e-9, else throws ConstructionFailure.
OctagonGroup octagon_group();

/// Cyclic model generated by diag(lambda, 1/lambda), lambda > 1.
std::shared_ptr<const GroupModel> cyclic_group(double lambda);

/// Cyclic model conjugated by U = [[1,0],[1,1]], so the generator has a
/// nonzero lower-left entry.  Needed wherever constant automorphy factors
/// would trivialize a check.
std::shared_ptr<const GroupModel> conjugated_cyclic_group(double lambda);

/// Recompute the vertex chain tau2..tau_{4g} from tau1 using the pairing
/// words; with the canonical tau1 this reproduces the octagon vertices.
std::vector<Complex> vertex_chase(const GroupModel& G, Complex tau1);

struct OrbitElement {
    MoebiusMap mat;
    GroupWord word;
    double displacement;
};

/// Ball of the orbit of i: all distinct elements with displacement <= R, in
/// canonical order (displacement, then word).  BFS over reduced words, greedy
/// pruning at R + margin (default 2x the largest generator displacement).
struct OrbitSet {
    std::vector<OrbitElement> elems;
    double radius = 0.0;
    double margin = 0.0;
    // Structure-of-arrays mirrors for the summation kernel.
    std::vector<double> a, b, c, d;
    std::size_t size() const { return elems.size(); }
};

OrbitSet enumerate_ball(const GroupModel& G, double R, std::size_t cap = 1000000,
                        std::optional<double> margin = std::nullopt);

}  // namespace pluriperiod
