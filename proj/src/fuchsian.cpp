#include "pluriperiod/fuchsian.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <unordered_map>

#include "pluriperiod/errors.hpp"

namespace pluriperiod {

GroupWord::GroupWord(std::vector<int> letters) {
    for (int l : letters) append(l);
}

GroupWord& GroupWord::append(int letter) {
    if (letter == 0) throw ConstructionFailure("GroupWord: zero letter");
    if (!letters_.empty() && letters_.back() == -letter) letters_.pop_back();
    else letters_.push_back(letter);
    return *this;
}

GroupWord GroupWord::concat(const GroupWord& o) const {
    GroupWord r = *this;
    for (int l : o.letters_) r.append(l);
    return r;
}

GroupWord GroupWord::inverse() const {
    GroupWord r;
    for (std::size_t i = letters_.size(); i-- > 0;) r.append(-letters_[i]);
    return r;
}

MoebiusMap GroupModel::letter_matrix(int letter) const {
    const int idx = std::abs(letter) - 1;
    if (idx < 0 || idx >= num_generators())
        throw ConstructionFailure("GroupModel: letter index out of range");
    const MoebiusMap& g = gens[static_cast<std::size_t>(idx)];
    return letter > 0 ? g : g.inverse();
}

std::string GroupModel::word_string(const GroupWord& w) const {
    if (w.empty()) return "1";
    std::string s;
    for (int l : w.letters()) {
        if (!s.empty()) s += ".";
        s += gen_names[static_cast<std::size_t>(std::abs(l) - 1)];
        if (l < 0) s += "'";
    }
    return s;
}

GroupWord GroupModel::relator() const {
    if (kind != Kind::surface) return GroupWord{};
    // Vertex-cycle word of the octagon pairing: for g = 2 this is
    // b2.a2'.b2'.a2.b1.a1'.b1'.a1 (letters a_i = 2i-1, b_i = 2i).
    GroupWord w;
    for (int i = genus; i >= 1; --i) {
        const int a = 2 * i - 1, b = 2 * i;
        w.append(b).append(-a).append(-b).append(a);
    }
    return w;
}

MoebiusMap word_to_matrix(const GroupModel& G, const GroupWord& w) {
    MoebiusMap m = MoebiusMap::identity();
    for (int l : w.letters()) m = compose(m, G.letter_matrix(l));
    return m;
}

const OctagonEdge& FundamentalOctagon::edge_gamma(int gamma_index, bool inverted) const {
    for (const OctagonEdge& e : edges)
        if (e.gamma_index == gamma_index && e.inverted == inverted) return e;
    throw ConstructionFailure("FundamentalOctagon: no such edge");
}

double FundamentalOctagon::perimeter() const {
    double p = 0.0;
    const std::size_t n = vertices.size();
    for (std::size_t k = 0; k < n; ++k)
        p += std::abs(vertices[(k + 1) % n] - vertices[k]);
    return p;
}

GroupWord vertex_word(int genus, int vertex_index) {
    const int n = 4 * genus;
    const int v = ((vertex_index % n) + n) % n;
    GroupWord w;
    const int block = v / 4;          // completed handles before this vertex
    for (int j = 1; j <= block; ++j) {
        const int a = 2 * j - 1, b = 2 * j;
        w.append(-a).append(b).append(a).append(-b);
    }
    const int a = 2 * block + 1, b = 2 * block + 2;
    switch (v % 4) {
        case 0: break;                                          // W_{i-1}
        case 1: w.append(-a).append(b).append(a); break;        // . a'.b.a
        case 2: w.append(-a).append(b); break;                  // . a'.b
        case 3: w.append(-a); break;                            // . a'
    }
    return w;
}

namespace {

// ----- disk-model isometries (SU(1,1) matrices) used only for construction

struct DiskMap {
    Complex m00, m01, m10, m11;
    Complex apply(Complex w) const { return (m00 * w + m01) / (m10 * w + m11); }
};

DiskMap disk_compose(const DiskMap& A, const DiskMap& B) {
    return DiskMap{A.m00 * B.m00 + A.m01 * B.m10, A.m00 * B.m01 + A.m01 * B.m11,
                   A.m10 * B.m00 + A.m11 * B.m10, A.m10 * B.m01 + A.m11 * B.m11};
}

DiskMap disk_inverse(const DiskMap& A) {
    const Complex det = A.m00 * A.m11 - A.m01 * A.m10;
    return DiskMap{A.m11 / det, -A.m01 / det, -A.m10 / det, A.m00 / det};
}

DiskMap to_origin(Complex p) {
    const double s = std::sqrt(1.0 - std::norm(p));
    return DiskMap{1.0 / s, -p / s, -std::conj(p) / s, 1.0 / s};
}

DiskMap rotation(double th) {
    return DiskMap{std::polar(1.0, th / 2.0), 0.0, 0.0, std::polar(1.0, -th / 2.0)};
}

// Unique orientation-preserving disk isometry with p -> p2, q -> q2
// (hyperbolic distances d(p,q) and d(p2,q2) must agree).
DiskMap pairing_map(Complex p, Complex q, Complex p2, Complex q2) {
    const DiskMap Tp = to_origin(p), Tp2 = to_origin(p2);
    const Complex u = Tp.apply(q), u2 = Tp2.apply(q2);
    if (std::abs(std::abs(u) - std::abs(u2)) > 1e-12)
        throw ConstructionFailure("pairing_map: side lengths disagree");
    const DiskMap R = rotation(std::arg(u2) - std::arg(u));
    return disk_compose(disk_inverse(Tp2), disk_compose(R, Tp));
}

// Conjugate an SU(1,1) disk map to SL(2,R) through the Cayley matrix
// F = [[1,-i],[1,i]] (z -> (z-i)/(z+i)); imaginary residue is validated.
MoebiusMap disk_to_halfplane(const DiskMap& g) {
    const Complex i(0.0, 1.0);
    const Complex F00 = 1.0, F01 = -i, F10 = 1.0, F11 = i;
    const Complex det = F00 * F11 - F01 * F10;  // 2i
    const Complex G00 = (F11 * g.m00 - F01 * g.m10), G01 = (F11 * g.m01 - F01 * g.m11);
    const Complex G10 = (-F10 * g.m00 + F00 * g.m10), G11 = (-F10 * g.m01 + F00 * g.m11);
    // M = F^{-1} g F, with the 1/det folded in after the second product.
    Complex M00 = (G00 * F00 + G01 * F10) / det;
    Complex M01 = (G00 * F01 + G01 * F11) / det;
    Complex M10 = (G10 * F00 + G11 * F10) / det;
    Complex M11 = (G10 * F01 + G11 * F11) / det;
    const Complex mdet = M00 * M11 - M01 * M10;
    const Complex s = std::sqrt(mdet);  // det is 1 in exact arithmetic
    M00 /= s; M01 /= s; M10 /= s; M11 /= s;
    const double imag_res = std::max(std::max(std::abs(M00.imag()), std::abs(M01.imag())),
                                     std::max(std::abs(M10.imag()), std::abs(M11.imag())));
    if (imag_res > 1e-9)
        throw ConstructionFailure("disk_to_halfplane: non-real conjugate, residue " +
                                  std::to_string(imag_res));
    return MoebiusMap(M00.real(), M01.real(), M10.real(), M11.real());
}

Complex cayley_to_halfplane(Complex w) {
    const Complex i(0.0, 1.0);
    return i * (1.0 + w) / (1.0 - w);
}

}  // namespace

OctagonGroup octagon_group() {
    constexpr int g = 2;
    constexpr int n = 4 * g;
    // Circumradius: bisection on the vertex-angle condition 2 atan(1 /
    // (cosh(rho) tan(pi/8))) = pi/4 (closed form acosh(cot^2 pi/8) checked in
    // tests).
    const double tan8 = std::tan(kPi / 8.0);
    auto angle = [&](double rho) { return 2.0 * std::atan(1.0 / (std::cosh(rho) * tan8)); };
    double lo = 0.1, hi = 10.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (angle(mid) > kPi / 4.0) lo = mid; else hi = mid;
        if (hi - lo < 1e-13) break;
    }
    const double rho = 0.5 * (lo + hi);
    const double rd = std::tanh(rho / 2.0);

    std::vector<Complex> disk_v(n);
    for (int k = 0; k < n; ++k)
        disk_v[static_cast<std::size_t>(k)] = std::polar(rd, kPi / 8.0 + k * kPi / 4.0);

    // Side pairings forced by the vertex relations: a_i carries the gamma_i
    // side to the gamma_i^{-1} side, b_i likewise for gamma_{i+g}.
    auto pair_h = [&](int p, int q, int p2, int q2) {
        return disk_to_halfplane(pairing_map(disk_v[static_cast<std::size_t>(p)],
                                             disk_v[static_cast<std::size_t>(q)],
                                             disk_v[static_cast<std::size_t>(p2)],
                                             disk_v[static_cast<std::size_t>(q2)]));
    };
    auto model = std::make_shared<GroupModel>();
    model->kind = GroupModel::Kind::surface;
    model->genus = g;
    model->gens = {pair_h(0, 1, 3, 2), pair_h(1, 2, 4, 3),
                   pair_h(4, 5, 7, 6), pair_h(5, 6, 0, 7)};
    model->gen_names = {"a1", "b1", "a2", "b2"};

    FundamentalOctagon oct;
    oct.vertices.resize(n);
    for (int k = 0; k < n; ++k)
        oct.vertices[static_cast<std::size_t>(k)] = cayley_to_halfplane(disk_v[static_cast<std::size_t>(k)]);
    for (int i = 1; i <= g; ++i) {
        const int base = 4 * (i - 1);
        const int a = 2 * i - 1, b = 2 * i;
        oct.edges.push_back({i, false, base, base + 1, a});
        oct.edges.push_back({i + g, false, base + 1, base + 2, b});
        oct.edges.push_back({i, true, base + 2, base + 3, a});
        oct.edges.push_back({i + g, true, base + 3, (base + 4) % n, b});
    }

    // Pairing consistency: each a_i / b_i must map its edge onto the partner
    // edge with reversed orientation.
    auto check_pair = [&](const MoebiusMap& M, int vf, int vt, int wf, int wt) {
        const double r1 = std::abs(M.apply(oct.vertices[static_cast<std::size_t>(vf)]) -
                                   oct.vertices[static_cast<std::size_t>(wt)]);
        const double r2 = std::abs(M.apply(oct.vertices[static_cast<std::size_t>(vt)]) -
                                   oct.vertices[static_cast<std::size_t>(wf)]);
        if (r1 > 1e-9 || r2 > 1e-9)
            throw ConstructionFailure("octagon_group: side pairing residual too large");
    };
    for (int i = 1; i <= g; ++i) {
        const int base = 4 * (i - 1);
        check_pair(model->gens[static_cast<std::size_t>(2 * i - 2)], base, base + 1, base + 2, base + 3);
        check_pair(model->gens[static_cast<std::size_t>(2 * i - 1)], base + 1, base + 2, base + 3, (base + 4) % n);
    }

    const MoebiusMap rel = word_to_matrix(*model, model->relator());
    if (rel.distance_to(MoebiusMap::identity()) > 1e-9)
        throw ConstructionFailure("octagon_group: relator residual " +
                                  std::to_string(rel.distance_to(MoebiusMap::identity())));

    // Vertex relations (the chase) must reproduce the constructed corners.
    const std::vector<Complex> chased = vertex_chase(*model, oct.tau1());
    for (int k = 0; k < n; ++k)
        if (std::abs(chased[static_cast<std::size_t>(k)] - oct.vertices[static_cast<std::size_t>(k)]) > 1e-9)
            throw ConstructionFailure("octagon_group: vertex chase mismatch");

    return OctagonGroup{std::move(model), std::move(oct)};
}

std::shared_ptr<const GroupModel> cyclic_group(double lambda) {
    if (!(lambda > 1.0))
        throw ConstructionFailure("cyclic_group: lambda must exceed 1");
    auto model = std::make_shared<GroupModel>();
    model->kind = GroupModel::Kind::cyclic;
    model->lambda = lambda;
    model->gens = {MoebiusMap(lambda, 0.0, 0.0, 1.0 / lambda)};
    model->gen_names = {"t"};
    return model;
}

std::shared_ptr<const GroupModel> conjugated_cyclic_group(double lambda) {
    auto model = std::make_shared<GroupModel>(*cyclic_group(lambda));
    const MoebiusMap U(1.0, 0.0, 1.0, 1.0);
    model->gens[0] = compose(compose(U.inverse(), model->gens[0]), U);
    model->gen_names = {"t"};
    return model;
}

std::vector<Complex> vertex_chase(const GroupModel& G, Complex tau1) {
    if (G.kind != GroupModel::Kind::surface)
        throw UnsupportedGroup("vertex_chase: requires a surface group");
    const int n = 4 * G.genus;
    std::vector<Complex> v(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const GroupWord w = vertex_word(G.genus, k).inverse();
        v[static_cast<std::size_t>(k)] = word_to_matrix(G, w).apply(tau1);
    }
    return v;
}

namespace {

struct KeyHash {
    std::size_t operator()(const std::array<std::int64_t, 4>& k) const {
        std::size_t h = 1469598103934665603ull;
        for (std::int64_t v : k) {
            h ^= static_cast<std::size_t>(v);
            h *= 1099511628211ull;
        }
        return h;
    }
};

std::array<std::int64_t, 4> quantize(const MoebiusMap& m) {
    const MoebiusMap s = m.sign_normalized();
    auto q = [](double x) { return static_cast<std::int64_t>(std::llround(x * 1e8)); };
    return {q(s.a), q(s.b), q(s.c), q(s.d)};
}

}  // namespace

OrbitSet enumerate_ball(const GroupModel& G, double R, std::size_t cap,
                        std::optional<double> margin_opt) {
    OrbitSet out;
    out.radius = R;

    if (G.kind == GroupModel::Kind::cyclic &&
        std::abs(G.gens[0].b) < 1e-14 && std::abs(G.gens[0].c) < 1e-14) {
        // Diagonal cyclic model: displacements are exactly 2 |n| log(lambda).
        const double step = 2.0 * std::log(G.lambda);
        const int nmax = static_cast<int>(std::floor(R / step + 1e-12));
        std::vector<OrbitElement> elems;
        for (int p = -nmax; p <= nmax; ++p) {
            MoebiusMap m = MoebiusMap::identity();
            GroupWord w;
            for (int k = 0; k < std::abs(p); ++k) w.append(p > 0 ? 1 : -1);
            m = word_to_matrix(G, w);
            elems.push_back({m, w, m.displacement()});
        }
        std::sort(elems.begin(), elems.end(), [](const OrbitElement& x, const OrbitElement& y) {
            return x.displacement != y.displacement ? x.displacement < y.displacement
                                                    : x.word < y.word;
        });
        out.elems = std::move(elems);
    } else {
        double maxgen = 0.0;
        const int ng = G.num_generators();
        for (const MoebiusMap& m : G.gens) maxgen = std::max(maxgen, m.displacement());
        const double margin = margin_opt.value_or(2.0 * maxgen);
        out.margin = margin;
        const double limit = R + margin;

        // Non-backtracking BFS over freely reduced words.  Nodes keep a
        // parent index and last letter instead of the full word so the
        // exploration frontier stays small in memory; words are rebuilt
        // only for the elements that survive the final radius filter.
        struct Node { MoebiusMap mat; double disp; std::size_t parent; int letter; };
        std::vector<Node> nodes;
        std::unordered_map<std::array<std::int64_t, 4>, std::size_t, KeyHash> seen;
        auto push = [&](const MoebiusMap& m, std::size_t parent, int letter) {
            const double disp = m.displacement();
            if (disp > limit) return;
            const auto key = quantize(m);
            auto [it, inserted] = seen.emplace(key, nodes.size());
            if (!inserted) {
                if (nodes[it->second].mat.distance_to(m) > 1e-6)
                    throw ConstructionFailure("enumerate_ball: dedup key collision");
                return;
            }
            nodes.push_back({m, disp, parent, letter});
        };
        push(MoebiusMap::identity(), 0, 0);
        for (std::size_t head = 0; head < nodes.size(); ++head) {
            const Node cur = nodes[head];  // copy: nodes reallocates
            for (int l = 1; l <= ng; ++l) {
                for (int s : {l, -l}) {
                    if (cur.letter == -s) continue;
                    push(compose(cur.mat, G.letter_matrix(s)), head, s);
                }
            }
            if (nodes.size() > 64 * cap)
                throw BudgetExceeded("enumerate_ball: exploration exceeded 64x cap");
        }
        auto rebuild_word = [&](std::size_t idx) {
            std::vector<int> rev;
            while (nodes[idx].letter != 0) {
                rev.push_back(nodes[idx].letter);
                idx = nodes[idx].parent;
            }
            GroupWord w;
            for (auto it = rev.rbegin(); it != rev.rend(); ++it) w.append(*it);
            return w;
        };
        std::vector<OrbitElement> elems;
        for (std::size_t i = 0; i < nodes.size(); ++i)
            if (nodes[i].disp <= R)
                elems.push_back({nodes[i].mat, rebuild_word(i), nodes[i].disp});
        if (elems.size() > cap)
            throw BudgetExceeded("enumerate_ball: ball holds " + std::to_string(elems.size()) +
                                 " elements, cap " + std::to_string(cap));
        std::sort(elems.begin(), elems.end(), [](const OrbitElement& x, const OrbitElement& y) {
            return x.displacement != y.displacement ? x.displacement < y.displacement
                                                    : x.word < y.word;
        });
        // Belt-and-braces: the quantized grid can in principle split one
        // element across neighbouring cells; merge survivors that coincide.
        std::vector<OrbitElement> unique_elems;
        unique_elems.reserve(elems.size());
        for (OrbitElement& e : elems) {
            bool dup = false;
            for (auto it = unique_elems.rbegin();
                 it != unique_elems.rend() && e.displacement - it->displacement < 1e-6; ++it) {
                if (it->mat.distance_to(e.mat) < 1e-6) { dup = true; break; }
            }
            if (!dup) unique_elems.push_back(std::move(e));
        }
        out.elems = std::move(unique_elems);
    }

    out.a.reserve(out.elems.size());
    for (const OrbitElement& e : out.elems) {
        out.a.push_back(e.mat.a);
        out.b.push_back(e.mat.b);
        out.c.push_back(e.mat.c);
        out.d.push_back(e.mat.d);
    }
    return out;
}

}  // namespace pluriperiod
