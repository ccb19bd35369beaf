#include "pluriperiod/cohomology.hpp"

#include <algorithm>
#include <string>

#include "pluriperiod/errors.hpp"

namespace pluriperiod {

Eigen::MatrixXcd slash_matrix(const MoebiusMap& B, int degree_bound) {
    const int dim = degree_bound + 1;
    Eigen::MatrixXcd S(dim, dim);
    for (int j = 0; j < dim; ++j) {
        BoundedPoly e(degree_bound);
        e.set_coeff(j, 1.0);
        const BoundedPoly col = poly_slash(e, B, degree_bound);
        for (int i = 0; i < dim; ++i) S(i, j) = col.coeff(i);
    }
    return S;
}

Eigen::VectorXcd stack_cocycle(const std::vector<BoundedPoly>& values) {
    if (values.empty()) return Eigen::VectorXcd();
    const int dim = values[0].degree_bound() + 1;
    Eigen::VectorXcd v(static_cast<Eigen::Index>(values.size()) * dim);
    for (std::size_t s = 0; s < values.size(); ++s) {
        if (values[s].degree_bound() != values[0].degree_bound())
            throw DegreeOverflow("stack_cocycle: mixed degree bounds");
        for (int i = 0; i < dim; ++i)
            v(static_cast<Eigen::Index>(s) * dim + i) = values[s].coeff(i);
    }
    return v;
}

std::vector<BoundedPoly> unstack_cocycle(const Eigen::VectorXcd& v, int degree_bound,
                                         int parts) {
    const int dim = degree_bound + 1;
    if (v.size() != static_cast<Eigen::Index>(parts) * dim)
        throw DegreeOverflow("unstack_cocycle: size mismatch");
    std::vector<BoundedPoly> out;
    out.reserve(static_cast<std::size_t>(parts));
    for (int s = 0; s < parts; ++s) {
        BoundedPoly P(degree_bound);
        for (int i = 0; i < dim; ++i) P.set_coeff(i, v(static_cast<Eigen::Index>(s) * dim + i));
        out.push_back(std::move(P));
    }
    return out;
}

BoundedPoly cocycle_on_word(const GroupModel& G, const std::vector<BoundedPoly>& gen_values,
                            const GroupWord& w, int degree_bound) {
    if (gen_values.size() != static_cast<std::size_t>(G.num_generators()))
        throw ConfigError("cocycle_on_word: one value per generator required");
    BoundedPoly acc(degree_bound);
    const auto& letters = w.letters();
    // Omega_{y_1 ... y_L} = sum_k Omega_{y_k}[y_{k+1} ... y_L]; a negative
    // letter contributes -Omega_x[x^{-1} suffix].
    MoebiusMap suffix = MoebiusMap::identity();
    for (std::size_t k = letters.size(); k-- > 0;) {
        const int s = letters[k];
        const std::size_t slot = static_cast<std::size_t>(std::abs(s)) - 1;
        if (s > 0) {
            acc += poly_slash(gen_values[slot], suffix, degree_bound);
        } else {
            acc -= poly_slash(gen_values[slot], compose(G.letter_matrix(s), suffix),
                              degree_bound);
        }
        suffix = compose(G.letter_matrix(s), suffix);
    }
    return acc;
}

Eigen::MatrixXcd relator_condition_matrix(const GroupModel& G, int degree_bound) {
    if (G.kind != GroupModel::Kind::surface)
        throw UnsupportedGroup("relator_condition_matrix: surface groups only");
    const int dim = degree_bound + 1;
    const int ng = G.num_generators();
    const GroupWord rel = G.relator();
    Eigen::MatrixXcd T(dim, static_cast<Eigen::Index>(ng) * dim);
    std::vector<BoundedPoly> basis_values(static_cast<std::size_t>(ng),
                                          BoundedPoly(degree_bound));
    for (int s = 0; s < ng; ++s) {
        for (int j = 0; j < dim; ++j) {
            basis_values[static_cast<std::size_t>(s)].set_coeff(j, 1.0);
            const BoundedPoly col = cocycle_on_word(G, basis_values, rel, degree_bound);
            basis_values[static_cast<std::size_t>(s)].set_coeff(j, 0.0);
            for (int i = 0; i < dim; ++i) T(i, static_cast<Eigen::Index>(s) * dim + j) = col.coeff(i);
        }
    }
    return T;
}

Eigen::MatrixXcd coboundary_matrix(const GroupModel& G, int degree_bound) {
    const int dim = degree_bound + 1;
    const int ng = G.num_generators();
    Eigen::MatrixXcd D(static_cast<Eigen::Index>(ng) * dim, dim);
    const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(dim, dim);
    for (int s = 0; s < ng; ++s)
        D.block(static_cast<Eigen::Index>(s) * dim, 0, dim, dim) =
            slash_matrix(G.gens[static_cast<std::size_t>(s)], degree_bound) - I;
    return D;
}

RankResult svd_rank(const Eigen::MatrixXcd& M) {
    if (M.size() == 0) return RankResult{0, 1e12};
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M);
    const Eigen::VectorXd sv = svd.singularValues();
    const double top = sv.size() > 0 ? sv(0) : 0.0;
    if (top == 0.0) return RankResult{0, 1e12};
    const double thresh = 1e-8 * top;
    int rank = 0;
    while (rank < sv.size() && sv(rank) > thresh) ++rank;
    if (rank == sv.size()) return RankResult{rank, 1e12};
    const double dropped = sv(rank);
    const double kept = rank > 0 ? sv(rank - 1) : top;
    const double gap = dropped > 0.0 ? kept / dropped : 1e12;
    if (gap < 1e4)
        throw RankAmbiguous("svd_rank: spectral gap " + std::to_string(gap) +
                            " below 1e4; rank not well determined");
    return RankResult{rank, gap};
}

CohomologyDimensions h1_dimension(const GroupModel& G, int m) {
    if (G.kind != GroupModel::Kind::surface)
        throw UnsupportedGroup("h1_dimension: surface groups only");
    if (m > 0) throw ConfigError("h1_dimension: requires m <= 0");
    const int n = -2 * m;
    const int dim = n + 1;
    const int ng = G.num_generators();
    const RankResult rT = svd_rank(relator_condition_matrix(G, n));
    const RankResult rD = svd_rank(coboundary_matrix(G, n));
    CohomologyDimensions out;
    out.genus = G.genus;
    out.m = m;
    out.dim_module = dim;
    out.dim_cocycles = ng * dim - rT.rank;
    out.dim_coboundaries = rD.rank;
    out.dim_h1 = out.dim_cocycles - out.dim_coboundaries;
    out.dim_invariants = dim - rD.rank;
    out.sv_gap = std::min(rT.gap, rD.gap);
    return out;
}

CoboundaryTest solve_coboundary(const GroupModel& G, const std::vector<BoundedPoly>& values) {
    if (values.empty()) throw ConfigError("solve_coboundary: empty cocycle");
    const int n = values[0].degree_bound();
    const Eigen::MatrixXcd D = coboundary_matrix(G, n);
    const Eigen::VectorXcd b = stack_cocycle(values);
    if (b.size() != D.rows()) throw ConfigError("solve_coboundary: size mismatch");
    const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(D, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXcd p = svd.solve(b);
    const double scale = std::max(1.0, b.norm());
    const double residual = (D * p - b).norm() / scale;
    BoundedPoly witness(n);
    for (int i = 0; i <= n; ++i) witness.set_coeff(i, p(i));
    return CoboundaryTest{residual < 1e-6, std::move(witness), residual};
}

}  // namespace pluriperiod
