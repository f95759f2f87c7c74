#include "curvelab/invariance.hpp"

#include <json.hpp>

namespace curvelab {

std::optional<FieldElement> check_invariance(const MultiPoly& f, const Projectivity& A) {
    if (&f.ctx() != &A.ctx()) fail(Err::ContextMismatch, "form and projectivity contexts differ");
    return proportional(A.act_on(f), f);
}

InvarianceCertificate check_group_invariance(const MultiPoly& f, const std::string& curve_name,
                                             const GroupId& id) {
    InvarianceCertificate cert;
    cert.curve = curve_name;
    cert.group = id.name();
    cert.verdict = true;
    for (const auto& g : generators_for(id, f.ctx())) {
        auto c = check_invariance(f, g);
        cert.per_generator.push_back({g.label(), c});
        if (!c) cert.verdict = false;
    }
    return cert;
}

InvarianceCertificate check_group_invariance(const CurveSpec& spec, const GroupId& id) {
    return check_group_invariance(spec.poly, spec.name, id);
}

std::string InvarianceCertificate::to_json() const {
    nlohmann::json j;
    j["curve"] = curve;
    j["group"] = group;
    auto arr = nlohmann::json::array();
    for (const auto& [label, c] : per_generator)
        arr.push_back({{"label", label}, {"scalar", c ? c->to_string() : "none"}});
    j["generators"] = arr;
    j["verdict"] = verdict;
    return j.dump();
}

namespace {

// degree-d monomials in canonical order
std::vector<Mono> degree_monomials(uint32_t d) {
    std::vector<Mono> ms;
    for (uint32_t x = d + 1; x-- > 0;)
        for (uint32_t y = d - x + 1; y-- > 0;) ms.push_back({x, y, d - x - y, 0});
    return ms;
}

// nullspace basis of the rows x cols matrix (row-major), as column vectors
std::vector<std::vector<uint32_t>> nullspace(const FieldCtx& F, std::vector<uint32_t> a,
                                             size_t rows, size_t cols) {
    std::vector<size_t> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pr = r;
        while (pr < rows && a[pr * cols + c] == 0) ++pr;
        if (pr == rows) continue;
        std::swap_ranges(a.begin() + long(r * cols), a.begin() + long((r + 1) * cols),
                         a.begin() + long(pr * cols));
        uint32_t piv_inv = F.inv(a[r * cols + c]);
        for (size_t j = c; j < cols; ++j) a[r * cols + j] = F.mul(a[r * cols + j], piv_inv);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            uint32_t m = a[i * cols + c];
            if (m == 0) continue;
            for (size_t j = c; j < cols; ++j)
                a[i * cols + j] = F.sub(a[i * cols + j], F.mul(m, a[r * cols + j]));
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<uint32_t>> basis;
    for (size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<uint32_t> v(cols, 0);
        v[fc] = 1;
        for (size_t i = 0; i < pivot_col.size(); ++i)
            v[pivot_col[i]] = F.neg(a[i * cols + fc]);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

std::vector<InvariantSpace> invariant_form_space(const GroupId& id, uint32_t d, uint32_t E,
                                                 const FieldCtx& F, size_t cap) {
    if (d < 1) fail(Err::InvalidParameters, "degree must be positive");
    const size_t D = size_t(d + 1) * (d + 2) / 2;
    if (D > cap) fail(Err::CapExceeded, "coefficient space dimension exceeds the cap");
    if (E == 0 || F.k() % E != 0)
        fail(Err::InvalidParameters, "eigenvalue search degree must divide the ambient degree");

    const auto gens = generators_for(id, F);
    const auto monos = degree_monomials(d);

    // column j of M[g] = coefficients of mono_j composed with g
    std::vector<std::vector<uint32_t>> action;  // row-major D x D per generator
    for (const auto& g : gens) {
        std::vector<uint32_t> M(D * D, 0);
        for (size_t j = 0; j < D; ++j) {
            auto img = g.act_on(MultiPoly::monomial(F, F.one(), monos[j]));
            for (const auto& [m, c] : img.terms()) {
                auto it = std::find_if(monos.begin(), monos.end(),
                                       [&](const Mono& mm) { return mm == m; });
                if (it == monos.end()) fail(Err::InvalidParameters, "action left the degree space");
                M[size_t(it - monos.begin()) * D + j] = c;
            }
        }
        action.push_back(std::move(M));
    }

    std::vector<uint32_t> eigen_candidates;
    for (uint32_t v : F.subfield_elements(E))
        if (v != 0) eigen_candidates.push_back(v);

    struct State {
        std::vector<uint32_t> scalars;
        std::vector<std::vector<uint32_t>> basis;  // columns, length D
    };
    std::vector<State> frontier;
    {
        State init;
        init.basis.resize(D, std::vector<uint32_t>(D, 0));
        for (size_t i = 0; i < D; ++i) init.basis[i][i] = 1;
        frontier.push_back(std::move(init));
    }

    for (size_t gi = 0; gi < gens.size(); ++gi) {
        std::vector<State> next;
        const auto& M = action[gi];
        for (const auto& st : frontier) {
            const size_t r = st.basis.size();
            for (uint32_t c : eigen_candidates) {
                // rows of (M - cI) * B, size D x r
                std::vector<uint32_t> N(D * r, 0);
                for (size_t col = 0; col < r; ++col) {
                    const auto& b = st.basis[col];
                    for (size_t i = 0; i < D; ++i) {
                        uint32_t s = 0;
                        for (size_t j = 0; j < D; ++j)
                            if (b[j]) s = F.add(s, F.mul(M[i * D + j], b[j]));
                        s = F.sub(s, F.mul(c, b[i]));
                        N[i * r + col] = s;
                    }
                }
                auto xs = nullspace(F, N, D, r);
                if (xs.empty()) continue;
                State ns;
                ns.scalars = st.scalars;
                ns.scalars.push_back(c);
                for (const auto& x : xs) {
                    std::vector<uint32_t> v(D, 0);
                    for (size_t col = 0; col < r; ++col)
                        if (x[col])
                            for (size_t i = 0; i < D; ++i)
                                v[i] = F.add(v[i], F.mul(st.basis[col][i], x[col]));
                    ns.basis.push_back(std::move(v));
                }
                next.push_back(std::move(ns));
            }
        }
        frontier = std::move(next);
        if (frontier.empty()) break;
    }

    std::vector<InvariantSpace> out;
    for (const auto& st : frontier) {
        InvariantSpace s;
        for (uint32_t c : st.scalars) s.scalars.push_back({&F, c});
        for (const auto& v : st.basis) {
            MultiPoly f(F);
            for (size_t i = 0; i < D; ++i) f.add_term(monos[i], v[i]);
            s.basis.push_back(f.normalized());
        }
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace curvelab
