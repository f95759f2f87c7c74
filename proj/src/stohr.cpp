#include "curvelab/stohr.hpp"

#include <json.hpp>

namespace curvelab {

std::optional<NonclassicalityWitness> extract_witness(const MultiPoly& f, uint64_t s) {
    const FieldCtx& F = f.ctx();
    if (f.uses_lambda()) fail(Err::MissingParameter, "bind lambda before the witness extraction");
    uint64_t t = s;
    uint32_t h = 0;
    while (t > 1 && t % F.p() == 0) {
        t /= F.p();
        ++h;
    }
    if (t != 1 || h == 0) fail(Err::InvalidParameters, "s must be a positive power of p");

    auto u1 = qth_root(f.partial_derivative(Var::X), s);
    auto u2 = qth_root(f.partial_derivative(Var::Y), s);
    auto u3 = qth_root(f.partial_derivative(Var::Z), s);
    if (!u1 || !u2 || !u3) return std::nullopt;

    MultiPoly hh = MultiPoly::constant(F, F.from_int(f.degree()));
    auto lhs = u1->pow(uint32_t(s)) * MultiPoly::variable(F, Var::X) +
               u2->pow(uint32_t(s)) * MultiPoly::variable(F, Var::Y) +
               u3->pow(uint32_t(s)) * MultiPoly::variable(F, Var::Z);
    if (lhs != hh * f) return std::nullopt;
    return NonclassicalityWitness{f, s, *u1, *u2, *u3, hh};
}

std::optional<NonclassicalityWitness> search_witness(const MultiPoly& f) {
    const FieldCtx& F = f.ctx();
    for (uint64_t s = F.p(); int64_t(s) <= f.degree(); s *= F.p()) {
        auto w = extract_witness(f, s);
        if (w) return w;
    }
    return std::nullopt;
}

FrobeniusCertificate frobenius_check(const NonclassicalityWitness& w, uint64_t qprime) {
    const FieldCtx& F = w.f.ctx();
    if (qprime % w.s != 0 || qprime / w.s == 0)
        fail(Err::InvalidParameters, "s must divide the Frobenius field size");
    uint64_t e = qprime / w.s;
    auto lhs = w.u1 * MultiPoly::variable(F, Var::X, uint32_t(e)) +
               w.u2 * MultiPoly::variable(F, Var::Y, uint32_t(e)) +
               w.u3 * MultiPoly::variable(F, Var::Z, uint32_t(e));
    FrobeniusCertificate cert;
    cert.s = w.s;
    cert.qprime = qprime;
    cert.quotient = divide_exact(lhs, w.f);
    cert.verdict = cert.quotient.has_value();
    return cert;
}

std::optional<FrobeniusCertificate> frobenius_search(const MultiPoly& f, uint64_t qprime) {
    const FieldCtx& F = f.ctx();
    for (uint64_t s = F.p(); int64_t(s) <= f.degree() && s < qprime; s *= F.p()) {
        if (qprime % s != 0) continue;
        auto w = extract_witness(f, s);
        if (!w) continue;
        auto cert = frobenius_check(*w, qprime);
        if (cert.verdict) return cert;
    }
    return std::nullopt;
}

int64_t hefez_voloch_count(int64_t d, uint64_t qprime) { return d * (int64_t(qprime) - d + 2); }

std::string NonclassicalityWitness::to_json() const {
    nlohmann::json j;
    j["s"] = s;
    j["u1"] = u1.to_string();
    j["u2"] = u2.to_string();
    j["u3"] = u3.to_string();
    j["h"] = h.to_string();
    j["degrees"] = {u1.degree(), u2.degree(), u3.degree(), h.degree()};
    return j.dump();
}

std::string FrobeniusCertificate::to_json() const {
    nlohmann::json j;
    j["s"] = s;
    j["qprime"] = qprime;
    j["verdict"] = verdict;
    j["quotient"] = quotient ? quotient->to_string() : "none";
    return j.dump();
}

}  // namespace curvelab
