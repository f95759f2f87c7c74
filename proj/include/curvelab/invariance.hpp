#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curvelab/catalog.hpp"
#include "curvelab/groups.hpp"

namespace curvelab {

/// Outcome of testing one form against a full generator list: the scalar for
/// each generator when the form is fixed, recorded for audit.
struct InvarianceCertificate {
    std::string curve;
    std::string group;
    std::vector<std::pair<std::string, std::optional<FieldElement>>> per_generator;
    bool verdict = false;

    std::string to_json() const;
};

/// The scalar c with f(A v) = c * f(v), or nullopt when f is not fixed by A.
/// A symbolic pencil parameter passes through untouched, so a single call
/// certifies the whole pencil whenever c does not depend on lambda.
std::optional<FieldElement> check_invariance(const MultiPoly& f, const Projectivity& A);

InvarianceCertificate check_group_invariance(const MultiPoly& f, const std::string& curve_name,
                                             const GroupId& id);
InvarianceCertificate check_group_invariance(const CurveSpec& spec, const GroupId& id);

/// One joint eigenspace of the induced action on degree-d coefficient vectors:
/// a scalar per generator and a basis of the invariant forms.
struct InvariantSpace {
    std::vector<FieldElement> scalars;  // aligned with the generator list
    std::vector<MultiPoly> basis;
};

/// All joint eigenspaces of the generators of id acting on degree-d forms,
/// with eigenvalues sought in the subfield GF(p^E) of the ambient field.
/// These are exactly the linear systems of G-invariant degree-d curves.
std::vector<InvariantSpace> invariant_form_space(const GroupId& id, uint32_t d, uint32_t E,
                                                 const FieldCtx& ambient, size_t cap = 120);

}  // namespace curvelab
