#pragma once

#include <json.hpp>

#include "mcx/automorphism.hpp"
#include "mcx/idempotent.hpp"
#include "mcx/multicomplex.hpp"
#include "mcx/oracle.hpp"
#include "mcx/preserving.hpp"
#include "mcx/signed_permutation.hpp"

namespace mcx {

using Json = nlohmann::json;

/// {"n": n, "coeffs": {"<unit>": "p/q"}} with zero coefficients omitted.
Json to_json(const MulticomplexNumber& x);
/// Accepts "p/q", "p" or integer coefficient values.
MulticomplexNumber multicomplex_from_json(const Json& j);

/// {"n": n, "components": [{"re": "p/q", "im": "p/q"}, ...]}.
Json to_json(const IdempotentVector& v);
IdempotentVector idempotent_from_json(const Json& j);

/// {"N": N, "images": [...]}.
Json to_json(const SignedPermutation& p);
SignedPermutation permutation_from_json(const Json& j);

/// {"kernel_dim", "matrix", "perm", "unit_images"}; perm written in `labels`.
Json to_json(const PreservingInvolution& p, EpsOrder labels);

Json to_json(const VerificationReport& r);

}  // namespace mcx
