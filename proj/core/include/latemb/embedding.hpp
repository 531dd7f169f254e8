#pragma once

#include <optional>

#include "latemb/standard_forms.hpp"

namespace latemb {

/// Certificate of an isometric embedding with scaling: an integer matrix
/// T whose columns are the images of the source basis vectors, with
///
///     T^t * target * T == degree * source    (exact)
///
/// The struct itself is plain data so that unverified certificates (for
/// example, parsed from a file) can be represented and then checked;
/// every constructor function in this module verifies its result before
/// returning and throws Errc::internal on failure.
struct Embedding {
    Int degree;        // positive scaling factor
    GramMatrix source; // rank n
    GramMatrix target; // rank m
    IntMatrix matrix;  // m x n

    bool operator==(const Embedding&) const = default;
};

/// Exact check of the defining identity. Throws Errc::dimension_mismatch
/// when the matrix shape does not fit the two forms.
bool verify(const Embedding& e);

/// Degree-1 certificate on the identity matrix.
Embedding identity_embedding(const GramMatrix& g);

/// (N -> P, d1) then (P -> M, d2) gives (N -> M, d1*d2). Throws
/// Errc::chain_mismatch unless inner.target == outer.source exactly.
Embedding compose(const Embedding& inner, const Embedding& outer);

/// Block-diagonal certificate on the direct sums; degrees must agree
/// (Errc::degree_mismatch).
Embedding direct_sum_embed(const Embedding& a, const Embedding& b);

/// Multiplies the matrix by h >= 1; the degree becomes h^2 * d.
Embedding amplify(const Embedding& e, const Int& h);

/// diag(1,-1) -> H with degree 2k, columns (1,k) and (1,-k); their norms
/// in H are 2k and -2k and they are orthogonal.
Embedding hyperbolic_pair(const Int& k);

/// Rank-1 restriction: <sign*2k> -> H, degree 1, column (1, sign*k).
Embedding single_into_h(const Int& k, Sign sign);

/// 8x8 integer M with M^t * M = c * I8, for c in {2, 3}.
IntMatrix orthogonal_multiplier(int c);

/// E8 -> <1>^8 of degree d in {2, 4, 6}. The degree-2 matrix is a fixed
/// 8x8 constant; degrees 4 and 6 are orthogonal_multiplier(d/2) times it.
/// Throws Errc::unsupported_degree otherwise.
Embedding l_matrix(int d);

/// +-E8 -> H^8 of degree d in {4, 8, 12}: the degree-(d/2) cube embedding
/// read into <+-2>^8, then each <+-2> generator sent to e1 +- e2 of its
/// own hyperbolic plane.
Embedding e8_into_hyperbolic(int d, Sign sign);

/// Columns of an orthogonal frame of 8 norm-k vectors in E8, i.e. F with
/// F^t * E8 * F = k * I8 — or nullopt when exhaustive search shows no
/// such frame exists (e.g. k = 1: E8 is even). Deterministic: the least
/// solution under the search's fixed enumeration order. Results for a
/// given k are computed once and cached.
std::optional<IntMatrix> frame_in_e8(const Int& k);

/// +-E8 -> +-E8 of degree d in {4, 8, 12}: frame_in_e8(d/2) composed
/// with the degree-2 cube embedding. Throws Errc::frame_not_found if the
/// search unexpectedly fails.
Embedding e8_into_e8(int d, Sign sign);

/// H -> H of degree k >= 1 via diag(1, k).
Embedding h_into_h(const Int& k);

/// H -> diag(1,-1) of degree 2k, columns (1,1) and (k,-k).
Embedding two_k_h_into_diag(const Int& k);

/// diag(s,s) -> diag(s,s) of degree 5, columns (1,2) and (2,-1).
Embedding five_pair_same_sign(Sign sign);

/// diag(1,-1) -> diag(1,-1) of degree 5, columns (3,2) and (2,3).
Embedding five_pair_mixed();

/// Same matrix between the negated forms; congruence commutes with
/// negation, so the certificate stays valid with the same degree.
Embedding negate_adapter(const Embedding& e);

} // namespace latemb
