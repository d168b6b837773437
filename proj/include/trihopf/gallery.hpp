#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trihopf/analysis.hpp"
#include "trihopf/serialize.hpp"

namespace trihopf {

struct GalleryObject {
  std::string builder;
  Json params;
  HopfPresentation hopf;
  std::optional<Tensor2> r;
};

// sweedler {lambda}, hn {n}, klein_pointed {n10, n11}, dim16, dim36, cotriangular_p3,
// bicross_s3, group_s3, dual_group_s3.
std::vector<std::string> gallery_builders();
// Missing parameters take their defaults; UsageError for unknown builders or parameters.
GalleryObject build_gallery(const std::string& builder, const Json& params = Json::object());
// Defaults filled in, values normalized (lambda as a rational string).
Json normalized_params(const std::string& builder, const Json& params);

// Sweedler's algebra on 1, g, x, gx and R_lambda = R_g - (lambda/2)(x (x) x - x (x) gx + gx (x) gx + gx (x) x).
HopfPresentation sweedler_hopf();
Tensor2 sweedler_r_matrix(const Rational& lambda);
// G = Z2 x| (Z/3)^2 with the generator acting by (x, y) -> (x, -y), H = (Z/3)^2,
// J = 1/9 sum_{a,b} zeta_3^(a1 b2 - a2 b1) a (x) b.
CotriangularInput cotriangular_p3_input();

// Structural profile; every entry is exact. Keys: dim, conductor, hopf_axioms, grouplikes,
// commutative, cocommutative, s2_identity, s4_identity, blocks, radical_dim, dual_blocks,
// chevalley, and with R: quasitriangular, triangular, r_rank, minimal_rank,
// drinfeld_u_one, drinfeld_u_grouplike, drinfeld_u_involutive, drinfeld_u, categorical_dims,
// categorical_dims_integral.
struct GalleryReport {
  Json profile;
  Report checks;  // Hopf axioms and, with R, the quasitriangular axioms
};
GalleryReport gallery_report(const HopfPresentation& h, const std::optional<Tensor2>& r);

// Manifest at <gallery dir>/manifest.json.
std::string gallery_dir();
Json load_manifest();
// Entries of the manifest for a builder and normalized parameters.
std::vector<Json> manifest_entries(const Json& manifest, const std::string& builder, const Json& params);
// Checks profile[key] == expect[key]["value"] for each expected key.
Report compare_expectations(const Json& profile, const Json& expect);

}  // namespace trihopf
