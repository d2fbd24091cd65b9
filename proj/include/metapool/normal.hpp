#pragma once

namespace metapool {

// Standard normal CDF, absolute error below 1e-14. Implemented in-repo
// (Cody-style rational erfc) so emitted numbers are identical across
// platforms and libm versions.
double normal_cdf(double x);

// Inverse standard normal CDF on (0, 1), absolute error below 1e-9
// (Wichura's rational approximation). Throws AnalysisError(out_of_domain)
// for p outside the open interval.
double normal_quantile(double p);

}  // namespace metapool
