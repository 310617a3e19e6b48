#pragma once

#include "mmkde/meijer.hpp"

#include <string>
#include <vector>

namespace mmkde {

//! Meijer parameterisation of a named distribution.
//!
//! Names are case-insensitive; '-', '_' and spaces are ignored. Parameter
//! conventions (rates vs scales) follow the usual textbook forms:
//!   betaprime(a, b)   burr(c, k)         chi(k)          chi2(k)
//!   dagum(a, b, p)    erlang(mu, k)      fisher(d1, d2)  frechet(alpha, s)
//!   gamma(alpha, rate) gpd(sigma, zeta)  invgamma(alpha, beta)  levy(c)
//!   loglogistic(a, b) maxwell(s)         nakagami(m, omega)  rayleigh(s)
//!   singhmaddala(a, b, q) stacy(a, d, p) weibull(mu, k)
//! plus the aliases exp(rate) and invweibull(mu, k).
//! Throws LookupError for unknown names and DomainError for bad parameters.
MeijerKernel catalog_params(const std::string& name, const std::vector<double>& params);

//! Canonical names of the catalog rows (aliases excluded).
std::vector<std::string> catalog_names();

//! Lower-cased name with '-', '_' and ' ' removed.
std::string normalize_name(const std::string& name);

} // namespace mmkde
