#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mehr/ehrhart.hpp"
#include "mehr/mixed_invariants.hpp"
#include "mehr/root_analysis.hpp"

namespace mehr {

/// Malformed or inconsistent user input; messages name the offending field.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CollectionSpec {
    std::string name;
    std::vector<LatticePolytope> polytopes;
};

/// Accepts {"name":..., "polytopes":[...]}, a bare array of polytope
/// objects, or a single polytope object. Polytopes are {"vertices":[[..]]}
/// or {"builtin":"cube"|"simplex"|"segment","dim":d,"scale":s}.
CollectionSpec parse_collection(const std::string& text);

std::string render_polytope(const LatticePolytope& p);
std::string render_count(const CountResult& c);
std::string render_ehrhart(const EhrhartPolynomial& e);
std::string render_multivariate(const MultivariatePolynomial& e);
std::string render_hstar(const HStarVector& h);
std::string render_mixed_hstar(const MixedHStarVector& h);
std::string render_mixed_volume_table(const MixedVolumeTable& t);
std::string render_dmv(const Int& value, const std::vector<SubsetCount>* trace);
std::string render_mixed_ehrhart(const MixedEhrhartResult& me, int degree,
                                 const std::vector<SubsetCount>* trace);
std::string render_me_check(const std::vector<Rat>& inclusion_exclusion,
                            const std::vector<Rat>& from_multivariate, bool agree);
std::string render_root_report(const MixedHStarVector& h, const RootReport& r);
std::string render_dilation_report(const DilationReport& rep);  // one JSON line
std::string render_find_r(const std::optional<Coord>& r, Coord r_max);

/// Stderr logging controlled by MIXED_EHRHART_LOG (quiet | info | trace).
enum class LogLevel { Quiet = 0, Info = 1, Trace = 2 };
LogLevel log_level();
void log_info(const std::string& message);
void log_trace(const std::string& message);

}  // namespace mehr
