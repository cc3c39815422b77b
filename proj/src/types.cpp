#include "duplexasr/types.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace duplexasr {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

double vec_sum(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
}

void require_nonneg(const std::vector<double>& v, const char* name) {
    for (double x : v)
        require(x >= 0.0, std::string(name) + " has a negative entry");
}

constexpr double kTimeTol = 1e-9;

}  // namespace

void SystemParams::validate() const {
    require(std::isfinite(gamma_e) && gamma_e > 0.0, "gamma_e must be > 0");
    require(std::isfinite(n1) && n1 > 0.0, "n1 must be > 0");
    require(std::isfinite(n2) && n2 > 0.0, "n2 must be > 0");
    require(std::isfinite(total_energy) && total_energy >= 0.0,
            "total_energy must be >= 0");
    require(num_subcarriers >= 1, "num_subcarriers must be >= 1");
    require(bandwidth_hz > 0.0, "bandwidth_hz must be > 0");
}

void ChannelRealization::validate(int num_subcarriers) const {
    const auto k = static_cast<std::size_t>(num_subcarriers);
    require(h21.size() == k && h12.size() == k && h11.size() == k && h22.size() == k,
            "channel gain vectors must all have length K");
    require(beta1.size() == k && beta2.size() == k,
            "beta vectors must have length K");
    for (std::size_t i = 0; i < k; ++i) {
        require(beta1[i] >= 0.0 && beta1[i] <= 1.0, "beta1 out of [0, 1]");
        require(beta2[i] >= 0.0 && beta2[i] <= 1.0, "beta2 out of [0, 1]");
    }
}

void validate_allocation(const HdUpaAllocation& a, const SystemParams& p,
                         double energy_tol) {
    require(a.t1 >= 0.0 && a.t2 >= 0.0, "time shares must be non-negative");
    require(std::abs(a.t1 + a.t2 - 1.0) <= kTimeTol, "t1 + t2 must equal 1");
    require(a.eps1 >= 0.0 && a.eps2 >= 0.0, "energies must be non-negative");
    const double used = p.num_subcarriers * (a.eps1 + a.eps2);
    require(std::abs(used - p.total_energy) <= energy_tol,
            "K*(eps1+eps2) must equal the energy budget");
}

void validate_allocation(const HdNupaAllocation& a, const SystemParams& p,
                         double energy_tol) {
    require(a.t1 >= 0.0 && a.t2 >= 0.0, "time shares must be non-negative");
    require(std::abs(a.t1 + a.t2 - 1.0) <= kTimeTol, "t1 + t2 must equal 1");
    require(a.eps1.size() == static_cast<std::size_t>(p.num_subcarriers) &&
                a.eps2.size() == static_cast<std::size_t>(p.num_subcarriers),
            "energy vectors must have length K");
    require_nonneg(a.eps1, "eps1");
    require_nonneg(a.eps2, "eps2");
    const double used = vec_sum(a.eps1) + vec_sum(a.eps2);
    require(std::abs(used - p.total_energy) <= energy_tol,
            "sum of energies must equal the energy budget");
}

void validate_allocation(const FdUpaAllocation& a, const SystemParams& p,
                         double energy_tol) {
    require(a.eps1 >= 0.0 && a.eps2 >= 0.0, "energies must be non-negative");
    const double used = p.num_subcarriers * (a.eps1 + a.eps2);
    require(std::abs(used - p.total_energy) <= energy_tol,
            "K*(eps1+eps2) must equal the energy budget");
}

void validate_allocation(const FdNupaAllocation& a, const SystemParams& p,
                         double energy_tol) {
    require(a.eps1.size() == static_cast<std::size_t>(p.num_subcarriers) &&
                a.eps2.size() == static_cast<std::size_t>(p.num_subcarriers),
            "energy vectors must have length K");
    require_nonneg(a.eps1, "eps1");
    require_nonneg(a.eps2, "eps2");
    const double used = vec_sum(a.eps1) + vec_sum(a.eps2);
    require(std::abs(used - p.total_energy) <= energy_tol,
            "sum of energies must equal the energy budget");
}

}  // namespace duplexasr
