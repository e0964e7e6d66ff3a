// Walks one weight of spo(2|6) at k = -2 through the library: dominance,
// both bounds, the flow, and the unitarity verdicts on either side.

#include <iostream>

#include "sflow/sflow.hpp"

int main() {
  using namespace sflow;
  const Family f = Family::spo(3);
  const Rational k(-2);
  const RhoChoice rho = default_rho(f);
  const FamilyData data = family_data(f);

  std::cout << f.display_name() << " at k=" << k << ", M_1(k)=" << level_capacities(f, k).capacities[0] << "\n";

  const Weight nu(f, {Rational(-1, 2), Rational(-1, 2), Rational(-1, 2)});
  const SectorLattice ns(f, k, Sector::NS, rho);
  std::cout << "nu=" << format_coords(nu) << " dominant(NS)=" << std::boolalpha << is_dominant(ns, nu) << "\n";

  const Rational ell = a_ns(f, k, nu, rho);
  const HighestWeight image = flow_hw(data, k, rho, {nu, ell});
  std::cout << "A^NS=" << ell << " -> nu^R=" << format_coords(image.nu) << ", l^R=" << image.ell
            << ", A^R(nu^R)=" << a_r(f, k, image.nu) << "\n";

  const MfReport mf = verify_mf(data, k, rho, nu);
  std::cout << "flow identity: " << mf.lhs << " = " << mf.rhs << " -> " << (mf.equal ? "holds" : "fails") << "\n";

  const auto ns_verdict = classify_ns(f, k, rho, nu, ell + Rational(1));
  const auto r_verdict = classify_r(f, k, rho, image.nu, image.ell + Rational(1));
  std::cout << "classify NS: " << to_string(ns_verdict.verdict) << ", R: " << to_string(r_verdict.verdict) << "\n";

  std::cout << "|P_+^k(NS)|=" << enumerate(ns).size()
            << ", bijective=" << bijection_check(data, k, rho).bijective() << "\n";
  return 0;
}
