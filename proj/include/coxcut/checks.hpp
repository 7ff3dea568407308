#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "constants.hpp"
#include "frame.hpp"
#include "voronoi.hpp"
#include "weyl.hpp"

namespace coxcut {

struct CheckResult {
  std::string name;
  bool passed = false;
  double value = 0.0;
  double expected = 0.0;
  double delta = 0.0;
};

namespace detail {

inline CheckResult near(std::string name, double value, double expected, double tol) {
  const double delta = std::abs(value - expected);
  return {std::move(name), delta <= tol, value, expected, delta};
}

inline CheckResult equal(std::string name, long value, long expected) {
  return {std::move(name), value == expected, static_cast<double>(value), static_cast<double>(expected),
          static_cast<double>(std::labs(value - expected))};
}

} // namespace detail

/// The invariant suite behind `coxcut check`: group relations, frame
/// orthonormality, projected norms and orbit decompositions.
inline std::vector<CheckResult> run_checks() {
  using detail::equal;
  using detail::near;
  std::vector<CheckResult> out;

  for (int n = 4; n <= 6; ++n) {
    const RootDatum d = build_root_datum(n);
    std::vector<int> e1(n, 0), e2(n, 0), en(n, 0);
    e1[0] = 1;
    e2[1] = 1;
    en[n - 1] = 1;
    const std::string b = "B" + std::to_string(n);
    out.push_back(equal(b + " orbit (10..0) size", static_cast<long>(orbit(d, e1).size()), 2L * n));
    out.push_back(equal(b + " orbit (010..0) size", static_cast<long>(orbit(d, e2).size()), 2L * n * (n - 1)));
    out.push_back(equal(b + " orbit (0..01) size", static_cast<long>(orbit(d, en).size()), 1L << n));
    const auto [r1, r2] = dihedral_generators(d);
    out.push_back(equal(b + " order R1R2", (r1 * r2).order(), 2L * n));
  }

  for (int n = min_rank; n <= max_rank; ++n) {
    const RootDatum d = build_root_datum(n);
    const auto eig = cartan_eigensystem(d);
    double err = 0.0;
    for (const auto& e : eig) err = std::max(err, std::abs(e.value - 2.0 * (1.0 - std::cos(e.exponent * pi / (2.0 * n)))));
    out.push_back(near("B" + std::to_string(n) + " Cartan spectrum", err, 0.0, tol::numeric));
    out.push_back(near("B" + std::to_string(n) + " Coxeter frame orthonormal", orthonormality_error(coxeter_plane_frame(d).basis),
                       0.0, tol::exact));
  }

  {
    const RootDatum d = build_root_datum(6);
    const auto g = h3_generators(d);
    auto rel = [&](const std::string& name, const GroupElement& x, int k) {
      out.push_back(equal("H3 relation " + name, x.pow(k).is_identity() ? 1 : 0, 1));
    };
    rel("R1^2", g.r1, 2);
    rel("R2^2", g.r2, 2);
    rel("R3^2", g.r3, 2);
    rel("(R1R3)^2", g.r1 * g.r3, 2);
    rel("(R1R2)^3", g.r1 * g.r2, 3);
    rel("(R2R3)^5", g.r2 * g.r3, 5);
    out.push_back(equal("H3 closure size", static_cast<long>(generate_group(g.list()).size()), 120));
  }
  {
    const RootDatum d = build_root_datum(5);
    out.push_back(equal("D5d closure size", static_cast<long>(generate_group(d5d_generators(d).list()).size()), 20));
  }

  const auto five = b5_fivefold_frame();
  out.push_back(near("fivefold B orthogonal", orthonormality_error(five.b), 0.0, tol::exact));
  out.push_back(near("fivefold frame orthonormal", orthonormality_error(five.frame.basis), 0.0, tol::exact));
  const auto ico = b6_h3_frame();
  out.push_back(near("icosahedral matrix orthogonal", orthonormality_error(ico.m), 0.0, tol::exact));
  out.push_back(near("tbasis orthonormal", orthonormality_error(b4_t_basis().basis), 0.0, tol::exact));

  {
    const RootDatum d = build_root_datum(4);
    const auto proj = project_to_3d(voronoi_cell(d).vertices, b4_t_basis().par_basis(), true);
    out.push_back(equal("B4 cube shadow vertices", static_cast<long>(proj.points.size()), 14));
    out.push_back(equal("B4 cube vertices at origin", proj.at_origin, 2));
  }
  {
    const RootDatum d = build_root_datum(5);
    const auto parts = decompose_orbits(voronoi_cell(d).vertices, d5d_generators(d).list());
    std::string sizes;
    for (const auto& p : parts) sizes += (sizes.empty() ? "" : "+") + std::to_string(p.size());
    out.push_back(equal("B5 cube D5d orbits 2+10+10+10 (got " + sizes + ")", sizes == "2+10+10+10" ? 1 : 0, 1));
    const auto solids = named_solids(5);
    for (const auto& s : solids)
      if (s.name == "rhombic_icosahedron")
        out.push_back(equal("B5 rhombic icosahedron vertices", static_cast<long>(s.shape.vertices.size()), 22));
  }

  const auto dec = b6_cube_decomposition();
  const Eigen::MatrixXd par = ico.frame.par_basis();
  auto orbit_norm = [&](int k) {
    return (par * dec.orbits[static_cast<std::size_t>(k)].front().to_real()).norm();
  };
  const double s2 = std::sqrt(2.0);
  out.push_back(near("norm orbit III", orbit_norm(2), tau / s2, tol::numeric));
  out.push_back(near("norm orbit I", orbit_norm(0), std::sqrt(0.3 * (2.0 + tau)), tol::numeric));
  out.push_back(near("norm orbit IV", orbit_norm(3), std::sqrt(0.3 * (2.0 + sigma)), tol::numeric));
  out.push_back(near("norm orbit II", orbit_norm(1), -sigma / s2, tol::numeric));
  out.push_back(near("ratio III/II", orbit_norm(2) / orbit_norm(1), tau * tau, tol::numeric));
  out.push_back(near("ratio I/IV", orbit_norm(0) / orbit_norm(3), tau, tol::numeric));
  for (int k = 0; k < 4; ++k)
    out.push_back(equal(std::string("orbit ") + CubeDecomposition::names[static_cast<std::size_t>(k)] + " size",
                        static_cast<long>(dec.orbits[static_cast<std::size_t>(k)].size()), k == 0 || k == 3 ? 20 : 12));
  return out;
}

} // namespace coxcut
