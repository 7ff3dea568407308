#include <coxcut/constants.hpp>
#include <coxcut/cut_project.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace coxcut;

namespace {

struct Setup {
  RootDatum d;
  Frame f;
  Window w;
};

Setup coxeter_setup(int n, WindowMode mode, Shift shift) {
  Setup s{build_root_datum(n), {}, {}};
  s.f = coxeter_plane_frame(s.d);
  s.w = build_window(s.d, s.f, mode, std::move(shift));
  return s;
}

Pattern patch(const Setup& s, double r) {
  Pattern p = generate_patch(s.d, s.f, s.w, r);
  attach_edges(p);
  return p;
}

std::set<std::vector<int>> lattice_set(const Pattern& p) {
  std::set<std::vector<int>> out;
  for (const auto& q : p.points) out.insert(q.a);
  return out;
}

// Every integer vector with entries in [-k, k].
void for_each_box(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> a(static_cast<std::size_t>(n), -k);
  while (true) {
    fn(a);
    int i = 0;
    while (i < n && a[static_cast<std::size_t>(i)] == k) a[static_cast<std::size_t>(i++)] = -k;
    if (i == n) return;
    ++a[static_cast<std::size_t>(i)];
  }
}

} // namespace

TEST(Window, ModeNames) {
  EXPECT_EQ(window_mode_from("hull"), WindowMode::hull);
  EXPECT_EQ(window_mode_from("disc"), WindowMode::disc);
  EXPECT_EQ(to_string(WindowMode::disc), "disc");
  EXPECT_THROW(window_mode_from("ball"), WindowError);
}

TEST(Window, RejectsUnsupportedConfigurations) {
  const auto d4 = build_root_datum(4);
  // the t-basis leaves a one-dimensional window space
  EXPECT_THROW(build_window(d4, b4_t_basis(), WindowMode::hull, Shift::zero(4)), WindowError);
  EXPECT_THROW(build_window(d4, coxeter_plane_frame(d4), WindowMode::hull, Shift::zero(5)), WindowError);
  EXPECT_THROW(build_window(d4, coxeter_plane_frame(build_root_datum(5)), WindowMode::hull, Shift::zero(4)), RankError);
}

TEST(Window, DiscRadiusIsTheFarthestProjectedCubeVertex) {
  for (int n = 4; n <= 6; ++n) {
    const auto s = coxeter_setup(n, WindowMode::disc, Shift::omega(n));
    double far = 0.0;
    for_each_box(n, 1, [&](const std::vector<int>& a) {
      if (std::any_of(a.begin(), a.end(), [](int x) { return x == 0; })) return;
      Eigen::VectorXd v(n);
      for (int i = 0; i < n; ++i) v(i) = 0.5 * a[static_cast<std::size_t>(i)];
      far = std::max(far, (s.w.basis * v).norm());
    });
    EXPECT_NEAR(s.w.radius, far, tol::exact) << n;
  }
  EXPECT_NEAR(coxeter_setup(4, WindowMode::disc, Shift::zero(4)).w.radius, std::sqrt(2.0 + std::sqrt(2.0)) / 2.0, tol::exact);
}

TEST(Window, ZeroShiftHullIsCentrallySymmetric) {
  for (int n = 4; n <= 6; ++n) {
    const auto s = coxeter_setup(n, WindowMode::hull, Shift::zero(n));
    EXPECT_NEAR(s.w.centre.norm(), 0.0, tol::exact);
    for (const auto& v : s.w.vertices) {
      const bool found = std::any_of(s.w.vertices.begin(), s.w.vertices.end(),
                                     [&](const Eigen::VectorXd& u) { return (u + v).norm() < tol::numeric; });
      EXPECT_TRUE(found);
    }
    for (const auto& v : s.w.vertices) EXPECT_TRUE(s.w.contains(v));
    EXPECT_TRUE(s.w.contains(s.w.centre));
  }
}

TEST(Window, CentreIsInteriorAndFarPointsAreRejected) {
  const auto s = coxeter_setup(5, WindowMode::hull, Shift::omega(5));
  EXPECT_TRUE(s.w.contains(s.w.centre, -tol::numeric));
  Eigen::VectorXd far = s.w.centre;
  far(0) += 10.0;
  EXPECT_FALSE(s.w.contains(far));
}

TEST(Window, IcosahedralWindowIsARhombicTriacontahedron) {
  const auto d = build_root_datum(6);
  const auto w = build_window(d, b6_h3_frame().frame, WindowMode::hull, Shift::zero(6));
  ASSERT_EQ(w.dim(), 3);
  std::vector<Eigen::Vector3d> v;
  for (const auto& x : w.vertices) v.emplace_back(x(0), x(1), x(2));
  EXPECT_EQ(v.size(), 32u);
  EXPECT_EQ(w.facets.size(), 30u);
  // perpendicular images: 12 outer and 20 inner vertices on a zonohedron with 30 rhombic faces
  const auto classes = norm_classes(v);
  ASSERT_EQ(classes.size(), 2u);
  EXPECT_EQ(classes[0].count, 12);
  EXPECT_EQ(classes[1].count, 20);
  const auto hull = convex_hull_3d(v);
  EXPECT_EQ(hull.faces.size(), 30u);
  for (const auto& f : hull.faces) EXPECT_EQ(f.size(), 4u);
}

TEST(Accept, GoldenCountsForTheOctagonalDisc) {
  // Independent oracle: eigenplanes of the B4 Coxeter element computed numerically,
  // tuples with max |a_i| <= 2.
  for (const auto& [shift, expected] : {std::pair{Shift::omega(4), 110}, std::pair{Shift::zero(4), 105}}) {
    const auto s = coxeter_setup(4, WindowMode::disc, shift);
    int count = 0;
    for_each_box(4, 2, [&](const std::vector<int>& a) { count += accept(a, s.w) ? 1 : 0; });
    EXPECT_EQ(count, expected) << shift.label;
  }
}

TEST(Accept, OriginIsAcceptedForStandardShifts) {
  for (int n = 4; n <= 6; ++n)
    for (const auto mode : {WindowMode::hull, WindowMode::disc}) {
      const std::vector<int> zero(static_cast<std::size_t>(n), 0);
      EXPECT_TRUE(accept(zero, coxeter_setup(n, mode, Shift::zero(n)).w));
      EXPECT_TRUE(accept(zero, coxeter_setup(n, mode, Shift::omega(n)).w));
    }
}

TEST(Accept, HullIsInsideDisc) {
  for (int n = 4; n <= 5; ++n) {
    const auto hull = coxeter_setup(n, WindowMode::hull, Shift::omega(n));
    const auto disc = coxeter_setup(n, WindowMode::disc, Shift::omega(n));
    int in_hull = 0, in_disc = 0;
    for_each_box(n, 3, [&](const std::vector<int>& a) {
      const bool h = accept(a, hull.w), c = accept(a, disc.w);
      if (h) {
        EXPECT_TRUE(c);
      }
      in_hull += h;
      in_disc += c;
    });
    EXPECT_LE(in_hull, in_disc);
    // the disc adds points near the window's corners once the patch is large enough
    const auto big_hull = lattice_set(patch(hull, 8.0));
    const auto big_disc = lattice_set(patch(disc, 8.0));
    EXPECT_LT(big_hull.size(), big_disc.size());
    EXPECT_TRUE(std::includes(big_disc.begin(), big_disc.end(), big_hull.begin(), big_hull.end()));
  }
}

TEST(Patch, MatchesBruteForceEnumeration) {
  for (int n = 4; n <= 5; ++n)
    for (const auto mode : {WindowMode::hull, WindowMode::disc}) {
      const auto s = coxeter_setup(n, mode, Shift::omega(n));
      const double r = 2.5;
      const auto got = lattice_set(patch(s, r));
      std::set<std::vector<int>> want;
      const Eigen::MatrixXd par = s.f.par_basis();
      for_each_box(n, 5, [&](const std::vector<int>& a) {
        Eigen::VectorXd x(n);
        for (int i = 0; i < n; ++i) x(i) = a[static_cast<std::size_t>(i)];
        if ((par * x).norm() <= r + tol::numeric && accept(a, s.w)) want.insert(a);
      });
      EXPECT_EQ(got, want) << n << ' ' << to_string(mode);
      EXPECT_FALSE(got.empty());
    }
}

TEST(Patch, PointsCarryTheirProjections) {
  const auto s = coxeter_setup(6, WindowMode::hull, Shift::zero(6));
  const auto p = patch(s, 4.0);
  const Eigen::MatrixXd par = s.f.par_basis();
  for (const auto& q : p.points) {
    Eigen::VectorXd x(6);
    for (int i = 0; i < 6; ++i) x(i) = q.a[static_cast<std::size_t>(i)];
    EXPECT_LT((par * x - q.par).norm(), tol::exact);
    EXPECT_LT((s.w.project(x) - q.perp).norm(), tol::exact);
    EXPECT_LE(q.par.norm(), 4.0 + tol::numeric);
    EXPECT_TRUE(s.w.contains(q.perp));
  }
  EXPECT_TRUE(std::is_sorted(p.points.begin(), p.points.end(), [](const auto& a, const auto& b) { return a.a < b.a; }));
  EXPECT_EQ(p.meta.rank, 6);
  EXPECT_EQ(p.meta.frame_id, s.f.id);
}

TEST(Patch, GrowsMonotonicallyWithRadius) {
  const auto s = coxeter_setup(5, WindowMode::hull, Shift::zero(5));
  const auto small = lattice_set(patch(s, 3.0));
  const auto large = lattice_set(patch(s, 5.0));
  EXPECT_LT(small.size(), large.size());
  EXPECT_TRUE(std::includes(large.begin(), large.end(), small.begin(), small.end()));
}

TEST(Patch, IsDeterministic) {
  const auto s = coxeter_setup(4, WindowMode::disc, Shift::omega(4));
  const auto a = patch(s, 5.0), b = patch(s, 5.0);
  ASSERT_EQ(a.points.size(), b.points.size());
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    EXPECT_EQ(a.points[i].a, b.points[i].a);
    EXPECT_EQ(a.points[i].par, b.points[i].par);
  }
  ASSERT_EQ(a.edges.size(), b.edges.size());
}

TEST(Patch, BudgetIsEnforced) {
  const auto s = coxeter_setup(6, WindowMode::hull, Shift::zero(6));
  EXPECT_THROW(generate_patch(s.d, s.f, s.w, 50.0, 1e3), BudgetError);
  try {
    generate_patch(s.d, s.f, s.w, 50.0, 1e3);
  } catch (const BudgetError& e) {
    EXPECT_GT(e.estimate(), 1e3);
    EXPECT_EQ(e.budget(), 1e3);
  }
  EXPECT_THROW(generate_patch(s.d, s.f, s.w, 0.0), Error);
}

TEST(Patch, FarCustomShiftStillGivesPoints) {
  Eigen::VectorXd v(5);
  v << 37.3, -41.1, 12.8, 99.45, -3.2;
  const auto s = coxeter_setup(5, WindowMode::hull, Shift::custom(v));
  const auto p = patch(s, 4.0);
  EXPECT_GT(p.points.size(), 20u);
  EXPECT_EQ(p.meta.shift.label, "custom");
}

TEST(Edges, MatchQuadraticOracle) {
  for (int n = 4; n <= 6; ++n) {
    const auto s = coxeter_setup(n, WindowMode::hull, Shift::omega(n));
    const auto p = patch(s, 4.0);
    std::set<std::tuple<int, int, int>> want;
    for (std::size_t i = 0; i < p.points.size(); ++i)
      for (std::size_t j = 0; j < p.points.size(); ++j) {
        int axis = 0, moved = 0;
        for (int k = 0; k < n; ++k) {
          const int diff = p.points[j].a[static_cast<std::size_t>(k)] - p.points[i].a[static_cast<std::size_t>(k)];
          if (diff != 0) ++moved;
          if (diff == 1) axis = k + 1;
        }
        if (moved == 1 && axis != 0) want.insert({static_cast<int>(i), static_cast<int>(j), axis});
      }
    std::set<std::tuple<int, int, int>> got;
    for (const auto& e : p.edges) {
      got.insert({e.from, e.to, e.axis});
      const Eigen::VectorXd diff = p.points[static_cast<std::size_t>(e.to)].par - p.points[static_cast<std::size_t>(e.from)].par;
      EXPECT_NEAR(diff.norm(), p.star.col(e.axis - 1).norm(), tol::numeric);
    }
    EXPECT_EQ(got, want) << n;
    EXPECT_FALSE(got.empty());
  }
}

TEST(Edges, DirectionCounts) {
  const std::pair<int, std::size_t> want[] = {{4, 8}, {5, 10}, {6, 12}};
  for (const auto& [n, count] : want) {
    const auto p = patch(coxeter_setup(n, WindowMode::hull, Shift::zero(n)), 6.0);
    const auto dirs = edge_directions(p);
    EXPECT_EQ(dirs.size(), count) << n;
    for (std::size_t k = 1; k < dirs.size(); ++k) EXPECT_NEAR(dirs[k] - dirs[k - 1], 2 * pi / static_cast<double>(count), tol::match);
  }
}

TEST(Symmetry, ZeroShiftPatchesHaveCoxeterNumberSymmetry) {
  for (int n = 4; n <= 6; ++n) {
    const auto p = patch(coxeter_setup(n, WindowMode::hull, Shift::zero(n)), 7.0);
    EXPECT_LT(symmetry_deviation(p, 2 * n), tol::match) << n;
  }
}

TEST(Symmetry, OrderOneAndInvalidOrders) {
  const auto p = patch(coxeter_setup(4, WindowMode::disc, Shift::omega(4)), 5.0);
  EXPECT_EQ(symmetry_deviation(p, 1), 0.0);
  EXPECT_THROW(symmetry_deviation(p, 0), Error);
  EXPECT_THROW(symmetry_deviation(p, -3), Error);
  // a seven-fold rotation is not a symmetry of an octagonal patch
  EXPECT_GT(symmetry_deviation(p, 7), 0.1);
}

TEST(Tiles, CensusLabels) {
  auto keys = [](const std::map<std::string, long>& m) {
    std::set<std::string> k;
    for (const auto& [name, count] : m) {
      EXPECT_GT(count, 0) << name;
      k.insert(name);
    }
    return k;
  };
  EXPECT_EQ(keys(tile_census(patch(coxeter_setup(4, WindowMode::disc, Shift::omega(4)), 6.0))),
            (std::set<std::string>{"rhombus_45", "square"}));
  EXPECT_EQ(keys(tile_census(patch(coxeter_setup(5, WindowMode::hull, Shift::zero(5)), 6.0))),
            (std::set<std::string>{"rhombus_36", "rhombus_72"}));
  EXPECT_EQ(keys(tile_census(patch(coxeter_setup(6, WindowMode::hull, Shift::zero(6)), 6.0))),
            (std::set<std::string>{"rhombus_30", "square", "triangle"}));
}

TEST(Icosahedral, EdgesHaveLengthOneOverRootTwo) {
  Pattern p = generate_icosahedral_patch(2.5);
  attach_edges(p);
  ASSERT_FALSE(p.edges.empty());
  EXPECT_EQ(p.par_dim(), 3);
  for (const auto& e : p.edges)
    EXPECT_NEAR((p.points[static_cast<std::size_t>(e.to)].par - p.points[static_cast<std::size_t>(e.from)].par).norm(),
                1.0 / std::sqrt(2.0), tol::numeric);
  // the origin has twelve neighbours at edge length: the projected +-l_i
  const auto origin = std::find_if(p.points.begin(), p.points.end(), [](const PatternPoint& q) { return q.par.norm() < tol::exact; });
  ASSERT_NE(origin, p.points.end());
  const int o = static_cast<int>(origin - p.points.begin());
  EXPECT_EQ(std::count_if(p.edges.begin(), p.edges.end(), [&](const Edge& e) { return e.from == o || e.to == o; }), 12);
}

TEST(Icosahedral, InvariantUnderTheFivefoldRotation) {
  const auto p = generate_icosahedral_patch(2.5);
  const auto d = build_root_datum(6);
  const auto g = h3_generators(d);
  const auto pts = lattice_set(p);
  for (const auto& rot : {g.r2 * g.r3, g.r1 * g.r2})
    for (const auto& a : pts) EXPECT_TRUE(pts.contains(rot.apply(std::span<const int>(a))));
  EXPECT_GT(pts.size(), 50u);
}
