// Acceptance suite: every release-blocking property in one binary, one
// pass/fail line per criterion. All checks are exact (zero tolerance) and
// seeded, so reruns are bit-identical.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <semimorph/anyimage.hpp>
#include <semimorph/cli.hpp>
#include <semimorph/io.hpp>
#include <semimorph/morph.hpp>
#include <semimorph/oracle.hpp>
#include <semimorph/sampling.hpp>
#include <semimorph/verify.hpp>

using namespace semimorph;
namespace fs = std::filesystem;

namespace {

using BImg = Image<BooleanSemiring>;
using MpImg = Image<MaxPlusSemiring>;

BImg bimg(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<std::uint8_t> data;
  int nr = static_cast<int>(rows.size());
  int nc = static_cast<int>(rows.begin()->size());
  for (const auto& row : rows)
    for (int v : row) data.push_back(static_cast<std::uint8_t>(v));
  return BImg::from_data(nr, nc, std::move(data));
}

BImg golden_f() { return bimg({{0, 1, 0}, {0, 0, 1}, {1, 1, 0}}); }
BImg golden_g() { return bimg({{0, 1, 0}, {1, 0, 0}, {0, 0, 0}}); }
BImg golden_dilation() {
  return bimg({{0, 0, 1, 0, 0},
               {0, 1, 0, 1, 0},
               {0, 1, 1, 0, 0},
               {1, 1, 0, 0, 0},
               {0, 0, 0, 0, 0}});
}

template <Semiring S>
PointSet result_points(const MorphResult<S>& r)
  requires std::same_as<S, BooleanSemiring>
{
  PointSet out;
  for (int i = 0; i < r.image.rows(); ++i)
    for (int j = 0; j < r.image.cols(); ++j)
      if (r.image.at(i, j))
        out.emplace(i - r.out_origin_row, j - r.out_origin_col);
  return out;
}

// ---- criteria -------------------------------------------------------------

std::string c1_golden() {
  auto result = dilate(golden_f(), golden_g(), Mode::full);
  if (!(result.image == golden_dilation()))
    return "full boolean dilation does not match the printed 5x5 matrix";
  return {};
}

template <ResiduatedSemiring S>
int adjunction_hits(int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  int hits = 0;
  for (int t = 0; t < trials; ++t) {
    auto f = sample_image_up_to<S>(rng, 8, 8);
    auto g = sample_image_up_to<S>(rng, 3, 3);
    auto full = dilate(f, g, Mode::full).image;
    auto e = sample_image<S>(rng, full.rows(), full.cols());
    if (t % 2 == 0) e = pointwise_join(e, full);
    bool lhs = image_leq(full, e);
    bool rhs = image_leq(f, erode(e, g, Mode::valid).image);
    hits += (lhs == rhs);
  }
  return hits;
}

std::string c2_adjunction() {
  const int n = 1000;
  int b = adjunction_hits<BooleanSemiring>(n, 1002);
  int m = adjunction_hits<MaxPlusSemiring>(n, 1003);
  int f = adjunction_hits<MinMaxSemiring>(n, 1004);
  std::ostringstream msg;
  msg << "boolean " << b << "/" << n << ", maxplus " << m << "/" << n
      << ", minmax " << f << "/" << n;
  if (b != n || m != n || f != n) return "only " + msg.str();
  return {};
}

std::string c3_binary_oracle() {
  std::mt19937_64 rng(2001);
  for (int t = 0; t < 1000; ++t) {
    int ar = uniform_int(rng, 1, 16), ac = uniform_int(rng, 1, 16);
    auto a = sample_image<BooleanSemiring>(rng, ar, ac, true);
    auto b = sample_tight_binary_se(rng, uniform_int(rng, 1, std::min(ar, 5)),
                                    uniform_int(rng, 1, std::min(ac, 5)), true);
    PointSet as = to_point_set(a), bs = to_point_set(b);

    if (result_points(dilate(a, b, Mode::full)) != oracle::set_dilate(as, bs))
      return "dilation disagrees with the Minkowski sum at trial " +
             std::to_string(t);
    if (result_points(erode(a, b, Mode::valid)) != oracle::set_erode(as, bs))
      return "erosion disagrees with the set definition at trial " +
             std::to_string(t);
  }
  return {};
}

std::string c4_gray_flat() {
  std::mt19937_64 rng(3001);
  for (int t = 0; t < 500; ++t) {
    int fr = uniform_int(rng, 2, 12), fc = uniform_int(rng, 2, 12);
    MpImg f(fr, fc);
    for (int r = 0; r < fr; ++r)
      for (int c = 0; c < fc; ++c)
        f.at(r, c) = ExtInt::finite(uniform_int(rng, -20, 20));
    int gr = uniform_int(rng, 1, std::min(fr, 4));
    int gc = uniform_int(rng, 1, std::min(fc, 4));
    PointSet support = sample_support(rng, gr, gc);

    MpImg g(gr, gc, ExtInt::neg_inf());
    for (const auto& [p, q] : support) g.at(p, q) = MaxPlusSemiring::one();

    if (!(dilate(f, g, Mode::same).image ==
          oracle::gray_dilate_flat(f, support)))
      return "same-mode dilation disagrees with the flat oracle at trial " +
             std::to_string(t);

    auto valid = erode(f, g, Mode::valid).image;
    auto whole = oracle::gray_erode_flat(f, support);
    for (int r = 0; r < valid.rows(); ++r)
      for (int c = 0; c < valid.cols(); ++c)
        if (!(valid.at(r, c) == whole.at(r, c)))
          return "valid-mode erosion disagrees with the flat oracle at trial " +
                 std::to_string(t);
  }
  return {};
}

std::string c5_duality() {
  std::mt19937_64 rng(4001);
  for (int t = 0; t < 500; ++t) {
    auto g = sample_image_up_to<BooleanSemiring>(rng, 3, 3, true);
    int mr = g.rows() - 1, mc = g.cols() - 1;
    auto inner = sample_image_up_to<BooleanSemiring>(rng, 8, 8);
    BImg f(inner.rows() + 2 * mr, inner.cols() + 2 * mc, 0);
    for (int r = 0; r < inner.rows(); ++r)
      for (int c = 0; c < inner.cols(); ++c)
        f.at(r + mr, c + mc) = inner.at(r, c);

    auto lhs = complement(erode(f, g, Mode::same).image);
    auto rhs = dilate(complement(f), reflect(g), Mode::same).image;
    for (int r = mr; r < f.rows() - mr; ++r)
      for (int c = mc; c < f.cols() - mc; ++c)
        if (lhs.at(r, c) != rhs.at(r, c))
          return "interior duality fails at trial " + std::to_string(t);
  }
  return {};
}

template <Semiring S>
std::string monoidal_once(std::mt19937_64& rng) {
  auto f = sample_image_up_to<S>(rng, 8, 8, true);
  auto g = sample_image_up_to<S>(rng, 3, 3, true);
  auto h = sample_image_up_to<S>(rng, 3, 3, true);
  auto left = dilate(dilate(f, g, Mode::full).image, h, Mode::full).image;
  auto right = dilate(f, dilate(g, h, Mode::full).image, Mode::full).image;
  if (!(left == right)) return "associativity fails";
  Image<S> unit(1, 1, S::one());
  if (!(dilate(f, unit, Mode::full).image == f) ||
      !(dilate(unit, f, Mode::full).image == f))
    return "unit law fails";
  return {};
}

template <ResiduatedSemiring S>
std::string sup_preservation_once(std::mt19937_64& rng) {
  int rows = uniform_int(rng, 1, 8), cols = uniform_int(rng, 1, 8);
  auto g = sample_image<S>(rng, uniform_int(rng, 1, std::min(rows, 3)),
                           uniform_int(rng, 1, std::min(cols, 3)));
  auto f1 = sample_image<S>(rng, rows, cols);
  auto f2 = sample_image<S>(rng, rows, cols);
  if (!(dilate(pointwise_join(f1, f2), g, Mode::full).image ==
        pointwise_join(dilate(f1, g, Mode::full).image,
                       dilate(f2, g, Mode::full).image)))
    return "join preservation fails";
  if (!(erode(pointwise_meet(f1, f2), g, Mode::valid).image ==
        pointwise_meet(erode(f1, g, Mode::valid).image,
                       erode(f2, g, Mode::valid).image)))
    return "meet preservation fails";
  return {};
}

std::string c6_monoidal() {
  auto per_semiring = [](auto tag, std::uint64_t seed) -> std::string {
    using S = typename decltype(tag)::type;
    std::mt19937_64 rng(seed);
    for (int t = 0; t < 500; ++t)
      if (auto err = monoidal_once<S>(rng); !err.empty())
        return std::string(S::name) + ": " + err + " at trial " +
               std::to_string(t);
    if constexpr (ResiduatedSemiring<S>) {
      for (int t = 0; t < 500; ++t)
        if (auto err = sup_preservation_once<S>(rng); !err.empty())
          return std::string(S::name) + ": " + err + " at trial " +
                 std::to_string(t);
    }
    return {};
  };
  for (auto kind : {SemiringKind::boolean, SemiringKind::maxplus,
                    SemiringKind::minmax, SemiringKind::counting}) {
    auto err = with_semiring(kind, [&](auto tag) {
      return per_semiring(tag, 5001 + static_cast<std::uint64_t>(kind));
    });
    if (!err.empty()) return err;
  }
  return {};
}

std::string c7_open_close() {
  auto per_semiring = [](auto tag, std::uint64_t seed) -> std::string {
    using S = typename decltype(tag)::type;
    std::mt19937_64 rng(seed);
    for (int t = 0; t < 500; ++t) {
      int fr = uniform_int(rng, 2, 8), fc = uniform_int(rng, 2, 8);
      auto f = sample_image<S>(rng, fr, fc);
      auto g = sample_image<S>(rng, uniform_int(rng, 1, std::min(fr, 3)),
                               uniform_int(rng, 1, std::min(fc, 3)));
      auto opened = opening(f, g);
      auto closed = closing(f, g);
      if (!image_leq(opened, f))
        return std::string(S::name) + ": opening not anti-extensive at trial " +
               std::to_string(t);
      if (!image_leq(f, closed))
        return std::string(S::name) + ": closing not extensive at trial " +
               std::to_string(t);
      if (!(opening(opened, g) == opened) || !(closing(closed, g) == closed))
        return std::string(S::name) + ": idempotence fails at trial " +
               std::to_string(t);
    }
    return {};
  };
  std::string err = per_semiring(std::type_identity<BooleanSemiring>{}, 6001);
  if (err.empty())
    err = per_semiring(std::type_identity<MaxPlusSemiring>{}, 6002);
  if (err.empty())
    err = per_semiring(std::type_identity<MinMaxSemiring>{}, 6003);
  return err;
}

std::string c8_counting() {
  std::mt19937_64 rng(7001);
  for (int t = 0; t < 200; ++t) {
    auto f = sample_image_up_to<CountingSemiring>(rng, 8, 8);
    auto g = sample_image_up_to<CountingSemiring>(rng, 4, 4);
    auto full = dilate(f, g, Mode::full).image;
    for (int r = 0; r < full.rows(); ++r)
      for (int s = 0; s < full.cols(); ++s) {
        std::uint64_t acc = 0;
        for (int m = 0; m < f.rows(); ++m)
          for (int n = 0; n < f.cols(); ++n) {
            int p = r - m, q = s - n;
            if (p >= 0 && p < g.rows() && q >= 0 && q < g.cols())
              acc += f.at(m, n) * g.at(p, q);
          }
        if (full.at(r, s) != acc)
          return "dilation disagrees with integer convolution at trial " +
                 std::to_string(t);
      }
  }
  AnyImage f{Image<CountingSemiring>(2, 2, 1)};
  try {
    any_erode(f, f, Mode::valid);
    return "counting erosion did not raise NoResidual";
  } catch (const Error& e) {
    if (e.code() != Errc::no_residual)
      return "counting erosion raised the wrong error";
  }
  return {};
}

std::string c9_algebra() {
  // boolean: exhaustive axioms and residuation
  using B = BooleanSemiring;
  for (std::uint8_t a : {0, 1})
    for (std::uint8_t b : {0, 1})
      for (std::uint8_t c : {0, 1}) {
        bool ok = B::add(a, b) == B::add(b, a) &&
                  B::add(B::add(a, b), c) == B::add(a, B::add(b, c)) &&
                  B::mul(B::mul(a, b), c) == B::mul(a, B::mul(b, c)) &&
                  B::mul(a, B::add(b, c)) ==
                      B::add(B::mul(a, b), B::mul(a, c)) &&
                  B::mul(B::add(b, c), a) ==
                      B::add(B::mul(b, a), B::mul(c, a)) &&
                  B::mul(a, B::zero()) == B::zero() &&
                  B::mul(a, B::one()) == a && B::add(a, B::zero()) == a &&
                  B::add(a, a) == a;
        if (!ok) return "boolean axiom fails";
        for (std::uint8_t x : {0, 1})
          if (sr_leq<B>(B::mul(a, x), b) != sr_leq<B>(x, B::residual(a, b)))
            return "boolean residuation fails";
      }

  auto sampled = [](auto tag, auto sample, std::uint64_t seed,
                    bool residuated) -> std::string {
    using S = typename decltype(tag)::type;
    std::mt19937_64 rng(seed);
    for (int t = 0; t < 10000; ++t) {
      auto a = sample(rng), b = sample(rng), c = sample(rng);
      bool ok = S::add(a, b) == S::add(b, a) &&
                S::add(S::add(a, b), c) == S::add(a, S::add(b, c)) &&
                S::mul(S::mul(a, b), c) == S::mul(a, S::mul(b, c)) &&
                S::mul(a, S::add(b, c)) ==
                    S::add(S::mul(a, b), S::mul(a, c)) &&
                S::mul(S::add(b, c), a) ==
                    S::add(S::mul(b, a), S::mul(c, a)) &&
                S::mul(a, S::zero()) == S::zero() &&
                S::mul(a, S::one()) == a && S::add(a, S::zero()) == a;
      if (!ok)
        return std::string(S::name) + " axiom fails at trial " +
               std::to_string(t);
      if (residuated) {
        if constexpr (ResiduatedSemiring<S>) {
          if (sr_leq<S>(S::mul(a, c), b) != sr_leq<S>(c, S::residual(a, b)))
            return std::string(S::name) + " residuation fails at trial " +
                   std::to_string(t);
        }
      }
    }
    return {};
  };

  // maxplus over [-100,100] union {-inf}; minmax over the 1/255 grid
  auto mp_sample = [](std::mt19937_64& rng) {
    if (rng() % 10 == 0) return ExtInt::neg_inf();
    return ExtInt::finite(static_cast<std::int64_t>(rng() % 201) - 100);
  };
  auto mm_sample = [](std::mt19937_64& rng) {
    return UnitFixed{static_cast<std::uint8_t>(rng() % 256)};
  };
  std::string err =
      sampled(std::type_identity<MaxPlusSemiring>{}, mp_sample, 8001, true);
  if (err.empty())
    err = sampled(std::type_identity<MinMaxSemiring>{}, mm_sample, 8002, true);
  return err;
}

std::string c10_cli() {
  fs::path dir = fs::temp_directory_path() /
                 ("semimorph-acceptance-" +
                  std::to_string(std::random_device{}()));
  fs::create_directories(dir);
  auto file = [&](const std::string& name) { return (dir / name).string(); };
  auto put = [](const std::string& path, const std::string& bytes) {
    std::ofstream f(path, std::ios::binary);
    f << bytes;
  };
  auto slurp = [](const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
  };
  auto cleanup = [&] {
    std::error_code ec;
    fs::remove_all(dir, ec);
  };

  // two identical verify runs must be byte-identical
  std::vector<std::string> args{
      "verify",         "--semiring", "maxplus", "--trials", "1000",
      "--seed",         "42",         "--json-report", file("report.json")};
  std::ostringstream out1, err1, out2, err2;
  int code1 = run_cli(args, out1, err1);
  std::string report1 = slurp(file("report.json"));
  int code2 = run_cli(args, out2, err2);
  std::string report2 = slurp(file("report.json"));
  if (code1 != 0 || code2 != 0) {
    cleanup();
    return "verify exited nonzero";
  }
  if (out1.str() != out2.str() || report1 != report2) {
    cleanup();
    return "verify reports are not byte-identical across runs";
  }

  // golden dilation end to end through files
  put(file("F.pbm"), write_netpbm(golden_f()));
  put(file("G.pbm"), write_netpbm(golden_g()));
  std::ostringstream out3, err3;
  int code3 = run_cli({"dilate", "-i", file("F.pbm"), "-s", file("G.pbm"),
                       "-o", file("out.pbm"), "--semiring", "boolean"},
                      out3, err3);
  if (code3 != 0) {
    cleanup();
    return "golden CLI invocation failed: " + err3.str();
  }
  bool golden_ok =
      read_netpbm(slurp(file("out.pbm"))) == AnyImage{golden_dilation()};
  cleanup();
  if (!golden_ok) return "golden CLI output does not match the 5x5 matrix";
  return {};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<std::string()> check;
  };
  const std::vector<Criterion> criteria{
      {"golden reproduction (boolean full dilation)", c1_golden},
      {"adjunction, 1000 triples per residuated semiring", c2_adjunction},
      {"binary oracle equivalence, 1000 pairs", c3_binary_oracle},
      {"gray flat oracle equivalence, 500 images", c4_gray_flat},
      {"interior duality, 500 images", c5_duality},
      {"monoidal laws + sup preservation, 500 each", c6_monoidal},
      {"opening/closing laws, 500 per semiring", c7_open_close},
      {"counting convolution + NoResidual, 200 instances", c8_counting},
      {"algebra axioms, exhaustive boolean + 10^4 sampled", c9_algebra},
      {"CLI determinism + golden invocation", c10_cli},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string err;
    try {
      err = criteria[i].check();
    } catch (const std::exception& e) {
      err = std::string("exception: ") + e.what();
    }
    if (err.empty()) {
      std::cout << "PASS  criterion " << i + 1 << ": " << criteria[i].name
                << "\n";
    } else {
      ++failed;
      std::cout << "FAIL  criterion " << i + 1 << ": " << criteria[i].name
                << " -- " << err << "\n";
    }
  }
  if (failed == 0) {
    std::cout << "acceptance: all " << criteria.size() << " criteria passed\n";
    return 0;
  }
  std::cout << "acceptance: " << failed << " of " << criteria.size()
            << " criteria FAILED\n";
  return 1;
}
