#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "hypent/entropy.hpp"
#include "hypent/io.hpp"
#include "support.hpp"

using namespace hypent;
using H = HyperbolicNumber;
namespace fs = std::filesystem;

namespace {

const fs::path kFixtures = HYPENT_FIXTURE_DIR;

}  // namespace

TEST_CASE("fixture files") {
  const auto b = io::read_distribution(kFixtures / "b_full.json");
  CHECK_FALSE(b.real);
  CHECK(b.dist.rho(1) == H{0.5, 0.75});

  const auto half = io::read_distribution(kFixtures / "half.csv");
  CHECK(half.real);
  CHECK(half.dist.rho(0) == embed_real(0.5));

  const auto r3 = io::read_distribution(kFixtures / "real3.json");
  CHECK(r3.real);
  CHECK(r3.dist.size() == 3);

  CHECK(io::read_distribution(kFixtures / "e1_only.csv").dist.dist_case() == DistributionCase::E1Only);
  CHECK_ERRC(io::read_distribution(kFixtures / "bad_sum.csv"), Errc::SumInvalid);
  CHECK_ERRC(io::read_distribution(kFixtures / "missing.csv"), Errc::IoError);
}

TEST_CASE("parse errors") {
  CHECK_ERRC(io::parse_distribution("{\"case\": \"e1\", \"rho\": [[0.5, 0.25], [0.5, 0.75]]}"), Errc::CaseMismatch);
  CHECK_ERRC(io::parse_distribution("{\"case\": \"both\", \"rho\": [[0.5, 0.25], [0.5, 0.75]]}"), Errc::ParseError);
  CHECK_ERRC(io::parse_distribution("{\"rho\": [[0.5], [0.5, 0.75]]}"), Errc::ParseError);
  CHECK_ERRC(io::parse_distribution("{\"rho\": [[\"a\", 1], [0, 0]]}"), Errc::ParseError);
  CHECK_ERRC(io::parse_distribution("{\"rho\": "), Errc::ParseError);
  CHECK_ERRC(io::parse_distribution("q\n1\n"), Errc::ParseError);
  CHECK_ERRC(io::parse_distribution("p1,p2\n0.5\n0.5,1\n"), Errc::ParseError);
  CHECK_ERRC(io::parse_distribution("p\n0.5x\n0.5\n"), Errc::ParseError);
  CHECK_ERRC(io::parse_distribution(""), Errc::ParseError);
  CHECK_ERRC(io::parse_distribution("[]"), Errc::DegenerateN);
  // A looser sum tolerance admits what the default rejects.
  CHECK_NOTHROW(io::parse_distribution("p\n0.5\n0.50001\n", 1e-4));
  CHECK_ERRC(io::parse_distribution("p\n0.5\n0.50001\n"), Errc::SumInvalid);
  CHECK(io::parse_distribution("p1,p2\r\n0.5,0.25\r\n0.5,0.75\r\n\r\n").dist.size() == 2);
}

TEST_CASE("distribution round trip") {
  Xoshiro256 rng(41);
  for (int i = 0; i < 50; ++i) {
    const auto B = random_hyperbolic_distribution(2 + static_cast<Eigen::Index>(rng.below(30)), rng);
    for (auto f : {io::Format::Csv, io::Format::Json}) {
      const auto back = io::parse_distribution(io::write_distribution(B, f));
      CHECK(back.dist.components() == B.components());
    }
  }
  const auto e2 = validate<double>({{0.0, 0.3}, {0.0, 0.7}});
  const auto json = io::write_distribution(e2, io::Format::Json);
  CHECK(json.find("\"case\":\"e2\"") != std::string::npos);
  CHECK(io::parse_distribution(json).dist.dist_case() == DistributionCase::E2Only);
}

TEST_CASE("entropy output") {
  const auto B = validate<double>({{0.5, 0.25}, {0.5, 0.75}});
  const std::vector<EntropyValue> values{
      evaluate(Measure::StrongShannonHyp, B),
      evaluate(Measure::RenyiHyp, B, H{0.5, 2}),
  };
  const auto csv = io::write_entropy(values, io::Format::Csv);
  CHECK(csv ==
        "measure,order_e1,order_e2,value_e1,value_e2\n"
        "strong_shannon_hyp,,,0.69314718055994529,0.56233514461880829\n"
        "renyi_hyp,0.5,2,0.6931471805599454,0.47000362924573558\n");
  const auto unit_k = io::write_entropy(values, io::Format::Csv, Basis::UnitK);
  CHECK(unit_k.rfind("measure,order_1,order_k,value_1,value_k\n", 0) == 0);
  CHECK(unit_k.find("renyi_hyp,1.25,-0.75,") != std::string::npos);
  const auto json = io::write_entropy(values, io::Format::Json);
  CHECK(json.find("\"measure\": \"renyi_hyp\"") != std::string::npos);
  CHECK(json.find("\"order\": null") != std::string::npos);

  CHECK(io::parse_format("json") == io::Format::Json);
  CHECK_ERRC(io::parse_format("xml"), Errc::ParseError);
  CHECK(io::format_real(0.1) == "0.10000000000000001");
}

TEST_CASE("stability CSV") {
  SweepConfig cfg;
  cfg.families = {PerturbationFamily::CertaintySpread, PerturbationFamily::RandomSmooth};
  cfg.n_grid = {1, 10, 1000};
  cfg.delta_grid = {0.01, 1.5};
  cfg.measures = {parse_measure_spec("shannon"), parse_measure_spec("renyi_hyp:0.5,2")};
  cfg.seed = 3;
  const auto rows = stability_sweep(cfg);
  const auto csv = io::write_stability_csv(rows);
  CHECK(csv.rfind(std::string(io::kStabilityHeader) + "\n", 0) == 0);
  CHECK(csv.find("error:DegenerateN,error:DegenerateN,error:DegenerateN,error:DegenerateN") != std::string::npos);
  CHECK(csv.find("error:BadDelta") != std::string::npos);
  CHECK(io::read_stability_csv(csv) == rows);
  CHECK(io::write_stability_csv(io::read_stability_csv(csv)) == csv);

  const auto unit_k = io::write_stability_csv(rows, Basis::UnitK);
  CHECK(unit_k.rfind("family,measure,order_1,order_k,N,delta,norm_1,norm_k,ratio_1,ratio_k\n", 0) == 0);
  CHECK(unit_k.find("renyi_hyp,1.25,-0.75,") != std::string::npos);

  const auto json = io::write_stability_json(rows);
  CHECK(json.find("\"error\": \"BadDelta\"") != std::string::npos);

  CHECK_ERRC(io::read_stability_csv("family,N\n"), Errc::ParseError);
  CHECK_ERRC(io::read_stability_csv(std::string(io::kStabilityHeader) + "\ncertainty_spread,shannon\n"),
             Errc::ParseError);
  CHECK_ERRC(io::read_stability_csv(std::string(io::kStabilityHeader) +
                                    "\ncertainty_spread,shannon,,,10,0.1,error:Bogus,error:Bogus,error:Bogus,error:Bogus\n"),
             Errc::ParseError);
}

TEST_CASE("text files") {
  const auto path = fs::temp_directory_path() / "hypent_io_test.txt";
  io::write_text_file(path, "abc\n");
  CHECK(io::read_text_file(path) == "abc\n");
  fs::remove(path);
  CHECK_ERRC(io::write_text_file(fs::path("/nonexistent-dir/x.txt"), "x"), Errc::IoError);
}
