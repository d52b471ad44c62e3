#include <gtest/gtest.h>

#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <filesystem>
#include <map>
#include <numeric>
#include <sstream>
#include <unistd.h>

#include "oracles.hpp"
#include "padiam/format.hpp"
#include "padiam/generator.hpp"
#include "padiam/graph_io.hpp"
#include "padiam/rng.hpp"

using namespace padiam;

TEST(Params, AcceptsValidDomain) {
  const Params p = validate_params(2, 1.0);
  EXPECT_EQ(p.m(), 2);
  EXPECT_EQ(p.delta(), 1.0);
  const Params q = validate_params(3, -2.5);
  EXPECT_EQ(q.m(), 3);
  EXPECT_EQ(q.delta(), -2.5);
}

TEST(Params, RejectsOutsideDomain) {
  EXPECT_THROW(validate_params(1, -1.0), std::domain_error);
  EXPECT_THROW(validate_params(2, -2.0), std::domain_error);
  EXPECT_THROW(validate_params(0, 1.0), std::invalid_argument);
  EXPECT_THROW(validate_params(-3, 1.0), std::invalid_argument);
  EXPECT_THROW(validate_params(2, std::nan("")), std::domain_error);
  EXPECT_THROW(validate_params(2, INFINITY), std::domain_error);
  try {
    validate_params(1, -1.0);
  } catch (const std::domain_error& e) {
    EXPECT_NE(std::string(e.what()).find("-1"), std::string::npos) << e.what();
  }
}

TEST(Rng, UniformBelowStaysInRange) {
  Rng rng(5);
  for (std::uint64_t bound : {1ULL, 2ULL, 3ULL, 7ULL, 1000ULL, (1ULL << 40) + 3}) {
    for (int k = 0; k < 1000; ++k) EXPECT_LT(rng.uniform_below(bound), bound);
  }
  for (int k = 0; k < 1000; ++k) {
    const double u = rng.uniform01();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(Rng, DerivedSeedsDiffer) {
  EXPECT_NE(derive_seed(1, {10, 0}), derive_seed(1, {10, 1}));
  EXPECT_NE(derive_seed(1, {10, 0}), derive_seed(2, {10, 0}));
  EXPECT_NE(derive_seed(1, {0, 10}), derive_seed(1, {10, 0}));
  EXPECT_EQ(derive_seed(7, {3, 4, 5}), derive_seed(7, {3, 4, 5}));
}

TEST(Generator, InitialGraph) {
  for (int m : {1, 2, 5}) {
    const PAGraph g = generate(2, validate_params(m, 0.5), RngSeed{1});
    ASSERT_EQ(g.edges().size(), static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
      EXPECT_EQ(g.edges()[i], (EdgeTriple{2, static_cast<std::uint32_t>(i + 1), 1}));
    }
    EXPECT_EQ(degree(g, 1), static_cast<std::uint64_t>(m));
    EXPECT_EQ(degree(g, 2), static_cast<std::uint64_t>(m));
  }
}

TEST(Generator, RejectsTinyN) {
  EXPECT_THROW(generate(1, validate_params(1, 0), RngSeed{1}), std::invalid_argument);
  EXPECT_THROW(generate(0, validate_params(1, 0), RngSeed{1}), std::invalid_argument);
}

TEST(Generator, StructuralInvariants) {
  for (int m : {1, 2, 3}) {
    for (double delta : {-0.9 * m, -0.5, 0.0, 1.0, 7.5}) {
      if (delta <= -m) continue;
      const Params params = validate_params(m, delta);
      const PAGraph g = generate(300, params, RngSeed{42});
      ASSERT_EQ(g.edges().size(), static_cast<std::size_t>(m) * 299);
      std::uint64_t total = 0;
      for (Vertex v = 1; v <= g.n(); ++v) {
        total += degree(g, v);
        EXPECT_EQ(g.neighbors(v).size(), degree(g, v));
      }
      EXPECT_EQ(total, 2ULL * m * 299);
      for (Vertex t = 3; t <= g.n(); ++t) {
        const auto out = g.out_edges(t);
        ASSERT_EQ(out.size(), static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) {
          EXPECT_EQ(out[i].newer, t);
          EXPECT_EQ(out[i].slot, static_cast<std::uint32_t>(i + 1));
          EXPECT_GE(out[i].target, 1u);
          EXPECT_LT(out[i].target, t);
        }
      }
      // Adjacency agrees with the triples.
      const auto adj = oracle::adjacency(g);
      for (Vertex v = 1; v <= g.n(); ++v) {
        auto a = adj[v];
        std::vector<Vertex> b(g.neighbors(v).begin(), g.neighbors(v).end());
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        EXPECT_EQ(a, b);
      }
    }
  }
}

TEST(Generator, Deterministic) {
  const Params p = validate_params(2, 1.0);
  EXPECT_EQ(generate(1000, p, RngSeed{9}), generate(1000, p, RngSeed{9}));
  const PAGraph a = generate(1000, p, RngSeed{9});
  const PAGraph b = generate(1000, p, RngSeed{10});
  EXPECT_FALSE(std::equal(a.edges().begin(), a.edges().end(), b.edges().begin()));
  const Params q = validate_params(2, -1.5);
  EXPECT_EQ(generate(1000, q, RngSeed{9}), generate(1000, q, RngSeed{9}));
}

TEST(Generator, DegreeOfNewestVertexWhenMIsOne) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const PAGraph g = generate(3, validate_params(1, 0.3), RngSeed{s});
    EXPECT_EQ(degree(g, 3), 1u);
  }
}

TEST(Generator, ThirdVertexSplitsEvenly) {
  // (1 + delta) / (2 + 2 delta) = 1/2 for every delta.
  for (double delta : {1.0, 0.0, -0.5}) {
    const Params p = validate_params(1, delta);
    constexpr int kTrials = 100000;
    int to_first = 0;
    for (int k = 0; k < kTrials; ++k) {
      const PAGraph g = generate(3, p, RngSeed{derive_seed(123, {std::uint64_t(k)})});
      to_first += g.edges().back().target == 1;
    }
    const double sd = std::sqrt(kTrials * 0.25);
    EXPECT_LT(std::abs(to_first - kTrials / 2.0), 3 * sd) << "delta " << delta;
  }
}

// Chi-squared test of complete edge sequences against the sequential law,
// replayed literally by the oracle.
void expect_sequential_law(std::uint32_t n, int m, double delta, int samples) {
  const auto outcomes = oracle::enumerate(n, m, delta);
  std::map<std::vector<Vertex>, int> counts;
  const Params p = validate_params(m, delta);
  for (int k = 0; k < samples; ++k) {
    const PAGraph g = generate(n, p, RngSeed{derive_seed(77, {n, std::uint64_t(m), std::uint64_t(k)})});
    std::vector<Vertex> targets;
    for (std::size_t e = m; e < g.edges().size(); ++e) targets.push_back(g.edges()[e].target);
    ++counts[targets];
  }
  double chi2 = 0.0;
  int observed_total = 0;
  for (const auto& o : outcomes) {
    const double expected = samples * static_cast<double>(o.probability);
    const auto it = counts.find(o.targets);
    const double seen = it == counts.end() ? 0.0 : it->second;
    observed_total += static_cast<int>(seen);
    chi2 += (seen - expected) * (seen - expected) / expected;
  }
  EXPECT_EQ(observed_total, samples) << "sampled an outcome the oracle calls impossible";
  boost::math::chi_squared dist(static_cast<double>(outcomes.size() - 1));
  const double pvalue = boost::math::cdf(boost::math::complement(dist, chi2));
  EXPECT_GT(pvalue, 1e-3) << "n=" << n << " m=" << m << " delta=" << delta
                          << " chi2=" << chi2;
}

TEST(Generator, SequentialLawSmallCases) {
  expect_sequential_law(4, 1, 0.0, 200000);
  expect_sequential_law(5, 1, -0.5, 200000);
  expect_sequential_law(4, 2, 1.0, 200000);
  expect_sequential_law(4, 2, -1.5, 200000);
  expect_sequential_law(5, 2, 2.0, 400000);
}

TEST(Graph, RejectsInconsistentTriples) {
  const Params p = validate_params(1, 0.0);
  EXPECT_THROW(PAGraph(3, p, RngSeed{0}, {{2, 1, 1}, {3, 1, 3}}), std::invalid_argument);
  EXPECT_THROW(PAGraph(3, p, RngSeed{0}, {{2, 1, 1}}), std::invalid_argument);
  EXPECT_THROW(PAGraph(3, p, RngSeed{0}, {{2, 1, 1}, {3, 2, 1}}), std::invalid_argument);
  const PAGraph ok(3, p, RngSeed{0}, {{2, 1, 1}, {3, 1, 2}});
  EXPECT_THROW(degree(ok, 0), std::out_of_range);
  EXPECT_THROW(degree(ok, 4), std::out_of_range);
}

TEST(Format, RoundTripsDoubles) {
  for (double x : {0.0, 1.0, -0.5, 0.1, 1e-300, 21.797958971132712, -2.5}) {
    EXPECT_EQ(parse_double(format_double(x)), x);
  }
  EXPECT_THROW(parse_double("1.0x"), std::invalid_argument);
  EXPECT_THROW(parse_double(""), std::invalid_argument);
  EXPECT_THROW(parse_uint("-1"), std::invalid_argument);
  EXPECT_EQ(parse_uint("+7"), 7u);
  EXPECT_EQ(parse_int("-7"), -7);
}

class GraphIo : public ::testing::Test {
 protected:
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::filesystem::path dir_ = std::filesystem::temp_directory_path() /
                               ("padiam_io_" + std::to_string(::getpid()));
};

TEST_F(GraphIo, TextAndBinaryRoundTrip) {
  std::filesystem::create_directories(dir_);
  for (double delta : {1.0, -0.3, 0.1}) {
    const PAGraph g = generate(500, validate_params(2, delta), RngSeed{11});
    save_graph(dir_ / "g.txt", g, GraphFormat::kText);
    save_graph(dir_ / "g.bin", g, GraphFormat::kBinary);
    EXPECT_EQ(load_graph(dir_ / "g.txt"), g);
    EXPECT_EQ(load_graph(dir_ / "g.bin"), g);
  }
}

TEST(GraphIoText, HeaderAndLines) {
  const PAGraph g = generate(3, validate_params(1, 0.5), RngSeed{4});
  std::ostringstream out;
  write_text(out, g);
  std::istringstream in(out.str());
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "pa 3 1 0.5 4");
}

TEST(GraphIoText, RejectsMalformedInput) {
  auto read = [](const std::string& s) {
    std::istringstream in(s);
    return read_text(in);
  };
  EXPECT_NO_THROW(read("pa 3 1 0 4\n2 1 1\n3 1 2\n"));
  EXPECT_THROW(read(""), std::runtime_error);
  EXPECT_THROW(read("xx 3 1 0 4\n"), std::runtime_error);
  EXPECT_THROW(read("pa 3 1 0 4\n2 1 1\n"), std::runtime_error);         // missing edge
  EXPECT_THROW(read("pa 3 1 0 4\n2 1 1\n3 1 3\n"), std::runtime_error);  // self loop
  EXPECT_THROW(read("pa 3 1 -1 4\n2 1 1\n3 1 1\n"), std::runtime_error);  // delta <= -m
  EXPECT_THROW(read("pa 3 1 0 4\n2 1 1\n3 1 a\n"), std::runtime_error);
  EXPECT_THROW(read("pa 3 1 0 4\n2 1 1\n3 1 1 9\n"), std::runtime_error);
}

TEST(GraphIoBinary, RejectsTruncation) {
  const PAGraph g = generate(50, validate_params(2, 1.0), RngSeed{3});
  std::ostringstream out;
  write_binary(out, g);
  const std::string bytes = out.str();
  std::istringstream cut(bytes.substr(0, bytes.size() - 5));
  EXPECT_THROW(read_binary(cut), std::runtime_error);
  std::istringstream extra(bytes + "x");
  EXPECT_THROW(read_binary(extra), std::runtime_error);
  std::istringstream whole(bytes);
  EXPECT_EQ(read_binary(whole), g);
}
