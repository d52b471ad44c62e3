#include "padiam/graph_io.hpp"

#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "padiam/format.hpp"

namespace padiam {

namespace {

constexpr std::array<char, 4> kBinaryMagic = {'P', 'A', 'B', '1'};

template <typename Int>
Int parse_field(const std::string& token) {
  try {
    const auto value = parse_uint(token);
    if (value > std::numeric_limits<Int>::max()) {
      throw std::invalid_argument("out of range");
    }
    return static_cast<Int>(value);
  } catch (const std::invalid_argument&) {
    throw std::runtime_error("bad integer '" + token + "'");
  }
}

PAGraph assemble(std::uint64_t n, std::int64_t m, double delta,
                 std::uint64_t seed, std::vector<EdgeTriple> edges) {
  if (n < 2 || n > std::numeric_limits<std::uint32_t>::max() - 1) {
    throw std::runtime_error("vertex count out of range: " +
                             std::to_string(n));
  }
  try {
    return PAGraph(static_cast<std::uint32_t>(n), validate_params(m, delta),
                   RngSeed{seed}, std::move(edges));
  } catch (const std::logic_error& e) {
    throw std::runtime_error(std::string("invalid graph: ") + e.what());
  }
}

template <typename T>
void put_le(std::ostream& out, T value) {
  static_assert(std::endian::native == std::endian::little,
                "binary graph format assumes a little-endian host");
  std::array<char, sizeof(T)> bytes{};
  std::memcpy(bytes.data(), &value, sizeof(T));
  out.write(bytes.data(), bytes.size());
}

template <typename T>
T get_le(std::istream& in) {
  std::array<char, sizeof(T)> bytes{};
  if (!in.read(bytes.data(), bytes.size())) {
    throw std::runtime_error("truncated binary graph");
  }
  T value;
  std::memcpy(&value, bytes.data(), sizeof(T));
  return value;
}

}  // namespace

void write_text(std::ostream& out, const PAGraph& g) {
  out << "pa " << g.n() << ' ' << g.params().m() << ' '
      << format_double(g.params().delta()) << ' ' << g.seed().value << '\n';
  for (const EdgeTriple& e : g.edges()) {
    out << e.newer << ' ' << e.slot << ' ' << e.target << '\n';
  }
}

PAGraph read_text(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty graph file");
  std::istringstream header(line);
  std::string tag, n_tok, m_tok, delta_tok, seed_tok, extra;
  header >> tag >> n_tok >> m_tok >> delta_tok >> seed_tok;
  if (tag != "pa" || seed_tok.empty() || (header >> extra)) {
    throw std::runtime_error("bad header line: '" + line + "'");
  }
  const auto n = parse_field<std::uint64_t>(n_tok);
  const auto m = static_cast<std::int64_t>(parse_field<std::uint32_t>(m_tok));
  double delta = 0.0;
  try {
    delta = parse_double(delta_tok);
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(e.what());
  }
  const auto seed = parse_field<std::uint64_t>(seed_tok);

  std::vector<EdgeTriple> edges;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string a, b, c;
    row >> a >> b >> c;
    if (c.empty() || (row >> extra)) {
      throw std::runtime_error("line " + std::to_string(line_no) +
                               ": expected '<newer> <slot> <target>'");
    }
    edges.push_back({parse_field<Vertex>(a), parse_field<std::uint32_t>(b),
                     parse_field<Vertex>(c)});
  }
  return assemble(n, m, delta, seed, std::move(edges));
}

void write_binary(std::ostream& out, const PAGraph& g) {
  out.write(kBinaryMagic.data(), kBinaryMagic.size());
  put_le<std::uint64_t>(out, g.n());
  put_le<std::uint32_t>(out, static_cast<std::uint32_t>(g.params().m()));
  put_le<double>(out, g.params().delta());
  put_le<std::uint64_t>(out, g.seed().value);
  for (const EdgeTriple& e : g.edges()) {
    put_le<std::uint32_t>(out, e.newer);
    put_le<std::uint32_t>(out, e.slot);
    put_le<std::uint32_t>(out, e.target);
  }
}

PAGraph read_binary(std::istream& in) {
  std::array<char, 4> magic{};
  if (!in.read(magic.data(), magic.size()) || magic != kBinaryMagic) {
    throw std::runtime_error("not a binary PA graph (bad magic)");
  }
  const auto n = get_le<std::uint64_t>(in);
  const auto m = get_le<std::uint32_t>(in);
  const auto delta = get_le<double>(in);
  const auto seed = get_le<std::uint64_t>(in);
  if (n < 2 || n > std::numeric_limits<std::uint32_t>::max() - 1 || m == 0) {
    throw std::runtime_error("binary graph header out of range");
  }
  const std::uint64_t count = std::uint64_t{m} * (n - 1);
  std::vector<EdgeTriple> edges;
  edges.reserve(count);
  for (std::uint64_t k = 0; k < count; ++k) {
    const auto newer = get_le<std::uint32_t>(in);
    const auto slot = get_le<std::uint32_t>(in);
    const auto target = get_le<std::uint32_t>(in);
    edges.push_back({newer, slot, target});
  }
  if (in.peek() != std::char_traits<char>::eof()) {
    throw std::runtime_error("trailing bytes after binary graph");
  }
  return assemble(n, m, delta, seed, std::move(edges));
}

void save_graph(const std::filesystem::path& path, const PAGraph& g,
                GraphFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  if (format == GraphFormat::kBinary) {
    write_binary(out, g);
  } else {
    write_text(out, g);
  }
  if (!out.flush()) throw std::runtime_error("write failed: " + path.string());
}

PAGraph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::array<char, 4> head{};
  in.read(head.data(), head.size());
  in.clear();
  in.seekg(0);
  if (head == kBinaryMagic) return read_binary(in);
  return read_text(in);
}

}  // namespace padiam
