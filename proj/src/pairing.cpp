#include "c24/pairing.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <regex>
#include <sstream>
#include <vector>

namespace c24 {

namespace {

std::string side_name(int s) { return "S" + std::to_string(s + 1); }

}  // namespace

int SidePairing::vertex_image(int side, int vertex) const {
  const int slot = standard_cell().vertex_slot(side, vertex);
  return slot < 0 ? -1 : images[side][slot];
}

const char* to_string(PairingErrorKind kind) {
  switch (kind) {
    case PairingErrorKind::MalformedLine: return "MalformedLine";
    case PairingErrorKind::NotAnInvolution: return "NotAnInvolution";
    case PairingErrorKind::NotABijection: return "NotABijection";
    case PairingErrorKind::VertexNotOnSide: return "VertexNotOnSide";
  }
  return "?";
}

PairingError::PairingError(PairingErrorKind kind, int line, const std::string& message)
    : std::runtime_error(message), kind_(kind), line_(line) {}

SidePairing parse_pairing(std::string_view text) {
  const Cell24Model& cell = standard_cell();
  static const std::regex row_re(R"(^\s*(\d+)\s*->\s*(\d+)\s*:\s*(.*?)\s*$)");
  static const std::regex pair_re(R"(^\s*(\d+)\s*>\s*(\d+)\s*$)");

  SidePairing p;
  p.partner.fill(-1);
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;

    auto fail = [&](PairingErrorKind kind, const std::string& why) {
      throw PairingError(kind, lineno, "line " + std::to_string(lineno) + ": " + why);
    };
    std::smatch m;
    if (!std::regex_match(line, m, row_re)) fail(PairingErrorKind::MalformedLine, "expected 'i -> j : a>b, ...'");
    const int i = std::stoi(m[1]) - 1;
    const int j = std::stoi(m[2]) - 1;
    if (i < 0 || i >= kSides || j < 0 || j >= kSides) fail(PairingErrorKind::MalformedLine, "side index out of range");
    if (i == j) fail(PairingErrorKind::NotAnInvolution, side_name(i) + " is paired with itself (fixed point)");
    if (i > j) fail(PairingErrorKind::MalformedLine, "rows must be written with i < j");
    if (p.partner[i] >= 0 || p.partner[j] >= 0)
      fail(PairingErrorKind::NotAnInvolution, "a side appears in more than one row");

    std::vector<std::pair<int, int>> pairs;
    const std::string body = m[3];
    std::size_t start = 0;
    while (start <= body.size()) {
      const std::size_t comma = body.find(',', start);
      const std::string item = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      std::smatch pm;
      if (!std::regex_match(item, pm, pair_re)) fail(PairingErrorKind::MalformedLine, "bad vertex pair '" + item + "'");
      pairs.emplace_back(std::stoi(pm[1]) - 1, std::stoi(pm[2]) - 1);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (pairs.size() != kVerticesPerSide) fail(PairingErrorKind::MalformedLine, "expected six vertex pairs");

    SideVertexImages forward{};
    SideVertexImages backward{};
    std::uint32_t seen_src = 0, seen_dst = 0;
    for (auto [a, b] : pairs) {
      if (a < 0 || a >= kVertices || !cell.incident(i, a))
        fail(PairingErrorKind::VertexNotOnSide, "vertex " + std::to_string(a + 1) + " is not on " + side_name(i));
      if (b < 0 || b >= kVertices || !cell.incident(j, b))
        fail(PairingErrorKind::VertexNotOnSide, "vertex " + std::to_string(b + 1) + " is not on " + side_name(j));
      if ((seen_src >> a & 1u) || (seen_dst >> b & 1u))
        fail(PairingErrorKind::NotABijection, "vertex map is not a bijection");
      seen_src |= 1u << a;
      seen_dst |= 1u << b;
      forward[cell.vertex_slot(i, a)] = static_cast<std::uint8_t>(b);
      backward[cell.vertex_slot(j, b)] = static_cast<std::uint8_t>(a);
    }
    p.partner[i] = j;
    p.partner[j] = i;
    p.images[i] = forward;
    p.images[j] = backward;
  }
  for (int s = 0; s < kSides; ++s) {
    if (p.partner[s] < 0)
      throw PairingError(PairingErrorKind::NotAnInvolution, 0, side_name(s) + " is not paired with any side");
  }
  return p;
}

SidePairing load_pairing(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_pairing(buf.str());
}

std::string serialize_pairing(const SidePairing& p) {
  const Cell24Model& cell = standard_cell();
  std::string out;
  for (int i = 0; i < kSides; ++i) {
    const int j = p.partner[i];
    if (j < i) continue;
    out += std::to_string(i + 1) + " -> " + std::to_string(j + 1) + " :";
    for (int q = 0; q < kVerticesPerSide; ++q) {
      out += (q ? ", " : " ") + std::to_string(cell.side_vertices[i][q] + 1) + ">" +
             std::to_string(p.images[i][q] + 1);
    }
    out += '\n';
  }
  return out;
}

void validate_pairing(const SidePairing& p) {
  const Cell24Model& cell = standard_cell();
  for (int i = 0; i < kSides; ++i) {
    const int j = p.partner[i];
    if (j < 0 || j >= kSides || j == i || p.partner[j] != i)
      throw PairingError(PairingErrorKind::NotAnInvolution, 0, "partner map is not a fixed-point-free involution");
    std::uint32_t seen = 0;
    for (int q = 0; q < kVerticesPerSide; ++q) {
      const int b = p.images[i][q];
      if (b >= kVertices || !cell.incident(j, b))
        throw PairingError(PairingErrorKind::VertexNotOnSide, 0, "image vertex is not on the partner side");
      if (seen >> b & 1u) throw PairingError(PairingErrorKind::NotABijection, 0, "vertex map is not a bijection");
      seen |= 1u << b;
      if (p.vertex_image(j, b) != cell.side_vertices[i][q])
        throw PairingError(PairingErrorKind::NotABijection, 0, "reverse vertex map is not the inverse");
    }
  }
}

std::array<int, kSides> side_symmetries(const SidePairing& p) {
  const Cell24Model& cell = standard_cell();
  std::array<int, kSides> out{};
  for (int i = 0; i < kSides; ++i) {
    auto k = cell.side_symmetry_index(i, p.partner[i], p.images[i]);
    if (!k) {
      throw NotASymmetry("the vertex map " + side_name(i) + " -> " + side_name(p.partner[i]) +
                         " is not induced by a symmetry of the 24-cell");
    }
    out[i] = *k;
  }
  return out;
}

DerivedTransformations derive_transformations(const SidePairing& p) {
  const Cell24Model& cell = standard_cell();
  DerivedTransformations d;
  d.symmetry = side_symmetries(p);
  for (int i = 0; i < kSides; ++i) {
    d.g[i] = cell.side_reflection(p.partner[i]) * cell.symmetries[d.symmetry[i]].matrix;
  }
  return d;
}

SidePairing conjugate_pairing(const SidePairing& p, int symmetry) {
  const Cell24Model& cell = standard_cell();
  const Symmetry& phi = cell.symmetries[symmetry];
  SidePairing out;
  for (int i = 0; i < kSides; ++i) {
    const int pi = phi.side_perm[i];
    out.partner[pi] = phi.side_perm[p.partner[i]];
    for (int q = 0; q < kVerticesPerSide; ++q) {
      const int a = cell.side_vertices[i][q];
      const int slot = cell.vertex_slot(pi, phi.vertex_perm[a]);
      out.images[pi][slot] = phi.vertex_perm[p.images[i][q]];
    }
  }
  return out;
}

PairingKey pairing_key(const SidePairing& p) {
  PairingKey key{};
  std::size_t at = 0;
  for (int i = 0; i < kSides; ++i) {
    key[at++] = static_cast<std::uint8_t>(p.partner[i]);
    for (auto x : p.images[i]) key[at++] = x;
  }
  return key;
}

SidePairing pairing_from_key(const PairingKey& key) {
  SidePairing p;
  std::size_t at = 0;
  for (int i = 0; i < kSides; ++i) {
    p.partner[i] = key[at++];
    for (auto& x : p.images[i]) x = key[at++];
  }
  validate_pairing(p);
  return p;
}

std::string key_to_hex(const PairingKey& key) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(2 * key.size());
  for (auto b : key) {
    out += digits[b >> 4];
    out += digits[b & 15];
  }
  return out;
}

PairingKey key_from_hex(std::string_view hex) {
  if (hex.size() != 2 * kPairingKeySize) throw std::invalid_argument("pairing key has the wrong length");
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    throw std::invalid_argument("pairing key is not lowercase hex");
  };
  PairingKey key{};
  for (std::size_t k = 0; k < key.size(); ++k)
    key[k] = static_cast<std::uint8_t>(nibble(hex[2 * k]) << 4 | nibble(hex[2 * k + 1]));
  return key;
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string pairing_digest(const SidePairing& p) { return fnv1a_hex(serialize_pairing(p)); }

std::filesystem::path bundled_pairing_path(int k) {
  return std::filesystem::path(C24_DATA_DIR) / ("24c1_" + std::to_string(k) + ".pairing");
}

SidePairing bundled_pairing(int k) { return load_pairing(bundled_pairing_path(k)); }

}  // namespace c24
