// Copyright 2026 The stabsearch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "stabsearch/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "stabsearch/error.hpp"

namespace stabsearch {

namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) {
    return {};
  }
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) {
      ++i;
    }
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') {
      ++j;
    }
    if (j > i) {
      out.push_back(s.substr(i, j - i));
    }
    i = j;
  }
  return out;
}

std::size_t parse_count(std::string_view token, std::size_t line) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc{} || ptr != token.data() + token.size() || v == 0) {
    throw ParseError("invalid qubit count '" + std::string(token) + "'", line);
  }
  return v;
}

// Shared line walker for both file formats. `on_header` receives the
// directive tokens, `on_body` the non-comment payload.
template <class Header, class Body>
void walk_lines(std::istream& in, Header&& on_header, Body&& on_body) {
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view s = trim(raw);
    if (s.empty() || s.front() == '#') {
      continue;
    }
    if (s.front() == '%') {
      on_header(split_ws(s), s, line);
    } else {
      on_body(split_ws(s), line);
    }
  }
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open '" + path.string() + "'");
  }
  return in;
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

double parse_double(std::string_view token) {
  if (!token.empty() && token.front() == '+') {
    token.remove_prefix(1);
  }
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty()) {
    throw ParseError("invalid number '" + std::string(token) + "'");
  }
  if (!std::isfinite(v)) {
    throw ParseError("non-finite coefficient '" + std::string(token) + "'");
  }
  return v;
}

PauliSum parse_hamiltonian(std::istream& in) {
  std::optional<std::size_t> n_qubits;
  std::optional<PauliSumBuilder> builder;
  Metadata meta;

  auto ensure_builder = [&](std::size_t n, std::size_t line) {
    if (n_qubits && *n_qubits != n) {
      throw ParseError("string length " + std::to_string(n) +
                           " disagrees with qubit count " + std::to_string(*n_qubits),
                       line);
    }
    n_qubits = n;
    if (!builder) {
      builder.emplace(n);
    }
  };

  walk_lines(
      in,
      [&](const std::vector<std::string_view>& tok, std::string_view text,
          std::size_t line) {
        if (tok[0] == "%n_qubits" && tok.size() == 2) {
          ensure_builder(parse_count(tok[1], line), line);
        } else if (tok[0] == "%meta" && tok.size() >= 2) {
          // Value is the remainder of the line, verbatim.
          auto rest = trim(text.substr(text.find(tok[1]) + tok[1].size()));
          meta.emplace_back(std::string(tok[1]), std::string(rest));
        } else {
          throw ParseError("unknown header '" + std::string(text) + "'", line);
        }
      },
      [&](const std::vector<std::string_view>& tok, std::size_t line) {
        if (tok.size() != 2) {
          throw ParseError("expected '<coefficient> <pauli-string>'", line);
        }
        double c = 0.0;
        try {
          c = parse_double(tok[0]);
        } catch (const ParseError& e) {
          throw ParseError(e.what(), line);
        }
        ensure_builder(tok[1].size(), line);
        try {
          builder->add(c, parse_pauli(tok[1], *n_qubits));
        } catch (const ParseError& e) {
          throw ParseError(e.what(), line);
        }
      });

  PauliSumBuilder b = builder ? std::move(*builder) : PauliSumBuilder(0);
  for (auto& [k, v] : meta) {
    b.add_metadata(std::move(k), std::move(v));
  }
  return std::move(b).build();
}

PauliSum read_hamiltonian(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return parse_hamiltonian(in);
}

void write_hamiltonian(std::ostream& out, const PauliSum& h) {
  out << "%n_qubits " << h.n_qubits() << '\n';
  for (const auto& [k, v] : h.metadata()) {
    out << "%meta " << k << ' ' << v << '\n';
  }
  for (std::size_t i = 0; i < h.size(); ++i) {
    out << format_double(h.coefficient(i)) << ' ' << format_pauli(h.string(i)) << '\n';
  }
}

StabilizerList parse_stabilizers(std::istream& in) {
  StabilizerList out;
  auto check_n = [&](std::size_t n, std::size_t line) {
    if (out.n_qubits != 0 && out.n_qubits != n) {
      throw ParseError("string length " + std::to_string(n) +
                           " disagrees with qubit count " + std::to_string(out.n_qubits),
                       line);
    }
    out.n_qubits = n;
  };
  walk_lines(
      in,
      [&](const std::vector<std::string_view>& tok, std::string_view text,
          std::size_t line) {
        if (tok[0] == "%n_qubits" && tok.size() == 2) {
          check_n(parse_count(tok[1], line), line);
        } else if (tok[0] != "%meta") {
          throw ParseError("unknown header '" + std::string(text) + "'", line);
        }
      },
      [&](const std::vector<std::string_view>& tok, std::size_t line) {
        if (tok.size() != 1) {
          throw ParseError("expected '<+|-><pauli-string>'", line);
        }
        std::string_view s = tok[0];
        std::size_t len = s.size() - ((s.front() == '+' || s.front() == '-') ? 1 : 0);
        if (len == 0) {
          throw ParseError("empty Pauli string", line);
        }
        check_n(len, line);
        try {
          out.generators.push_back(parse_signed_pauli(s, out.n_qubits));
        } catch (const ParseError& e) {
          throw ParseError(e.what(), line);
        }
      });
  return out;
}

StabilizerList read_stabilizers(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return parse_stabilizers(in);
}

void write_stabilizers(std::ostream& out, std::size_t n_qubits,
                       std::span<const SignedPauli> generators) {
  out << "%n_qubits " << n_qubits << '\n';
  for (const auto& g : generators) {
    out << format_signed_pauli(g) << '\n';
  }
}

}  // namespace stabsearch
