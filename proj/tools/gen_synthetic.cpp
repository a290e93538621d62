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

// Writes the synthetic benchmark Hamiltonian in the text format.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "stabsearch/io.hpp"
#include "synthetic.hpp"

int main(int argc, char** argv) {
  stabsearch::synthetic::Options o;
  std::string out;
  CLI::App app{"Generate a synthetic Jordan-Wigner-shaped Hamiltonian"};
  app.add_option("--qubits", o.n_qubits, "Register size")->check(CLI::Range(4, 4096));
  app.add_option("--terms", o.n_terms, "Number of terms including the identity");
  app.add_option("--seed", o.seed, "Generator seed");
  app.add_option("--out", out, "Output file")->required();
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  const auto h = stabsearch::synthetic::generate(o);
  std::ofstream f(out);
  f << "# Synthetic benchmark Hamiltonian, seed " << o.seed << '\n';
  stabsearch::write_hamiltonian(f, h);
  if (!f) {
    std::cerr << "error: cannot write '" << out << "'\n";
    return 2;
  }
  std::cerr << "wrote " << h.size() << " terms on " << h.n_qubits() << " qubits\n";
  return 0;
}
