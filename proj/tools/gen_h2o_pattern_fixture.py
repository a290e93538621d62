#!/usr/bin/env python3
# Copyright 2026 The stabsearch Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Writes the synthetic 8-qubit H2O-pattern fixture and its stabilizer files.

Four spatial orbitals, spin-up on qubits 7..4 (left half), spin-down on 3..0.
Term families follow the stretched-H2 Hamiltonian: on-site and inter-orbital
ZZ couplings, single-Z terms, and the four X/Y exchange strings on each
adjacent orbital pair. The exchange strength is solved so that the
spin-resonating states and the high-spin product states have equal energy.
Energies are evaluated with dense 256x256 matrices, independently of the
C++ library.
"""
import argparse
import pathlib

import numpy as np

N = 8
ORB = 4
MAT = {
    "I": np.eye(2),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]]),
    "Z": np.diag([1.0, -1.0]),
}


def up(k):
    return ORB + k


def down(k):
    return k


def string(ops):
    s = ["I"] * N
    for q, c in ops.items():
        s[N - 1 - q] = c
    return "".join(s)


def dense(s):
    m = np.eye(1)
    for c in s:
        m = np.kron(m, MAT[c])
    return m


def state(gens):
    proj = np.eye(2**N, dtype=complex)
    for g in gens:
        sign = -1 if g[0] == "-" else 1
        proj = proj @ (np.eye(2**N) + sign * dense(g[1:])) / 2
    col = np.argmax(np.linalg.norm(proj, axis=0))
    v = proj[:, col]
    return v / np.linalg.norm(v)


def expect(v, s):
    return float(np.real(np.vdot(v, dense(s) @ v)))


RESONATING = [
    "-" + string({up(0): "Z", down(0): "Z"}),
    "-" + string({up(1): "Z", down(1): "Z"}),
    "-" + string({up(2): "Z", down(2): "Z"}),
    "-" + string({up(3): "Z", down(3): "Z"}),
    "-" + string({up(1): "X", up(0): "X", down(1): "Y", down(0): "Y"}),
    "-" + string({up(2): "X", up(1): "X", down(2): "Y", down(1): "Y"}),
    "-" + string({up(3): "X", up(2): "X", down(3): "Y", down(2): "Y"}),
]
LIFT = string({down(k): "Z" for k in range(ORB)})
STATES = {
    "odd": RESONATING + ["-" + LIFT],
    "even": RESONATING + ["+" + LIFT],
    "high_spin_up": ["-" + string({up(k): "Z"}) for k in reversed(range(ORB))]
    + ["+" + string({down(k): "Z"}) for k in reversed(range(ORB))],
    "high_spin_down": ["+" + string({up(k): "Z"}) for k in reversed(range(ORB))]
    + ["-" + string({down(k): "Z"}) for k in reversed(range(ORB))],
}


def base_terms():
    terms = [(-2.1, "I" * N)]
    for k in range(ORB):
        s = 0.03 + 0.01 * k
        terms.append((s, string({up(k): "Z"})))
        terms.append((s, string({down(k): "Z"})))
        terms.append((0.122 - 0.004 * k, string({up(k): "Z", down(k): "Z"})))
    for j in range(ORB):
        for k in range(j + 1, ORB):
            b = 0.047 / (k - j)
            d = 0.118 / (k - j)
            terms.append((b, string({up(j): "Z", up(k): "Z"})))
            terms.append((b, string({down(j): "Z", down(k): "Z"})))
            terms.append((d, string({up(j): "Z", down(k): "Z"})))
            terms.append((d, string({up(k): "Z", down(j): "Z"})))
    return terms


def exchange_terms(scale):
    terms = []
    for k in range(ORB - 1):
        g = scale * (1.0 + 0.1 * k)
        lo, hi = k, k + 1
        for a, b in (("X", "Y"), ("Y", "X"), ("X", "X"), ("Y", "Y")):
            terms.append((g, string({up(hi): a, up(lo): a, down(hi): b, down(lo): b})))
    return terms


def energy(v, terms):
    return sum(c * expect(v, s) for c, s in terms)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=pathlib.Path, default=pathlib.Path("data"))
    args = ap.parse_args()

    vecs = {k: state(g) for k, g in STATES.items()}
    base = {k: energy(v, base_terms()) for k, v in vecs.items()}
    unit = {k: energy(v, exchange_terms(1.0)) for k, v in vecs.items()}
    assert abs(unit["high_spin_up"]) < 1e-12 and abs(unit["odd"] - unit["even"]) < 1e-12
    assert abs(base["odd"] - base["even"]) < 1e-12
    # Energy is linear in the exchange scale.
    scale = (base["high_spin_up"] - base["odd"]) / unit["odd"]
    assert scale > 0, scale
    terms = base_terms() + exchange_terms(scale)
    energies = {k: energy(v, terms) for k, v in vecs.items()}
    spread = max(energies.values()) - min(energies.values())
    assert spread < 1e-12, energies

    args.out.mkdir(parents=True, exist_ok=True)
    with open(args.out / "h2o_pattern.ham", "w") as f:
        f.write("# Synthetic 8-qubit Hamiltonian with the H2O active-space degeneracy pattern.\n")
        f.write("# Generated by tools/gen_h2o_pattern_fixture.py.\n")
        f.write(f"%n_qubits {N}\n%meta molecule h2o-pattern\n")
        for c, s in terms:
            f.write(f"{c!r} {s}\n")
    notes = {
        "odd": "Spin-resonating stabilizers with the -IIIIZZZZ completion (odd spin).",
        "even": "Spin-resonating stabilizers with the +IIIIZZZZ completion (even spin).",
        "high_spin_up": "High-spin product state |1111;0000>.",
        "high_spin_down": "High-spin product state |0000;1111>.",
    }
    for k, gens in STATES.items():
        with open(args.out / f"h2o_pattern_{k}.stab", "w") as f:
            f.write(f"# {notes[k]}\n")
            f.write("\n".join(gens) + "\n")
    print("exchange scale", repr(scale))
    for k, e in energies.items():
        print(k, repr(e))


if __name__ == "__main__":
    main()
