#!/usr/bin/env python3
"""Fill in or verify the expectation headers of the program corpus.

Each program is simulated with a plain numpy state vector over all five qubits
(measurements are skipped; corpus programs only measure at the end, so the
pre-measurement state is the final unitary state). For every
``# expect-order:`` line the matching ``# expect-prob:`` line is computed, and
every ``# expect-bloch: qN`` line gets the reduced Bloch vector of qN.

    derive_expectations.py programs/          # verify, exit 1 on mismatch
    derive_expectations.py --write programs/  # rewrite headers in place
"""
import argparse
import pathlib
import re
import sys

import numpy as np

N = 5
R = 1 / np.sqrt(2)
GATES = {
    "h": np.array([[R, R], [R, -R]]),
    "x": np.array([[0, 1], [1, 0]]),
    "y": np.array([[0, -1j], [1j, 0]]),
    "z": np.array([[1, 0], [0, -1]]),
    "s": np.array([[1, 0], [0, 1j]]),
    "sdg": np.array([[1, 0], [0, -1j]]),
    "t": np.array([[1, 0], [0, np.exp(1j * np.pi / 4)]]),
    "tdg": np.array([[1, 0], [0, np.exp(-1j * np.pi / 4)]]),
    "id": np.eye(2),
}
STMT = re.compile(r"(\w+)\s+q\[(\d+)\](?:\s*,\s*q\[(\d+)\])?\s*;")


def simulate(code):
    psi = np.zeros([2] * N, dtype=complex)
    psi[(0,) * N] = 1
    for line in code.splitlines():
        line = line.strip()
        if not line or line.startswith("#") or line.startswith("//"):
            continue
        line = re.split(r"#|//", line)[0]
        for op, a, b in STMT.findall(line):
            a = int(a)
            if op in GATES:
                psi = np.moveaxis(np.tensordot(GATES[op], psi, axes=([1], [a])), 0, a)
            elif op in ("cx", "cnot"):
                b = int(b)
                flipped = psi.copy()
                idx = [slice(None)] * N
                idx[a] = 1
                sub = np.flip(psi[tuple(idx)], axis=b if b < a else b - 1)
                flipped[tuple(idx)] = sub
                psi = flipped
            elif op in ("measure", "bloch"):
                pass
            else:
                raise ValueError(f"unknown op {op}")
    return psi


def marginal(psi, qubits):
    probs = np.abs(psi) ** 2
    others = tuple(q for q in range(N) if q not in qubits)
    return probs.sum(axis=others).reshape(-1)


def bloch(psi, q):
    m = np.moveaxis(psi, q, 0).reshape(2, -1)
    rho = m @ m.conj().T
    return (2 * rho[0, 1].real, -2 * rho[0, 1].imag, (rho[0, 0] - rho[1, 1]).real)


def fmt(v):
    v = round(float(v), 12)
    if v == 0:
        v = 0.0
    text = f"{v:.12f}".rstrip("0").rstrip(".")
    return text if text not in ("-0", "") else "0"


def derive(text):
    psi = simulate(text)
    out = []
    for line in text.splitlines():
        m = re.match(r"#\s*expect-order:\s*(.*)", line)
        if m:
            out.append(line)
            qubits = [int(q.strip()[1:]) for q in m.group(1).split(",")]
            out.append("# expect-prob: " + ",".join(fmt(p) for p in marginal(psi, qubits)))
            continue
        if re.match(r"#\s*expect-prob:", line):
            continue
        m = re.match(r"#\s*expect-bloch:\s*(q\d+)", line)
        if m:
            coords = bloch(psi, int(m.group(1)[1:]))
            out.append(f"# expect-bloch: {m.group(1)} = " + ",".join(fmt(c) for c in coords))
            continue
        out.append(line)
    return "\n".join(out) + "\n"


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--write", action="store_true")
    ap.add_argument("dir", type=pathlib.Path)
    args = ap.parse_args()
    stale = 0
    for path in sorted(args.dir.glob("*.q")):
        text = path.read_text()
        new = derive(text)
        if new != text:
            if args.write:
                path.write_text(new)
                print(f"updated {path.name}")
            else:
                print(f"stale   {path.name}")
                stale += 1
    return 1 if stale else 0


if __name__ == "__main__":
    sys.exit(main())
