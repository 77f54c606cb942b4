#!/usr/bin/env python3
"""Write the prime factorizations of 2^d - 1 for d = 1..512.

Source: the prime-factor database shipped with the `galois` Python package
(galois/_databases/prime_factors.db, table `factorizations`). Every factor is
re-checked with sympy.isprime and every product is re-multiplied before output.

Usage: extract_mersenne_factors.py <prime_factors.db> <out.txt> [<header.hpp>]

The optional header receives the distinct primes for d <= 64 as C++ data.
"""
import sqlite3
import sys

from sympy import isprime

MAX_DEGREE = 512


def main() -> int:
    db, out = sys.argv[1], sys.argv[2]
    con = sqlite3.connect(db)
    rows = {
        e: (f, mult)
        for e, f, mult in con.execute(
            "select exponent, factors, multiplicities from factorizations where base=2 and offset=-1"
        )
    }
    lines = ["# d: p1^e1 p2^e2 ... with prod = 2^d - 1 (source: galois prime_factors.db)"]
    for d in range(1, MAX_DEGREE + 1):
        target = (1 << d) - 1
        if d in rows:
            primes = [int(x) for x in rows[d][0].split(",")]
            mults = [int(x) for x in rows[d][1].split(",")]
        elif isprime(target):
            primes, mults = [target], [1]
        elif d == 1:
            primes, mults = [], []
        else:
            raise SystemExit(f"no factorization for d={d}")
        prod = 1
        for p, e in zip(primes, mults):
            if not isprime(p):
                raise SystemExit(f"d={d}: factor {p} is not prime")
            prod *= p**e
        if prod != target:
            raise SystemExit(f"d={d}: product mismatch")
        lines.append(f"{d}: " + " ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in zip(primes, mults)))
    with open(out, "w") as fh:
        fh.write("\n".join(lines) + "\n")
    if len(sys.argv) > 3:
        write_header(sys.argv[3], lines[1:65])
    return 0


def write_header(path: str, lines: list) -> None:
    body = []
    for line in lines:
        d, rest = line.split(":")
        primes = [tok.split("^")[0] for tok in rest.split()]
        body.append("    {" + ", ".join(p + "ULL" for p in primes) + "},  // " + d)
    with open(path, "w") as fh:
        fh.write(
            "#pragma once\n\n#include <array>\n#include <cstdint>\n#include <vector>\n\n"
            "// Generated by tools/extract_mersenne_factors.py from data/mersenne_factors.txt.\n\n"
            "namespace kdfc::gf2::data {\n\n"
            "/// Distinct prime divisors of 2^d - 1, indexed by d - 1 for d = 1..64.\n"
            "inline const std::array<std::vector<std::uint64_t>, 64>& mersenne_prime_divisors() {\n"
            "  static const std::array<std::vector<std::uint64_t>, 64> table{{\n"
            + "\n".join(body)
            + "\n  }};\n  return table;\n}\n\n}  // namespace kdfc::gf2::data\n"
        )


if __name__ == "__main__":
    sys.exit(main())
