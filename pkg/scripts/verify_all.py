"""Run every extremal check and print one line each. Exit status 1 on any failure."""

import sys
import time

from greedyorder.experiments import check_directed_constructions, verify_prop1, verify_prop2, verify_theorem1


def main() -> int:
    ok = True

    def report(name, passed, line):
        nonlocal ok
        ok &= passed
        print(f"{name:<28} {line}")

    start = time.perf_counter()
    for n in range(3, 7):
        rep = verify_theorem1(n)
        report(f"undirected extremes n={n}", rep.ok, rep.line())
    for n in (3, 4):
        rep = verify_prop2(n)
        report(f"directed extremes n={n}", rep.ok, rep.line())
    for c in check_directed_constructions():
        report(f"C_n / D_n n={c.n}", c.ok, f"cycle worst {c.cycle_worst}, D_n best {c.dn_best}")
    rep = verify_prop1()
    report("token walk bound", rep.ok, rep.line())
    print(f"elapsed {time.perf_counter() - start:.1f}s")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
