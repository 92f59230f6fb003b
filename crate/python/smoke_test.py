#!/usr/bin/env python3
"""Smoke test for the weylpi_py extension module.

Builds nothing itself: compile the extension first with

    cargo build -p weylpi-py

then run

    python3 python/smoke_test.py

The script locates the compiled cdylib under target/, exposes it on
sys.path under the importable name, and exercises the main types and
operations.
"""

import shutil
import sys
import tempfile
from pathlib import Path

REPO_ROOT = Path(__file__).resolve().parent.parent


def import_weylpi_py():
    candidates = []
    for profile in ("debug", "release"):
        for stem in ("libweylpi_py.so", "libweylpi_py.dylib", "weylpi_py.dll"):
            candidates.append(REPO_ROOT / "target" / profile / stem)
    built = next((p for p in candidates if p.exists()), None)
    if built is None:
        sys.exit("extension not found; run `cargo build -p weylpi-py` first")
    stage = Path(tempfile.mkdtemp(prefix="weylpi_py_"))
    suffix = ".pyd" if built.suffix == ".dll" else ".so"
    shutil.copy2(built, stage / f"weylpi_py{suffix}")
    sys.path.insert(0, str(stage))
    import weylpi_py

    return weylpi_py


def main():
    w = import_weylpi_py()
    checks = 0

    def ok(condition, what):
        nonlocal checks
        if not condition:
            sys.exit(f"FAIL: {what}")
        checks += 1
        print(f"ok {checks:2d} - {what}")

    # Parsing, arithmetic, rendering.
    f = w.Poly("x1*x2 - x2*x1")
    g = w.Poly("[x1,x2]")
    ok(f == g, "bracket notation matches the expanded commutator")
    ok(str(w.Poly("x1") * w.Poly("x2")) == "x1*x2", "product renders")
    ok((f - f).is_zero(), "subtraction cancels")

    # Characteristic handling.
    try:
        w.Poly("x1", char=2) + w.Poly("x1", char=3)
        sys.exit("FAIL: mixing characteristics must raise")
    except ValueError:
        ok(True, "mixing characteristics raises ValueError")
    try:
        w.Poly("x1", char=4)
        sys.exit("FAIL: char=4 must raise")
    except ValueError:
        ok(True, "non-prime characteristic raises ValueError")

    # Weyl algebra arithmetic.
    ok(str(w.normal_form("yx")) == "x*y + 1", "defining relation normal form")
    c1, c2 = w.basis(1), w.basis(2)
    ok(str(c1 * c2) == "x^3*y^2 + 2*x^2*y", "basis product (x*y)(x^2*y)")
    ok(str(w.Poly("x1*x2").eval([1, 2])) == "x^3*y^2 + 2*x^2*y", "evaluation agrees")
    ok(c1.commutator(c1).is_zero(), "self-commutator vanishes")

    # Identity testing.
    ok(w.named("phi22").is_identity()["verdict"] == "Identity", "Phi22 over Q")
    ok(
        w.named("delta", char=2).is_identity()["verdict"] == "Identity",
        "Delta over F2",
    )
    refuted = w.named("delta").is_identity()
    ok(refuted["verdict"] == "NotIdentity", "Delta over Q is refuted")
    ok("witness" in refuted, "refutation carries a witness")
    st2 = w.st([1, 2])
    ok(st2.is_identity()["verdict"] == "NotIdentity", "St2 is not an identity")
    ok(w.st([1, 2, 3]).is_identity()["verdict"] == "Identity", "St3 is an identity")

    # Linearization.
    lin = w.Poly("x1*x2^2*x3^3").linearize(2, [1, 1])
    ok(str(lin) == "x1*x2*x3*x4^3 + x1*x3*x2*x4^3", "partial linearization")
    ok(
        w.named("philin") == w.named("phi22").lin_complete(),
        "complete linearization matches the catalog",
    )

    # Solver.
    r = w.solve([2, 2])
    ok(r["dimension"] == 1, "multidegree (2,2) space is one-dimensional")
    ok(r["basis"] == [["1", "-3", "2", "2", "-3", "1"]], "canonical basis vector")
    ok(w.solve([2, 1, 1])["dimension"] == 3, "multidegree (2,1,1) over Q")
    ok(w.solve([2, 1, 1], char=2)["dimension"] == 4, "multidegree (2,1,1) over F2")
    ok(w.solve([1, 1, 1, 1])["dimension"] == 9, "multilinear degree 4 over Q")
    ok(w.solve([1, 1, 1, 1], char=2)["dimension"] == 12, "multilinear degree 4 over F2")

    # Verification matrices.
    p44 = w.check_matrix("P44")
    ok(len(p44) == 15 and all(len(r) == 15 for r in p44), "P44 is 15x15")
    ok(w.check_matrix_det("P44") == -64, "det(P44) = -64")
    ok(w.check_matrix_det("P45") % 2 == 1, "det(P45) is odd")
    ok(len(w.catalog_names()) == 20, "catalog is complete")

    print(f"all {checks} smoke tests passed")


if __name__ == "__main__":
    main()
