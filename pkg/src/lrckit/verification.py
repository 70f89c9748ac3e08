"""Built-in reference checks: golden values for the three example codes, the
Simplex suite, and the Griesmer-bound identities.

Each check recomputes everything from scratch through the public API and
returns a pass/fail record; the CLI surfaces them as the `verify-paper`
command (exit code 0 only when every check passes).
"""

from __future__ import annotations

from dataclasses import dataclass

from .bounds import (
    d_bound_local_griesmer,
    griesmer_dim,
    griesmer_length,
    k_bound_reschain,
    k_bound_reschain_rdelta,
    k_opt,
    local_dim_bound,
)
from .code_core import min_distance
from .constructions import example_code, normalized_column_multiset, simplex
from .locality import compute_locality, verify_repair_set
from .residual import residual


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _result(name: str, failures: list[str], ok_detail: str) -> CheckResult:
    if failures:
        return CheckResult(name, False, "; ".join(failures))
    return CheckResult(name, True, ok_detail)


def check_example_1() -> CheckResult:
    fails: list[str] = []
    ex = example_code(1)
    code = ex.code
    d = min_distance(code)
    if (code.n, code.k, d) != (10, 4, 4):
        fails.append(f"parameters {(code.n, code.k, d)} != (10, 4, 4)")
    for s in ex.repair_sets:
        chk = verify_repair_set(code, s, ex.delta)
        if not (chk.valid and chk.entropy == 3 and chk.size == 6 and chk.distance == 3):
            fails.append(f"repair set {sorted(s)}: {chk}")
    prof = compute_locality(code, 3)
    if (prof.kappa, prof.r) != (3, 4):
        fails.append(f"locality (kappa, r) = {(prof.kappa, prof.r)} != (3, 4)")
    bound = d_bound_local_griesmer(10, 4, 4, 3, 2)
    if bound != 4 or bound != d:
        fails.append(f"distance bound {bound} != actual d = {d}")
    return _result("example-1 golden", fails,
                   "[10,4,4]; three (H=3, |R|=6, d=3) repair sets; kappa=3, r=4; d-bound met: 4")


def check_example_2() -> CheckResult:
    fails: list[str] = []
    ex = example_code(2)
    code = ex.code
    d = min_distance(code)
    if (code.n, code.k, d) != (13, 6, 3):
        fails.append(f"parameters {(code.n, code.k, d)} != (13, 6, 3)")
    rep = k_bound_reschain(13, 3, 3, 3, 2)
    if rep.value != 6 or rep.value != code.k:
        fails.append(f"dimension bound {rep.value} != actual k = {code.k}")
    if rep.witness["lambda"] != 5:
        fails.append(f"witness lambda = {rep.witness['lambda']} != 5")
    term = 5 + k_opt(4, 3, 2)
    if term != 6:
        fails.append(f"5 + k_opt(4,3) = {term} != 6")
    return _result("example-2 golden", fails,
                   "[13,6,3]; dimension bound 6 met at lambda=5 (5 + k_opt(4,3) = 6)")


def check_example_3() -> CheckResult:
    fails: list[str] = []
    ex = example_code(3)
    code = ex.code
    d = min_distance(code)
    if (code.n, code.k, d) != (10, 3, 3):
        fails.append(f"parameters {(code.n, code.k, d)} != (10, 3, 3)")
    kb = local_dim_bound(2, 3, 2)
    if kb != 1:
        fails.append(f"kappa_B(r=2, delta=3) = {kb} != 1")
    if griesmer_length(1, 3, 2) != 3:
        fails.append(f"G(1,3) = {griesmer_length(1, 3, 2)} != 3")
    rep = k_bound_reschain_rdelta(10, 3, 2, 3, 2)
    if rep.value != 3 or rep.value != code.k:
        fails.append(f"dimension bound {rep.value} != actual k = {code.k}")
    if rep.witness["lambda"] != 2:
        fails.append(f"witness lambda = {rep.witness['lambda']} != 2")
    term = 2 + k_opt(4, 3, 2)
    if term != 3:
        fails.append(f"2 + k_opt(4,3) = {term} != 3")
    return _result("example-3 golden", fails,
                   "[10,3,3]; kappa_B=1, G(1,3)=3; dimension bound 3 met at lambda=2")


SIMPLEX_SUITE = ((3, 2), (4, 2), (2, 3), (3, 3))


def check_simplex_suite() -> CheckResult:
    fails: list[str] = []
    for m, q in SIMPLEX_SUITE:
        code = simplex(m, q)
        n_expect = (q**m - 1) // (q - 1)
        d = min_distance(code)
        if (code.n, code.k, d) != (n_expect, m, q ** (m - 1)):
            fails.append(f"S({m},{q}) parameters {(code.n, code.k, d)}")
            continue
        if griesmer_length(m, d, q) != code.n:
            fails.append(f"S({m},{q}) misses the Griesmer length with equality")
        kept, sub = residual(code)
        if sub is None:
            fails.append(f"S({m},{q}) residual collapsed")
        else:
            want = normalized_column_multiset(simplex(m - 1, q))
            got = normalized_column_multiset(sub)
            if want != got:
                fails.append(f"S({m},{q}) residual columns differ from S({m-1},{q})")
        for kappa in range(2, m + 1):
            prof = compute_locality(code, q ** (kappa - 1), size_cap=code.n)
            if prof.kappa != kappa:
                fails.append(
                    f"S({m},{q}) at delta=q^{kappa-1}: kappa = {prof.kappa} != {kappa}"
                )
    return _result("simplex suite", fails,
                   "parameters, Griesmer equality, residual = S(m-1,q), "
                   "dimension-locality kappa for 2 <= kappa <= m")


def check_griesmer_properties() -> CheckResult:
    fails: list[str] = []
    for q in (2, 3, 4):
        for a in range(0, 9):
            for b in range(0, 9):
                for delta in range(1, 33):
                    lhs = griesmer_length(a, delta, q) + griesmer_length(
                        b, -(-delta // q**a), q
                    )
                    rhs = griesmer_length(a + b, delta, q)
                    if lhs != rhs:
                        fails.append(f"additivity fails at q={q} a={a} b={b} delta={delta}")
                        break
    values = (griesmer_dim(8, 5, 2), griesmer_dim(7, 5, 2), griesmer_dim(9, 5, 2))
    if values != (2, 1, 2):
        fails.append(f"dimension values {values} != (2, 1, 2)")
    if not 2 ** (values[0] + values[0]) > 2 ** (values[1] + values[2]):
        fails.append("log-convexity counterexample no longer violates the inequality")
    return _result("griesmer properties", fails,
                   "additivity exhaustive (a,b <= 8, delta <= 32, q in {2,3,4}); "
                   "non-log-convexity witness at (8,5)/(7,5)/(9,5)")


def run_reference_checks() -> list[CheckResult]:
    """All built-in checks, in a fixed order."""
    return [
        check_example_1(),
        check_example_2(),
        check_example_3(),
        check_simplex_suite(),
        check_griesmer_properties(),
    ]
