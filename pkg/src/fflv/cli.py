"""Command line frontend for scans, point exports, and verification bundles.

Four subcommands:

  weyl-scan     sweep a symmetric group, classify every element
  points        export the lattice points of one face polytope
  char-compare  lattice-point character against the operator recursion
  verify        aggregate polytope / poset / module checks for one case

All outputs are deterministic: identical invocations produce byte-identical
results.  The FFLV_THREADS environment variable caps worker threads for
batch sweeps.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .characters import character_from_lattice_points, demazure_character_oracle
from .marked_poset import build_marked_poset, ehrhart_count, marked_chain_points
from .polytope import (
    UnboundedFaceError,
    degree_histogram,
    dilate,
    enumerate_lattice_points,
    minkowski_sum,
    points_to_csv,
    points_to_json,
    weight_and_degree,
)
from .rep import (
    DimensionCapError,
    build_highest_weight_module,
    demazure_submodule,
    essential_monomials,
    pbw_filtration_profile,
    subset_submodule,
    verify_monomial_basis,
)
from .roots import DominantWeight, parse_root
from .weyl import (
    Permutation,
    RootSubset,
    all_permutations,
    inversion_roots,
    is_kempf,
    is_triangular_element,
    is_triangular_subset,
    parse_permutation,
)


def thread_count() -> int:
    """Worker count for batch sweeps, capped by FFLV_THREADS."""
    cap = os.environ.get("FFLV_THREADS")
    if cap is not None:
        try:
            value = int(cap)
        except ValueError:
            raise ValueError(f"FFLV_THREADS must be an integer, got {cap!r}")
        if value < 1:
            raise ValueError(f"FFLV_THREADS must be positive, got {value}")
        return value
    return min(8, os.cpu_count() or 1)


@dataclass
class JobSpec:
    """One parsed command invocation."""

    command: str
    n: int
    fmt: str = "text"
    lam: Optional[DominantWeight] = None
    mu: Optional[DominantWeight] = None
    w: Optional[Permutation] = None
    A: Optional[RootSubset] = None
    dilation: int = 1
    max_dim: int = 400
    max_rank: int = 6
    with_rep: bool = True
    extras: dict = field(default_factory=dict)

    def subset(self) -> RootSubset:
        if self.A is not None:
            return self.A
        assert self.w is not None
        return inversion_roots(self.w)

    def case_label(self) -> str:
        parts = [f"n={self.n}"]
        if self.lam is not None:
            parts.append("lambda=" + ",".join(str(c) for c in self.lam.coeffs))
        if self.w is not None:
            parts.append("w=" + " ".join(str(v) for v in self.w.images))
        elif self.A is not None:
            parts.append("A=" + ",".join(r.label for r in self.A.sorted_roots()))
        return " ".join(parts)


def _parse_weight(text: str) -> DominantWeight:
    try:
        coeffs = tuple(int(t) for t in text.replace(",", " ").split())
    except ValueError as exc:
        raise ValueError(f"cannot parse weight {text!r}") from exc
    if not coeffs:
        raise ValueError("weight needs at least one coefficient")
    return DominantWeight(coeffs)


def _parse_subset(text: str, n: int) -> RootSubset:
    roots = []
    for token in text.split(","):
        token = token.strip()
        if token:
            roots.append(parse_root(token))
    for r in roots:
        if r.j > n:
            raise ValueError(f"root {r.label} does not fit rank {n}")
    return RootSubset.of(n, roots)


def _resolve_element(job: JobSpec, args: argparse.Namespace) -> None:
    """Fill job.w / job.A from the mutually exclusive element flags."""
    if getattr(args, "w", None) is not None:
        job.w = parse_permutation(args.w, job.n)
    elif getattr(args, "w_oneline", None) is not None:
        job.w = parse_permutation(args.w_oneline, job.n)
    elif getattr(args, "A", None) is not None:
        job.A = _parse_subset(args.A, job.n)


def _emit(lines: Sequence[str]) -> None:
    for line in lines:
        print(line)


def cmd_weyl_scan(job: JobSpec) -> int:
    """Classify every element of the symmetric group on n+1 letters."""
    n = job.n
    if n > job.max_rank:
        print(f"rank {n} exceeds the cap {job.max_rank}", file=sys.stderr)
        return 2

    def describe(w: Permutation) -> dict:
        return {
            "w": " ".join(str(v) for v in w.images),
            "length": w.length(),
            "is_kempf": is_kempf(w),
            "is_triangular": is_triangular_element(w),
        }

    elements = all_permutations(n)
    with ThreadPoolExecutor(max_workers=thread_count()) as pool:
        rows = list(pool.map(describe, elements))

    bad = [r["w"] for r in rows if r["is_kempf"] and not r["is_triangular"]]
    counts = {
        "total": len(rows),
        "kempf": sum(1 for r in rows if r["is_kempf"]),
        "triangular": sum(1 for r in rows if r["is_triangular"]),
        "kempf_non_triangular": len(bad),
    }
    if job.fmt == "json":
        print(json.dumps({"rank": n, "elements": rows, "counts": counts},
                         sort_keys=True, separators=(",", ":")))
    elif job.fmt == "csv":
        out = ["w,length,is_kempf,is_triangular"]
        out += [f"{r['w'].replace(' ', '')},{r['length']},{r['is_kempf']},{r['is_triangular']}"
                for r in rows]
        _emit(out)
    else:
        for r in rows:
            flags = ("K" if r["is_kempf"] else "-") + ("T" if r["is_triangular"] else "-")
            print(f"[{r['w']}]  length={r['length']}  {flags}")
        print(f"total={counts['total']} kempf={counts['kempf']} "
              f"triangular={counts['triangular']} "
              f"kempf_non_triangular={counts['kempf_non_triangular']}")
    return 1 if bad else 0


def cmd_points(job: JobSpec) -> int:
    """Export the lattice points of one face polytope."""
    A = job.subset()
    lam = job.lam
    assert lam is not None
    try:
        S = enumerate_lattice_points(A, lam)
    except UnboundedFaceError as exc:
        print(f"unbounded: {exc}", file=sys.stderr)
        return 2
    if job.dilation > 1:
        S = dilate(S, job.dilation)
    if job.fmt == "json":
        data = json.loads(points_to_json(S, lam))
        data["count"] = len(S)
        enriched = []
        for pt in S:
            wt, deg = weight_and_degree(pt)
            enriched.append({
                "values": [[r.i, r.j, v] for r, v in zip(pt.roots, pt.values) if v],
                "weight": list(wt.coeffs),
                "degree": deg,
            })
        data["points"] = enriched
        print(json.dumps(data, sort_keys=True, separators=(",", ":")))
    elif job.fmt == "csv":
        print(points_to_csv(S), end="")
    else:
        print(f"count {len(S)}")
        for pt in S:
            wt, deg = weight_and_degree(pt)
            body = " ".join(f"{r.label}={v}" for r, v in zip(pt.roots, pt.values))
            print(f"{body}  weight={','.join(str(c) for c in wt.coeffs)} degree={deg}")
    return 0


def cmd_char_compare(job: JobSpec) -> int:
    """Compare the lattice-point character with the operator recursion."""
    w = job.w
    lam = job.lam
    assert w is not None and lam is not None
    A = inversion_roots(w)
    triangular = is_triangular_element(w)
    oracle = demazure_character_oracle(w, lam)
    try:
        S = enumerate_lattice_points(A, lam)
    except UnboundedFaceError as exc:
        if job.fmt == "json":
            print(json.dumps({
                "case": job.case_label(), "triangular": triangular,
                "unbounded": str(exc), "oracle_mass": oracle.mass,
            }, sort_keys=True, separators=(",", ":")))
        else:
            print(f"oracle mass: {oracle.mass}")
            print(f"unbounded: {exc}")
        return 2
    lattice = character_from_lattice_points(A, lam, w, points=S, require_triangular=False)
    equal = lattice == oracle
    report = {
        "case": job.case_label(),
        "triangular": triangular,
        "lattice_points": len(S),
        "lattice_mass": lattice.mass,
        "oracle_mass": oracle.mass,
        "mass_deficit": oracle.mass - lattice.mass,
        "termwise_equal": equal,
    }
    if job.fmt == "json":
        print(json.dumps(report, sort_keys=True, separators=(",", ":")))
    else:
        for key, value in report.items():
            print(f"{key}: {value}")
    return 0 if equal else 1


def _verify_checks(job: JobSpec) -> dict:
    """Run the check battery for one case; every check reports independently."""
    A = job.subset()
    lam = job.lam
    assert lam is not None
    mu = job.mu if job.mu is not None else lam
    checks: dict[str, dict] = {}
    triangular = is_triangular_subset(A)

    def record(name: str, status: str, **detail) -> None:
        checks[name] = {"status": status, **detail}

    S = None
    try:
        S = enumerate_lattice_points(A, lam)
        record("points", "pass", count=len(S))
    except UnboundedFaceError as exc:
        record("points", "fail", error=str(exc))

    if job.w is not None:
        oracle = demazure_character_oracle(job.w, lam)
        if S is None:
            record("character", "fail", oracle_mass=oracle.mass, error="unbounded face")
        else:
            lattice = character_from_lattice_points(
                A, lam, job.w, points=S, require_triangular=False)
            status = "pass" if lattice == oracle else "fail"
            record("character", status, lattice_mass=lattice.mass,
                   oracle_mass=oracle.mass, deficit=oracle.mass - lattice.mass)

    if S is None:
        record("minkowski", "skipped", reason="unbounded face")
        record("normality", "skipped", reason="unbounded face")
    else:
        try:
            Smu = enumerate_lattice_points(A, mu)
            Ssum = enumerate_lattice_points(A, lam + mu)
            ok = minkowski_sum(S, Smu) == Ssum
            record("minkowski", "pass" if ok else "fail",
                   left=len(S), right=len(Smu), total=len(Ssum))
        except UnboundedFaceError as exc:
            record("minkowski", "fail", error=str(exc))
        try:
            ok = True
            acc = S
            for k in (2, 3):
                acc = minkowski_sum(acc, S)
                ok = ok and acc == enumerate_lattice_points(A, lam.scale(k))
            record("normality", "pass" if ok else "fail", checked_dilations=[2, 3])
        except UnboundedFaceError as exc:
            record("normality", "fail", error=str(exc))

    try:
        poset = build_marked_poset(A, lam)
        chain = len(marked_chain_points(poset))
        pairs = [(ehrhart_count(A, lam, t, "chain"), ehrhart_count(A, lam, t, "order"))
                 for t in (1, 2, 3)]
        agree = all(c == o for c, o in pairs)
        detail = {"chain_count": chain, "ehrhart": [list(p) for p in pairs]}
        if triangular and S is not None:
            detail["lattice_count"] = len(S)
            ok = agree and chain == len(S)
        else:
            ok = agree
        record("marked_poset", "pass" if ok else "fail", **detail)
    except (ValueError, ArithmeticError) as exc:
        record("marked_poset", "fail", error=str(exc))

    if not job.with_rep:
        record("rep", "skipped", reason="disabled")
    elif S is None:
        record("rep", "skipped", reason="unbounded face")
    else:
        try:
            module = build_highest_weight_module(lam, cap=job.max_dim)
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                report = verify_monomial_basis(module, A, lam)
                dims = {"subset": report.submodule_dimension, "lattice": len(S)}
                if job.w is not None:
                    dims["demazure"] = demazure_submodule(module, job.w).dimension
                    dims["oracle"] = demazure_character_oracle(job.w, lam).mass
                profile = pbw_filtration_profile(module, A)
                hist = degree_histogram(S)
                incs = [profile[0]] + [profile[i] - profile[i - 1]
                                       for i in range(1, len(profile))]
                want = [hist.get(d, 0) for d in range(max(hist) + 1)] if hist else [1]
                graded_ok = incs == want
                essential_ok = essential_monomials(module, A) == S
            basis_ok = report.ok
            status = "pass" if (basis_ok and graded_ok and essential_ok) else "fail"
            record("rep", status, dims=dims, basis_ok=basis_ok,
                   graded_ok=graded_ok, essential_ok=essential_ok)
        except DimensionCapError as exc:
            record("rep", "skipped", reason=str(exc))
    return checks


def cmd_verify(job: JobSpec) -> int:
    """Aggregate verification bundle; exit 0 iff every executed check passed."""
    checks = _verify_checks(job)
    ok = all(c["status"] != "fail" for c in checks.values())
    bundle = {"case": job.case_label(), "checks": checks, "ok": ok}
    if job.fmt == "text":
        print(f"case: {bundle['case']}")
        for name, c in checks.items():
            detail = {k: v for k, v in c.items() if k != "status"}
            print(f"{c['status'].upper():7s} {name}: {detail}")
        print(f"overall: {'ok' if ok else 'FAIL'}")
    else:
        print(json.dumps(bundle, sort_keys=True, separators=(",", ":")))
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fflv",
        description="Exact combinatorics of triangular Weyl group elements, "
                    "face polytopes, and their module counterparts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    scan = sub.add_parser("weyl-scan", help="classify all elements of one symmetric group")
    scan.add_argument("--n", type=int, required=True, help="Lie rank (permutes n+1 letters)")
    scan.add_argument("--max-rank", type=int, default=6, help="largest allowed rank")
    scan.add_argument("--format", choices=("text", "json", "csv"), default="text")

    def add_element_flags(p: argparse.ArgumentParser, with_subset: bool) -> None:
        group = p.add_mutually_exclusive_group(required=True)
        group.add_argument("--w", help="generator word, e.g. 's2 s3 s1'")
        group.add_argument("--w-oneline", help="one-line notation, e.g. '3 1 4 2'")
        if with_subset:
            group.add_argument("--A", help="explicit root subset, e.g. '1.1,3.3,1.3'")

    points = sub.add_parser("points", help="lattice points of one face polytope")
    add_element_flags(points, with_subset=True)
    points.add_argument("--lambda", dest="lam", required=True,
                        help="dominant weight coefficients, e.g. '1,1,1'")
    points.add_argument("--dilate", type=int, default=1,
                        help="emit the k-fold Minkowski sum of the point set")
    points.add_argument("--format", choices=("text", "json", "csv"), default="text")

    char = sub.add_parser("char-compare",
                          help="lattice-point character vs the operator recursion")
    add_element_flags(char, with_subset=False)
    char.add_argument("--lambda", dest="lam", required=True)
    char.add_argument("--format", choices=("text", "json"), default="text")

    verify = sub.add_parser("verify", help="aggregate checks for one case")
    add_element_flags(verify, with_subset=True)
    verify.add_argument("--lambda", dest="lam", required=True)
    verify.add_argument("--mu", help="second weight for the Minkowski check (default: lambda)")
    verify.add_argument("--max-dim", type=int, default=400,
                        help="dimension cap for the module checks")
    verify.add_argument("--no-rep", action="store_true",
                        help="skip the explicit module checks")
    verify.add_argument("--format", choices=("text", "json"), default="json")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "weyl-scan":
            job = JobSpec(command=args.command, n=args.n, fmt=args.format,
                           max_rank=args.max_rank)
            return cmd_weyl_scan(job)
        lam = _parse_weight(args.lam)
        job = JobSpec(command=args.command, n=lam.n, fmt=args.format, lam=lam)
        _resolve_element(job, args)
        if args.command == "points":
            if args.dilate < 1:
                raise ValueError(f"dilation factor must be >= 1, got {args.dilate}")
            job.dilation = args.dilate
            return cmd_points(job)
        if args.command == "char-compare":
            return cmd_char_compare(job)
        job.max_dim = args.max_dim
        job.with_rep = not args.no_rep
        if args.mu is not None:
            job.mu = _parse_weight(args.mu)
            if job.mu.n != lam.n:
                raise ValueError("mu and lambda must have the same rank")
        return cmd_verify(job)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
