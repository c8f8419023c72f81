"""Command-line surface: table emission, the check suite, and inspectors.

Subcommands:

* ``tables``  - emit one block-table family (or all) as JSON or aligned text;
* ``check``   - run the full invariant suite (golden-table diff, Hecke
  relation harness, per-row theorem checks, extended-quotient oracle sweep,
  matching corpus) and exit nonzero on any failure;
* ``mu``      - print the factored measure of one case with its extracted
  parameters, labels and Weyl verdict;
* ``hecke``   - run the relation harness for one weight pair;
* ``extquot`` - evaluate a finite orbit model (built in or from a JSON file).

Exit codes: 0 success, 1 check failure, 2 usage error.  Output is
deterministic for a fixed configuration and seed.  A ``--config`` file (one
``key = value`` per line, ``#`` comments) takes precedence over command-line
flags.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources

from . import blocks, extquot, hecke, plancherel

__all__ = ["main", "run_check_suite"]

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2

SCHEMA_VERSION = 1


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# check suite
# ---------------------------------------------------------------------------


def _golden_table(family: str) -> dict:
    path = resources.files("g2hecke").joinpath(
        f"data/tables/{family.replace('-', '_')}.json"
    )
    with path.open() as f:
        return json.load(f)


def _check_tables(golden_dir: str | None) -> list:
    results = []
    for family in blocks.FAMILIES:
        emitted = blocks.emit_table(family)
        if golden_dir is None:
            want = _golden_table(family)
        else:
            with open(f"{golden_dir}/{family.replace('-', '_')}.json") as f:
                want = json.load(f)
        ok = emitted == want
        results.append(
            {
                "name": f"tables/{family}",
                "ok": ok,
                "detail": f"{len(emitted['rows'])} rows" if ok else "regenerated table differs from golden",
            }
        )
    return results


def _check_hecke(degree_bound: int, seed: int) -> list:
    results = []
    pairs = sorted(
        {
            row.classification.h_g.weight_pair()
            for family in blocks.FAMILIES
            for row in blocks.table_rows(family)
            if row.classification.h_g.weights is not None
        }
        | {(0, 0)}
    )
    for lam, lam_star in pairs:
        pres = hecke.AffineHeckePresentation(
            1, 2, hecke.WeightFunction.rank_one(lam, lam_star), hecke.RGroup.trivial()
        )
        report = hecke.verify_relations(pres, degree_bound, seed=seed)
        results.append(
            {
                "name": f"hecke/relations({lam},{lam_star})",
                "ok": report.ok,
                "detail": "; ".join(
                    f"{c.name}: {'ok' if c.passed else 'FAIL'}" for c in report.checks
                ),
            }
        )
    return results


def _check_blocks(allowed) -> list:
    results = []
    for family in blocks.FAMILIES:
        rows = blocks.table_rows(family)
        iso = all(blocks.check_weyl_iso(r.classification) for r in rows)
        red = all(blocks.check_ro_reduction(r.classification) for r in rows)
        lus = all(
            hecke.check_lusztig(r.classification.h_g.weights, allowed)
            for r in rows
            if r.classification.h_g.weights is not None
        )
        lab = True
        for r in rows:
            c = r.classification
            if c.mu_case is None:
                continue
            case = plancherel.PlancherelCase.from_id(
                c.mu_case, residue_degree=r.descriptor.residue_degree
            )
            pipeline = plancherel.labels(plancherel.mu(case)).pair()
            table = c.h_g.weights.pair() if c.h_g.weights else (0, 0)
            lab = lab and pipeline == table
        results.append(
            {"name": f"blocks/{family}", "ok": iso and red and lus and lab,
             "detail": f"weyl-iso {iso}, ro-reduction {red}, lusztig {lus}, labels {lab}"}
        )
    return results


def _check_extquot(max_size: int = 8) -> list:
    bad = []
    total = 0
    for n in range(1, max_size + 1):
        kinds = [("trivial", 0), ("identity", 0)]
        kinds += [("inversion", c) for c in range(n)]
        if n % 2 == 0:
            kinds.append(("shift-half", 0))
        for kind, offset in kinds:
            m = extquot.torsion_model(n, kind, offset=offset)
            total += 1
            eq = len(extquot.extended_quotient(m))
            cp = extquot.crossed_product_irr_count(m)
            ok = eq == cp
            if m.gamma is not None:
                fixed = sum(1 for p in m.points if m.gamma[p] == p)
                ok = ok and eq == 2 * fixed + (m.size - fixed) // 2
            if not ok:
                bad.append((n, kind, offset))
    return [
        {
            "name": "extquot/oracle-sweep",
            "ok": not bad,
            "detail": f"{total} models, |X| <= {max_size}" if not bad else f"mismatches: {bad}",
        }
    ]


def _matching_corpus(torsion_min: int, torsion_max: int, seed: int):
    """Paired models with good maps, plus injected non-equivariant maps."""
    import random

    rng = random.Random(seed)
    corpus = []
    for n in range(torsion_min, torsion_max + 1):
        shapes = [("trivial", 0), ("identity", 0)]
        shapes += [("inversion", c) for c in sorted({0, 1 % n, 2 % n})]
        if n % 2 == 0:
            shapes.append(("shift-half", 0))
        for kind, offset in shapes:
            m1 = extquot.torsion_model(n, kind, offset=offset)
            shift = rng.randrange(n)
            good = {x: (x + shift) % n for x in range(n)}
            if kind == "inversion":
                m2 = extquot.torsion_model(n, kind, offset=(offset + 2 * shift) % n)
            else:
                m2 = extquot.torsion_model(n, kind, offset=offset)
            corpus.append((m1, m2, good))
    return corpus


def _check_matching(torsion_min: int, torsion_max: int, seed: int) -> list:
    import random

    rng = random.Random(seed + 1)
    corpus = _matching_corpus(torsion_min, torsion_max, seed)
    n_pairs = len(corpus)
    ok = True
    detail = f"{n_pairs} paired models, torsion {torsion_min}..{torsion_max}"
    rejected = 0
    for m1, m2, good in corpus:
        verdict = extquot.check_property(m1, m2, good)
        if not verdict:
            ok = False
            detail = f"good map rejected on {m1}"
            break
        pairs = extquot.matching_bijection(m1, m2, good)
        if len(pairs) != len(extquot.extended_quotient(m1)):
            ok = False
            detail = f"pairing size off on {m1}"
            break
        transfer = extquot.depth_zero_transfer(m1, m2, good)
        if len(transfer) != len(extquot.extended_quotient(m2)):
            ok = False
            detail = f"transfer cardinality off on {m1}"
            break
        # injected non-equivariant map must be rejected by both constructions
        n = m1.size
        if n >= 3:
            perm = list(range(n))
            while True:
                rng.shuffle(perm)
                bad = {x: perm[x] for x in range(n)}
                if not extquot.check_property(m1, m2, bad):
                    break
            try:
                extquot.matching_bijection(m1, m2, bad)
                ok = False
                detail = f"non-equivariant map accepted on {m1}"
                break
            except extquot.ExtQuotError:
                rejected += 1
    if ok:
        detail += f", {rejected} injected bad maps rejected"
    return [{"name": "extquot/matching-corpus", "ok": ok, "detail": detail}]


def run_check_suite(
    degree_bound: int = 3,
    seed: int = 0,
    torsion_min: int = 2,
    torsion_max: int = 12,
    allowed=None,
    golden_dir: str | None = None,
    parts: set | None = None,
) -> dict:
    all_parts = {"tables", "hecke", "blocks", "extquot", "matching"}
    parts = parts or all_parts
    results = []
    if "tables" in parts:
        results += _check_tables(golden_dir)
    if "hecke" in parts:
        results += _check_hecke(degree_bound, seed)
    if "blocks" in parts:
        results += _check_blocks(allowed)
    if "extquot" in parts:
        results += _check_extquot()
    if "matching" in parts:
        results += _check_matching(torsion_min, torsion_max, seed)
    failures = sum(1 for r in results if not r["ok"])
    return {
        "schema_version": SCHEMA_VERSION,
        "seed": seed,
        "results": results,
        "failures": failures,
    }


# ---------------------------------------------------------------------------
# argument handling
# ---------------------------------------------------------------------------


def _load_config(path: str) -> dict:
    """Single table-like text format: one ``key = value`` per line."""
    out = {}
    try:
        with open(path) as f:
            for lineno, raw in enumerate(f, start=1):
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise UsageError(f"{path}:{lineno}: expected 'key = value'")
                key, value = (s.strip() for s in line.split("=", 1))
                out[key.replace("-", "_")] = value
    except OSError as e:
        raise UsageError(f"unreadable config file: {e}")
    return out


def _apply_config(args: argparse.Namespace, config: dict):
    """Config values take precedence over flags."""
    casts = {
        "seed": int,
        "torsion_level": int,
        "degree_bound": int,
        "family": str,
        "format": str,
        "case": str,
        "weights": str,
        "allowed_lusztig": str,
        "golden_dir": str,
        "residue_degree": int,
        "torsion_level": int,
        "gamma": str,
        "offset": int,
        "model": str,
    }
    for key, value in config.items():
        if key not in casts:
            raise UsageError(f"unknown config key {key!r}")
        if hasattr(args, key):
            setattr(args, key, casts[key](value))


def _load_allowed(path: str | None):
    if path is None:
        return None
    try:
        with open(path) as f:
            doc = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise UsageError(f"unreadable allowed-pairs file: {e}")
    return {tuple(p) for p in doc["allowed_pairs"]}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="g2hecke",
        description="Block tables, Hecke relation checks and Plancherel case inspection "
        "for the maximal-Levi blocks of split G2.",
        epilog="Values from --config override command-line flags.",
    )
    parser.add_argument("--config", default=None, help="key = value file overriding flags")
    sub = parser.add_subparsers(dest="command", required=True)

    p_tables = sub.add_parser("tables", help="emit a block-table family")
    p_tables.add_argument("--family", default="all", choices=("all",) + blocks.FAMILIES)
    p_tables.add_argument("--format", default="json", choices=("json", "text"))

    p_check = sub.add_parser("check", help="run the invariant suite")
    p_check.add_argument("--all", action="store_true", help="run every part (default)")
    p_check.add_argument(
        "--part",
        action="append",
        choices=("tables", "hecke", "blocks", "extquot", "matching"),
        help="run only the named part (repeatable)",
    )
    p_check.add_argument("--format", default="text", choices=("json", "text"))
    p_check.add_argument("--seed", type=int, default=0)
    p_check.add_argument("--degree-bound", dest="degree_bound", type=int, default=3)
    p_check.add_argument("--allowed-lusztig", dest="allowed_lusztig", default=None,
                         help="JSON file overriding the shipped allowed label pairs")
    p_check.add_argument("--golden-dir", dest="golden_dir", default=None,
                         help="directory of golden tables (defaults to packaged data)")

    p_mu = sub.add_parser("mu", help="print the factored measure of one case")
    p_mu.add_argument("--case", required=True, choices=plancherel.CASE_IDS)
    p_mu.add_argument("--residue-degree", dest="residue_degree", type=int, default=2, choices=(1, 2))
    p_mu.add_argument("--format", default="text", choices=("json", "text"))

    p_hecke = sub.add_parser("hecke", help="verify relations for one weight pair")
    p_hecke.add_argument("--weights", required=True, help="pair 'lambda,lambda*', e.g. 3,1")
    p_hecke.add_argument("--degree-bound", dest="degree_bound", type=int, default=3)
    p_hecke.add_argument("--seed", type=int, default=0)
    p_hecke.add_argument("--format", default="text", choices=("json", "text"))

    p_eq = sub.add_parser("extquot", help="evaluate a finite orbit model")
    p_eq.add_argument("--model", default=None, help="JSON model file")
    p_eq.add_argument("--torsion-level", "--size", dest="torsion_level", type=int, default=6,
                      help="torsion level of the built-in model")
    p_eq.add_argument("--gamma", default="inversion",
                      choices=("trivial", "identity", "inversion", "shift-half"))
    p_eq.add_argument("--offset", type=int, default=0)
    p_eq.add_argument("--format", default="json", choices=("json", "text"))
    return parser


# ---------------------------------------------------------------------------
# subcommand drivers
# ---------------------------------------------------------------------------


def _cmd_tables(args) -> int:
    families = blocks.FAMILIES if args.family == "all" else (args.family,)
    if args.format == "json":
        doc = {
            "schema_version": SCHEMA_VERSION,
            "tables": [blocks.emit_table(f) for f in families],
        }
        print(json.dumps(doc, indent=2))
    else:
        chunks = []
        for f in families:
            chunks.append(f"== {f} ==")
            chunks.append(blocks.render_text_table(f))
        print("\n".join(chunks))
    return EXIT_OK


def _cmd_check(args) -> int:
    allowed = _load_allowed(args.allowed_lusztig)
    parts = set(args.part) if args.part else None
    report = run_check_suite(
        degree_bound=args.degree_bound,
        seed=args.seed,
        allowed=allowed,
        golden_dir=args.golden_dir,
        parts=parts,
    )
    if args.format == "json":
        print(json.dumps(report, indent=2))
    else:
        for r in report["results"]:
            mark = "ok " if r["ok"] else "FAIL"
            print(f"[{mark}] {r['name']}: {r['detail']}")
        print(f"{report['failures']} failures")
    return EXIT_OK if report["failures"] == 0 else EXIT_CHECK_FAILED


def _cmd_mu(args) -> int:
    case = plancherel.PlancherelCase.from_id(args.case, residue_degree=args.residue_degree)
    m = plancherel.mu(case)
    lab = plancherel.labels(m)

    def qdisp(k):
        return "1" if k == 0 else ("q" if k == 1 else f"q^{k}")

    a, b = m.extracted()
    doc = {
        "schema_version": SCHEMA_VERSION,
        "case": args.case,
        "mu_factored": plancherel.render_mu(m),
        "mu_reduced": m.expr.render(),
        "substitutions": list(m.substitutions),
        "q_alpha": qdisp(a),
        "q_alpha_star": qdisp(b),
        "labels": {"lambda": lab.pair()[0], "lambda_star": lab.pair()[1]},
        "W_O": plancherel.weyl_from_zeros(m),
    }
    if args.format == "json":
        print(json.dumps(doc, indent=2))
    else:
        print(f"case: {doc['case']}")
        print(f"mu = {doc['mu_factored']}")
        for s in m.substitutions:
            print(f"  with {s}")
        print(f"q_alpha = {doc['q_alpha']}, q_alpha* = {doc['q_alpha_star']}")
        print(f"labels: (lambda, lambda*) = ({lab.pair()[0]}, {lab.pair()[1]})")
        print(f"W_O: {doc['W_O']}")
    return EXIT_OK


def _cmd_hecke(args) -> int:
    try:
        lam, lam_star = (int(s) for s in args.weights.split(","))
    except ValueError:
        raise UsageError("weights must be 'lambda,lambda*', e.g. --weights 3,1")
    pres = hecke.AffineHeckePresentation(
        1, 2, hecke.WeightFunction.rank_one(lam, lam_star), hecke.RGroup.trivial()
    )
    report = hecke.verify_relations(pres, args.degree_bound, seed=args.seed)
    if args.format == "json":
        print(json.dumps({"schema_version": SCHEMA_VERSION, **report.to_json()}, indent=2))
    else:
        print(report.summary())
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def _cmd_extquot(args) -> int:
    if args.model is not None:
        try:
            with open(args.model) as f:
                model = extquot.FiniteOrbitModel.from_json(json.load(f))
        except (OSError, json.JSONDecodeError) as e:
            raise UsageError(f"unreadable model file: {e}")
    else:
        model = extquot.torsion_model(args.torsion_level, args.gamma, offset=args.offset)
    points = extquot.extended_quotient(model)
    count = len(points)
    oracle = extquot.crossed_product_irr_count(model) if model.cocycles_trivial() else None
    doc = {
        "schema_version": SCHEMA_VERSION,
        "model": model.to_json(),
        "extended_quotient": [
            {"representative": p.representative, "irrep": p.irrep_label} for p in points
        ],
        "count": count,
        "crossed_product_count": oracle,
    }
    if args.format == "json":
        print(json.dumps(doc, indent=2))
    else:
        print(f"model: {model!r}")
        print(f"extended quotient: {count} points")
        for p in points:
            print(f"  ({p.representative}, chi_{p.irrep_label})")
        if oracle is not None:
            print(f"crossed-product simple modules: {oracle}")
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.config:
            _apply_config(args, _load_config(args.config))
        handler = {
            "tables": _cmd_tables,
            "check": _cmd_check,
            "mu": _cmd_mu,
            "hecke": _cmd_hecke,
            "extquot": _cmd_extquot,
        }[args.command]
        return handler(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (blocks.BlocksError, plancherel.PlancherelError, extquot.ExtQuotError, hecke.HeckeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
