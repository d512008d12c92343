"""``schurprep`` command line: map, prepare, selftest, estimate, sweep."""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from .fock_schur import MappingError, dynkin_from_fock
from .repr_core import ENCODINGS, enumerate_partitions, sym_group_dimension, weyl_dimension
from .resources import (
    MODES,
    SWEEP_COLUMNS,
    CostModelError,
    CostParams,
    SweepSpec,
    crossover_L,
    end_to_end,
    sweep,
)
from .schur_simulator import CapExceededError, DEFAULT_CAP, prepare_first_quantized
from .tasks import TaskSchemaError, csv_cell, dumps, load_task

EXIT_OK, EXIT_VALIDATION, EXIT_CAP, EXIT_INVARIANT = 0, 1, 2, 3


class InvariantBreach(RuntimeError):
    pass


def _out(text: str, path: str | None = None):
    if path:
        Path(path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _load_config(path: str | None) -> dict:
    if not path:
        return {}
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise CostModelError(f"cannot read config {path}: {exc}") from None
    if not isinstance(data, dict):
        raise CostModelError("config must be a JSON object")
    return data


# ---------------------------------------------------------------------------


def cmd_map(args) -> int:
    task = load_task(args.task)
    lab = task.labeled()
    rows = []
    for (c, label), cfg in zip(lab.terms, lab.configs):
        rows.append({
            "occupations": list(cfg.occupations),
            "z": list(dynkin_from_fock(cfg)),
            "gt": label.mu.compact() if task.d == 3 else None,
            "gt_rows": [list(r) for r in label.mu.rows],
            "lambda": list(label.lam.parts),
            "sigma": list(label.sigma),
            "coefficient": c,
        })
    if args.json:
        _out(dumps({"terms": rows, "l1": lab.l1_norm}))
    else:
        for r in rows:
            gt = r["gt"] or " / ".join(",".join(map(str, x)) for x in r["gt_rows"])
            print(f"|{','.join(map(str, r['occupations']))}>  z={tuple(r['z'])}  GT {gt}  "
                  f"lambda={tuple(r['lambda'])}  sigma={tuple(r['sigma'])}")
    return EXIT_OK


def cmd_prepare(args) -> int:
    task = load_task(args.task)
    lab = task.labeled()
    state = prepare_first_quantized(lab, task.d, cap=args.cap)
    nz = state.nonzero()
    print(f"sector lambda={tuple(lab.lam.parts)} sigma={tuple(lab.sigma)}  dimension={task.d ** task.N}  "
          f"norm={state.norm:.12g}  nonzero={len(nz)}")
    if args.export:
        text = state.to_csv() if args.export.endswith(".csv") else state.to_json()
        Path(args.export).write_text(text, encoding="utf-8")
    elif args.show:
        for s, a in nz:
            print(f"  {s}  {a.real:+.12g} {a.imag:+.12g}i")
    return EXIT_OK


def _invariant_suite() -> list[tuple[str, bool, str]]:
    from .schur_simulator import all_labels, cg_cascade_state, phase_aligned_distance, schur_vector

    results = []
    bad = []
    for d in range(1, 13):
        for N in range(1, 13):
            if d**N > 4096:
                continue
            tot = sum(weyl_dimension(l, d) * sym_group_dimension(l) for l in enumerate_partitions(N, d))
            if tot != d**N:
                bad.append((d, N))
    results.append(("Schur-Weyl dimension identity (d^N <= 4096)", not bad, f"failures {bad}" if bad else "exact"))
    worst = 0.0
    for d in (2, 3):
        for N in (2, 3):
            for label in all_labels(d, N):
                dist = phase_aligned_distance(cg_cascade_state(label, d).amplitudes, schur_vector(label, d).amplitudes)
                worst = max(worst, dist)
    results.append(("CG cascade vs GT chain (d, N <= 3)", worst < 1e-8, f"max deviation {worst:.3e}"))
    return results


def cmd_selftest(args) -> int:
    from .schur_simulator import verify_golden_u3

    report = verify_golden_u3()
    checks = [("U(3) reference table", report.ok, report.summary())]
    checks += _invariant_suite()
    for name, ok, detail in checks:
        print(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
    if not report.ok:
        for row in report.failures():
            print(f"    mismatch lambda={row.lam} sigma={row.sigma} {row.gt} deviation {row.deviation:.3e}")
    if args.json:
        Path(args.json).write_text(report.to_json(), encoding="utf-8")
    return EXIT_OK if all(ok for _, ok, _ in checks) else EXIT_INVARIANT


def _params(args, cfg: dict) -> CostParams:
    data = dict(cfg)
    for key, attr in (("epsilon", "eps"), ("encoding", "encoding"), ("b_r", "b_r"),
                      ("a_mcx_prov", "a_mcx_prov"), ("epsilon_prep", "eps_prep")):
        v = getattr(args, attr, None)
        if v is not None:
            data[key] = v
    return CostParams.from_dict(data)


def cmd_estimate(args) -> int:
    cfg = _load_config(args.config)
    p = _params(args, cfg)
    rep = end_to_end(args.d, args.N, args.L, mode=args.mode, params=p, l1=args.l1)
    if rep.Q_peak != max(rep.Q_block, rep.Q_schur) or rep.te_total != rep.te_block + rep.te_schur_inverse:
        raise InvariantBreach("report totals are inconsistent")
    _out(dumps(rep.to_dict()), args.out)
    return EXIT_OK


def _axis(text: str, kind):
    return [kind(v) for v in text.split(",") if v.strip()]


def cmd_sweep(args) -> int:
    cfg = _load_config(args.config)
    spec_doc = cfg.pop("sweep", {})
    get = lambda name, kind, default: _axis(getattr(args, name), kind) if getattr(args, name) else spec_doc.get(name, default)
    spec = SweepSpec(
        d=get("d", int, [50]), N=get("N", int, [10]), L=get("L", int, [50]),
        epsilon=get("eps", float, [1e-4]) if args.eps else spec_doc.get("epsilon", [1e-4]),
        modes=[args.mode] if args.mode else spec_doc.get("modes", ["both"]),
        encoding=args.encoding or spec_doc.get("encoding", "compressed"),
    )
    p = _params(argparse.Namespace(eps=None, encoding=None, b_r=args.b_r, a_mcx_prov=args.a_mcx_prov,
                                   eps_prep=args.eps_prep), cfg)
    rows = sweep(spec, p)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(SWEEP_COLUMNS)
    for r in rows:
        w.writerow([csv_cell(r[c]) for c in SWEEP_COLUMNS])
    _out(buf.getvalue(), args.out)
    if args.crossover:
        for mode in spec.modes:
            for d in spec.d:
                for N in spec.N:
                    for eps in spec.epsilon:
                        Ls = crossover_L(d, N, eps, p.replace(encoding=spec.encoding), mode)
                        sys.stderr.write(f"crossover {mode} d={d} N={N} eps={eps:g}: L*={Ls}\n")
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="schurprep", description="First-quantized state preparation via Schur labels.")
    sub = ap.add_subparsers(dest="command", required=True)

    m = sub.add_parser("map", help="map a task to Schur labels")
    m.add_argument("task")
    m.add_argument("--json", action="store_true")
    m.set_defaults(func=cmd_map)

    pr = sub.add_parser("prepare", help="build the first-quantized state vector")
    pr.add_argument("task")
    pr.add_argument("--export", help="write amplitudes to .json or .csv")
    pr.add_argument("--show", action="store_true", help="print nonzero amplitudes")
    pr.add_argument("--cap", type=int, default=DEFAULT_CAP)
    pr.set_defaults(func=cmd_prepare)

    st = sub.add_parser("selftest", help="reference table and invariant checks")
    st.add_argument("--json", help="write the reference-table report here")
    st.set_defaults(func=cmd_selftest)

    def cost_flags(p):
        p.add_argument("--encoding", choices=ENCODINGS)
        p.add_argument("--b-r", dest="b_r", type=int)
        p.add_argument("--a-mcx-prov", dest="a_mcx_prov", type=int)
        p.add_argument("--eps-prep", dest="eps_prep", type=float)
        p.add_argument("--config", help="JSON file with cost parameters")
        p.add_argument("--out")

    es = sub.add_parser("estimate", help="single-point resource report")
    es.add_argument("--d", type=int, required=True)
    es.add_argument("--N", type=int, required=True)
    es.add_argument("--L", type=int, required=True)
    es.add_argument("--eps", type=float)
    es.add_argument("--l1", type=float, help="LCU l1 norm (default sqrt(L))")
    es.add_argument("--mode", choices=MODES, default="OAA", type=str.upper)
    cost_flags(es)
    es.set_defaults(func=cmd_estimate)

    sw = sub.add_parser("sweep", help="grid of resource reports as CSV")
    sw.add_argument("--d", help="comma-separated axis")
    sw.add_argument("--N")
    sw.add_argument("--L")
    sw.add_argument("--eps")
    sw.add_argument("--mode", choices=MODES + ("BOTH",), type=str.upper)
    sw.add_argument("--crossover", action="store_true", help="report L* on stderr")
    cost_flags(sw)
    sw.set_defaults(func=cmd_sweep)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (TaskSchemaError, MappingError, CostModelError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except (InvariantBreach, AssertionError, RuntimeError) as exc:
        print(f"invariant breach: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
