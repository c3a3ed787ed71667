"""Report documents: JSON-ready dicts built from engine results, their
decoders, and the human-readable rendering.

Rationals are always strings in canonical form ("3", "-1/2").
"""

from __future__ import annotations

import json

from .core import Matrix, Vector, parse_rational
from .rref import AddMultiple, RrefDecomposition, Scale, Swap
from .solver import Infeasible, Infinite, RightInverseResult, SolveOutcome, Unique
from .verifier import PREDICATES, ImtReport, TwoSidedReport

SCHEMA_VERSION = 1


def encode_matrix(M: Matrix | None):
    if M is None:
        return None
    return {"rows": M.rows, "cols": M.cols, "entries": [[str(x) for x in M.row(i)] for i in range(M.rows)]}


def decode_matrix(obj) -> Matrix | None:
    if obj is None:
        return None
    return Matrix(obj["rows"], obj["cols"], tuple(parse_rational(x) for row in obj["entries"] for x in row))


def encode_vector(v: Vector | None):
    return None if v is None else [str(x) for x in v]


def decode_vector(obj) -> Vector | None:
    return None if obj is None else Vector.of(obj)


def encode_row_op(op) -> dict:
    if isinstance(op, Swap):
        return {"op": "swap", "i": op.i, "j": op.j}
    if isinstance(op, Scale):
        return {"op": "scale", "row": op.row, "factor": str(op.factor)}
    return {"op": "add_multiple", "target": op.target, "source": op.source, "factor": str(op.factor)}


def decode_row_op(obj):
    kind = obj["op"]
    if kind == "swap":
        return Swap(obj["i"], obj["j"])
    if kind == "scale":
        return Scale(obj["row"], parse_rational(obj["factor"]))
    if kind == "add_multiple":
        return AddMultiple(obj["target"], obj["source"], parse_rational(obj["factor"]))
    raise ValueError(f"unknown row operation {kind!r}")


def document(command: str, digest: str, result: dict) -> dict:
    return {"version": SCHEMA_VERSION, "command": command, "input_digest": digest, "result": result}


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def rref_result(dec: RrefDecomposition, with_trace: bool) -> dict:
    out = {"R": encode_matrix(dec.R), "pivot_cols": list(dec.pivot_cols), "rank": dec.rank}
    if with_trace:
        out["trace"] = [encode_row_op(op) for op in dec.trace]
    return out


def solve_result(outcome: SolveOutcome) -> dict:
    if isinstance(outcome, Unique):
        return {"outcome": "unique", "x": encode_vector(outcome.x)}
    if isinstance(outcome, Infinite):
        return {
            "outcome": "infinite",
            "particular": encode_vector(outcome.particular),
            "nullspace_basis": [encode_vector(v) for v in outcome.nullspace_basis],
        }
    return {"outcome": "infeasible", "witness_row": outcome.witness_row}


def decode_solve(obj) -> SolveOutcome:
    kind = obj["outcome"]
    if kind == "unique":
        return Unique(decode_vector(obj["x"]))
    if kind == "infinite":
        return Infinite(decode_vector(obj["particular"]), tuple(decode_vector(v) for v in obj["nullspace_basis"]))
    return Infeasible(obj["witness_row"])


def two_sided_result(rep: TwoSidedReport | None):
    if rep is None:
        return None
    return {
        "ax_is_identity": rep.ab_is_identity,
        "xa_is_identity": rep.ba_is_identity,
        "z_matrix": encode_matrix(rep.z_matrix),
        "offending_column": rep.offending_column,
        "offending_in_nullspace": rep.offending_in_nullspace,
    }


def inverse_result(res: RightInverseResult, check: TwoSidedReport | None) -> dict:
    return {
        "invertible": res.matrix is not None,
        "inverse": encode_matrix(res.matrix),
        "infeasible_unit": res.infeasible_index,
        "two_sided": two_sided_result(check),
    }


def imt_result(rep: ImtReport, seed: int) -> dict:
    return {
        "n": rep.n,
        "predicates": rep.predicates(),
        "verdict": rep.verdict,
        "probes": {
            "count": rep.probes,
            "feasible": rep.probes_feasible,
            "consistent": rep.probes_consistent,
            "seed": seed,
        },
        "witnesses": {
            "inverse": encode_matrix(rep.inverse),
            "trace": None if rep.trace is None else [encode_row_op(op) for op in rep.trace],
            "nullspace_vector": encode_vector(rep.nullspace_vector),
            "infeasible_b": encode_vector(rep.infeasible_b),
        },
    }


# ---- text rendering (from the JSON-ready dict, so both views agree) ----

def _fmt_matrix(obj, indent: str = "  ") -> list[str]:
    if obj is None:
        return [indent + "(none)"]
    if obj["rows"] == 0 or obj["cols"] == 0:
        return [indent + f"[] ({obj['rows']}x{obj['cols']})"]
    width = max(len(x) for row in obj["entries"] for x in row)
    return [indent + "[" + " ".join(x.rjust(width) for x in row) + "]" for row in obj["entries"]]


def _fmt_vector(v) -> str:
    return "(none)" if v is None else "[" + ", ".join(v) + "]"


def _fmt_op(op: dict) -> str:
    return decode_row_op(op).describe()


def _yn(flag) -> str:
    return {True: "yes", False: "no", None: "n/a"}[flag]


def render_text(doc: dict) -> str:
    cmd, res = doc["command"], doc["result"]
    lines = [f"{cmd}  ({doc['input_digest']})"]
    if cmd == "rref":
        lines.append("R =")
        lines += _fmt_matrix(res["R"])
        lines.append(f"pivot columns: {res['pivot_cols']}")
        lines.append(f"rank: {res['rank']}")
        if "trace" in res:
            lines.append(f"trace ({len(res['trace'])} row operations):")
            lines += [f"  {k + 1}. {_fmt_op(op)}" for k, op in enumerate(res["trace"])]
    elif cmd == "solve":
        kind = res["outcome"]
        if kind == "unique":
            lines.append(f"unique solution x = {_fmt_vector(res['x'])}")
        elif kind == "infinite":
            lines.append(f"infinitely many solutions; particular x = {_fmt_vector(res['particular'])}")
            lines.append("nullspace basis:")
            lines += [f"  {_fmt_vector(v)}" for v in res["nullspace_basis"]]
        else:
            lines.append(f"infeasible: row {res['witness_row']} of the reduced augmented matrix reads [0 ... 0 | 1]")
    elif cmd == "inverse":
        if not res["invertible"]:
            lines.append(f"no right inverse; Ax = e_{res['infeasible_unit'] + 1} infeasible")
        else:
            lines.append("X =")
            lines += _fmt_matrix(res["inverse"])
            ts = res["two_sided"]
            lines.append(f"AX = I: {_yn(ts['ax_is_identity'])}")
            lines.append(f"XA = I: {_yn(ts['xa_is_identity'])}")
            if ts["offending_column"] is not None:
                lines.append(f"XA - I has nonzero column {ts['offending_column']}")
    elif cmd == "imt":
        width = max(len(p) for p in PREDICATES)
        for name in PREDICATES:
            lines.append(f"  {name.ljust(width)}  {_yn(res['predicates'][name])}")
        pr = res["probes"]
        lines.append(f"random-b probes: {pr['feasible']}/{pr['count']} feasible (seed {pr['seed']}), "
                     f"consistent: {_yn(pr['consistent'])}")
        lines.append(f"verdict: {'all eight agree' if res['verdict'] else 'DISAGREEMENT'}")
        w = res["witnesses"]
        if w["inverse"] is not None:
            lines.append("inverse witness:")
            lines += _fmt_matrix(w["inverse"])
        if w["trace"] is not None:
            lines.append(f"row-equivalence trace: {len(w['trace'])} row operations")
        if w["nullspace_vector"] is not None:
            lines.append(f"nullspace witness: {_fmt_vector(w['nullspace_vector'])}")
        if w["infeasible_b"] is not None:
            lines.append(f"infeasible right-hand side: {_fmt_vector(w['infeasible_b'])}")
    elif cmd == "gen":
        lines.append(f"seed {res['seed']}, size {res['size']}, rank {res['rank']}")
        lines += _fmt_matrix(res["matrix"])
    return "\n".join(lines) + "\n"
