"""Command-line entry point.

Exit codes: 0 success/verified, 1 counterexample or decode failure, 2 usage error.
JSON is the canonical report format; big counts are emitted as decimal strings.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass

from . import channel as ch
from .codec import CodecInstance, code_redundancy, construct_codeword, decode_read, simulate
from .counting import (
    count_cliques_enumerate,
    count_cliques_formula,
    log2_cover_size,
    redundancy_lower_bound,
)
from .cover import CoverParams, verify_cover
from .graph import build_graph, max_independent_set
from .inner import DecodeFailure, make_inner
from .permutation import PermSpec, apply_pi, f_pi

THREADS_ENV = "NANOREAD_THREADS"
MAX_CODE_CHECK_K = 16


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    subcommand: str
    params: dict
    fmt: str = "json"
    output: str | None = None
    threads: int = 1


def _default_threads() -> int:
    raw = os.environ.get(THREADS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _positive(name):
    def conv(s):
        try:
            v = int(s)
        except ValueError:
            raise argparse.ArgumentTypeError(f"--{name} expects an integer, got {s!r}") from None
        if v < 1:
            raise argparse.ArgumentTypeError(f"--{name} must be >= 1, got {v}")
        return v
    return conv


def _nonneg(name):
    def conv(s):
        try:
            v = int(s)
        except ValueError:
            raise argparse.ArgumentTypeError(f"--{name} expects an integer, got {s!r}") from None
        if v < 0:
            raise argparse.ArgumentTypeError(f"--{name} must be >= 0, got {v}")
        return v
    return conv


def _epsilon(s):
    try:
        v = float(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"--epsilon expects a number, got {s!r}") from None
    if not 0 < v < 1:
        raise argparse.ArgumentTypeError(f"--epsilon must lie in (0, 1), got {v}")
    return v


def _int_list(name):
    def conv(s):
        try:
            vals = [int(tok) for tok in s.split(",") if tok]
        except ValueError:
            raise argparse.ArgumentTypeError(f"--{name} expects comma-separated integers") from None
        if not vals or any(v < 1 for v in vals):
            raise argparse.ArgumentTypeError(f"--{name} needs positive integers")
        return vals
    return conv


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    top = _Parser(prog="nanoread", description="Substitution-correcting codes for sliding-window read vectors.")
    top.add_argument("--threads", type=_positive("threads"), default=None,
                     help=f"worker cap (default from ${THREADS_ENV}, else 1)")
    sub = top.add_subparsers(dest="subcommand", parser_class=_Parser)

    def add(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--format", dest="fmt", choices=("json", "text", "csv"), default=None)
        p.add_argument("--output", default=None, help="write the report to this path")
        return p

    p = add("read", "read vector of a word")
    p.add_argument("--x", required=True)
    p.add_argument("--ell", type=_positive("ell"), required=True)

    p = add("perm", "index map f_pi and pi_p(x)")
    p.add_argument("--n", type=_positive("n"))
    p.add_argument("--p", type=_positive("p"), required=True)
    p.add_argument("--ell", type=_positive("ell"), required=True)
    p.add_argument("--x", default=None)

    for name, help_ in (("encode", "message -> codeword"), ("decode", "read vector -> message"),
                        ("simulate", "seeded channel simulation")):
        p = add(name, help_)
        p.add_argument("--code", choices=("bch", "repetition", "identity"), default="bch")
        p.add_argument("--n", type=_positive("n"), required=True)
        p.add_argument("--t", type=_nonneg("t"), default=None)
        p.add_argument("--ell", type=_positive("ell"), required=True)
        if name == "encode":
            p.add_argument("--msg", required=True)
        elif name == "decode":
            p.add_argument("--read", required=True)
        else:
            p.add_argument("--trials", type=_positive("trials"), default=1000)
            p.add_argument("--weight", type=_nonneg("weight"), default=None)
            p.add_argument("--seed", type=_nonneg("seed"), required=True)

    p = add("cover-verify", "exhaustive clique cover check")
    for flag in ("n", "p", "t", "ell"):
        p.add_argument(f"--{flag}", type=_positive(flag), required=True)

    p = add("cover-count", "closed-form vs enumerated clique count")
    for flag in ("m", "p", "t"):
        p.add_argument(f"--{flag}", type=_positive(flag), required=True)
    p.add_argument("--no-enumerate", action="store_true")

    p = add("bound", "redundancy lower bound from the cover size")
    p.add_argument("--n", type=_positive("n"), required=True)
    p.add_argument("--t", type=_positive("t"), required=True)
    p.add_argument("--ell", type=_positive("ell"), required=True)
    p.add_argument("--epsilon", type=_epsilon, default=0.1)
    p.add_argument("--p", type=_positive("p"), default=None)

    p = add("mis", "exact maximum code size by independent set search")
    p.add_argument("--n", type=_positive("n"), required=True)
    p.add_argument("--ell", type=_positive("ell"), required=True)
    p.add_argument("--t", type=_nonneg("t"), required=True)
    p.add_argument("--p", type=_positive("p"), default=None, help="also report the cover bound at this p")

    p = add("code-check", "check pairwise read distance > 2t")
    p.add_argument("--words", default=None, help="comma-separated 0/1 words")
    p.add_argument("--code", choices=("bch", "repetition", "identity"), default=None,
                   help="check the full read code built from this inner code")
    p.add_argument("--n", type=_positive("n"), default=None)
    p.add_argument("--t", type=_nonneg("t"), default=None)
    p.add_argument("--ell", type=_positive("ell"), required=True)

    p = add("sweep", "bound and code redundancy over a list of lengths")
    p.add_argument("--ns", type=_int_list("ns"), default=[15, 31, 63, 127, 255])
    p.add_argument("--t", type=_positive("t"), default=2)
    p.add_argument("--ell", type=_positive("ell"), default=2)
    p.add_argument("--epsilon", type=_epsilon, default=0.1)
    return top


def _params_json(**kw):
    return {k: v for k, v in kw.items() if v is not None}


def _codec(a) -> CodecInstance:
    try:
        inner = make_inner(a.code, a.n, a.t)
    except ValueError as e:
        raise UsageError(str(e)) from None
    return CodecInstance(inner, a.ell)


def _word_arg(flag, s):
    try:
        return ch.parse_word(s)
    except ValueError as e:
        raise UsageError(f"--{flag}: {e}") from None


def cmd_read(a):
    if a.ell < 1:
        raise UsageError("--ell must be >= 1")
    x = _word_arg("x", a.x)
    r = ch.read_vector(x, a.ell)
    return 0, {"params": _params_json(x=a.x, ell=a.ell), "read": ch.format_read(r)}, ch.format_read(r)


def cmd_perm(a):
    x = _word_arg("x", a.x) if a.x is not None else None
    n = a.n if a.n is not None else (len(x) if x else None)
    if n is None:
        raise UsageError("--n or --x is required")
    if x is not None and len(x) != n:
        raise UsageError(f"--x has length {len(x)}, --n is {n}")
    if a.ell < 2:
        raise UsageError("--ell must be >= 2 for the permutation")
    spec = PermSpec(n, a.p, a.ell)
    fmap = f_pi(spec)
    report = {"params": _params_json(n=n, p=a.p, ell=a.ell), "f_pi": ",".join(map(str, fmap)),
              "covered": str(spec.covered)}
    text = ",".join(map(str, fmap))
    if x is not None:
        y = ch.format_word(apply_pi(x, spec))
        report["pi_x"] = y
        text += "\n" + y
    return 0, report, text


def cmd_encode(a):
    codec = _codec(a)
    msg = _word_arg("msg", a.msg)
    if len(msg) != codec.k:
        raise UsageError(f"--msg has length {len(msg)}, code dimension is {codec.k}")
    x = construct_codeword(msg, codec)
    r = ch.read_vector(x, codec.ell)
    report = {"params": _params_json(code=codec.inner.describe(), n=codec.n, k=str(codec.k), t=codec.t,
                                     ell=codec.ell),
              "msg": a.msg, "x": ch.format_word(x), "read": ch.format_read(r)}
    return 0, report, ch.format_word(x)


def cmd_decode(a):
    codec = _codec(a)
    try:
        r = ch.parse_read(a.read)
    except ValueError as e:
        raise UsageError(f"--read: {e}") from None
    if len(r) != codec.n + codec.ell - 1:
        raise UsageError(f"--read has length {len(r)}, expected n + ell - 1 = {codec.n + codec.ell - 1}")
    params = _params_json(code=codec.inner.describe(), n=codec.n, t=codec.t, ell=codec.ell)
    try:
        res = decode_read(r, codec)
    except DecodeFailure as e:
        return 1, {"params": params, "decoded": False, "error": str(e)}, f"decode failure: {e}"
    report = {"params": params, "decoded": True, "msg": ch.format_word(res.message),
              "x": ch.format_word(res.x), "corrections": str(res.corrections),
              "residual": str(res.residual)}
    return 0, report, ch.format_word(res.message)


def cmd_simulate(a, threads):
    codec = _codec(a)
    weight = codec.t if a.weight is None else a.weight
    if weight > codec.n + codec.ell - 1:
        raise UsageError(f"--weight {weight} exceeds read length {codec.n + codec.ell - 1}")
    st = simulate(codec, a.trials, weight, a.seed, workers=threads)
    report = {"params": _params_json(code=codec.inner.describe(), n=codec.n, t=codec.t, ell=codec.ell),
              "trials": str(st.trials), "weight": str(st.weight), "success": str(st.success),
              "miscorrect": str(st.miscorrect), "fail": str(st.fail), "seed": str(st.seed)}
    code = 0 if weight > codec.t or st.success == st.trials else 1
    text = f"success {st.success}/{st.trials}, miscorrect {st.miscorrect}, fail {st.fail}"
    return code, report, text


def _jsonable(obj):
    if isinstance(obj, tuple) and all(v in (0, 1) for v in obj):
        return ch.format_word(obj)
    if hasattr(obj, "__dataclass_fields__"):
        return {k: _jsonable(getattr(obj, k)) for k in obj.__dataclass_fields__}
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def cmd_cover_verify(a, threads):
    try:
        params = CoverParams(a.n, a.p, a.t, a.ell)
        rep = verify_cover(params, workers=threads)
    except ValueError as e:
        raise UsageError(str(e)) from None
    report = {"params": _params_json(n=a.n, p=a.p, t=a.t, ell=a.ell, m=params.m),
              "words": str(rep.words), "cliques": str(rep.cliques),
              "count_formula": str(rep.expected_cliques), "max_distance": str(rep.max_distance),
              "levels": {str(k): str(v) for k, v in rep.levels.items()},
              "verified": rep.verified}
    if rep.counterexample is not None:
        report["counterexample"] = _jsonable(rep.counterexample)
    text = (f"{'verified' if rep.verified else 'FAILED'}: {rep.words} words, {rep.cliques} cliques "
            f"(formula {rep.expected_cliques}), max read distance {rep.max_distance}")
    return (0 if rep.verified else 1), report, text


def cmd_cover_count(a):
    formula = count_cliques_formula(a.m, a.p, a.t)
    report = {"params": _params_json(m=a.m, p=a.p, t=a.t), "count_formula": str(formula)}
    text = f"formula={formula}"
    code = 0
    if not a.no_enumerate:
        enum = count_cliques_enumerate(a.m, a.p, a.t)
        match = enum == formula
        report.update(count_enumerated=str(enum), match=match, verified=match)
        text += f", enumerated={enum}, match={'true' if match else 'false'}"
        code = 0 if match else 1
    return code, report, text


def _bound_row(n, t, ell, eps, p=None):
    b = redundancy_lower_bound(n, t, ell, eps, p=p)
    lc = log2_cover_size(n, b.p, t, ell)
    return b, lc


def cmd_bound(a):
    if a.ell < 2:
        raise UsageError("--ell must be >= 2")
    b, lc = _bound_row(a.n, a.t, a.ell, a.epsilon, a.p)
    report = {"params": _params_json(n=a.n, t=a.t, ell=a.ell, epsilon=a.epsilon, p=b.p, m=b.m),
              "count_formula": str(count_cliques_formula(b.m, b.p, a.t)),
              "cover_size": str(lc.size), "log2_cover": lc.value,
              "log2_terms": list(lc.terms) if lc.terms else None,
              "bound": b.bound, "t_log2_n": b.t_log2_n, "gap": b.gap}
    return 0, report, f"bound {b.bound:.6f} bits (p={b.p}, m={b.m}, t*log2 n = {b.t_log2_n:.6f})"


def cmd_mis(a):
    if a.ell < 1:
        raise UsageError("--ell must be >= 1")
    try:
        g = build_graph(a.n, a.ell, a.t)
        res = max_independent_set(g)
    except ValueError as e:
        raise UsageError(str(e)) from None
    report = {"params": _params_json(n=a.n, ell=a.ell, t=a.t), "mis": str(res.size), "exact": res.exact,
              "witness": [ch.format_word(w) for w in res.witness]}
    code = 0
    if a.p is not None and a.t >= 1 and a.ell >= 2:
        lc = log2_cover_size(a.n, a.p, a.t, a.ell)
        report["cover_size"] = str(lc.size)
        report["verified"] = res.size <= lc.size
        code = 0 if report["verified"] else 1
    return code, report, f"mis {res.size} ({'exact' if res.exact else 'greedy'})"


def cmd_code_check(a):
    if a.words is not None:
        try:
            words = [ch.parse_word(w) for w in a.words.split(",")]
        except ValueError as e:
            raise UsageError(f"--words: {e}") from None
        n = len(words[0])
        if any(len(w) != n for w in words):
            raise UsageError("--words must all have the same length")
        t = 1 if a.t is None else a.t
        desc = None
    elif a.code is not None and a.n is not None:
        inner = make_inner(a.code, a.n, a.t)
        if inner.k > MAX_CODE_CHECK_K:
            raise UsageError(f"code dimension {inner.k} too large for exhaustive check")
        from itertools import product
        codec = CodecInstance(inner, a.ell)
        words = [construct_codeword(m, codec) for m in product((0, 1), repeat=inner.k)]
        n, t, desc = inner.n, inner.t if a.t is None else a.t, inner.describe()
    else:
        raise UsageError("code-check needs --words, or --code with --n")
    ok, witness = ch.is_t_sub_read_code(words, ch.ChannelParams(a.ell, t, n))
    report = {"params": _params_json(n=n, t=t, ell=a.ell, code=desc), "words": str(len(words)),
              "verified": ok}
    if witness is not None:
        x, y, d = witness
        report["counterexample"] = {"x": ch.format_word(x), "y": ch.format_word(y), "distance": str(d)}
    text = "ok" if ok else f"violation: {ch.format_word(witness[0])} {ch.format_word(witness[1])} d={witness[2]}"
    return (0 if ok else 1), report, text


SWEEP_FIELDS = ("n", "t", "ell", "epsilon", "p", "m", "log2_cover", "bound", "t_log2_n",
                "code", "code_redundancy", "gap_to_code")


def cmd_sweep(a):
    rows = []
    for n in a.ns:
        b = redundancy_lower_bound(n, a.t, a.ell, a.epsilon)
        row = {"n": n, "t": a.t, "ell": a.ell, "epsilon": a.epsilon, "p": b.p, "m": b.m,
               "log2_cover": b.log2_cover, "bound": b.bound, "t_log2_n": b.t_log2_n,
               "code": None, "code_redundancy": None, "gap_to_code": None}
        try:
            inner = make_inner("bch", n, a.t)
            row.update(code=inner.describe(), code_redundancy=code_redundancy(inner),
                       gap_to_code=code_redundancy(inner) - b.bound)
        except ValueError:
            pass
        rows.append(row)
    report = {"params": _params_json(t=a.t, ell=a.ell, epsilon=a.epsilon),
              "rows": [{k: (str(v) if isinstance(v, int) and not isinstance(v, bool) else v)
                        for k, v in r.items()} for r in rows]}
    return 0, report, rows


def _render(fmt, report, text):
    if fmt == "json":
        return json.dumps(report, indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        rows = text if isinstance(text, list) else [report]
        buf = io.StringIO()
        flat = [{k: (json.dumps(v) if isinstance(v, (dict, list)) else v) for k, v in r.items()} for r in rows]
        writer = csv.DictWriter(buf, fieldnames=list(flat[0]), lineterminator="\n")
        writer.writeheader()
        writer.writerows(flat)
        return buf.getvalue()
    if isinstance(text, list):
        return "\n".join(" ".join(f"{k}={v}" for k, v in r.items()) for r in text) + "\n"
    return text + "\n"


DEFAULT_FORMAT = {"read": "text", "perm": "text", "encode": "text", "decode": "text", "sweep": "csv"}


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        if args.subcommand is None:
            raise UsageError("nanoread: a subcommand is required")
        params = {k: v for k, v in vars(args).items() if k not in ("subcommand", "fmt", "output", "threads")}
        cfg = RunConfig(args.subcommand, params, args.fmt or DEFAULT_FORMAT.get(args.subcommand, "json"),
                        args.output, args.threads or _default_threads())
        handlers = {
            "read": cmd_read, "perm": cmd_perm, "encode": cmd_encode, "decode": cmd_decode,
            "simulate": lambda a: cmd_simulate(a, cfg.threads),
            "cover-verify": lambda a: cmd_cover_verify(a, cfg.threads),
            "cover-count": cmd_cover_count, "bound": cmd_bound, "mis": cmd_mis,
            "code-check": cmd_code_check, "sweep": cmd_sweep,
        }
        code, report, text = handlers[cfg.subcommand](args)
    except (UsageError, ValueError) as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 2
    out = _render(cfg.fmt, report, text)
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(out)
    else:
        stdout.write(out)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
