"""Command-line front end.

Subcommands: hf, ell, bound, spinc, pair, kfam, staircase, profile.
Data goes to stdout, diagnostics to stderr. Exit codes: 0 success,
2 obstruction violated (pair/kfam, for scripting), 64 usage error,
65 input data error, 70 internal arithmetic overflow.

Profile selectors: built-in names with parameters (unknot, lspace:g=3,
fig8, kfam:m=2,k=1, tau:g=2) or @path to a profile file.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import cfk, obstruct, profiles
from .cone import Framing, FramingError, surgery_report
from .exactla import EliminationOverflow
from .profiles import ProfileError, SurgeryProfile

EXIT_OK = 0
EXIT_VIOLATED = 2
EXIT_USAGE = 64
EXIT_DATA = 65
EXIT_OVERFLOW = 70


class UsageError(Exception):
    pass


class InputDataError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad flags, which collides with the "obstruction
    # violated" code; route everything through UsageError instead
    def error(self, message):
        raise UsageError(message)


def _parse_framing(text: str) -> Framing:
    try:
        return Framing.parse(text)
    except FramingError as e:
        raise UsageError(str(e)) from None


def _resolve_profile(selector: str) -> SurgeryProfile:
    if selector.startswith("@"):
        path = selector[1:]
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as e:
            raise InputDataError(f"cannot read profile file {path}: {e}") from None
        try:
            return profiles.parse(text)
        except ProfileError as e:
            raise InputDataError(f"{path}: {e}") from None
    name, _, params_text = selector.partition(":")
    params: dict[str, int] = {}
    if params_text:
        for piece in params_text.split(","):
            key, eq, value = piece.partition("=")
            if not eq or not key:
                raise UsageError(f"bad profile parameter {piece!r} in {selector!r}")
            try:
                params[key] = int(value)
            except ValueError:
                raise UsageError(f"bad profile parameter {piece!r} in {selector!r}") from None
    try:
        if name == "unknot":
            _expect_params(selector, params, set())
            return profiles.unknot()
        if name == "lspace":
            _expect_params(selector, params, {"g"})
            return profiles.lspace_knot(params["g"])
        if name == "fig8":
            _expect_params(selector, params, set())
            return profiles.figure_eight()
        if name == "kfam":
            _expect_params(selector, params, {"m", "k"})
            return profiles.k_family(params["m"], params["k"])
        if name == "tau":
            _expect_params(selector, params, {"g"})
            return profiles.tau_extremal(params["g"])
    except (ValueError, ProfileError) as e:
        raise InputDataError(f"{selector}: {e}") from None
    raise UsageError(
        f"unknown profile {selector!r}; use unknot, lspace:g=G, fig8, "
        f"kfam:m=M,k=K, tau:g=G, or @file"
    )


def _expect_params(selector: str, params: dict[str, int], required: set[str]) -> None:
    if set(params) != required:
        wanted = ",".join(sorted(required)) or "none"
        raise UsageError(f"profile {selector!r} takes parameters: {wanted}")


def _iter_framings(range_spec: str) -> list[Framing]:
    """Grid 'P1..P2/Q1..Q2': q outer ascending, p inner ascending,
    skipping p = 0 and non-reduced slopes."""
    try:
        p_part, _, q_part = range_spec.partition("/")
        p_lo, p_hi = (int(x) for x in p_part.split("..", 1))
        q_lo, q_hi = (int(x) for x in q_part.split("..", 1)) if q_part else (1, 1)
    except ValueError:
        raise UsageError(
            f"cannot parse framing range {range_spec!r}; expected 'P1..P2/Q1..Q2'"
        ) from None
    if q_lo < 1:
        raise UsageError("framing range requires q >= 1")
    out = []
    for q in range(q_lo, q_hi + 1):
        for p in range(p_lo, p_hi + 1):
            if p == 0:
                continue
            try:
                out.append(Framing(p, q))
            except FramingError:
                continue
    if not out:
        raise UsageError(f"framing range {range_spec!r} contains no reduced slopes")
    return out


def _report_json(report) -> dict:
    return {
        "framing": str(report.framing),
        "spinc": [
            {
                "i": e.i,
                "free_rank": e.group.free_rank,
                "torsion": list(e.group.torsion),
                "l_structure": e.is_l_structure,
            }
            for e in report.spinc
        ],
        "ell": report.ell,
        "total_rank": report.total_rank,
    }


def _framings_from_args(ns) -> list[Framing]:
    if ns.framing_range is not None:
        return _iter_framings(ns.framing_range)
    if ns.framing is None:
        raise UsageError("one of --framing or --framing-range is required")
    return [_parse_framing(ns.framing)]


def _cmd_hf(ns) -> int:
    profile = _resolve_profile(ns.profile)
    framings = _framings_from_args(ns)
    reports = [surgery_report(profile, f) for f in framings]
    if ns.spinc is not None:
        for report in reports:
            if not 0 <= ns.spinc < abs(report.framing.p):
                raise UsageError(
                    f"--spinc {ns.spinc} outside [0, {abs(report.framing.p)}) for {report.framing}"
                )
    if ns.format == "json":
        payload = []
        for report in reports:
            doc = _report_json(report)
            if ns.spinc is not None:
                doc["spinc"] = [e for e in doc["spinc"] if e["i"] == ns.spinc]
            payload.append(doc)
        out = payload[0] if ns.framing_range is None else payload
        print(json.dumps(out, indent=2))
        return EXIT_OK
    for idx, report in enumerate(reports):
        if idx:
            print()
        print(f"framing {report.framing}")
        for e in report.spinc:
            if ns.spinc is not None and e.i != ns.spinc:
                continue
            mark = " (L)" if e.is_l_structure else ""
            print(f"i={e.i}: {e.group.describe()}{mark}")
        if ns.spinc is None:
            print(f"ell={report.ell} total_rank={report.total_rank}")
    return EXIT_OK


def _cmd_ell(ns) -> int:
    profile = _resolve_profile(ns.profile)
    framings = _framings_from_args(ns)
    for framing in framings:
        report = surgery_report(profile, framing)
        prefix = f"{framing} " if ns.framing_range is not None else ""
        print(f"{prefix}ell={report.ell} total_rank={report.total_rank}")
    return EXIT_OK


def _cmd_bound(ns) -> int:
    try:
        bound = obstruct.gz_lower_bound(ns.h1, ns.ell)
    except ValueError as e:
        raise InputDataError(str(e)) from None
    if bound is None:
        print("not_applicable: ell equals h1 (L-space, bound degenerates)")
    else:
        print(f"gz_lower_bound={bound}")
    return EXIT_OK


def _cmd_spinc(ns) -> int:
    framing = _parse_framing(ns.framing)
    p, q = abs(framing.p), framing.q
    try:
        first = obstruct.first_kind_closed_form(ns.genus, p, q)
    except ValueError as e:
        raise InputDataError(str(e)) from None
    second = sorted(set(range(p)) - first)
    print(f"first_kind: {_render_set(sorted(first))} (count {len(first)})")
    print(f"second_kind: {_render_set(second)} (count {len(second)})")
    if ns.oracle:
        brute = obstruct.first_kind_brute(ns.genus, p, q)
        agree = brute == first
        print(f"oracle: {'agree' if agree else 'DISAGREE'}")
        if not agree:
            return 1
    return EXIT_OK


def _render_set(values) -> str:
    return ",".join(str(v) for v in values) if values else "-"


def _verdict_exit(verdict) -> int:
    return EXIT_VIOLATED if verdict.is_violated else EXIT_OK


def _cmd_pair(ns) -> int:
    mode = (
        obstruct.TAU_EXTREMAL_FIRST if ns.mode == "first" else obstruct.TAU_EXTREMAL_BOTH
    )
    verdict = obstruct.pair_obstruction(ns.g1, ns.q1, ns.g2, ns.q2, ns.p, mode)
    if verdict.status == obstruct.NOT_APPLICABLE:
        print(f"not_applicable: {verdict.detail}")
    else:
        print(f"{verdict.status}: {verdict.detail}")
    return _verdict_exit(verdict)


def _cmd_kfam(ns) -> int:
    verdict = obstruct.k_family_obstruction(ns.m, ns.n, ns.q1, ns.q2, ns.p)
    if verdict.status == obstruct.NOT_APPLICABLE:
        print(f"not_applicable: {verdict.detail}")
    elif verdict.is_violated:
        print(f"violated: q2/q1 = {verdict.lhs} < {verdict.rhs} = m/(2n-1)")
    else:
        print(f"consistent: q2/q1 = {verdict.lhs} >= {verdict.rhs} = m/(2n-1)")
    return _verdict_exit(verdict)


def _cmd_staircase(ns) -> int:
    text = ns.alexander.strip()
    coeff_part, _, top_part = text.partition(":")
    try:
        coeffs = [int(x) for x in coeff_part.split(",")]
        top = int(top_part) if top_part else None
    except ValueError:
        raise InputDataError(f"cannot parse alexander coefficients {text!r}") from None
    try:
        complex_ = cfk.staircase_from_alexander(coeffs, top)
        profile = cfk.to_profile(complex_, name=f"staircase-g{complex_.genus}")
    except (cfk.StaircaseError, cfk.InvalidComplexError, cfk.TorsionError) as e:
        raise InputDataError(str(e)) from None
    if ns.emit_profile:
        sys.stdout.write(profiles.serialize(profile))
    else:
        print(
            f"genus {complex_.genus}, generators {len(complex_.generators)}, "
            f"arrows {len(complex_.arrows)}: valid staircase"
        )
    return EXIT_OK


def _cmd_profile(ns) -> int:
    if ns.show is not None:
        profile = _resolve_profile(ns.show)
        sys.stdout.write(profiles.serialize(profile))
        return EXIT_OK
    try:
        profile = _resolve_profile(ns.check)
    except InputDataError as e:
        print(f"invalid: {e}", file=sys.stderr)
        return EXIT_DATA
    print(f"ok: {profile.name} genus {profile.genus} ({len(profile.overrides)} overrides)")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hfcone", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_profile_framing(p, spinc=False):
        p.add_argument("--profile", required=True, help="profile selector or @file")
        p.add_argument("--framing", help="surgery slope p/q (or integer p)")
        p.add_argument(
            "--framing-range",
            help="grid P1..P2/Q1..Q2; iterates q outer, p inner, ascending",
        )
        if spinc:
            p.add_argument("--spinc", type=int, help="restrict output to one class")

    p_hf = sub.add_parser("hf", help="per-spin-c homology groups of a surgery")
    add_profile_framing(p_hf, spinc=True)
    p_hf.add_argument("--format", choices=("text", "json"), default="text")
    p_hf.set_defaults(func=_cmd_hf)

    p_ell = sub.add_parser("ell", help="L-structure count and total rank")
    add_profile_framing(p_ell)
    p_ell.set_defaults(func=_cmd_ell)

    p_bound = sub.add_parser("bound", help="integer surgery genus lower bound")
    p_bound.add_argument("--h1", type=int, required=True, help="|H1| of the manifold")
    p_bound.add_argument("--ell", type=int, required=True, help="L-structure count")
    p_bound.set_defaults(func=_cmd_bound)

    p_spinc = sub.add_parser("spinc", help="first/second-kind spin-c classification")
    p_spinc.add_argument("--genus", type=int, required=True)
    p_spinc.add_argument("--framing", required=True, help="slope; classification uses |p|/q")
    p_spinc.add_argument("--oracle", action="store_true", help="cross-check by brute force")
    p_spinc.set_defaults(func=_cmd_spinc)

    p_pair = sub.add_parser("pair", help="framed-pair surgery equivalence obstruction")
    for flag in ("--g1", "--q1", "--g2", "--q2", "--p"):
        p_pair.add_argument(flag, type=int, required=True)
    p_pair.add_argument("--mode", choices=("first", "both"), default="first",
                        help="extremal tau known for the first knot or for both")
    p_pair.set_defaults(func=_cmd_pair)

    p_kfam = sub.add_parser("kfam", help="twisted-family surgery equivalence obstruction")
    for flag in ("--m", "--n", "--q1", "--q2", "--p"):
        p_kfam.add_argument(flag, type=int, required=True)
    p_kfam.set_defaults(func=_cmd_kfam)

    p_stair = sub.add_parser("staircase", help="staircase complex from an Alexander polynomial")
    p_stair.add_argument(
        "--alexander", required=True,
        help="coefficients t^g..t^-g, e.g. '1,-1,0,1,0,-1,1:3' (':g' optional)",
    )
    p_stair.add_argument("--emit-profile", action="store_true",
                         help="print the derived profile in the profile file format")
    p_stair.set_defaults(func=_cmd_staircase)

    p_prof = sub.add_parser("profile", help="show or validate a profile")
    group = p_prof.add_mutually_exclusive_group(required=True)
    group.add_argument("--show", metavar="SELECTOR")
    group.add_argument("--check", metavar="SELECTOR")
    p_prof.set_defaults(func=_cmd_profile)

    return parser


# values of these flags often start with a dash (negative framings); fold
# them into --flag=value form so argparse does not read them as options
_DASH_VALUE_FLAGS = ("--framing", "--framing-range", "--alexander")


def _merge_dash_values(argv: list[str]) -> list[str]:
    out = []
    k = 0
    while k < len(argv):
        if argv[k] in _DASH_VALUE_FLAGS and k + 1 < len(argv):
            out.append(argv[k] + "=" + argv[k + 1])
            k += 2
        else:
            out.append(argv[k])
            k += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        ns = parser.parse_args(_merge_dash_values(list(argv)))
        return ns.func(ns)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except InputDataError as e:
        print(f"input error: {e}", file=sys.stderr)
        return EXIT_DATA
    except (ProfileError, FramingError, cfk.StaircaseError, cfk.TorsionError) as e:
        print(f"input error: {e}", file=sys.stderr)
        return EXIT_DATA
    except EliminationOverflow as e:
        print(f"overflow: {e}", file=sys.stderr)
        return EXIT_OVERFLOW


if __name__ == "__main__":
    sys.exit(main())
