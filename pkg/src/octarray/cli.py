"""Command line interface.

Reads JSON from stdin (or ``--input FILE``), writes JSON to stdout.
Exit codes: 0 success, 1 domain error (invalid object for the requested
operation), 2 malformed input (bad JSON, missing fields, bad arguments).
"""

import argparse
import json
import sys

from .arrays import transpose
from .bijections import (
    associate,
    associate_functional,
    associate_inverse,
    commute,
    commute_sp,
    dtight_to_ssyt,
    pair_to_lr_tableau,
    render_skew,
    render_ssyt,
)
from .condense import condense_down, condense_left, condense_right, condense_up, shape
from .errors import ValidationError
from .hives import (
    AntiStandardPair,
    StandardPair,
    TriangleFunction,
    hive_to_pair,
    increments,
    is_discrete_concave,
    pair_to_hive,
)
from .lr import lr_coefficient, lr_oracle
from .octahedron import (
    PRISM_FRAME,
    is_polarized,
    is_polarized_dc,
    prism_propagate,
    prism_top,
    rsk,
    rsk_inverse,
)
from .scalars import scalar_to_json
from . import checks, serialize


def _read_json(args):
    try:
        if args.input and args.input != "-":
            with open(args.input) as fh:
                return json.load(fh)
        return json.load(sys.stdin)
    except (OSError, json.JSONDecodeError) as exc:
        raise MalformedInput(str(exc))


class MalformedInput(Exception):
    pass


def _decode(obj, decoder):
    try:
        return decoder(obj)
    except (KeyError, TypeError) as exc:
        raise MalformedInput(f"bad input object: {exc}")


def _emit(obj):
    json.dump(obj, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _partition_arg(text):
    try:
        return tuple(int(x) for x in text.split(",") if x != "")
    except ValueError:
        raise MalformedInput(f"bad partition argument {text!r}")


def cmd_condense(args):
    a = _decode(_read_json(args), serialize.decode_array)
    fn = {
        "down": condense_down,
        "left": condense_left,
        "right": condense_right,
        "up": condense_up,
    }[args.direction]
    out = serialize.encode_array(fn(a))
    if args.direction == "down":
        out["shape"] = [scalar_to_json(x) for x in shape(fn(a))]
    _emit(out)


def cmd_rsk(args):
    obj = _read_json(args)
    if args.inverse:
        if not isinstance(obj, dict) or "d" not in obj or "l" not in obj:
            raise MalformedInput("expected an object with 'd' and 'l' arrays")
        d = _decode(obj["d"], serialize.decode_array)
        l = _decode(obj["l"], serialize.decode_array)
        _emit(serialize.encode_array(rsk_inverse(d, l)))
    else:
        d, l = rsk(_decode(obj, serialize.decode_array))
        _emit({"d": serialize.encode_array(d), "l": serialize.encode_array(l)})


def cmd_propagate(args):
    a = _decode(_read_json(args), serialize.decode_array)
    F = prism_propagate(a)
    top = prism_top(F)
    _emit({
        "n": F.n,
        "m": F.m,
        "values": [
            [x, y, z, scalar_to_json(v)] for (x, y, z), v in sorted(F.values.items())
        ],
        "top": [[scalar_to_json(v) for v in row] for row in top.values],
        "polarized": is_polarized(F, PRISM_FRAME),
        "polarized_concave": is_polarized_dc(F, PRISM_FRAME),
    })


def cmd_hive(args):
    obj = _read_json(args)
    if args.from_pair:
        p = _decode(obj, serialize.decode_pair)
        if not isinstance(p, StandardPair):
            raise ValidationError("hive construction expects a standard pair")
        _emit(serialize.encode_triangle(pair_to_hive(p)))
        return
    f = _decode(obj, serialize.decode_triangle)
    if args.to_pair:
        _emit(serialize.encode_pair(hive_to_pair(f)))
        return
    lam, mu, nu = increments(f)
    _emit({
        "concave": is_discrete_concave(f),
        "increments": {
            "lam": [scalar_to_json(x) for x in lam],
            "mu": [scalar_to_json(x) for x in mu],
            "nu": [scalar_to_json(x) for x in nu],
        },
    })


def cmd_commute(args):
    obj = _read_json(args)
    if args.functional:
        from .bijections import com_prime

        _emit(serialize.encode_triangle(com_prime(
            _decode(obj, serialize.decode_triangle))))
        return
    p = _decode(obj, serialize.decode_pair)
    q = commute_sp(p) if isinstance(p, StandardPair) else commute(p)
    _emit(serialize.encode_pair(q))


def cmd_associate(args):
    obj = _read_json(args)
    if args.functional:
        if not isinstance(obj, dict) or "f" not in obj or "g" not in obj:
            raise MalformedInput("expected an object with 'f' and 'g' triangles")
        f = _decode(obj["f"], serialize.decode_triangle)
        g = _decode(obj["g"], serialize.decode_triangle)
        p, q = associate_functional(f, g)
        _emit({"p": serialize.encode_triangle(p),
               "q": serialize.encode_triangle(q)})
        return
    if not isinstance(obj, dict) or "first" not in obj or "second" not in obj:
        raise MalformedInput("expected an object with 'first' and 'second' pairs")
    p1 = _decode(obj["first"], serialize.decode_pair)
    p2 = _decode(obj["second"], serialize.decode_pair)
    fn = associate_inverse if args.inverse else associate
    o1, o2 = fn(p1, p2)
    _emit({"first": serialize.encode_pair(o1), "second": serialize.encode_pair(o2)})


def cmd_lr(args):
    lam = _partition_arg(args.lam)
    mu = _partition_arg(args.mu)
    nu = _partition_arg(args.nu)
    out = {"coefficient": lr_coefficient(lam, mu, nu)}
    if args.oracle:
        out["oracle"] = lr_oracle(lam, mu, nu)
    _emit(out)


def cmd_tableau(args):
    obj = _read_json(args)
    decoded = _decode(obj, serialize.decode)
    if isinstance(decoded, StandardPair):
        text = render_skew(pair_to_lr_tableau(decoded))
    elif isinstance(decoded, AntiStandardPair):
        raise ValidationError("tableau rendering expects a standard pair")
    else:
        a = decoded
        if args.wall:
            a = transpose(a)
        text = render_ssyt(dtight_to_ssyt(a))
    sys.stdout.write(text + "\n")


def cmd_verify(args):
    kwargs = {}
    suite = checks.SUITES[args.suite]
    if args.suite in ("assoc-count", "commut-count"):
        if args.max_mass is not None:
            kwargs["maxtotal"] = args.max_mass
    else:
        kwargs["seed"] = args.seed
        if args.cases is not None:
            kwargs["cases"] = args.cases
        if args.n is not None and args.suite != "thm3":
            kwargs["max_n"] = args.n
        if args.n is not None and args.suite == "thm3":
            kwargs["n"] = args.n
        if args.max_mass is not None:
            kwargs["max_mass"] = args.max_mass
    report = suite(**kwargs)
    print(report.summary())
    if not report.passed:
        sys.exit(1)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="octarray",
        description="Condensation, octahedron propagation, and tableau "
        "bijections on non-negative arrays.",
    )
    parser.add_argument("--input", "-i", help="read JSON from FILE instead of stdin")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("condense", help="condense an array to a tight one")
    p.add_argument("direction", choices=["down", "left", "right", "up"])
    p.set_defaults(fn=cmd_condense)

    p = sub.add_parser("rsk", help="both condensations via one propagation")
    p.add_argument("--inverse", action="store_true",
                   help="recover the array from its two condensations")
    p.set_defaults(fn=cmd_rsk)

    p = sub.add_parser("propagate", help="fill the prism recurrence for an array")
    p.set_defaults(fn=cmd_propagate)

    p = sub.add_parser("hive", help="inspect a triangle function, or convert "
                       "between triangles and standard pairs")
    p.add_argument("--to-pair", action="store_true")
    p.add_argument("--from-pair", action="store_true")
    p.set_defaults(fn=cmd_hive)

    p = sub.add_parser("commute", help="apply the commuter to a pair")
    p.add_argument("--functional", action="store_true",
                   help="input and output are triangle functions")
    p.set_defaults(fn=cmd_commute)

    p = sub.add_parser("associate", help="apply the associator to a couple")
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--functional", action="store_true",
                   help="input and output are triangle functions")
    p.set_defaults(fn=cmd_associate)

    p = sub.add_parser("lr", help="Littlewood-Richardson coefficient")
    p.add_argument("lam")
    p.add_argument("mu")
    p.add_argument("nu")
    p.add_argument("--oracle", action="store_true",
                   help="also count by direct skew tableau enumeration")
    p.set_defaults(fn=cmd_lr)

    p = sub.add_parser("tableau", help="render an array or pair as a tableau")
    p.add_argument("--wall", action="store_true",
                   help="transpose first (for left-tight arrays)")
    p.set_defaults(fn=cmd_tableau)

    p = sub.add_parser("verify", help="run a randomized verification suite")
    p.add_argument("suite", choices=sorted(checks.SUITES))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--max-mass", type=int)
    p.set_defaults(fn=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.fn(args)
    except MalformedInput as exc:
        json.dump({"error": "malformed input", "detail": str(exc)}, sys.stderr)
        sys.stderr.write("\n")
        return 2
    except ValidationError as exc:
        json.dump({"error": "validation", "detail": str(exc)}, sys.stderr)
        sys.stderr.write("\n")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
