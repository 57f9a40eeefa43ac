"""Survey of key and signature sizes under the fixed bit-counting rule.

Generates seeded keypairs at the given parameters, signs one probe message
per keypair, and prints quantiles of the public key, private key, and
signature sizes.  The distributions are strongly right-skewed: occasional
automorphisms blow up the mapped polynomials by an order of magnitude, so
means sit well above medians and single-seed figures are not representative.

Example:
    python3 scripts/size_survey.py --keypairs 100 --seed 0
"""

import argparse
import random
import statistics

from cubesign.params import parse_param_overrides
from cubesign.scheme import keygen, sign
from cubesign.sizes import measure


def row(label: str, values: list[float]) -> str:
    v = sorted(values)
    return (f"{label:>9} {statistics.mean(v):>8.2f} {v[len(v) // 2]:>8.2f}"
            f" {v[len(v) // 4]:>8.2f} {v[(3 * len(v)) // 4]:>8.2f}"
            f" {v[0]:>8.2f} {v[-1]:>8.2f}")


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=0, help="base RNG seed")
    parser.add_argument("--keypairs", type=int, default=50, help="keypairs to sample")
    parser.add_argument("--params", help="comma-separated overrides, e.g. d=1,r=1")
    args = parser.parse_args(argv)

    params = parse_param_overrides(args.params)
    sig_kb, pub_kb, priv_kb = [], [], []
    for s in range(args.keypairs):
        rng = random.Random(args.seed + s)
        priv, pub = keygen(params, rng)
        sig = sign(priv, params, f"size probe {s}".encode(), rng)
        sig_kb.append(measure([sig.poly]).kilobytes)
        pub_kb.append(measure([*pub.base, *pub.mapped]).kilobytes)
        priv_kb.append(measure(priv.aut.images).kilobytes)

    print(f"n={params.n} t={params.t} b={params.b} d={params.d} r={params.r}"
          f" keypairs={args.keypairs} (sizes in KB)")
    print(f"{'':>9} {'mean':>8} {'median':>8} {'p25':>8} {'p75':>8} {'min':>8} {'max':>8}")
    print(row("signature", sig_kb))
    print(row("public", pub_kb))
    print(row("private", priv_kb))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
