"""Distribution of the verifier's count gap for honest and forged signatures.

For each seeded cycle the script generates a keypair, signs a message with
the true key and with an independently sampled wrong key, and verifies both
against the true public key.  It reports acceptance rates and quantiles of
the observed proportion gap |p_R - p_S| for the two populations.  With
--exhaustive (small n only) the gap is computed over the full cube and the
sampling noise disappears, which isolates the structural separation the
threshold has to detect.

Example:
    python3 scripts/wrong_key_gap.py --cycles 60 --params n=12 --exhaustive
"""

import argparse
import random
import statistics
from dataclasses import replace

from cubesign.automorphisms import sample_automorphism
from cubesign.params import parse_param_overrides
from cubesign.poly import Poly, mask_of
from cubesign.scheme import PrivateKey, keygen, sign_poly, verify_poly


def synth_message_poly(nvars: int, rng: random.Random, nterms: int = 20) -> Poly:
    """Random stand-in for the hashed message at reduced variable counts."""
    terms = {}
    while len(terms) < nterms:
        degree = rng.randint(1, 3)
        mask = mask_of(rng.sample(range(1, nvars + 1), degree))
        if mask not in terms:
            terms[mask] = rng.choice((1, -1))
    return Poly(nvars, terms)


def quantiles(values):
    v = sorted(values)
    return v[0], v[len(v) // 4], statistics.median(v), v[(3 * len(v)) // 4], v[-1]


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=0, help="base RNG seed")
    parser.add_argument("--cycles", type=int, default=50, help="keypairs per population")
    parser.add_argument("--params", help="comma-separated overrides, e.g. n=12,trials=2000")
    parser.add_argument("--threshold", type=float, help="override the acceptance gap")
    parser.add_argument("--exhaustive", action="store_true",
                        help="enumerate the cube instead of sampling (n <= ~20)")
    args = parser.parse_args(argv)

    params = parse_param_overrides(args.params)
    if args.threshold is not None:
        params = replace(params, threshold=args.threshold)

    honest_gaps, forged_gaps = [], []
    honest_accepts = forged_accepts = 0
    for i in range(args.cycles):
        rng = random.Random(args.seed + i)
        priv, pub = keygen(params, rng)
        q = synth_message_poly(params.n + 1, rng)
        honest = sign_poly(priv, params, q, rng)
        wrong = PrivateKey(sample_automorphism(params, random.Random(args.seed + 500_000 + i)))
        forged = sign_poly(wrong, params, q, random.Random(args.seed + 600_000 + i))

        rep_h = verify_poly(pub, q, honest, params=params,
                            rng=random.Random(args.seed + 700_000 + i),
                            exhaustive=args.exhaustive)
        rep_f = verify_poly(pub, q, forged, params=params,
                            rng=random.Random(args.seed + 800_000 + i),
                            exhaustive=args.exhaustive)
        honest_gaps.append(rep_h.proportion_gap)
        forged_gaps.append(rep_f.proportion_gap)
        honest_accepts += 1 if rep_h.accepted else 0
        forged_accepts += 1 if rep_f.accepted else 0

    mode = "exhaustive" if args.exhaustive else f"{params.trials} trials"
    print(f"n={params.n} threshold={params.threshold} cycles={args.cycles} ({mode})")
    print(f"{'population':>10} {'accept':>9} {'min':>7} {'p25':>7} {'median':>7}"
          f" {'p75':>7} {'max':>7}")
    for label, accepts, gaps in (("honest", honest_accepts, honest_gaps),
                                 ("wrong-key", forged_accepts, forged_gaps)):
        q = quantiles(gaps)
        print(f"{label:>10} {accepts:>5}/{args.cycles}"
              f" {q[0]:>7.4f} {q[1]:>7.4f} {q[2]:>7.4f} {q[3]:>7.4f} {q[4]:>7.4f}")
    above = sum(1 for g in forged_gaps if g > params.threshold)
    print(f"wrong-key gaps above threshold: {above}/{args.cycles}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
