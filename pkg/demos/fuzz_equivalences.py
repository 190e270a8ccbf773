"""Fuzz the classification equivalences on seeded random tensors.

Run:  python3 demos/fuzz_equivalences.py [count]
"""

import sys

import numpy as np

from sdual_lab import kaehler, sampling, twistor

count = int(sys.argv[1]) if len(sys.argv) > 1 else 200

for alpha in (-1, 1):
    rng = np.random.default_rng(0 if alpha == -1 else 1)
    einstein_agree = 0
    triple_agree = 0
    asd_agree = 0
    for k in range(count):
        r = sampling.random_pair_symmetric(rng, alpha)
        if k % 2 == 0:
            r = sampling.make_einstein(r)
        einstein, _ = twistor.is_einstein_bundle(r)
        einstein_agree += einstein == twistor.preserves_sd_module(r)

        A = sampling.random_sd_holo(rng, alpha) if k % 2 else sampling.random_holo(rng, alpha)
        scale = max(1.0, A.tensor.max_abs())
        sd, _ = kaehler.is_self_dual_kaehler(A)
        bochner_flat = kaehler.bochner(A).max_abs() <= 1e-9 * scale
        Wp, Wm = kaehler.real_weyl_blocks(A)
        wminus_zero = float(np.abs(Wm).max()) <= 1e-8 * scale
        triple_agree += sd == bochner_flat == wminus_zero
        asd = kaehler.is_anti_self_dual_kaehler(A)
        asd_agree += asd == (float(np.abs(Wp).max()) <= 1e-8 * scale)
    print(f"alpha={alpha:+d}:")
    print(f"  einstein-bundle <-> invariant self-dual module : {einstein_agree}/{count}")
    print(f"  self-dual <-> bochner-flat <-> real W- = 0     : {triple_agree}/{count}")
    print(f"  anti-self-dual <-> s = 0 <-> real W+ = 0       : {asd_agree}/{count}")
