"""Decompose random vertical 2-forms into dual halves.

Run:  python3 demos/hodge_decomposition.py
"""

import numpy as np

from sdual_lab import forms

rng = np.random.default_rng(42)

for alpha in (-1, 1):
    w = forms.vec_to_form(rng.standard_normal(6))
    plus = forms.sd_project(w, alpha)
    minus = forms.asd_project(w, alpha)
    x, y, z = forms.sd_coordinates(w, alpha)
    print(f"alpha={alpha:+d}")
    print(f"  sd coordinates  (x, y, z) = ({x:+.4f}, {y:+.4f}, {z:+.4f})")
    print(f"  *w+ == w+  residual: {np.abs(forms.hodge_star(plus, alpha) - plus).max():.2e}")
    print(f"  *w- == -w- residual: {np.abs(forms.hodge_star(minus, alpha) + minus).max():.2e}")
    print(f"  reassembly residual: {np.abs(plus + minus - w).max():.2e}")
    print(f"  (w+, w-) = {forms.inner(plus, minus, alpha):.2e}")
