"""Radiative lifetime estimates for a dot in bulk and inside a nanowire.

Prints the spherical-dot lifetime, the mode wavelength in the material,
the nanowire-confined lifetime, and the per-rung ladder lifetimes of the
multiexciton cascade.

    python3 demos/lifetimes_table.py
"""

from __future__ import annotations

import warnings

from qdcascade import (
    CascadeParams,
    LifetimeInputs,
    build_model,
    multiexciton_lifetime,
    nanowire_lifetime,
    spherical_dot_lifetime,
)


def main() -> None:
    inp = LifetimeInputs(e_ex_ev=1.283, n_m=3.12, f=1.0, d_w_nm=200.0)
    tau_r = spherical_dot_lifetime(inp)
    lam_m = inp.wavelength_nm
    tau_x = nanowire_lifetime(tau_r, 200.0, lam_m)
    print(f"exciton energy        {inp.e_ex_ev:.3f} eV (index {inp.n_m})")
    print(f"bulk dot lifetime     {tau_r:.4f} ns")
    print(f"mode wavelength       {lam_m:.2f} nm")
    print(f"nanowire lifetime     {tau_x:.4f} ns (220 nm wire would give "
          f"{nanowire_lifetime(tau_r, 220.0, lam_m):.4f} ns)")

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        model = build_model(CascadeParams(29.0, 1180.0, 990.0, 1.25e-4, 6))
    print(f"\ncascade tau_x         {model.tau_x_ps:.2f} ps "
          f"(harmonic mean of 1180 and 990)")
    for order in range(3, 7):
        via_model = model.ladder_lifetime(order)
        direct = multiexciton_lifetime(order, model.tau_x_ps)
        assert via_model == direct
        print(f"rung {order} lifetime      {via_model:8.2f} ps")


if __name__ == "__main__":
    main()
