#!/usr/bin/env python3
"""Regenerate the frozen special-function golden table (src/qaccel/_oracle_data.py).

Values come from mpmath at 40 significant digits, well beyond double
precision, so the table is an independent oracle for the double-precision
kernel. Run from the repository root:

    python scripts/make_specfun_table.py
"""

from pathlib import Path

from mpmath import mp, mpc, mpf, besseli, gamma

mp.dps = 40

NU_GRID = ["0.5", "1", "2", "5", "10", "20", "30"]
Z_GRID = ["0.01", "0.1", "0.5", "1", "2", "5", "10"]

HEADER = '''"""Frozen golden values for the special-function kernel.

Generated by scripts/make_specfun_table.py with mpmath at 40 digits; do not
edit by hand. Each Bessel entry is (nu, z, re, im) for I_(i nu)(z).
"""

'''


def main() -> None:
    rows = []
    for nu_s in NU_GRID:
        for z_s in Z_GRID:
            val = besseli(mpc(0, mpf(nu_s)), mpf(z_s))
            rows.append(
                f"    ({float(mpf(nu_s))!r}, {float(mpf(z_s))!r}, "
                f"{float(val.real)!r}, {float(val.imag)!r}),"
            )
    gamma_rows = []
    for re_s, im_s in [("1", "1"), ("0.5", "0"), ("5", "0"), ("2", "10"),
                       ("1", "30"), ("1", "50"), ("-1.5", "0"), ("0.25", "-3")]:
        g = gamma(mpc(mpf(re_s), mpf(im_s)))
        gamma_rows.append(
            f"    ({float(mpf(re_s))!r}, {float(mpf(im_s))!r}, "
            f"{float(g.real)!r}, {float(g.imag)!r}),"
        )
    out = Path(__file__).resolve().parents[1] / "src" / "qaccel" / "_oracle_data.py"
    body = HEADER
    body += "BESSEL_I_IMAG_ORDER = (\n" + "\n".join(rows) + "\n)\n\n"
    body += "COMPLEX_GAMMA = (\n" + "\n".join(gamma_rows) + "\n)\n"
    out.write_text(body)
    print(f"wrote {out} ({len(rows)} bessel points, {len(gamma_rows)} gamma points)")


if __name__ == "__main__":
    main()
