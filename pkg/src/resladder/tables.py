"""Deterministic CSV rendering of service responses.

Floats print with 17 significant digits in scientific notation so values
survive a parse round trip bit-exactly; integers print plain; booleans
print true/false; absent optional values print as empty fields.  Rows keep
the service order (ladder rows sorted by n, scan rows row-major with the
imaginary axis as the outer loop).
"""

from __future__ import annotations

LADDER_HEADER = (
    "n,a_n,k_re,k_im,lambda_re,lambda_im,iterations,residual,"
    "classification,apriori_bound,certified"
)
SCAN_HEADER = "k_re,k_im,F_re,F_im,abs_F_minus_1,abs_F_prime"
SERIES_HEADER = "n,center,order,value_re,value_im,bound,useful"


def fmt_float(x) -> str:
    """17 significant digits, scientific notation."""
    return f"{float(x):.16e}"


def _opt(x) -> str:
    return "" if x is None else fmt_float(x)


def _flag(b) -> str:
    return "true" if b else "false"


def ladder_csv(entries: list[dict]) -> str:
    lines = [LADDER_HEADER]
    for e in entries:
        lines.append(
            ",".join(
                [
                    str(int(e["n"])),
                    fmt_float(e["a_n"]),
                    fmt_float(e["k_re"]),
                    fmt_float(e["k_im"]),
                    fmt_float(e["lambda_re"]),
                    fmt_float(e["lambda_im"]),
                    str(int(e["iterations"])),
                    fmt_float(e["residual"]),
                    str(e["classification"]),
                    fmt_float(e["apriori_bound"]),
                    _flag(e["certified"]),
                ]
            )
        )
    return "\n".join(lines) + "\n"


def scan_csv(rows: list[dict]) -> str:
    lines = [SCAN_HEADER]
    for r in rows:
        lines.append(
            ",".join(
                [
                    fmt_float(r["k_re"]),
                    fmt_float(r["k_im"]),
                    _opt(r["F_re"]),
                    _opt(r["F_im"]),
                    _opt(r["abs_F_minus_1"]),
                    _opt(r["abs_F_prime"]),
                ]
            )
        )
    return "\n".join(lines) + "\n"


def series_csv(rows: list[dict]) -> str:
    lines = [SERIES_HEADER]
    for r in rows:
        lines.append(
            ",".join(
                [
                    str(int(r["n"])),
                    str(r["center"]),
                    str(int(r["order"])),
                    fmt_float(r["value_re"]),
                    fmt_float(r["value_im"]),
                    fmt_float(r["bound"]),
                    _flag(r["useful"]),
                ]
            )
        )
    return "\n".join(lines) + "\n"
