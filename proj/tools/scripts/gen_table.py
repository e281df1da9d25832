"""Regenerate data/knots.txt from the database_knotinfo package."""
import re
import sys
from database_knotinfo import link_list

def main(out):
    rows = []
    for k in link_list():
        name = k.get("name", "")
        if not re.fullmatch(r"\d+_\d+", name):
            continue
        n = int(k["crossing_number"])
        torus = name in ("5_1", "7_1", "9_1")
        if n == 0 or n > 10 or (k.get("alternating") != "Y" and not torus):
            continue
        dt = k["dt_notation"].strip("[]").replace(" ", "")
        u = k["unknotting_number"].strip()
        m = re.fullmatch(r"\[(\d+),(\d+)\]", u)
        if m:
            u = m.group(1) + "-" + m.group(2)
        rows.append((n, name, dt, k["determinant"], k["signature"], u))
    with open(out, "w") as f:
        f.write("# name dt_code det signature unknotting_number\n")
        f.write("0_1 - 1 0 0\n")
        for n, name, dt, det, sig, u in rows:
            f.write(f"{name} {dt} {det} {sig} {u}\n")

def jones_terms(s):
    """'t+ t^3-t^4' -> {1: 1, 3: 1, 4: -1} (exponents of t)."""
    s = s.replace(" ", "").replace("(", "").replace(")", "")
    out = {}
    for m in re.finditer(r"([+-]?)(\d*)\*?(t(\^(-?\d+))?)?", s):
        if not m.group(0):
            continue
        sign = -1 if m.group(1) == "-" else 1
        coeff = int(m.group(2)) if m.group(2) else 1
        if m.group(3):
            e = int(m.group(5)) if m.group(5) else 1
        else:
            e = 0
        out[e] = out.get(e, 0) + sign * coeff
    return {e: c for e, c in out.items() if c}


def write_jones(out):
    with open(out, "w") as f:
        f.write("# name then exponent:coefficient pairs of the Jones polynomial in t\n")
        for k in link_list():
            name = k.get("name", "")
            if not re.fullmatch(r"\d+_\d+", name) or int(k["crossing_number"]) > 10:
                continue
            if k.get("alternating") != "Y" and name != "0_1":
                continue
            terms = jones_terms(k["jones_polynomial"])
            f.write(name + " " + " ".join(f"{e}:{c}" for e, c in sorted(terms.items())) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data/knots.txt")
    write_jones(sys.argv[2] if len(sys.argv) > 2 else "data/jones.txt")
