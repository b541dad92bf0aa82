"""Print the reduced-domain columns for the ternary [6,3] code with rho = 3."""

from covrad import LinearCode, build_table, char_function, coset_leader_distribution_transform, gf
from covrad.analysis import covering_radius_transform
from covrad.spectral import pointwise_power, reduced_transform

H = [
    [0, 0, 2, 1, 0, 0],
    [0, 1, 0, 0, 1, 0],
    [1, 0, 0, 0, 0, 1],
]


def main():
    code = LinearCode.from_parity(gf(3), H)
    table = build_table(code.field, code.redundancy)
    h = char_function(code, table)
    hh = reduced_transform(table, h)
    cols = {
        "h": h,
        "h^": hh,
        "(h^)^2": pointwise_power(hh, 2),
        "[(h^)^2]^": reduced_transform(table, pointwise_power(hh, 2)),
        "(h^)^3": pointwise_power(hh, 3),
        "[(h^)^3]^": reduced_transform(table, pointwise_power(hh, 3)),
    }
    labels = ["000"] + ["".join(map(str, p)) for p in table.points]
    print("point " + "".join(f"{k:>11}" for k in cols))
    for i, lab in enumerate(labels):
        print(f"{lab:>5} " + "".join(f"{c.values()[i]:>11}" for c in cols.values()))
    print(f"rho = {covering_radius_transform(code).covering_radius}")
    print(f"leaders = {coset_leader_distribution_transform(code).counts}")


if __name__ == "__main__":
    main()
