"""Print the small worked values: the 12-element winding example, hypersimplex
histograms, the dilated-simplex numerator table and the r=2, n=3 cube slices."""

from ospwind import DecoratedOSP, FamilySpec, grading_histogram, hstar_simplex, hstar_slice, trim, winding_vector


def fmt(v):
    return "(" + ",".join(map(str, trim(v))) + ")"


def main():
    p = DecoratedOSP.parse("{1,5,6}_2|{2,9}_1|{4,10,12}_1|{3,7,8,11}_3")
    wd = winding_vector(p)
    print(f"{p}: w={wd.winding_vector} level={wd.level} winding number={wd.winding_number}")

    print("\nhypersimplices")
    for a, b in [(2, 2), (2, 3)]:
        f = FamilySpec.hypersimplex(a, b)
        print(f"  B({a},{b}) winding={fmt(grading_histogram(f))} ehrhart={fmt(hstar_slice(1, a, a + b))}")

    print("\ndilated simplices, r \\ n")
    for r in (2, 3, 4):
        row = [fmt(hstar_simplex(r, n)) for n in (2, 3, 4)]
        print(f"  {r}: " + "  ".join(f"{c:>14}" for c in row))

    print("\nslices of [0,2]^3")
    for s in range(1, 6):
        h = hstar_slice(2, s, 3)
        print(f"  s={s} winding={fmt(grading_histogram(FamilySpec.slice(2, 3, s)))} ehrhart={fmt(h)} volume={sum(h)}")


if __name__ == "__main__":
    main()
