"""Smoke test for the pynodal extension module."""

import pynodal


def main():
    z2 = pynodal.BurnsideRing("Z2")
    assert z2.classes() == ["<()>", "G"]
    assert z2.marks() == [[2, 0], [1, 1]]
    reg = z2.orbit_type("<()>")
    one = z2.one()
    assert reg * reg == 2 * reg
    assert (reg + one).mark_vector() == [3, 1]
    assert -one + one == z2.element([0, 0])

    report = pynodal.verify("trivial", "4*")
    assert report["equal"] is True
    assert report["lhs"]["coeffs"] == [{"class": "G", "n": 3}]

    reports = pynodal.verify_all("Z2")
    assert len(reports) == 3 and all(r["equal"] for r in reports)

    a4 = pynodal.verify("A4", "[G/<(123)>]")
    assert a4["equal"] is False

    marks = pynodal.table_of_marks("S3")
    assert len(marks["classes"]) == 4

    klein = pynodal.klein_counterexample()
    rows = {r["class"]: (r["lhs"], r["rhs"]) for r in klein["subgroup_table"]}
    assert rows["<()>"] == (3, 3)
    assert rows["G"][0] != rows["G"][1]

    d8 = pynodal.d8_counterexample(case=8)
    assert d8["general"] is True
    assert d8["geometry"]["field"] == "Q(sqrt(-2))"
    assert len(d8["geometry"]["points"]) == 4
    assert pynodal.d8_counterexample(case=3)["general"] is False

    try:
        pynodal.verify("Q8", "4*")
    except ValueError:
        pass
    else:
        raise AssertionError("unknown group accepted")

    sweep = pynodal.theorem_sweep()
    names = [g["name"] for g in sweep["groups"]]
    assert names[0] == "trivial" and "S4" in names

    print("pynodal smoke test passed")


if __name__ == "__main__":
    main()
