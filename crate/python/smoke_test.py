"""Smoke test for the pydiraccoh extension.

Build and run with:

    maturin develop -m crates/py/Cargo.toml --release
    python python/smoke_test.py
"""

import pydiraccoh as dc


def main() -> None:
    c5 = dc.RootSystem("C5")
    assert c5.rank == 5 and c5.rho == "(5,4,3,2,1)"
    assert c5.spin_factor == 4
    assert c5.dominant("(4/2,2/2,5/2,3/2,1/2)") == "(5/2,2,3/2,1,1/2)"

    engine = dc.Engine()
    r = engine.hd("sp-metaplectic(5,odd)")
    assert (r.status, r.tau, r.per_copy_multiplicity) == ("nonzero", "(4,3,2,1,0)", 1)
    assert r.contributions == [("(5,0,0,0,0)", 1)]
    assert engine.hd("sp-metaplectic(4,odd)").status == "zero"
    assert engine.crosscheck("so-odd(1,2)")

    a2 = dc.RootSystem("A2")
    adjoint = engine.freudenthal(a2, [1, 0, -1])
    assert sum(adjoint.values()) == 8 and adjoint["(0,0,0)"] == 2
    assert engine.tensor(a2, [1, 0, 0], [1, 0, 0]) == {"(1,1,0)": 1, "(2,0,0)": 1}
    assert engine.kostant_scan(a2) == (6, 6, True)

    f4 = dc.RootSystem("F4")
    assert engine.weight_multiplicity(f4, f4.rho, [5, 3, 0, 0]) == 8
    yes = [row for row in engine.f4_table() if row[2]]
    assert len(yes) == 10 and all(row[4] == 1 for row in yes)

    e8 = dc.RootSystem("E8")
    assert e8.integral_type(["0", "1", "2", "3", "4", "5", "6", "8"]) == "D8"
    regular, integral, tau = e8.necessary_condition("(0,1,2,3,4,5,6,8)")
    assert regular and integral and tau is not None

    checks = engine.verify("parity")
    assert checks and all(c.passed for c in checks)
    assert "exceptional(E8-4A1)" in dc.catalog()
    assert dc.two_lambda("gl-two-column(3,2)") == "(2,1,0,-1,-2)"
    assert dc.two_lambda("so-even(1,3,nonspherical)") == "(4,2,1,0)"

    try:
        dc.Engine(budget=10).freudenthal(f4, f4.rho)
    except dc.BudgetExceeded:
        pass
    else:
        raise AssertionError("budget was not enforced")
    try:
        dc.RootSystem("Q7")
    except ValueError:
        pass
    else:
        raise AssertionError("bad label accepted")

    print(f"pydiraccoh {dc.__version__}: smoke test passed")


if __name__ == "__main__":
    main()
