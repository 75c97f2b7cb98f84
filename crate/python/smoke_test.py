"""Quick check that the compiled extension imports and reproduces the headline numbers."""

import friezelab as fl


def main() -> None:
    f = fl.Frieze([8, 2], depth=6)
    assert f.growth_coefficients(3)[1:] == [14, 194, 2702]
    assert f.rows()[4] == [1560, 390]

    d4 = fl.fixture_quiver("d4")
    theta, value, word = fl.growth_from_affine_quiver(d4, 1000)
    assert value == 14

    m = fl.fixture_rep("m_lambda")
    x, at_ones = fl.cc_map(m)
    assert x == theta and at_ones == 14
    table = dict((tuple(e), chi) for e, chi in fl.grassmannian_table(m))
    assert len(table) == 13 and table[(1, 1, 1, 0, 0)] == 2

    assert [fl.quiddity_from_tube(fl.d4_tube(i)) for i in (1, 2, 3)] == [[8, 2], [4, 4], [4, 4]]
    assert fl.growth_from_affine_quiver(fl.fixture_quiver("e6"))[1] == 322
    assert all(fl.modular_relations_hold(k) for k in (1, 2, 3))
    assert fl.growth_via_homogeneous(14, 6) == fl.chebyshev_t(6, 14)

    seed = fl.Seed(fl.fixture_quiver("kronecker"))
    assert seed.mutate(0).mutate(0) == seed
    assert str(seed.mutate(0).variables[0]) == "x0^-1 + x0^-1*x1^2"

    try:
        fl.Frieze([0, 3])
    except fl.FriezelabError:
        pass
    else:
        raise AssertionError("nonpositive quiddity accepted")

    failed = [c["name"] for c in fl.run_checks() if not c["passed"]]
    assert not failed, failed
    print("smoke test passed")


if __name__ == "__main__":
    main()
