from knothom.suite import CHECK_GROUPS, run_all, run_group


def test_run_all_passes_and_is_sorted():
    results = run_all()
    names = [r.name for r in results]
    assert names == sorted(names)
    assert all(r.ok for r in results), [r.line() for r in results if not r.ok]


def test_groups_are_independent():
    for name in ("dimensions", "hirota", "counting"):
        results = run_group(name)
        assert results and all(r.ok for r in results)
    assert set(CHECK_GROUPS) >= {
        "dimensions", "categorification", "self-symmetry", "mirror", "delta",
        "growth", "differentials", "hfk", "rosso-jones", "stable", "hirota",
        "schemes", "potentials", "counting", "vortex", "sl2",
    }
