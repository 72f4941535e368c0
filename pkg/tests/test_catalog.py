import pytest

from gtsij.catalog import CATALOG, SijParams, build, lookup, statistic_pairs
from gtsij.core.statistics import check_compatibility
from gtsij.core.verify import verify_sijection
from gtsij.errors import InterfaceError

CASES = {
    "interval_split": SijParams(a=(1,), b=(4,), c=2),
    "beta": SijParams(a=(0, 2), b=(2, 0), x=3),
    "rho": SijParams(a=(0, 2), b=(2, 0), x=3),
    "pi": SijParams(k=(1, 3, 5), i=1),
    "sigma": SijParams(a=(0, 2), b=(2, 0), i=1),
    "gamma_row": SijParams(k=(0, 2), x=3),
    "tau": SijParams(k=(0, 2), x=4),
    "iota_mt": SijParams(k=(0, 2)),
    "phi1": SijParams(k=(0, 2), x=4),
    "phi3p": SijParams(k=(0, 2), x=4, mode="af"),
    "phi4p": SijParams(k=(0, 2), x=4),
    "phi4pp": SijParams(k=(0, 2), x=4),
    "gamma": SijParams(k=(0, 2)),
    "gmt_ar_sgt": SijParams(k=(0, 2)),
}


def test_every_name_has_a_case():
    assert set(CASES) == set(CATALOG)


@pytest.mark.parametrize("name", sorted(CASES))
def test_named_construction(name):
    params = CASES[name]
    phi = build(name, params)
    report = verify_sijection(phi)
    assert report.valid, report.summary()
    for on_domain, on_codomain in statistic_pairs(name, params, phi):
        compatibility = check_compatibility(phi, on_domain, on_codomain)
        assert compatibility.compatible, compatibility.summary()


def test_statistic_names():
    phi = build("gamma", CASES["gamma"])
    assert [pair[0].name for pair in statistic_pairs("gamma", CASES["gamma"], phi)] == ["eta_top", "eta_inv"]
    stages = {"phi1": ["eta_top", "eta_inv"], "phi3p": ["eta_top"], "phi4p": ["eta_inv"], "phi4pp": ["eta_inv"]}
    for name, expected in stages.items():
        pairs = statistic_pairs(name, CASES[name], build(name, CASES[name]))
        assert [pair[0].name for pair in pairs] == expected


def test_missing_parameters():
    with pytest.raises(InterfaceError, match="--i"):
        build("pi", SijParams(k=(1, 3, 5)))
    with pytest.raises(InterfaceError):
        build("interval_split", SijParams(a=(1, 2), b=(4,), c=2))
    with pytest.raises(InterfaceError):
        lookup("omega")


def test_describe():
    assert SijParams(k=(1, 3, 5), i=1).describe() == "k=(1, 3, 5), i=1"
    assert SijParams().describe() == ""
