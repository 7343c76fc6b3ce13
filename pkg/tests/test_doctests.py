import doctest

from hecke_forge import qpoly, weyl


def test_qpoly_doctests():
    results = doctest.testmod(qpoly)
    assert results.failed == 0 and results.attempted > 0


def test_weyl_doctests():
    results = doctest.testmod(weyl)
    assert results.failed == 0 and results.attempted > 0
