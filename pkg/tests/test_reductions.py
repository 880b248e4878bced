import pytest

from cistkit.cist import max_cist_exact, verify_cist
from cistkit.colorings import exists_bipanchromatic, exists_panchromatic, is_bipanchromatic, is_panchromatic
from cistkit.errors import InvalidInput, WitnessInvalid
from cistkit.model import CistCertificate, Coloring, Hypergraph
from cistkit.reductions import (
    build_bicp_gadget,
    build_cist_gadget,
    map_bicp_witness,
    map_cist_witness,
)

from conftest import seeded_hypergraphs


def test_bicp_gadget_shape():
    h = Hypergraph(3, [[0, 1], [1, 2]])
    gadget = build_bicp_gadget(h)
    assert gadget.h_prime.n == 6
    assert gadget.h_prime.edges == ((0, 1), (1, 2), (3, 4), (4, 5), (0, 1, 2, 3, 4, 5))


def test_cist_gadget_shape():
    h = Hypergraph(3, [[0, 1], [1, 2]])
    gadget = build_cist_gadget(h)
    g = gadget.g_prime
    assert (g.d, g.i) == (6, 4)
    assert g.cross_adj == ((0, 1), (1, 2), (3, 4), (4, 5))
    assert gadget.copy_maps == ((0, 1, 2, 6, 7), (3, 4, 5, 8, 9))


def test_bicp_witness_maps():
    h = Hypergraph(3, [[0, 1], [1, 2]])
    gadget = build_bicp_gadget(h)
    fwd = map_bicp_witness(gadget, Coloring([0, 1, 0], 2), "fwd")
    assert fwd.colors == (0, 1, 0, 0, 1, 0) and is_bipanchromatic(gadget.h_prime, fwd)
    assert map_bicp_witness(gadget, fwd, "bwd").colors == (0, 1, 0)
    with pytest.raises(WitnessInvalid):
        map_bicp_witness(gadget, Coloring([0, 0, 1], 2), "fwd")
    with pytest.raises(InvalidInput):
        map_bicp_witness(gadget, fwd, "sideways")


def test_cist_witness_maps():
    h = Hypergraph(3, [[0, 1], [1, 2]])
    gadget = build_cist_gadget(h)
    cert = map_cist_witness(gadget, Coloring([0, 1, 0], 2), "fwd")
    assert cert.k == 2 and verify_cist(gadget.g_prime, cert)
    back = map_cist_witness(gadget, cert, "bwd")
    assert is_panchromatic(h, back)
    with pytest.raises(WitnessInvalid):
        map_cist_witness(gadget, Coloring([0, 0, 0], 1), "fwd")
    with pytest.raises(WitnessInvalid):
        map_cist_witness(gadget, CistCertificate([[(0, 1)], [(1, 2)]]), "bwd")


def test_gadgets_reject_bad_input():
    with pytest.raises(InvalidInput):
        build_cist_gadget(Hypergraph(3, [[0, 1]]))


def test_equivalences_on_seeded_sample():
    for h in seeded_hypergraphs(30, (2, 4), (1, 3), base=700):
        bicp = build_bicp_gadget(h).h_prime
        g_prime = build_cist_gadget(h).g_prime
        m = max_cist_exact(g_prime)
        for k in range(1, h.n + 1):
            pan = exists_panchromatic(h, k) is not None
            assert pan == (exists_bipanchromatic(bicp, k) is not None)
            assert pan == (m >= k)
