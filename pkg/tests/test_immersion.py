import pytest

from immtools import (
    ABSENT,
    BUDGET,
    FOUND,
    ImmersionCertificate,
    StarMinorModel,
    find_immersion,
    gen_complete,
    gen_pk,
    star_minor_to_immersion,
    verify_immersion,
)
from helpers import mg, sg


def identity_cert(G, strong=True):
    return ImmersionCertificate(
        vertex_map={v: v for v in G.vertices},
        edge_map={e: frozenset({e}) for e in G.edges},
        strong=strong,
    )


def test_identity_certificate_accepts_both_strengths():
    G = mg("abc", {"1": "ab", "2": "bc", "3": "ac"})
    assert verify_immersion(G, G, identity_cert(G), strong=False) == []
    assert verify_immersion(G, G, identity_cert(G), strong=True) == []


def test_weak_k3_in_p2_fails_the_strong_check():
    G = gen_pk(2)
    K3 = gen_complete(3)
    cert = ImmersionCertificate(
        vertex_map={"v0": "v0", "v1": "v1", "v2": "v2"},
        edge_map={
            "e0_1": frozenset({"e0c0"}),
            "e1_2": frozenset({"e1c0"}),
            "e0_2": frozenset({"e0c1", "e1c1"}),  # v0-v1-v2 through branch v1
        },
        strong=False,
    )
    assert verify_immersion(G, K3, cert, strong=False) == []
    bad = verify_immersion(G, K3, cert, strong=True)
    assert any("branch vertex" in msg for msg in bad)


def test_loop_mapped_to_acyclic_image_is_rejected():
    G = mg("ab", {"1": "ab"})
    H = mg("x", {"l": "xx"})
    cert = ImmersionCertificate(
        vertex_map={"x": "a"}, edge_map={"l": frozenset({"1"})}, strong=False
    )
    bad = verify_immersion(G, H, cert)
    assert any("cycle" in msg for msg in bad)


def test_loop_mapped_to_parallel_pair_is_accepted():
    G = mg("ab", {"1": "ab", "2": "ab"})
    H = mg("x", {"l": "xx"})
    cert = ImmersionCertificate(
        vertex_map={"x": "a"}, edge_map={"l": frozenset({"1", "2"})}, strong=True
    )
    assert verify_immersion(G, H, cert) == []


def test_overlapping_edge_images_are_rejected():
    G = mg("abc", {"1": "ab", "2": "bc"})
    H = mg("xyz", {"p": "xy", "q": "yz"})
    cert = ImmersionCertificate(
        vertex_map={"x": "a", "y": "b", "z": "c"},
        edge_map={"p": frozenset({"1"}), "q": frozenset({"1", "2"})},
        strong=False,
    )
    bad = verify_immersion(G, H, cert)
    assert any("share host edge" in msg for msg in bad)


def test_dangling_identifiers_raise():
    G = mg("ab", {"1": "ab"})
    H = mg("x", {})
    with pytest.raises(ValueError):
        verify_immersion(
            G, H, ImmersionCertificate({"x": "zz"}, {}, False)
        )
    with pytest.raises(ValueError):
        verify_immersion(
            G, mg("x", {"e": "xx"}),
            ImmersionCertificate({"x": "a"}, {"e": frozenset({"nope"})}, False),
        )


def test_k3_in_p2_weak_yes_strong_no():
    G = gen_pk(2)
    K3 = gen_complete(3)
    assert find_immersion(G, K3, strong=False).status == FOUND
    assert find_immersion(G, K3, strong=True).status == ABSENT


def test_k1_always_found():
    r = find_immersion(gen_pk(2), gen_complete(1), strong=True)
    assert r.status == FOUND


def test_found_certificates_verify():
    G = mg("abc", {"1": "ab", "2": "ab", "3": "bc", "4": "ac"})
    H = mg("xy", {"p": "xy", "q": "xy"})
    r = find_immersion(G, H, strong=True)
    assert r.status == FOUND
    assert verify_immersion(G, H, r.certificate, strong=True) == []


def test_budget_exhaustion_reported():
    G = gen_pk(4)
    K3 = gen_complete(3)
    assert find_immersion(G, K3, strong=True, budget=5).status == BUDGET


def test_strong_certificate_also_verifies_weakly():
    G = gen_pk(3)
    H = mg("xy", {"p": "xy", "q": "xy", "r": "xy"})
    r = find_immersion(G, H, strong=True)
    assert r.status == FOUND
    assert verify_immersion(G, H, r.certificate, strong=False) == []


# -- star-minor-to-immersion ------------------------------------------


def hub_host(multiplicity):
    edges = {}
    for i, h in enumerate(("h1", "h2", "h3")):
        for c in range(multiplicity):
            edges[f"e{i}c{c}"] = ("c", h)
    return mg(["c", "h1", "h2", "h3"], edges)


def test_k1_pattern_gives_empty_edge_map():
    G = hub_host(2)
    model = StarMinorModel(
        center="c",
        leaves=frozenset({"h1", "h2"}),
        tree=sg(["c", "h1", "h2"], [("c", "h1"), ("c", "h2")]),
    )
    cert = star_minor_to_immersion(G, {"c", "h1", "h2", "h3"}, 2, model, mg("u", {}))
    assert cert.edge_map == {}
    assert set(cert.vertex_map) == {"u"}


def test_single_edge_pattern_concatenates_two_paths():
    G = mg(
        ["z1", "c", "z2"],
        {"a1": ("z1", "c"), "a2": ("z1", "c"), "b1": ("c", "z2"), "b2": ("c", "z2")},
    )
    model = StarMinorModel(
        center="c",
        leaves=frozenset({"z1", "z2"}),
        tree=sg(["c", "z1", "z2"], [("c", "z1"), ("c", "z2")]),
    )
    F = mg("uv", {"e": "uv"})
    cert = star_minor_to_immersion(G, G.vertices, 2, model, F)
    assert verify_immersion(G, F, cert, strong=True) == []
    assert len(cert.edge_map["e"]) == 2


def test_k3_pattern_through_hub_star():
    G = hub_host(6)
    model = StarMinorModel(
        center="c",
        leaves=frozenset({"h1", "h2", "h3"}),
        tree=sg(["c", "h1", "h2", "h3"], [("c", "h1"), ("c", "h2"), ("c", "h3")]),
    )
    F = gen_complete(3)
    cert = star_minor_to_immersion(G, G.vertices, 6, model, F)
    assert verify_immersion(G, F, cert, strong=True) == []
    assert sorted(cert.vertex_map.values()) == ["h1", "h2", "h3"]


def test_m_too_small_for_pattern_rejected():
    G = hub_host(6)
    model = StarMinorModel(
        center="c",
        leaves=frozenset({"h1", "h2", "h3"}),
        tree=sg(["c", "h1", "h2", "h3"], [("c", "h1"), ("c", "h2"), ("c", "h3")]),
    )
    with pytest.raises(ValueError):
        star_minor_to_immersion(G, G.vertices, 4, model, gen_complete(3))


def test_invalid_model_rejected():
    G = hub_host(6)
    bad = StarMinorModel(
        center="h1",
        leaves=frozenset({"c"}),
        tree=sg(["c", "h1"], [("c", "h1")]),
    )
    with pytest.raises(ValueError):
        star_minor_to_immersion(G, G.vertices, 6, bad, gen_complete(1))
