from immtools import are_isomorphic, canonical_key, isomorphic_with_pins
from helpers import mg


def test_relabeling_preserves_canonical_key():
    G = mg("abc", {"1": "ab", "2": "bc", "3": "ab"})
    H = mg("xyz", {"p": "yz", "q": "xy", "r": "yz"})
    assert canonical_key(G) == canonical_key(H)
    assert are_isomorphic(G, H)


def test_multiplicity_distinguishes():
    G = mg("ab", {"1": "ab"})
    H = mg("ab", {"1": "ab", "2": "ab"})
    assert not are_isomorphic(G, H)


def test_loops_distinguish():
    G = mg("ab", {"1": "ab", "l": "aa"})
    H = mg("ab", {"1": "ab", "l": "bb"})
    assert are_isomorphic(G, H)  # symmetric relabeling
    K = mg("ab", {"1": "ab", "2": "ab"})
    assert not are_isomorphic(G, K)


def test_isolated_vertices_matter():
    G = mg("ab", {"1": "ab"})
    H = mg("abc", {"1": "ab"})
    assert not are_isomorphic(G, H)


def test_same_degree_sequence_different_structure():
    # C_6 versus two triangles: all degrees 2
    C6 = mg("abcdef", {"1": "ab", "2": "bc", "3": "cd", "4": "de", "5": "ef", "6": "af"})
    TT = mg("abcdef", {"1": "ab", "2": "bc", "3": "ac", "4": "de", "5": "ef", "6": "df"})
    assert not are_isomorphic(C6, TT)


def test_pins_constrain_the_isomorphism():
    G = mg("ab", {"1": "ab", "2": "ab", "l": "aa"})
    H = mg("xy", {"1": "xy", "2": "xy", "l": "yy"})
    assert isomorphic_with_pins(G, H, {"a": "y"}) is True
    assert isomorphic_with_pins(G, H, {"a": "x"}) is False


def test_pins_outside_graphs_fail():
    G = mg("a", {})
    H = mg("x", {})
    assert isomorphic_with_pins(G, H, {"a": "z"}) is False


def test_oversized_instances_are_skipped():
    G = mg([f"v{i}" for i in range(11)], {})
    H = mg([f"u{i}" for i in range(11)], {})
    assert isomorphic_with_pins(G, H, {}) is None
