import pytest

from zdrlab.rings import (
    CatalogEntry,
    CatalogError,
    annihilator,
    build_ring,
    catalog_ids,
    cut_vertex_entry_ids,
    register_catalog_entry,
    ring_axiom_failures,
    ring_properties,
    unregister_catalog_entry,
    zero_divisors,
)

AXIOM_CORPUS = [
    "Zn:2",
    "Zn:6",
    "Zn:8",
    "Zn:9",
    "Zn:12",
    "Zn:16",
    "Zni:2",
    "Zni:3",
    "Zni:4",
    "Zni:5",
    "Zni:9",
    "GF:4",
    "GF:8",
    "GF:9",
    "GF:25",
    "GF:27",
    "GF:49",
    "prod:(Zn:2,GF:3)",
    "prod:(Zn:4,Zn:4)",
    "prod:(Zn:2,prod:(Zn:2,Zn:2))",
    "cat:Zpr.r2:5",
    "cat:Zpr.r2:13",
] + [f"cat:{i}" for i in catalog_ids()]


@pytest.mark.parametrize("spec", AXIOM_CORPUS)
def test_ring_axioms_exhaustive(spec):
    ring = build_ring(spec)
    assert ring.order <= 256
    assert ring_axiom_failures(ring) == []


def test_cut_vertex_entries_present():
    assert cut_vertex_entry_ids() == ("cvA1", "cvA2", "cvA3", "cvA4", "cvB1", "cvB2", "cvB3")


def test_zero_divisors_examples():
    assert zero_divisors(build_ring("Zn:6")).members == (2, 3, 4)
    assert zero_divisors(build_ring("Zn:9")).members == (3, 6)
    assert zero_divisors(build_ring("Zni:3")).members == ()


def test_annihilator_examples():
    r6 = build_ring("Zn:6")
    assert annihilator(r6, 2) == (0, 3)
    assert annihilator(r6, 0) == (0, 1, 2, 3, 4, 5)
    assert annihilator(build_ring("Zn:8"), 4) == (0, 2, 4, 6)
    with pytest.raises(ValueError):
        annihilator(r6, 6)


def test_annihilator_cache_matches():
    ring = build_ring("Zn:12")
    zds = zero_divisors(ring)
    for x in zds.members:
        assert zds.annihilators[x] == annihilator(ring, x)
        assert len(zds.annihilators[x]) >= 2  # 0 plus a nonzero partner


def test_nilpotent_self_annihilates():
    ring = build_ring("Zn:8")
    assert 4 in annihilator(ring, 4)  # 4*4 = 16 = 0 mod 8


def test_properties_examples():
    p9 = ring_properties(build_ring("Zn:9"))
    assert p9.is_local and not p9.is_reduced
    assert p9.nilpotents == (0, 3, 6)
    p22 = ring_properties(build_ring("prod:(Zn:2,Zn:2)"))
    assert p22.is_reduced and not p22.is_local and not p22.is_field
    assert ring_properties(build_ring("GF:4")).is_field
    assert ring_properties(build_ring("GF:27")).is_field


@pytest.mark.parametrize("p,expect_field", [(3, True), (7, True), (11, True), (19, True),
                                            (2, False), (5, False), (13, False), (17, False)])
def test_gaussian_prime_split(p, expect_field):
    # p = 3 mod 4 stays prime over the Gaussian integers; p = 1 mod 4 splits
    props = ring_properties(build_ring(f"Zni:{p}"))
    assert props.is_field == expect_field


def test_gaussian_multiplication():
    ring = build_ring("Zni:5")
    # (2+i)(2+4i) = 4 + 8i + 2i + 4i^2 = 0 + 10i = 0 mod 5
    x = 2 + 1 * 5
    y = 2 + 4 * 5
    assert ring.mul_of(x, y) == 0
    assert ring.labels[x] == "2+i"
    assert ring.labels[y] == "2+4i"
    # i^2 = -1
    i = 0 + 1 * 5
    assert ring.labels[ring.mul_of(i, i)] == "4"


def test_field_iff_no_zero_divisors():
    for spec in AXIOM_CORPUS:
        ring = build_ring(spec)
        props = ring_properties(ring)
        assert props.is_field == (not zero_divisors(ring).members)
        assert props.is_field == props.is_integral_domain
        assert props.is_reduced == (props.nilpotents == (0,))


def test_unity_at_index_one():
    for spec in ["Zn:6", "Zni:5", "GF:9", "cat:Z3r.r2", "cat:cvA4"]:
        assert build_ring(spec).one == 1


def test_catalog_structure_constants():
    ring = build_ring("cat:Z4r.2r_r2-2")
    assert ring.order == 8
    r = ring.labels.index("r")
    two = ring.labels.index("2")
    assert ring.mul_of(r, r) == two      # r^2 = 2
    assert ring.add_of(r, r) == 0        # 2r = 0
    ring = build_ring("cat:Z2r.r3")
    r = ring.labels.index("r")
    r2 = ring.labels.index("r^2")
    assert ring.mul_of(r, r) == r2
    assert ring.mul_of(r, r2) == 0


def test_catalog_labels():
    ring = build_ring("cat:Z3r.r2")
    assert ring.labels[0] == "0"
    assert ring.labels[1] == "1"
    assert "2+r" in ring.labels
    assert "2+2r" in ring.labels


def test_parametric_catalog():
    ring = build_ring("cat:Zpr.r2:5")
    assert ring.order == 25
    props = ring_properties(ring)
    assert props.is_local and not props.is_reduced
    assert len(zero_divisors(ring).members) == 4


def test_broken_catalog_entry_rejected():
    # char-2 constant with a mod-4 coefficient breaks distributivity
    register_catalog_entry(
        CatalogEntry("testBROKEN", (2, 4), ("1", "r"), {(1, 1): (0, 0)})
    )
    try:
        with pytest.raises(CatalogError):
            build_ring("cat:testBROKEN")
    finally:
        unregister_catalog_entry("testBROKEN")


def test_gf_arithmetic():
    gf9 = build_ring("GF:9")
    # w^2 = -1 in GF(9) built from x^2 + 1
    w = gf9.labels.index("w")
    assert gf9.labels[gf9.mul_of(w, w)] == "2"
    gf8 = build_ring("GF:8")
    # every nonzero element invertible
    for x in range(1, 8):
        assert any(gf8.mul_of(x, y) == 1 for y in range(1, 8))


def test_product_ring_componentwise():
    ring = build_ring("prod:(Zn:2,GF:3)")
    assert ring.order == 6
    one0 = ring.labels.index("(1,0)")
    zero1 = ring.labels.index("(0,1)")
    assert ring.mul_of(one0, zero1) == 0
    assert ring.labels[ring.one] == "(1,1)"
