from fractions import Fraction

import pytest
from hypothesis import given, settings

from quiveralg import (
    EdgeVector,
    OutsideFragmentError,
    VertexFunction,
    compose,
    deg2_equal,
    deg2_reduce,
    emit_presentation,
    gen_composable_pair,
    gen_regular_morphism,
    grading,
    identity,
    induced_map,
    inner_product,
    isom,
    isom_star,
    phi,
    proj,
    rank_one_decompose,
    sum_thetas,
    verify_induced,
)
from quiveralg.cuntz_krieger import format_deg2, reduce_side, zero
from fixtures import ARROW, ARROW_TO_LOOP, COLLAPSE, LOOP, MOD2, TWO_CYCLE, WLOOP
from strategies import quivers


def _relations(pres, kind):
    return [r for r in pres.relations if r.kind == kind]


def test_presentation_loop_is_unitary():
    pres = emit_presentation(LOOP)
    labels = pres.lines()
    assert "p_u p_u = p_u" in labels
    assert "p_u* = p_u" in labels
    assert "t_l* t_l = p_u" in labels
    assert "p_u t_l = t_l" in labels
    assert "t_l p_u = t_l" in labels
    assert "p_u = t_l t_l*" in labels


def test_presentation_wloop_weights():
    pres = emit_presentation(WLOOP)
    (r2,) = _relations(pres, "R2")
    assert r2.rhs == ((Fraction(2), (("p", "u"),)),)
    assert r2.label == "t_l* t_l = 2 p_u"
    (r5,) = _relations(pres, "R5")
    assert r5.rhs == ((Fraction(1, 2), (("t", "l"), ("ts", "l"))),)
    assert r5.label == "p_u = (1/2) t_l t_l*"


def test_presentation_arrow_has_no_sink_covariance():
    pres = emit_presentation(ARROW)
    assert "t_e* t_e = p_b" in pres.lines()
    r5_subjects = [r.lhs for r in _relations(pres, "R5")]
    assert r5_subjects == [(("p", "a"),)]


def test_presentation_deterministic():
    assert emit_presentation(TWO_CYCLE).lines() == emit_presentation(TWO_CYCLE).lines()


def test_deg2_reduce_examples():
    out = deg2_reduce(WLOOP, [("ts", "l"), ("t", "l")])
    assert out.coeffs == {("P", "u"): 2}
    assert deg2_reduce(TWO_CYCLE, [("p", "a"), ("t", "e2")]).is_zero
    assert deg2_reduce(TWO_CYCLE, [("t", "e1"), ("ts", "e2")]).is_zero


def test_deg2_reduce_forms_tt():
    out = deg2_reduce(LOOP, [("t", "l"), ("ts", "l")])
    assert out.coeffs == {("TT", "l", "l"): 1}


def test_deg2_reduce_handles_inner_contractions():
    # t* t* t t is reducible even though its leading pair is not
    out = deg2_reduce(WLOOP, [("ts", "l"), ("ts", "l"), ("t", "l"), ("t", "l")])
    assert out.coeffs == {("P", "u"): 4}


def test_deg2_reduce_rejects_outside_words():
    with pytest.raises(OutsideFragmentError, match="fragment"):
        deg2_reduce(LOOP, [("t", "l"), ("t", "l")])
    with pytest.raises(OutsideFragmentError):
        deg2_reduce(LOOP, [("ts", "l"), ("ts", "l")])


def test_deg2_element_products():
    t, s, p = isom(WLOOP, "l"), isom_star(WLOOP, "l"), proj(WLOOP, "u")
    assert (s * t).coeffs == {("P", "u"): 2}
    assert (t * s).coeffs == {("TT", "l", "l"): 1}
    assert (p * t).coeffs == {("T", "l"): 1}
    tt = t * s
    assert (tt * tt).coeffs == {("TT", "l", "l"): 2}
    assert (s * tt).coeffs == {("S", "l"): 2}
    with pytest.raises(OutsideFragmentError):
        t * t


def test_deg2_adjoint():
    t = isom(TWO_CYCLE, "e1")
    assert t.adjoint() == isom_star(TWO_CYCLE, "e1")
    tt = t * isom_star(TWO_CYCLE, "e1")
    assert tt.adjoint() == tt
    two_i = t.scale(Fraction(2)) + isom(TWO_CYCLE, "e2")
    assert two_i.adjoint().adjoint() == two_i


def test_deg2_equal_examples():
    assert deg2_equal(LOOP, proj(LOOP, "u"), isom(LOOP, "l") * isom_star(LOOP, "l"))
    assert not deg2_equal(ARROW, proj(ARROW, "b"), zero(ARROW))
    x = proj(TWO_CYCLE, "a") + isom(TWO_CYCLE, "e1").scale(3)
    assert deg2_equal(TWO_CYCLE, x, x)


def test_deg2_equal_uses_weighted_relation():
    tt = isom(WLOOP, "l") * isom_star(WLOOP, "l")
    assert deg2_equal(WLOOP, proj(WLOOP, "u"), tt.scale(Fraction(1, 2)))
    assert not deg2_equal(WLOOP, proj(WLOOP, "u"), tt)


def test_grading():
    assert grading(isom(LOOP, "l")) == 1
    assert grading(isom_star(LOOP, "l")) == -1
    assert grading(proj(LOOP, "u")) == 0
    assert grading(isom(LOOP, "l") * isom_star(LOOP, "l")) == 0
    assert grading(proj(LOOP, "u") + isom(LOOP, "l")) == "mixed"
    assert grading(zero(LOOP)) == 0


def test_induced_map_examples():
    gm = induced_map(COLLAPSE)
    assert gm.on_projection("u").coeffs == {("P", "a"): 1, ("P", "b"): 1}
    assert gm.on_isometry("l").coeffs == {("T", "e1"): 1, ("T", "e2"): 1}

    gm_id = induced_map(identity(TWO_CYCLE))
    assert gm_id.on_projection("a") == proj(TWO_CYCLE, "a")
    assert gm_id.on_isometry("e1") == isom(TWO_CYCLE, "e1")

    gm2 = induced_map(MOD2)
    assert gm2.on_projection("a").coeffs == {("P", "v0"): 1, ("P", "v2"): 1}
    assert gm2.on_isometry("e1").coeffs == {("T", "f0"): 1, ("T", "f2"): 1}


def test_induced_map_rejects_non_regular():
    with pytest.raises(ValueError, match="regular"):
        induced_map(ARROW_TO_LOOP)


def test_verify_induced_collapse():
    report = verify_induced(COLLAPSE)
    assert report.ok
    assert not report.internal_errors
    # the loop presentation has exactly six relations
    assert len(report.entries) == 6


def test_verify_induced_identity():
    for q in (LOOP, WLOOP, ARROW, TWO_CYCLE):
        assert verify_induced(identity(q)).ok


def test_verify_induced_r2_cross_terms_vanish():
    gm = induced_map(COLLAPSE)
    image = gm.image_of_word((("ts", "l"), ("t", "l")))
    assert image.coeffs == {("P", "a"): 1, ("P", "b"): 1}


def test_verify_induced_r5_uses_domain_relation():
    gm = induced_map(COLLAPSE)
    lhs = gm.image_of_word((("p", "u"),))
    rhs = gm.image_of_word((("t", "l"), ("ts", "l")))
    assert lhs.coeffs != rhs.coeffs
    assert deg2_equal(TWO_CYCLE, lhs, rhs)


def test_generator_images_degree_homogeneous():
    for seed in range(10):
        m = gen_regular_morphism(seed, max_vertices=4, max_edges=6)
        gm = induced_map(m)
        for w in m.cod.vertices:
            assert grading(gm.on_projection(w)) == 0
        for x in m.cod.edge_ids:
            img = gm.on_isometry(x)
            assert grading(img) == 1 and not img.is_zero


def test_unitality_sum_of_projections():
    for seed in range(10):
        m = gen_regular_morphism(seed, max_vertices=4, max_edges=6)
        gm = induced_map(m)
        total = zero(m.cod)
        for w in m.cod.vertices:
            total = total + proj(m.cod, w)
        image = gm.apply(total)
        expected = zero(m.dom)
        for v in m.dom.vertices:
            expected = expected + proj(m.dom, v)
        assert image == expected


def test_induced_map_contravariant_functorial():
    for seed in range(10):
        n, m = gen_composable_pair(seed, max_vertices=3, max_edges=6)
        gm_n, gm_m = induced_map(n), induced_map(m)
        gm_nm = induced_map(compose(n, m))
        for w in n.cod.vertices:
            assert gm_nm.on_projection(w) == gm_m.apply(gm_n.on_projection(w))
        for x in n.cod.edge_ids:
            assert gm_nm.on_isometry(x) == gm_m.apply(gm_n.on_isometry(x))


def test_verify_induced_generated_morphisms():
    for seed in range(10):
        m = gen_regular_morphism(seed, max_vertices=3, max_edges=6)
        report = verify_induced(m)
        assert report.ok, report.failures()[:3]


@settings(max_examples=25, deadline=None)
@given(quivers(max_vertices=3, max_edges=5))
def test_relation_soundness_against_module_data(q):
    pres = emit_presentation(q)
    # R2 scalars agree with the inner product of basis vectors
    for rel in pres.relations:
        if rel.kind != "R2":
            continue
        e, f = rel.lhs[0][1], rel.lhs[1][1]
        ip = inner_product(EdgeVector.delta(q, e), EdgeVector.delta(q, f))
        expected = reduce_side(q, rel.rhs)
        for v in q.vertices:
            assert ip[v] == expected.coeffs.get(("P", v), 0)
    # R5 ranges over exactly the out-edges, with inverse-weight coefficients
    for rel in pres.relations:
        if rel.kind != "R5":
            continue
        v = rel.lhs[0][1]
        out = q.out_edges(v)
        assert len(rel.rhs) == len(out)
        for (coeff, word), edge in zip(rel.rhs, out):
            assert coeff == Fraction(1) / edge.weight
            assert word == (("t", edge.id), ("ts", edge.id))
        # and the left action of delta_v is recovered by those rank-one pieces
        op = phi(VertexFunction.delta(q, v))
        assert sum_thetas(q, rank_one_decompose(op)) == op


def test_format_deg2_readable():
    x = proj(TWO_CYCLE, "a") + isom(TWO_CYCLE, "e1").scale(Fraction(1, 2))
    assert format_deg2(x) == "p_a + (1/2) t_e1"
    assert format_deg2(zero(TWO_CYCLE)) == "0"
