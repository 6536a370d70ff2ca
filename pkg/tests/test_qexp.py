import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from siegelmodp.qexp import (QExpError, QExpansion, check_index, codec,
                             hasse_scale, index_scale_up, is_p_singular,
                             is_weak_p_singular, linear_combine, parse,
                             pth_root, serialize)
from siegelmodp.rep import Weight


def mk(p=7, N=3, weight=(4, 4), support=None, **kw):
    return QExpansion(p=p, N=N, weight=Weight(*weight),
                      support=support or {}, **kw)


def test_check_index():
    assert check_index((1, -2, 2)) == (1, -2, 2)
    for bad in [(0, 1, 0), (-1, 0, 1), (1, 0, -1), (1, 3, 2)]:
        with pytest.raises(QExpError, match="semi-positivity"):
            check_index(bad)


def test_validation():
    with pytest.raises(QExpError, match="prime"):
        mk(p=6)
    with pytest.raises(QExpError, match="N"):
        mk(N=2)
    with pytest.raises(QExpError, match="coprime"):
        mk(p=5, N=5, weight=(2, 2))
    with pytest.raises(QExpError, match="length"):
        mk(weight=(4, 2), support={(1, 0, 1): (1,)})
    # zero coefficients are dropped
    F = mk(support={(1, 0, 1): (0,), (0, 0, 1): (3,)})
    assert set(F.support) == {(0, 0, 1)}


def test_parity_check():
    chi2_even = (1, 1, 1)
    F = mk(weight=(4, 4), chi2=chi2_even)
    assert F.chi2_at(-1) == 1
    with pytest.raises(QExpError, match="parity"):
        mk(weight=(4, 3), chi2=chi2_even)  # k1+k2 odd needs chi2(-1) = -1


def test_codec_roundtrip_explicit():
    F = mk(p=7, N=3, weight=(5, 3), chi1=(1, 2, 4),
           chi2=(1, 3, 1),
           support={(1, 1, 1): (1, 0, 2), (2, -1, 3): (4, 5, 6)})
    text = serialize(F)
    assert text.startswith("%SMF v1\n")
    G = parse(text)
    assert G == F
    assert codec("serialize", codec("parse", text)) == text


def test_parse_errors_carry_line_numbers():
    with pytest.raises(QExpError, match="magic"):
        parse("hello")
    base = "%SMF v1\np 7\nN 3\nweight 4 4\n"
    with pytest.raises(QExpError, match="line 5"):
        parse(base + "coeff 1 1 : 3\n")
    with pytest.raises(QExpError, match="duplicate"):
        parse(base + "coeff 1 0 1 : 3\ncoeff 1 0 1 : 4\n")
    with pytest.raises(QExpError, match="missing required header"):
        parse("%SMF v1\np 7\n")
    with pytest.raises(QExpError, match="unknown header"):
        parse(base + "bogus 1\n")


@settings(max_examples=40, deadline=None)
@given(st.dictionaries(
    st.tuples(st.integers(0, 4), st.integers(-2, 2), st.integers(1, 4)),
    st.tuples(st.integers(0, 6)), max_size=5))
def test_codec_roundtrip_random(support):
    support = {T: v for T, v in support.items()
               if 4 * T[0] * T[2] - T[1] ** 2 >= 0}
    F = mk(support=support)
    assert parse(serialize(F)) == F


def test_p_singular_implies_weak():
    F = mk(p=5, N=3, weight=(5, 5), support={(5, 0, 10): (2,), (0, 0, 5): (1,)})
    assert is_p_singular(F)
    assert is_weak_p_singular(F)
    G = mk(p=5, N=3, support={(1, 2, 1): (1,)})  # 4-4 = 0 mod 5
    assert is_weak_p_singular(G) and not is_p_singular(G)


def test_pth_root_roundtrip():
    F = mk(p=5, N=3, weight=(10, 10), support={(5, 0, 10): (2,), (0, 0, 5): (1,)})
    G = pth_root(F)
    assert G.weight == Weight(2, 2)
    assert index_scale_up(G) == F
    # non-divisible support -> None
    H = mk(p=5, N=3, weight=(10, 10), support={(1, 0, 1): (1,)})
    assert pth_root(H) is None
    with pytest.raises(QExpError, match="p-divisible"):
        pth_root(mk(p=5, N=3, weight=(4, 4)))
    with pytest.raises(QExpError, match="scalar"):
        pth_root(mk(p=5, N=3, weight=(6, 5), support={}))


def test_hasse_scale_and_linear_combine():
    F = mk(support={(1, 0, 1): (2,)})
    G = hasse_scale(F, 2)
    assert G.weight == Weight(4 + 12, 4 + 12)
    assert G.support == F.support
    H = linear_combine([(2, F), (3, F)])
    assert H.support == {(1, 0, 1): (10 % 7,)}
    with pytest.raises(QExpError, match="metadata"):
        linear_combine([(1, F), (1, mk(N=4))])
    with pytest.raises(QExpError, match="empty"):
        linear_combine([])
