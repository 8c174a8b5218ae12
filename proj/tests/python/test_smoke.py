from fractions import Fraction

import pytest

import permfib


def test_statistics_and_inverse():
    p = permfib.parse_perm("23568714")
    s = permfib.statistics(p)
    assert s["ipk"] == 2
    assert s["ilpk"] == 3
    assert s["descent_composition"] == [5, 1, 2]
    assert permfib.inverse(p) == [7, 1, 2, 8, 3, 4, 6, 5]


def test_fibonacci_is_exact():
    assert permfib.fib(2, 10) == 89
    assert permfib.fib(2, 90) == 4660046610375530309
    assert permfib.fib(2, 100) > 2**64


def test_zero_ipk_and_phi():
    assert permfib.zero_ipk_permutation([3, 2, 3, 1]) == [4, 5, 6, 3, 7, 2, 8, 9, 1]
    p = permfib.parse_perm("1 2 5 10 12 8 6 4 3 7 9 11")
    w = permfib.phi(p)
    assert w == "aacbabcbcaca"
    assert permfib.phi_inverse(w) == p
    assert not permfib.in_N_prime(p)


def test_word_to_tiling_chain():
    p = permfib.parse_perm("1 2 8 9 10 14 16 17 12 11 4 3 5 6 7 13 15 18 19 20")
    w = permfib.phi(p)
    assert w == "aacbcccaaabbcacaaccc"
    j, k, z = permfib.split_W_word(w)
    assert (j, k) == (3, 15)
    assert "|".join(permfib.blocks(z)) == "aac|bc|c|c|aaab|bc|ac"
    top, bottom = permfib.z_to_tiling(z)
    assert permfib.tiling_to_z(top, bottom) == z
    assert permfib.triple_to_nprime(j, k, top, bottom, len(p)) == p


def test_counts():
    assert [permfib.count_ipk0_avoiders(n, 3) for n in range(1, 8)] == [1, 2, 3, 5, 8, 13, 21]
    assert [permfib.count_ilpk1_avoiders(n, 3) for n in range(1, 7)] == [0, 1, 4, 13, 37, 101]
    assert [permfib.count_W(n) for n in range(1, 7)] == [0, 1, 4, 13, 37, 101]
    assert len(permfib.tilings(5)) == 40


def test_series_are_fractions():
    v = permfib.v_of_t(3)
    assert v == [0, Fraction(1, 4), Fraction(1, 8), Fraction(5, 64)]
    assert permfib.ogf_ilpk_general(3, 6)[1:] == [0, 1, 4, 13, 37, 101]
    for m in (2, 3, 4):
        assert permfib.verify_theorem3(m, 7, 5)
        assert permfib.verify_theorem5(m, 7, 5)


def test_reports():
    r = permfib.check_theorem4(6)
    assert r["pass"] is True
    assert r["details"]["classes"] == [1, 2, 4, 8, 16, 32]


def test_errors():
    with pytest.raises(permfib.NotInDomain):
        permfib.phi([1, 2, 3])
    with pytest.raises(permfib.InvalidInput):
        permfib.statistics([1, 1, 2])
    with pytest.raises(permfib.NotInLanguage):
        permfib.blocks("bc")
    with pytest.raises(permfib.ResourceLimit):
        permfib.count_ipk0_avoiders(11, 3)
    assert issubclass(permfib.InvalidInput, permfib.Error)


def test_cli_in_process():
    code, out, err = permfib.run_cli(["table", "--kind", "counts-thm2", "--n-max", "4", "--format", "csv"])
    assert code == 0
    assert out == "n,oracle,closed_form\n1,0,0\n2,1,1\n3,4,4\n4,13,13\n"
    assert permfib.run_cli(["verify", "--claim", "theorem1", "--n-max", "99"])[0] == 2
