import pytest
from hypothesis import example, given, strategies as st

from dioph.arith import is_perfect_square, isqrt, legendre, mod_pow


def small_primes(limit):
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [p for p in range(2, limit + 1) if sieve[p]]


ODD_PRIMES = [p for p in small_primes(1000) if p > 2]


class TestIsqrt:
    def test_examples(self):
        assert isqrt(0) == 0
        assert isqrt(1) == 1
        assert isqrt(576) == 24
        assert isqrt(9799) == 98
        assert isqrt(10**18) == 10**9

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            isqrt(-1)

    @given(st.integers(min_value=0, max_value=10**40))
    @example(0)
    @example(1)
    @example(2)
    @example(10**40)
    def test_bracketing(self, n):
        r = isqrt(n)
        assert r * r <= n < (r + 1) * (r + 1)


class TestIsPerfectSquare:
    def test_examples(self):
        assert is_perfect_square(0) == 0
        assert is_perfect_square(1) == 1
        assert is_perfect_square(100) == 10
        assert is_perfect_square(9801) == 99
        assert is_perfect_square(43) is None
        assert is_perfect_square(-4) is None
        assert is_perfect_square(-1) is None

    @given(st.integers(min_value=0, max_value=10**20))
    def test_roundtrip(self, n):
        assert is_perfect_square(n * n) == n

    @given(st.integers(min_value=0, max_value=10**20))
    def test_agrees_with_isqrt(self, n):
        r = isqrt(n)
        expected = r if r * r == n else None
        assert is_perfect_square(n) == expected


class TestModPow:
    def test_examples(self):
        assert mod_pow(2, 10, 1000) == 24
        assert mod_pow(3, 0, 7) == 1
        assert mod_pow(5, 100, 1) == 0
        assert mod_pow(-1, 3, 7) == 6

    def test_invalid_inputs(self):
        with pytest.raises(ValueError):
            mod_pow(2, -1, 7)
        with pytest.raises(ValueError):
            mod_pow(2, 3, 0)
        with pytest.raises(ValueError):
            mod_pow(2, 3, -5)

    @given(
        st.integers(min_value=-(10**9), max_value=10**9),
        st.integers(min_value=0, max_value=500),
        st.integers(min_value=1, max_value=10**6),
    )
    def test_matches_exact_power(self, base, exp, modulus):
        assert mod_pow(base, exp, modulus) == (base**exp) % modulus


class TestLegendre:
    def test_examples(self):
        assert legendre(2, 3) == -1
        assert legendre(2, 5) == -1
        assert legendre(4, 7) == 1
        assert legendre(6, 3) == 0
        assert legendre(-3, 5) == -1
        assert legendre(0, 11) == 0
        assert legendre(2, 7) == 1

    def test_negative_argument_reduced_mod_p(self):
        # -3 = 2 mod 5, and 2 is a non-residue mod 5
        assert legendre(-3, 5) == legendre(2, 5)

    def test_rejects_even_or_small_modulus(self):
        for bad in (2, 1, 0, -7, 4, 100):
            with pytest.raises(ValueError):
                legendre(1, bad)

    def test_rejects_composite_modulus(self):
        for bad in (9, 15, 21, 91, 561):
            with pytest.raises(ValueError):
                legendre(1, bad)

    def test_large_modulus_within_trial_division_reach(self):
        # sqrt(1e9+7) ~ 31623, well under the division bound: no flag needed
        assert legendre(5, 10**9 + 7) == -1
        assert legendre(4, 10**9 + 7) == 1

    def test_large_unverified_modulus_needs_flag(self):
        p = 10**13 + 37
        with pytest.raises(ValueError):
            legendre(2, p)
        assert legendre(2, p, assume_prime=True) == -1
        assert legendre(4, p, assume_prime=True) == 1

    def test_assume_prime_still_catches_euler_failures(self):
        # 2^7 = 128 = 8 mod 15, neither 1 nor 14: the criterion itself
        # exposes the composite even when primality checking is skipped.
        with pytest.raises(ValueError):
            legendre(2, 10**12 + 15, assume_prime=True)

    @pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
    def test_multiplicative_exhaustive(self, p):
        for a in range(p):
            for b in range(p):
                assert legendre(a * b, p) == legendre(a, p) * legendre(b, p)

    @given(
        st.sampled_from(ODD_PRIMES),
        st.integers(min_value=-(10**6), max_value=10**6),
        st.integers(min_value=-(10**6), max_value=10**6),
    )
    def test_multiplicative_sampled(self, p, a, b):
        assert legendre(a * b, p) == legendre(a, p) * legendre(b, p)

    @given(st.sampled_from(ODD_PRIMES), st.integers(min_value=1, max_value=10**6))
    def test_residue_one_iff_square_exists(self, p, a):
        if legendre(a, p) == 1:
            assert any(x * x % p == a % p for x in range(p))
        elif legendre(a, p) == -1:
            assert all(x * x % p != a % p for x in range(p))
        else:
            assert a % p == 0
