#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Human readable labels for identities, partition sets and named series
"""

IDENTITY_LABELS = """
s1:sum 1/(2k+1) C(3k,k) C(n+k,3k) = C(2n,n)/(n+1)
s2:sum 1/(2k+1) C(3k+1,k+1) C(n+k,3k+1) = C(2n,n)/(n+1), n >= 1
s3:sum 1/(3k+a) C(3k+a,k) C(n+a+k-1,n-2k) = C(2n+a,n)/(2n+a)
s4:sum 1/(4k+1) C(5k,k) C(n+k,5k) = sum (-1)^k/(n+1) C(n+k,k) C(2n-2k,n)
s5:sum (n+a+1)/(4k+a+1) C(5k+a,k) C(n+a+k,5k+a) = sum (-1)^k C(n+a+k,k) C(2n+a-2k,n+a)
new1:sum C(m+k,k) C(m+1,n-2k) = C(m+n,n)
new2:sum C(m+k,k) C(m+1,n-4k) = sum (-1)^k C(m+k,k) C(m+n-2k,m)
new3:sum [m+k,k]_{q^2} [m+1,n-2k]_q q^C(n-2k,2) = [m+n,n]_q
new4:sum [m+k,k]_{q^4} [m+1,n-4k]_q q^C(n-4k,2) = sum (-1)^k [m+k,k]_{q^2} [m+n-2k,n-2k]_q
spe1:sum [n+k,k]_{q^2} [n+1,2k+1]_q q^C(n-2k,2) = [2n,n]_q
spe2:sum [n+k,k+1]_{q^2} [n,2k+1]_q q^C(n-2k-1,2) = [2n,n-1]_q
gf_A:sum over lambda_1 <= m+1, l(lambda) = n of q^|lambda| = q^n [m+n,n]_q
gf_D:sum over distinct lambda_1 <= m+1, l(lambda) = n of q^|lambda| = [m+1,n]_q q^C(n+1,2)
qbione:(-z;q)_{m+1} / (z^2;q^2)_{m+1} = 1 / (z;q)_{m+1}
qbitwo:(-z;q)_{m+1} / (z^4;q^4)_{m+1} = 1 / ((z;q)_{m+1} (-z^2;q^2)_{m+1})
""".strip()

SET_LABELS = """
A:lambda_1 <= m+1 and l(lambda) = n, weight |lambda|
B:(lambda, mu), mu distinct, lambda_1, mu_1 <= m+1, 2l(lambda) + l(mu) = n, weight 2|lambda| + |mu|
U:(lambda, mu), lambda_1, mu_1 <= m+1, 2l(lambda) + l(mu) = n, weight 2|lambda| + |mu|, sign (-1)^l(lambda)
V:(lambda, mu) in U, every part of lambda repeated an even number of times and mu distinct
""".strip()

SERIES_LABELS = """
poch-z:(z;q)_{m+1}
inv-poch-z:1 / (z;q)_{m+1}
poch-neg-z:(-z;q)_{m+1}
inv-poch-z2:1 / (z^2;q^2)_{m+1}
inv-poch-z4:1 / (z^4;q^4)_{m+1}
inv-poch-neg-z2:1 / (-z^2;q^2)_{m+1}
qbione-lhs:(-z;q)_{m+1} / (z^2;q^2)_{m+1}
qbione-rhs:1 / (z;q)_{m+1}
qbitwo-lhs:(-z;q)_{m+1} / (z^4;q^4)_{m+1}
qbitwo-rhs:1 / ((z;q)_{m+1} (-z^2;q^2)_{m+1})
""".strip()


def labels_to_dictionary(labels):
    """Split 'key:label' lines into a dictionary

    Parameters
    ----------
    labels :
        A string of 'key:label' lines

    Returns
    -------
    dictionary :
        Labels keyed by their name
    """
    dictionary = {}
    for line in labels.splitlines():
        key, label = line.split(":", 1)
        dictionary[key] = label
    return dictionary
