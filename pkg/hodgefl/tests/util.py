"""
This module provides tools to make testing easier: access to the JSON data
files and slow but obviously correct reference computations.

 :copyright: hodgefl Developers, see AUTHORS
 :license: MIT License, see LICENSE
"""
import itertools
import json
import os

from sympy.polys.domains import ZZ
from sympy.polys.matrices import DM
from sympy.polys.matrices.normalforms import smith_normal_form

from hodgefl.linalg import (Filtration, Subspace, image, preimage, kernel)
from hodgefl.mono import check_rmf
from hodgefl.weyl import WeylElement, GROUPS

TEST_DATA_DIR = os.path.join(os.path.dirname(__file__), 'data')


def get_json_data(name):
    """
    Return the content of the json data file with name.

    :param name: name of the json data file without extension
    :returns: content of json file
    """
    with open(os.path.join(TEST_DATA_DIR, name + '.json')) as f:
        ob = json.load(f)
    return ob


def data_path(name):
    return os.path.join(TEST_DATA_DIR, name + '.json')


def random_word(rng, length, groups=('x', 'z'), indices=2):
    """
    A random word of generators ``(group, index, derivation)``.
    """
    return [(groups[rng.randint(0, len(groups))], int(rng.randint(1, indices + 1)),
             bool(rng.randint(0, 2)))
            for _ in range(length)]


def _letter_key(letter):
    group, index, derivation = letter
    return GROUPS.index(group), index, derivation


def normal_order_words(word):
    """
    Rewrite a word into normal order by swapping adjacent letters one at a
    time; ``dg_i g_i`` becomes ``g_i dg_i`` plus the word without both.

    :returns: dict of normal ordered words to integer coefficients
    """
    pending = {tuple(word): 1}
    done = {}
    while pending:
        w, c = pending.popitem()
        for k in range(len(w) - 1):
            a, b = w[k], w[k + 1]
            if _letter_key(a) > _letter_key(b):
                swapped = w[:k] + (b, a) + w[k + 2:]
                pending[swapped] = pending.get(swapped, 0) + c
                if a[:2] == b[:2] and a[2] and not b[2]:
                    shorter = w[:k] + w[k + 2:]
                    pending[shorter] = pending.get(shorter, 0) + c
                break
        else:
            done[w] = done.get(w, 0) + c
    return done


def naive_product(word):
    """
    The product of the letters of ``word`` as a :class:`WeylElement`,
    computed with :func:`normal_order_words` only.
    """
    terms = {}
    for w, c in normal_order_words(word).items():
        exponents = {}
        for group, index, derivation in w:
            a, b = exponents.get((group, index), (0, 0))
            exponents[(group, index)] = (a, b + 1) if derivation else (a + 1, b)
        monomial = tuple((g, i, a, b) for (g, i), (a, b) in exponents.items())
        terms[monomial] = terms.get(monomial, 0) + c
    return WeylElement(terms)


def word_element(word):
    result = WeylElement.constant(1)
    for group, index, derivation in word:
        result = result * WeylElement.generator(group, index, derivation)
    return result


def sympy_smith_diagonal(A):
    """
    The nonzero diagonal entries of sympy's Smith normal form of an integer
    matrix, in increasing order.
    """
    D = smith_normal_form(DM([list(row) for row in A.entries], ZZ)).to_dense().to_list()
    return sorted(abs(int(D[i][i])) for i in range(min(A.rows, A.cols)) if D[i][i])


def _candidate_subspaces(N, L, rounds=3):
    n = N.rows
    full = Subspace.full(n)
    found = set([Subspace.zero(n), full])
    for k in range(n + 1):
        P = N.power(k)
        found.add(kernel(P))
        found.add(image(P, full))
    found.update(level for _, level in L.levels)
    for _ in range(rounds):
        current = list(found)
        for S in current:
            found.add(image(N, S))
            found.add(preimage(N, S))
        for S, T in itertools.combinations(current, 2):
            found.add(S + T)
            found.add(S & T)
        if len(found) == len(current):
            break
    return found


def brute_force_rmf(N, L, center=0):
    """
    Every filtration built from the subspaces generated by the kernels and
    images of powers of ``N`` and the levels of ``L`` that passes
    :func:`~hodgefl.mono.check_rmf`.
    """
    n = N.rows
    stable = [S for S in _candidate_subspaces(N, L)
              if not S.is_zero() and not S.is_full() and S.contains(image(N, S))]
    stable.sort(key=lambda S: S.dim)
    lo = min(L.jumps) + center - (n - 1)
    hi = max(L.jumps) + center + (n - 1)

    chains = [[]]
    for S in stable:
        chains += [chain + [S] for chain in chains
                   if not chain or (S.contains(chain[-1]) and S != chain[-1])]

    solutions = []
    for chain in chains:
        levels = chain + [Subspace.full(n)]
        for indices in itertools.combinations(range(lo, hi + 1), len(levels)):
            W = Filtration(n, list(zip(indices, levels)))
            if W.maps_into(N, W, -2) is not None:
                continue
            if check_rmf(N, L, W, center).passed and W not in solutions:
                solutions.append(W)
    return solutions
